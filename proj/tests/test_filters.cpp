#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "topolab/filters.hpp"
#include "topolab/topo_io.hpp"

using namespace topolab;

namespace {

FilterBase base(const FiniteSpace& X, std::vector<Mask> m) { return FilterBase::make(X, std::move(m)); }

// Random filter base: a few supersets of a random kernel, kernel included.
FilterBase random_base(const FiniteSpace& X, std::mt19937& rng) {
  std::uniform_int_distribution<Mask> pick(1, X.carrier());
  const Mask k = pick(rng);
  std::vector<Mask> m{k};
  for (int i = 0; i < 3; ++i) m.push_back(k | pick(rng));
  return FilterBase::make(X, m);
}

}  // namespace

TEST_CASE("filter base validation", "[filters]") {
  const auto X = indiscrete_space(3);
  CHECK_NOTHROW(base(X, {0b011, 0b001}));
  CHECK_THROWS_AS(base(X, {}), InvalidArgument);
  CHECK_THROWS_AS(base(X, {0b000}), InvalidArgument);
  CHECK_THROWS_AS(base(X, {0b011, 0b110}), InvalidArgument);
  CHECK_THROWS_AS(base(X, {0b1000}), InvalidArgument);
  CHECK(base(X, {0b111, 0b011, 0b001}).kernel() == 0b001);
}

TEST_CASE("pre-theta convergence and accumulation examples", "[filters]") {
  const auto S2 = sierpinski_space();
  const auto D2 = discrete_space(2);
  const auto F = base(S2, {0b01});
  CHECK(pre_theta_converges(S2, F, 0));
  CHECK(pre_theta_converges(S2, F, 1));
  CHECK(pre_theta_accumulates(S2, F, 1));
  const auto G = base(D2, {0b01});
  CHECK_FALSE(pre_theta_converges(D2, G, 1));
  CHECK_FALSE(pre_theta_accumulates(D2, G, 1));
  CHECK_THROWS_AS(pre_theta_converges(S2, F, 2), InvalidArgument);
  CHECK_THROWS_AS(pre_theta_converges(discrete_space(3), F, 0), InvalidArgument);
}

TEST_CASE("maximal filter bases are the point bases", "[filters]") {
  CHECK(maximal_filter_bases(sierpinski_space()).size() == 2);
  CHECK(maximal_filter_bases(indiscrete_space(1)).size() == 1);
  CHECK(maximal_filter_bases(discrete_space(3)).size() == 3);
  const auto bases = maximal_filter_bases(sierpinski_space());
  CHECK(bases[0].kernel() == 0b01);
  CHECK(bases[1].kernel() == 0b10);

  for (int n = 1; n <= 4; ++n) {
    const auto X = indiscrete_space(n);
    for (const auto& M : maximal_filter_bases(X))
      for (const auto& G : filter_representatives(X))
        if (G.finer_than(M)) CHECK(G.equivalent(M));
  }
}

TEST_CASE("t41 and t43 examples", "[filters]") {
  for (const auto& X : {sierpinski_space(), indiscrete_space(2), discrete_space(3)}) {
    const auto c = check_t41(X);
    CHECK(c.a);
    CHECK(c.b);
    CHECK(c.c);
    CHECK(c.d);
  }
  const auto r1 = check_t43(sierpinski_space(), 0b10);
  CHECK((r1.a && r1.b && r1.c && r1.d));
  const auto r0 = check_t43(sierpinski_space(), 0);
  CHECK((r0.a && r0.b && r0.c && r0.d));
  CHECK(r0.filters == 0);
  const auto r2 = check_t43(discrete_space(3), 0b011);
  CHECK((r2.a && r2.b && r2.c && r2.d));
}

TEST_CASE("clause agreement on every small space", "[filters][property]") {
  for (const auto& X : oracle::spaces_up_to(4)) {
    const auto c = check_t41(X);
    INFO(write_topo(X));
    CHECK(c.agree());
    CHECK(c.filters == X.carrier());
    if (X.size() <= 3)
      for (Mask s = 0; s <= X.carrier(); ++s) CHECK(check_t43(X, s).agree());
  }
}

TEST_CASE("raw bases behave like their kernels", "[filters][property]") {
  std::mt19937 rng(7);
  for (const auto& X : oracle::spaces_up_to(3)) {
    for (int i = 0; i < 20; ++i) {
      const auto F = random_base(X, rng);
      const auto K = base(X, {F.kernel()});
      CHECK(F.equivalent(K));
      for (int x = 0; x < X.size(); ++x) {
        const bool conv = pre_theta_converges(X, F, x);
        const bool acc = pre_theta_accumulates(X, F, x);
        CHECK(conv == pre_theta_converges(X, K, x));
        CHECK(acc == pre_theta_accumulates(X, K, x));
        if (conv) CHECK(acc);
      }
    }
  }
}
