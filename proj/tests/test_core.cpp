#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "topolab/classify.hpp"
#include "topolab/space_ops.hpp"
#include "topolab/topo_io.hpp"

using namespace topolab;

namespace {

std::vector<Mask> opens_of(const FiniteSpace& X) { return {X.opens().begin(), X.opens().end()}; }

const FiniteSpace S2 = sierpinski_space();
const FiniteSpace I2 = indiscrete_space(2);
const FiniteSpace D2 = discrete_space(2);

std::vector<FiniteSpace> spaces_up_to(int n) {
  std::vector<FiniteSpace> out;
  for (int k = 1; k <= n; ++k)
    for (auto& fam : oracle::topologies(k)) out.push_back(FiniteSpace::from_opens(k, fam));
  return out;
}

}  // namespace

TEST_CASE("build_space closes generators into a topology", "[core]") {
  CHECK(opens_of(S2) == std::vector<Mask>{0, 0b10, 0b11});
  CHECK(opens_of(I2) == std::vector<Mask>{0, 0b11});
  const auto X3 = build_space(3, {0b001, 0b010});
  CHECK(opens_of(X3) == oracle::close_family(3, {0b001, 0b010}));
  CHECK(opens_of(X3) == std::vector<Mask>{0, 0b001, 0b010, 0b011, 0b111});
}

TEST_CASE("build_space rejects bad input", "[core]") {
  CHECK_THROWS_AS(build_space(0, {}), InvalidArgument);
  CHECK_THROWS_AS(build_space(2, {0b100}), InvalidArgument);
  CHECK_THROWS_AS(FiniteSpace::from_opens(3, {0b001, 0b010}), TopologyError);
}

TEST_CASE("build_space agrees with brute-force closure on random generators", "[core]") {
  std::uint32_t state = 12345;
  auto next = [&] { return state = state * 1664525U + 1013904223U; };
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(next() % 5);
    std::vector<Mask> gens;
    const int k = static_cast<int>(next() % 4);
    for (int i = 0; i < k; ++i) gens.push_back(next() & full_mask(n));
    CHECK(opens_of(build_space(n, gens)) == oracle::close_family(n, gens));
  }
}

TEST_CASE("interior, closure and consolidation on the two-point spaces", "[core]") {
  CHECK(interior(S2, 0b01) == 0);
  CHECK(interior(S2, 0b10) == 0b10);
  CHECK(interior(I2, 0b01) == 0);
  CHECK(closure(S2, 0b10) == 0b11);
  CHECK(closure(S2, 0b01) == 0b01);
  CHECK(closure(I2, 0b01) == 0b11);
  CHECK(consolidation(S2, 0b10) == 0b11);
  CHECK(consolidation(S2, 0b01) == 0);
  for (const auto& X : spaces_up_to(3)) CHECK(consolidation(X, 0) == 0);
  CHECK_THROWS_AS(closure(S2, 0b100), InvalidArgument);
}

TEST_CASE("preclosure and preinterior", "[core]") {
  CHECK(preclosure(S2, 0b01) == 0b01);
  CHECK(preclosure(S2, 0b10) == 0b11);
  CHECK(preinterior(S2, 0b01) == 0);
}

TEST_CASE("delta closure", "[core]") {
  CHECK(delta_closure(S2, 0b01) == 0b11);
  CHECK(delta_closure(S2, 0) == 0);
  CHECK(delta_closure(D2, 0b01) == 0b01);
}

TEST_CASE("pre-theta closure", "[core]") {
  CHECK(pre_theta_closure(S2, 0b10) == 0b11);
  CHECK(pre_theta_closure(S2, 0b01) == 0b11);
  for (const auto& X : spaces_up_to(3)) CHECK(pre_theta_closure(X, 0) == 0);
}

TEST_CASE("classify_set on the two-point spaces", "[core]") {
  const auto a = classify_set(S2, 0b10);
  CHECK(a.preopen);
  CHECK(a.semi_open);
  CHECK(a.dense);
  CHECK(a.alpha_open);
  CHECK_FALSE(a.regular_open);

  const auto b = classify_set(S2, 0b01);
  CHECK_FALSE(b.preopen);
  CHECK(b.preclosed);
  CHECK(b.delta_preopen);
  // {0} is closed with empty interior, so it is nowhere dense.
  CHECK(b.nowhere_dense);
  CHECK(b.locally_closed);
  CHECK_FALSE(b.pre_theta_closed);

  const auto c = classify_set(I2, 0b01);
  CHECK(c.preopen);
  CHECK_FALSE(c.semi_open);
  CHECK(c.dense);
}

TEST_CASE("preopen families", "[core]") {
  CHECK(preopen_family(S2) == std::vector<Mask>{0, 0b10, 0b11});
  CHECK(preopen_family(I2) == std::vector<Mask>{0, 0b01, 0b10, 0b11});
  CHECK(preopen_at(S2, 0) == std::vector<Mask>{0b11});
}

TEST_CASE("subspaces", "[core]") {
  CHECK(subspace(S2, 0b01).space.size() == 1);
  CHECK(subspace(S2, 0b10).space.size() == 1);
  const auto X3 = build_space(3, {0b001, 0b010});
  const auto sub = subspace(X3, 0b101);
  CHECK(sub.points == std::vector<int>{0, 2});
  CHECK(opens_of(sub.space) == std::vector<Mask>{0, 0b01, 0b11});
  CHECK(sub.embed(0b01) == 0b001);
  CHECK_THROWS_AS(subspace(S2, 0), InvalidArgument);
}

TEST_CASE("products", "[core]") {
  CHECK(product(I2, I2) == indiscrete_space(4));
  // S2 x I2: the only proper open is {1} x {0,1} = points {2,3}.
  CHECK(opens_of(product(S2, I2)) == std::vector<Mask>{0, 0b1100, 0b1111});
  const auto one = indiscrete_space(1);
  for (const auto& X : spaces_up_to(3)) CHECK(product(one, X) == X);
}

TEST_CASE("map classification", "[core]") {
  const auto id = map_classify(SpaceMap(S2, S2, {0, 1}));
  CHECK((id.continuous && id.precontinuous && id.preirresolute));
  const auto s2i2 = map_classify(SpaceMap(S2, I2, {0, 1}));
  CHECK(s2i2.continuous);
  CHECK(s2i2.precontinuous);
  CHECK_FALSE(s2i2.preirresolute);
  for (const auto& X : spaces_up_to(2))
    for (const auto& Y : spaces_up_to(2))
      for (int y = 0; y < Y.size(); ++y) {
        std::vector<int> table(static_cast<std::size_t>(X.size()), y);
        CHECK(map_classify(SpaceMap(X, Y, table)).preirresolute);
      }
  CHECK_THROWS_AS(SpaceMap(S2, S2, {0, 2}), InvalidArgument);
}

TEST_CASE("operators match the definitional oracles on every space up to 4 points", "[core][property]") {
  for (const auto& X : spaces_up_to(4)) {
    const auto ref = oracle::ref_of(X);
    const FiniteOps ops(X);
    const Mask all = X.carrier();
    std::vector<Mask> po;
    for (Mask a = 0; a <= all; ++a) {
      CHECK(X.interior(a) == ref.interior(a));
      CHECK(X.closure(a) == ref.closure(a));
      const Mask p = preclosure(X, a);
      CHECK(p == ref.pcl(a));
      CHECK(p == (a | X.closure(X.interior(a))));
      CHECK(subset_of(a, p));
      CHECK(preclosure(X, p) == p);
      CHECK(ref.preclosed(p));
      CHECK(preinterior(X, a) == ref.pint(a));
      CHECK(delta_closure(X, a) == ref.delta_closure(a));

      const auto f = classify_set(ops, a);
      CHECK(f.alpha_open == ref.alpha_open(a));
      CHECK(f.locally_closed == ref.locally_closed(a));
      CHECK(f.semi_regular == ref.regular_sandwich(a));
      CHECK(f.preopen == ref.preopen(a));
      CHECK(f.locally_dense == f.preopen);
      CHECK(f.semi_regular == (f.semi_open && f.semi_closed));
      if (f.open) CHECK(f.alpha_open);
      if (f.alpha_open) CHECK(f.preopen);
      if (f.dense) CHECK(f.preopen);
      if (f.preopen) CHECK(f.delta_preopen);

      // delta-pcl lies inside pcl.
      CHECK(subset_of(ops.delta_preclosure(a), p));
      // Proposition-style identities.
      if (f.semi_open) CHECK(p == X.closure(a));
      if (f.preopen) CHECK(p == ops.pre_theta_closure(a));
      if (f.preregular) CHECK(f.pre_theta_closed);
      if (f.preopen) po.push_back(a);
    }
    // Preopen sets are closed under unions.
    Mask everything = 0;
    for (Mask a : po) {
      everything |= a;
      for (Mask b : po) CHECK(ref.preopen(a | b));
    }
    CHECK(ref.preopen(everything));
    std::sort(po.begin(), po.end(), canonical_less);
    CHECK(po == std::vector<Mask>(ops.preopens().begin(), ops.preopens().end()));
  }
}

TEST_CASE("delta-closure agrees with the minimal regular neighbourhood route", "[core][property]") {
  // In a finite space the smallest regular open set around x is int cl N(x).
  for (const auto& X : spaces_up_to(4))
    for (Mask a = 0; a <= X.carrier(); ++a) {
      Mask alt = 0;
      for (int x = 0; x < X.size(); ++x)
        if (X.interior(X.closure(X.neighborhood(x))) & a) alt |= bit(x);
      CHECK(alt == delta_closure(X, a));
    }
}

TEST_CASE("images under preirresolute and precontinuous maps", "[core][property]") {
  const auto spaces = spaces_up_to(3);
  for (const auto& X : spaces)
    for (const auto& Y : spaces) {
      const int n = X.size(), m = Y.size();
      const auto ypo = preopen_family(Y);
      std::vector<int> f(static_cast<std::size_t>(n), 0);
      while (true) {
        const auto flags = map_classify(X, Y, ypo, f);
        bool pcl_rule = true, cl_rule = true;
        for (Mask a = 0; a <= X.carrier(); ++a) {
          const Mask img = image_of(f, preclosure(X, a));
          pcl_rule &= subset_of(img, preclosure(Y, image_of(f, a)));
          cl_rule &= subset_of(img, Y.closure(image_of(f, a)));
        }
        CHECK(flags.preirresolute == pcl_rule);
        CHECK(flags.precontinuous == cl_rule);
        int i = 0;
        while (i < n && ++f[i] == m) f[i++] = 0;
        if (i == n) break;
      }
    }
}

TEST_CASE(".topo parsing", "[core][io]") {
  const auto X = parse_topo("# sierpinski\npoints 2\nopen 1\n");
  CHECK(X == S2);
  CHECK(parse_topo(write_topo(X)) == X);
  CHECK_THROWS_AS(parse_topo("points 3\nopen 0\nopen 1\n"), ParseError);
  try {
    parse_topo("points 3\nopen 0\nopen 1\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("{0} u {1}") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_topo("open 1\n"), ParseError);
  CHECK_THROWS_AS(parse_topo("points 2\nopen 5\n"), ParseError);
  CHECK_THROWS_AS(parse_topo("points 2\nfoo\n"), ParseError);
}
