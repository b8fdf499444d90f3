#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "oracles.hpp"
#include "random_skeletons.hpp"
#include "topolab/catalog.hpp"
#include "topolab/classify.hpp"
#include "topolab/skel_io.hpp"
#include "topolab/space_ops.hpp"

using namespace topolab;
namespace cs = topolab::catalog_spaces;
using testing_support::random_finite_skeleton;

namespace {

SymbolicSet sset(const SkeletonSpace& S, const std::string& text) { return parse_sset(S, text); }

Mask core_op(const FiniteOps& o, SymOp op, Mask a) {
  const auto& X = o.space();
  switch (op) {
    case SymOp::Interior: return X.interior(a);
    case SymOp::Closure: return X.closure(a);
    case SymOp::Preclosure: return preclosure(X, a);
    case SymOp::Preinterior: return preinterior(X, a);
    case SymOp::DeltaClosure: return o.delta_closure(a);
    case SymOp::PreThetaClosure: return o.pre_theta_closure(a);
    case SymOp::Consolidation: return consolidation(X, a);
    case SymOp::SemiClosure: return semi_closure(X, a);
  }
  return 0;
}

constexpr SymOp kAllOps[] = {SymOp::Interior,     SymOp::Closure,         SymOp::Preclosure,
                             SymOp::Preinterior,  SymOp::DeltaClosure,    SymOp::PreThetaClosure,
                             SymOp::Consolidation, SymOp::SemiClosure};

bool same_shape(const SkeletonSpace& a, const SkeletonSpace& b) {
  if (a.node_count() != b.node_count()) return false;
  for (std::size_t i = 0; i < a.node_count(); ++i) {
    const auto &x = a.node(i), &y = b.node(i);
    if (!(x.mult == y.mult) || x.mode != y.mode || !(x.block == y.block)) return false;
  }
  const auto ra = a.relations(), rb = b.relations();
  if (ra.size() != rb.size()) return false;
  for (std::size_t k = 0; k < ra.size(); ++k)
    if (ra[k].from_node != rb[k].from_node || ra[k].to_node != rb[k].to_node ||
        ra[k].from_elem != rb[k].from_elem || ra[k].to_elem != rb[k].to_elem)
      return false;
  return true;
}

}  // namespace

TEST_CASE("build_skeleton accepts the named example spaces", "[skeleton]") {
  const auto ep = cs::excluded_point_omega();
  // Opens are the subsets of t, and X.
  CHECK(sym_classify(ep, sset(ep, "part t 0 inf\npart t - fin\n")).open);
  CHECK(sym_classify(ep, sset(ep, "part t 0 fin\npart t - inf\n")).open);
  CHECK_FALSE(sym_classify(ep, sset(ep, "part p 0 1\n")).open);
  CHECK_FALSE(sym_classify(ep, sset(ep, "part p 0 1\npart t 0 inf\npart t - fin\n")).open);
  CHECK(sym_classify(ep, uniform_set(ep, true)).open);

  const auto e1 = cs::e1iii();
  CHECK(sym_classify(e1, sset(e1, "part z 0 1\n")).open);
  CHECK_FALSE(sym_classify(e1, sset(e1, "part r 0 inf\n")).open);
  CHECK_FALSE(sym_classify(e1, sset(e1, "part z 0 1\npart r 0 inf\npart r - fin\n")).open);

  const auto io = cs::indiscrete_omega();
  CHECK(sym_classify(io, uniform_set(io, true)).open);
  CHECK(sym_classify(io, uniform_set(io, false)).open);
  CHECK_FALSE(sym_classify(io, sset(io, "part x 0 fin\npart x - inf\n")).open);
}

TEST_CASE("build_skeleton reports invalid presentations", "[skeleton]") {
  using cs::node;
  const auto one = Multiplicity::finite(1);
  try {
    SkeletonSpace::build({node("a", one, CopyMode::Antichain), node("b", one, CopyMode::Antichain),
                          node("c", one, CopyMode::Antichain)},
                         {{0, 0, 1, 0}, {1, 0, 2, 0}});
    FAIL("intransitive skeleton accepted");
  } catch (const SkeletonError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("transitivity") != std::string::npos);
    CHECK(msg.find("a#0.0 <= b#0.0 <= c#0.0") != std::string::npos);
  }
  CHECK_THROWS_AS(SkeletonSpace::build({node("a", Multiplicity::finite(2), CopyMode::Antichain, "chain2")},
                                       {{0, 0, 0, 1}}),
                  SkeletonError);
  // t below u for every copy, u below t: copies of t become related.
  CHECK_THROWS_AS(SkeletonSpace::build({node("t", Multiplicity::omega(), CopyMode::Antichain),
                                        node("u", one, CopyMode::Antichain)},
                                       {{0, 0, 1, 0}, {1, 0, 0, 0}}),
                  SkeletonError);
  CHECK_THROWS_AS(Block::named("chain4"), SkeletonError);
  CHECK_THROWS_AS(Block::named("3:0<=1,1<=2"), SkeletonError);
  CHECK(Block::named("3:0<=1,1<=2,0<=2") == Block::named("chain3"));

  const auto s = SkeletonSpace::build({node("a", one, CopyMode::Clique)}, {});
  CHECK(s.node(0).mode == CopyMode::Antichain);
}

TEST_CASE("expand realises the up-set topology", "[skeleton]") {
  using cs::node;
  const auto one = Multiplicity::finite(1);
  const auto s2 = SkeletonSpace::build({node("a", one, CopyMode::Antichain), node("b", one, CopyMode::Antichain)},
                                       {{0, 0, 1, 0}});
  CHECK(expand(s2) == sierpinski_space());
  CHECK(expand(SkeletonSpace::build({node("a", Multiplicity::finite(2), CopyMode::Clique)}, {})) ==
        indiscrete_space(2));
  const auto ep3 = SkeletonSpace::build(
      {node("p", one, CopyMode::Antichain), node("t", Multiplicity::finite(2), CopyMode::Antichain)},
      {{0, 0, 1, 0}});
  // Point 0 is excluded: opens are the subsets of {1,2}, and X.
  const auto x3 = expand(ep3);
  CHECK(std::vector<Mask>(x3.opens().begin(), x3.opens().end()) == std::vector<Mask>{0, 0b010, 0b100, 0b110, 0b111});
  CHECK_THROWS_AS(expand(cs::e1iii()), SkeletonError);
}

TEST_CASE("symbolic operator examples", "[skeleton]") {
  const auto e1 = cs::e1iii();
  CHECK(sym_operator(e1, SymOp::Preclosure, sset(e1, "part z 0 1\n")) == uniform_set(e1, true));
  const auto ep = cs::excluded_point_omega();
  CHECK(sym_operator(ep, SymOp::Closure, sset(ep, "part p 0 1\n")) == sset(ep, "part p 0 1\n"));
  const auto io = cs::indiscrete_omega();
  for (const char* a : {"part x 0 fin\npart x - inf\n", "part x 0 inf\npart x - fin\n",
                        "part x 0 inf\npart x - inf\n"})
    CHECK(sym_operator(io, SymOp::Interior, sset(io, a)) == uniform_set(io, false));
  CHECK_THROWS_AS(sym_operator(io, SymOp::Closure, sset(e1, "part z 0 1\n")), InvalidArgument);
}

TEST_CASE("symbolic classification examples", "[skeleton]") {
  const auto ep = cs::excluded_point_omega();
  int seen = 0;
  for_each_template(ep, [&](const SymbolicOps& o, const Refinement& r) {
    if (r.fresh[0][0] && !o.full(r.fresh)) {
      CHECK_FALSE(classify_with(o, r.fresh).preopen);
      ++seen;
    }
    return true;
  });
  CHECK(seen > 0);

  const auto e1 = cs::e1iii();
  for_each_template(e1, [&](const SymbolicOps& o, const Refinement& r) {
    const auto f = classify_with(o, r.fresh);
    CHECK(f.delta_preopen);
    if (r.fresh[1][0]) CHECK(f.preopen);
    return true;
  });
}

TEST_CASE("skeleton products", "[skeleton]") {
  const auto rp = skeleton_product(cs::excluded_point_omega(), cs::indiscrete_two());
  REQUIRE(rp.node_count() == 2);
  CHECK(rp.node(0).mult == Multiplicity::finite(1));
  CHECK(rp.node(0).block == Block::named("clique2"));
  CHECK(rp.node(1).mult.is_omega());
  CHECK(rp.node(1).mode == CopyMode::Antichain);
  CHECK(rp.node(1).block == Block::named("clique2"));
  CHECK(rp.relations().size() == 4);

  const auto ii = skeleton_product(cs::indiscrete_omega(), cs::indiscrete_two());
  REQUIRE(ii.node_count() == 1);
  CHECK(ii.node(0).mult.is_omega());
  CHECK(ii.node(0).mode == CopyMode::Clique);
  CHECK(ii.node(0).block == Block::named("chain1"));

  const auto point = SkeletonSpace::build({cs::node("o", Multiplicity::finite(1), CopyMode::Antichain)}, {});
  for (const auto& name : {"e1iii", "excluded-point-omega", "excluded-point-omega-isolated", "indiscrete-omega",
                           "remark-product"}) {
    const auto S = *catalog(name).skeleton;
    CHECK(same_shape(skeleton_product(S, point), normalize(S)));
  }

  using cs::node;
  const auto c2 = SkeletonSpace::build({node("a", Multiplicity::finite(1), CopyMode::Antichain, "chain2")}, {});
  CHECK_THROWS_AS(skeleton_product(c2, c2), SkeletonError);
  const auto two = SkeletonSpace::build({node("b", Multiplicity::finite(2), CopyMode::Antichain)}, {});
  CHECK_THROWS_AS(skeleton_product(cs::indiscrete_omega(), two), SkeletonError);

  std::mt19937_64 rng(7);
  int compared = 0;
  for (int round = 0; round < 60; ++round) {
    const auto S = random_finite_skeleton(rng, 4);
    const auto T = random_finite_skeleton(rng, 3);
    if (expand(S).size() * expand(T).size() > 9) continue;
    try {
      const auto P = skeleton_product(S, T);
      CHECK(oracle::homeomorphic(expand(P), product(expand(S), expand(T))));
      ++compared;
    } catch (const SkeletonError&) {
    }
  }
  CHECK(compared > 10);
}

TEST_CASE("symbolic operators agree with core on expanded random skeletons", "[skeleton][property]") {
  std::mt19937_64 rng(20240501);
  for (int round = 0; round < 100; ++round) {
    const auto S = random_finite_skeleton(rng, 10);
    const auto X = expand(S);
    const FiniteOps ops(X);
    std::map<std::vector<std::vector<std::pair<int, std::uint64_t>>>, bool> seen;
    for (Mask m = 0; m <= X.carrier(); ++m) {
      const auto a = abstract(S, m);
      std::vector<std::vector<std::pair<int, std::uint64_t>>> key;
      bool small = true;
      for (const auto& parts : a.nodes) {
        key.emplace_back();
        for (const auto& p : parts) {
          key.back().emplace_back(p.pattern, p.count.exact);
          small &= p.count.exact <= 2;
        }
      }
      if (!small || !seen.emplace(key, true).second) continue;
      const Mask inst = instantiate(S, a);
      CHECK(abstract(S, inst) == a);
      for (SymOp op : kAllOps) {
        INFO("round " << round << " op " << static_cast<int>(op) << "\n" << write_skel(S) << to_string(S, a));
        CHECK(sym_operator(S, op, a) == abstract(S, core_op(ops, op, inst)));
      }
      INFO("round " << round << "\n" << write_skel(S) << to_string(S, a));
      CHECK(sym_classify(S, a) == classify_set(ops, inst));
    }
  }
}

TEST_CASE("interior and closure are copy-symmetric on finite probes of omega nodes", "[skeleton][property]") {
  std::vector<SkeletonSpace> spaces;
  for (const auto& name : {"e1iii", "excluded-point-omega", "excluded-point-omega-isolated", "indiscrete-omega",
                           "remark-product"})
    spaces.push_back(*catalog(name).skeleton);
  using cs::node;
  spaces.push_back(SkeletonSpace::build({node("a", Multiplicity::omega(), CopyMode::Antichain, "chain2"),
                                         node("b", Multiplicity::finite(1), CopyMode::Antichain)},
                                        {{0, 0, 1, 0}, {0, 1, 1, 0}}));
  spaces.push_back(SkeletonSpace::build({node("a", Multiplicity::omega(), CopyMode::Clique, "chain2"),
                                         node("b", Multiplicity::finite(1), CopyMode::Antichain)},
                                        {{1, 0, 0, 0}, {1, 0, 0, 1}}));

  int probes = 0;
  for (const auto& S : spaces)
    for_each_template(S, [&](const SymbolicOps& o, const Refinement& r) {
      const auto& ov = r.overlay;
      const auto in = o.interior(r.fresh);
      const auto cl = o.closure(r.fresh);
      for (std::uint64_t fin = 1; fin <= 3; ++fin)
        for (std::uint64_t k = 0; k <= 1; ++k) {
          // Probe: FIN parts get `fin` copies, INF parts get 3 + k copies.
          std::vector<std::vector<std::uint64_t>> sizes(S.node_count());
          std::vector<SkeletonNode> nodes(S.nodes().begin(), S.nodes().end());
          int points = 0;
          for (std::size_t i = 0; i < S.node_count(); ++i) {
            std::uint64_t total = 0;
            for (std::size_t p = 0; p < ov.part_count(i); ++p) {
              const auto c = ov.count(i, p);
              const std::uint64_t n = nodes[i].mult.is_omega() ? (c.card == Card::Inf ? 3 + k : fin) : c.exact;
              sizes[i].push_back(n);
              total += n;
            }
            nodes[i].mult = Multiplicity::finite(total);
            points += static_cast<int>(total) * nodes[i].block.size();
          }
          if (points > 16) continue;
          const auto P = SkeletonSpace::build(nodes, S.relations());
          const auto X = expand(P);
          const auto off = expansion_offsets(P);
          auto concrete = [&](const Track& t) {
            Mask m = 0;
            for (std::size_t i = 0; i < S.node_count(); ++i) {
              int c = 0;
              for (std::size_t p = 0; p < sizes[i].size(); ++p)
                for (std::uint64_t n = 0; n < sizes[i][p]; ++n, ++c)
                  m |= static_cast<Mask>(t[i][p]) << (off[i] + c * P.node(i).block.size());
            }
            return m;
          };
          const Mask a = concrete(r.fresh);
          CHECK(X.interior(a) == concrete(in));
          CHECK(X.closure(a) == concrete(cl));
          ++probes;
        }
      return true;
    });
  CHECK(probes > 100);
}

TEST_CASE("skeletonize then expand returns a homeomorphic space", "[skeleton][property]") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& fam : oracle::topologies(n)) {
      const auto X = FiniteSpace::from_opens(n, fam);
      CHECK(oracle::homeomorphic(expand(skeletonize(X)), X));
    }
}

TEST_CASE(".skel and .sset parsing", "[skeleton][io]") {
  const auto S = parse_skel("# point excluded\nnode p\nnode t card omega mode antichain\nrel p.0 <= t.0\n");
  CHECK(same_shape(S, cs::excluded_point_omega()));
  const auto rp = *catalog("remark-product").skeleton;
  CHECK(same_shape(parse_skel(write_skel(rp)), rp));
  CHECK_THROWS_AS(parse_skel("node a\nnode b\nnode c\nrel a.0 <= b.0\nrel b.0 <= c.0\n"), ParseError);
  CHECK_THROWS_AS(parse_skel("node a block chain9\n"), ParseError);
  CHECK_THROWS_AS(parse_skel("node a\nrel a.0 <= q.0\n"), ParseError);
  CHECK_THROWS_AS(parse_skel("wibble\n"), ParseError);
  try {
    parse_skel("node a\n\nnode b mode sideways\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  CHECK_THROWS_AS(parse_sset(S, "part t 0 fin\n"), ParseError);  // no INF class on t
  CHECK_THROWS_AS(parse_sset(S, "part p 0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_sset(S, "part t 3 inf\n"), ParseError);
  const auto d = describe(parse_skel("node a\nnode b\nrel a.0 <= b.0\n"));
  CHECK(d.find("open {1}") != std::string::npos);
}
