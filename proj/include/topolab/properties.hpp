#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "operators.hpp"
#include "space_ops.hpp"
#include "symbolic.hpp"

namespace topolab {

enum class SimpleProperty {
  T0,
  Submaximal,
  Resolvable,
  Irresolvable,
  StronglyIrresolvable,
  Hyperconnected,
  Hyperdisconnected,
  ExtremallyDisconnected,
  Aleph0ED,
  Preconnected,
  Predisconnected,
  StronglyPRegular,
  PRegular,
  AlmostPRegular,
};

inline constexpr std::array<std::pair<std::string_view, SimpleProperty>, 14> kSimpleProperties{{
    {"T0", SimpleProperty::T0},
    {"submaximal", SimpleProperty::Submaximal},
    {"resolvable", SimpleProperty::Resolvable},
    {"irresolvable", SimpleProperty::Irresolvable},
    {"strongly-irresolvable", SimpleProperty::StronglyIrresolvable},
    {"hyperconnected", SimpleProperty::Hyperconnected},
    {"hyperdisconnected", SimpleProperty::Hyperdisconnected},
    {"extremally-disconnected", SimpleProperty::ExtremallyDisconnected},
    {"aleph0-ed", SimpleProperty::Aleph0ED},
    {"preconnected", SimpleProperty::Preconnected},
    {"predisconnected", SimpleProperty::Predisconnected},
    {"strongly-p-regular", SimpleProperty::StronglyPRegular},
    {"p-regular", SimpleProperty::PRegular},
    {"almost-p-regular", SimpleProperty::AlmostPRegular},
}};

inline std::string_view name_of(SimpleProperty p) {
  for (const auto& [n, q] : kSimpleProperties)
    if (q == p) return n;
  return "?";
}

/// Every cover of the space by `cover` sets has a finite subfamily whose
/// `saturation` images cover the space.
struct CoverProperty {
  std::string_view name;
  CoverClass cover;
  Saturation saturation;
};

inline constexpr std::array<CoverProperty, 11> kCoverProperties{{
    {"p-closed", CoverClass::Preopen, Saturation::Preclosure},
    {"QHC", CoverClass::Open, Saturation::Closure},
    {"strongly-compact", CoverClass::Preopen, Saturation::Identity},
    {"compact", CoverClass::Open, Saturation::Identity},
    {"nearly-compact", CoverClass::RegularOpen, Saturation::Identity},
    {"alpha-compact", CoverClass::AlphaOpen, Saturation::Identity},
    {"delta-p-closed", CoverClass::DeltaPreopen, Saturation::DeltaPreclosure},
    {"pre-theta-compact", CoverClass::PreThetaOpen, Saturation::Identity},
    // The next three follow the usual literature definitions.
    {"S-closed", CoverClass::SemiOpen, Saturation::Closure},
    {"s-closed", CoverClass::SemiOpen, Saturation::SemiClosure},
    {"semi-compact", CoverClass::SemiOpen, Saturation::Identity},
}};

inline std::optional<SimpleProperty> find_simple_property(std::string_view name) {
  for (const auto& [n, p] : kSimpleProperties)
    if (n == name) return p;
  return std::nullopt;
}

inline std::optional<CoverProperty> find_cover_property(std::string_view name) {
  for (const auto& p : kCoverProperties)
    if (p.name == name) return p;
  return std::nullopt;
}

inline bool is_property_name(std::string_view name) {
  return find_simple_property(name) || find_cover_property(name);
}

inline std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& [n, p] : kSimpleProperties) out.emplace_back(n);
  for (const auto& p : kCoverProperties) out.emplace_back(p.name);
  return out;
}

/// Arrows of the implication diagram between cover properties.
inline std::vector<std::pair<std::string, std::string>> diagram_edges() {
  return {{"strongly-compact", "p-closed"}, {"strongly-compact", "alpha-compact"},
          {"delta-p-closed", "p-closed"},   {"p-closed", "QHC"},
          {"alpha-compact", "compact"},     {"compact", "nearly-compact"},
          {"nearly-compact", "QHC"},        {"semi-compact", "alpha-compact"},
          {"semi-compact", "s-closed"},     {"s-closed", "S-closed"},
          {"s-closed", "nearly-compact"},   {"S-closed", "QHC"}};
}

enum class Outcome { True, False, Unknown };

inline std::string_view name_of(Outcome o) {
  switch (o) {
    case Outcome::True: return "true";
    case Outcome::False: return "false";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

inline Outcome outcome_of(bool b) { return b ? Outcome::True : Outcome::False; }

/// Point class of a skeleton relative to a base overlay.
struct PointClass {
  int node;
  int part;
  int elem;
};

struct EscapeTemplate {
  PointClass point;
  SymbolicSet set;  // cover member containing the class, FIN where it must shrink
};

/// Cover that no finite subfamily saturates: every member's saturation meets
/// element `elem` of base part (`node`, `part`) in finitely many copies only.
struct EscapeWitness {
  int node;
  int part;
  int elem;
  std::vector<EscapeTemplate> templates;
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::string certificate;  // for True
  std::string witness;      // for False
  std::optional<EscapeWitness> escape;
};

// ---------------------------------------------------------------------------
// Simple properties

namespace detail {

/// Properties decided by a universal statement over all subsets. `forall`
/// takes a generic predicate pred(ops, set) and reports whether it holds for
/// every subset.
template <class ForAll>
bool simple_by_sets(SimpleProperty p, ForAll&& forall) {
  auto exists = [&](auto pred) {
    return !forall([&](const auto& o, const auto& a) { return !pred(o, a); });
  };
  auto ptc_when = [&](auto hyp) {
    return forall([&](const auto& o, const auto& a) { return !hyp(o, a) || is_pre_theta_closed_in(o, a); });
  };
  switch (p) {
    case SimpleProperty::Submaximal:
      return forall([](const auto& o, const auto& a) {
        return !o.full(o.closure(a)) || o.equal(o.interior(a), a);
      });
    case SimpleProperty::Resolvable:
      return exists([](const auto& o, const auto& a) {
        return o.full(o.closure(a)) && o.full(o.closure(o.complement(a)));
      });
    case SimpleProperty::Irresolvable: return !simple_by_sets(SimpleProperty::Resolvable, forall);
    case SimpleProperty::StronglyIrresolvable:
      // Every preopen set is semi-open.
      return forall([](const auto& o, const auto& a) {
        return !is_preopen_in(o, a) || o.subset(a, o.closure(o.interior(a)));
      });
    case SimpleProperty::Hyperconnected:
      return forall([](const auto& o, const auto& a) {
        return o.empty(a) || !o.equal(o.interior(a), a) || o.full(o.closure(a));
      });
    case SimpleProperty::Hyperdisconnected: return !simple_by_sets(SimpleProperty::Hyperconnected, forall);
    case SimpleProperty::ExtremallyDisconnected:
      return forall([](const auto& o, const auto& a) {
        if (!o.equal(o.interior(a), a)) return true;
        const auto c = o.closure(a);
        return o.equal(o.interior(c), c);
      });
    case SimpleProperty::Preconnected:
      return !exists([](const auto& o, const auto& a) {
        return !o.empty(a) && !o.full(a) && is_preopen_in(o, a) && is_preopen_in(o, o.complement(a));
      });
    case SimpleProperty::Predisconnected: return !simple_by_sets(SimpleProperty::Preconnected, forall);
    // x outside F is separated from F by disjoint preopen sets exactly when
    // x lies outside the pre-theta-closure of F.
    case SimpleProperty::StronglyPRegular:
      return ptc_when([](const auto& o, const auto& a) { return o.subset(o.closure(o.interior(a)), a); });
    case SimpleProperty::PRegular:
      return ptc_when([](const auto& o, const auto& a) { return o.equal(o.closure(a), a); });
    case SimpleProperty::AlmostPRegular:
      return ptc_when([](const auto& o, const auto& a) { return o.equal(o.closure(o.interior(a)), a); });
    case SimpleProperty::T0:
    case SimpleProperty::Aleph0ED: break;
  }
  throw InvalidArgument("property is not decided by subset quantification");
}

}  // namespace detail

/// No nonempty open subspace splits into two disjoint dense sets. Checked
/// straight from the definition.
inline bool strongly_irresolvable_by_subspaces(const FiniteSpace& X) {
  for (Mask u : X.opens()) {
    if (!u) continue;
    bool resolvable = false;
    for_each_submask(u, [&](Mask a) {
      if (subset_of(u, X.closure(a)) && subset_of(u, X.closure(u & ~a))) resolvable = true;
    });
    if (resolvable) return false;
  }
  return true;
}

inline bool check_simple(const FiniteSpace& X, SimpleProperty p) {
  switch (p) {
    case SimpleProperty::T0:
      for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < x; ++y)
          if (X.neighborhood(x) == X.neighborhood(y)) return false;
      return true;
    case SimpleProperty::Aleph0ED: return true;  // every boundary is finite
    case SimpleProperty::StronglyIrresolvable: return strongly_irresolvable_by_subspaces(X);
    default: break;
  }
  const FiniteOps ops(X);
  return detail::simple_by_sets(p, [&](auto&& pred) {
    for (Mask a = 0;; ++a) {
      if (!pred(ops, a)) return false;
      if (a == X.carrier()) return true;
    }
  });
}

/// Quantification runs over subset templates: sets that differ only by a
/// permutation of copies get the same operator outcomes.
inline bool check_simple(const SkeletonSpace& S, SimpleProperty p) {
  switch (p) {
    case SimpleProperty::T0: {
      const auto pts = S.realise(2, 2);
      for (std::size_t x = 0; x < pts.size(); ++x)
        for (std::size_t y = 0; y < x; ++y)
          if (S.leq(pts[x], pts[y]) && S.leq(pts[y], pts[x])) return false;
      return true;
    }
    case SimpleProperty::Aleph0ED:
      // A boundary is infinite iff some template puts a nonempty boundary
      // pattern on a part of an omega node.
      return for_each_template(S, [&](const SymbolicOps& o, const Refinement& r) {
        const auto& u = r.fresh;
        if (!o.equal(o.interior(o.closure(u)), u)) return true;
        const auto b = o.meet(o.closure(u), o.complement(u));
        for (std::size_t i = 0; i < b.size(); ++i)
          if (S.node(i).mult.is_omega())
            for (auto q : b[i])
              if (q) return false;
        return true;
      });
    default: break;
  }
  return detail::simple_by_sets(p, [&](auto&& pred) {
    return for_each_template(S, [&](const SymbolicOps& o, const Refinement& r) { return pred(o, r.fresh); });
  });
}

// ---------------------------------------------------------------------------
// Cover properties

inline Verdict check_cover(const FiniteSpace&, const CoverProperty& cp) {
  return {Outcome::True,
          "finite carrier: " + std::string(name_of(cp.saturation)) +
              " is expansive and there are finitely many sets, so one member per point suffices",
          "", std::nullopt};
}

inline Verdict check_cover_relative(const FiniteSpace& X, Mask s, const CoverProperty& cp) {
  X.require_fit(s);
  return {Outcome::True, "finite carrier: one " + std::string(name_of(cp.cover)) + " member per point of the base",
          "", std::nullopt};
}

namespace detail {

inline std::string class_name(const SkeletonSpace& S, const PointClass& a) {
  return S.node(a.node).name + "[part " + std::to_string(a.part) + "]." + std::to_string(a.elem);
}

/// Does the new set of `r` contain a point of class a?
inline bool contains_class(const Refinement& r, const PointClass& a) {
  const auto& parts = r.fresh[static_cast<std::size_t>(a.node)];
  for (std::size_t k = 0; k < parts.size(); ++k)
    if (r.parent[a.node][k] == a.part && ((parts[k] >> a.elem) & 1U)) return true;
  return false;
}

inline Verdict cover_search(const SkeletonSpace& S, const Overlay& ov, const Track& base, const CoverProperty& cp) {
  const Track everything = ov.uniform(true);
  std::vector<PointClass> classes;
  bool base_infinite = false;
  for (std::size_t i = 0; i < ov.node_count(); ++i)
    for (std::size_t p = 0; p < ov.part_count(i); ++p)
      for (int e = 0; e < S.node(i).block.size(); ++e)
        if ((base[i][p] >> e) & 1U) {
          classes.push_back({static_cast<int>(i), static_cast<int>(p), e});
          base_infinite |= ov.count(i, p).card == Card::Inf;
        }

  // Escape: an INF part P and an element e such that every point class has a
  // cover member whose saturation reaches e on only finitely many copies of P.
  for (std::size_t i = 0; i < ov.node_count(); ++i) {
    if (!S.node(i).mult.is_omega()) continue;
    for (std::size_t p = 0; p < ov.part_count(i); ++p) {
      if (ov.count(i, p).card != Card::Inf) continue;
      for (int e = 0; e < S.node(i).block.size(); ++e) {
        if (!((base[i][p] >> e) & 1U)) continue;
        EscapeWitness w{static_cast<int>(i), static_cast<int>(p), e, {}};
        bool all = true;
        for (const auto& a : classes) {
          std::optional<EscapeTemplate> found;
          for_each_refinement(
              ov, everything,
              [&](const Refinement& r) {
                if (!contains_class(r, a)) return true;
                const SymbolicOps c(r.overlay);
                if (!in_cover_class(c, cp.cover, r.fresh)) return true;
                const auto sat = saturate(c, cp.saturation, r.fresh);
                std::vector<std::vector<Count>> counts;
                bool lacking = false;
                for (std::size_t j = 0; j < r.fresh.size(); ++j) {
                  counts.emplace_back();
                  for (std::size_t k = 0; k < r.fresh[j].size(); ++k) {
                    Count cnt = r.overlay.count(j, k);
                    if (j == i && r.parent[j][k] == static_cast<int>(p)) {
                      if ((sat[j][k] >> e) & 1U)
                        cnt = Count::fin();
                      else
                        lacking = true;
                    }
                    counts.back().push_back(cnt);
                  }
                }
                if (!lacking) return true;
                // Shrinking parts to FIN must keep the member in its class.
                const Overlay shrunk(S, std::move(counts));
                const SymbolicOps cs(shrunk);
                if (!in_cover_class(cs, cp.cover, r.fresh)) return true;
                if (saturate(cs, cp.saturation, r.fresh) != sat) return true;
                found = EscapeTemplate{a, shrunk.extract(r.fresh)};
                return false;
              },
              false);
          if (!found) {
            all = false;
            break;
          }
          w.templates.push_back(*found);
        }
        if (!all) continue;
        Verdict v;
        v.outcome = Outcome::False;
        v.witness = "escape on " + class_name(S, {w.node, w.part, w.elem}) + ": every member's " +
                    std::string(name_of(cp.saturation)) + "-image meets it in finitely many copies;";
        for (const auto& t : w.templates)
          v.witness += " " + class_name(S, t.point) + " -> {" + to_string(S, t.set) + "};";
        v.escape = std::move(w);
        return v;
      }
    }
  }

  // Pivots: for each class, the part of the base that the saturation of every
  // cover-class set through that class covers on all copies. One member per
  // class of a family whose guaranteed parts cover the base is a finite
  // subfamily of any cover.
  std::vector<Track> guaranteed;
  for (const auto& a : classes) {
    Track g = ov.uniform(true);
    for_each_refinement(ov, everything, [&](const Refinement& r) {
      if (!contains_class(r, a)) return true;
      const SymbolicOps c(r.overlay);
      if (!in_cover_class(c, cp.cover, r.fresh)) return true;
      const auto sat = saturate(c, cp.saturation, r.fresh);
      Track all_children = ov.uniform(true);
      for (std::size_t j = 0; j < sat.size(); ++j)
        for (std::size_t k = 0; k < sat[j].size(); ++k)
          all_children[j][static_cast<std::size_t>(r.parent[j][k])] &= sat[j][k];
      for (std::size_t j = 0; j < g.size(); ++j)
        for (std::size_t p = 0; p < g[j].size(); ++p) g[j][p] &= all_children[j][p];
      return g != ov.uniform(false);
    });
    guaranteed.push_back(std::move(g));
  }
  const SymbolicOps base_ops(ov);
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (base_ops.subset(base, guaranteed[k]))
      return {Outcome::True,
              "pivot " + class_name(S, classes[k]) + ": every " + std::string(name_of(cp.cover)) +
                  " set containing it has " + std::string(name_of(cp.saturation)) + "-image covering the base",
              "", std::nullopt};
  {
    // Greedy family of pivots.
    Track covered = ov.uniform(false);
    std::vector<std::size_t> chosen;
    while (!base_ops.subset(base, covered)) {
      std::size_t best = classes.size();
      int gain = 0;
      for (std::size_t k = 0; k < classes.size(); ++k) {
        int g = 0;
        for (std::size_t j = 0; j < base.size(); ++j)
          for (std::size_t p = 0; p < base[j].size(); ++p)
            g += card(static_cast<Mask>(base[j][p] & guaranteed[k][j][p] & ~covered[j][p]));
        if (g > gain) {
          gain = g;
          best = k;
        }
      }
      if (best == classes.size()) break;
      chosen.push_back(best);
      covered = base_ops.unite(covered, guaranteed[best]);
    }
    if (base_ops.subset(base, covered)) {
      std::string names;
      for (auto k : chosen) names += (names.empty() ? "" : ", ") + class_name(S, classes[k]);
      return {Outcome::True,
              "pivots " + names + ": the " + std::string(name_of(cp.saturation)) + "-images of any " +
                  std::string(name_of(cp.cover)) + " sets through them cover the base",
              "", std::nullopt};
    }
  }

  if (!base_infinite)
    return {Outcome::True, "base has finitely many points: one member per point suffices", "", std::nullopt};
  return {};
}

}  // namespace detail

inline Verdict check_cover_relative(const SkeletonSpace& S, const SymbolicSet& base, const CoverProperty& cp) {
  const auto [ov, t] = Overlay::from_set(S, base);
  return detail::cover_search(S, ov, t, cp);
}

inline Verdict check_cover(const SkeletonSpace& S, const CoverProperty& cp) {
  if (S.all_finite())
    return {Outcome::True, "finite carrier: one member per point suffices", "", std::nullopt};
  return check_cover_relative(S, uniform_set(S, true), cp);
}

// ---------------------------------------------------------------------------
// Name-based evaluation

template <class Space>
Verdict evaluate(const Space& X, std::string_view property) {
  if (auto p = find_simple_property(property)) {
    const bool b = check_simple(X, *p);
    Verdict v;
    v.outcome = outcome_of(b);
    (b ? v.certificate : v.witness) = "decided by the definition";
    return v;
  }
  if (auto c = find_cover_property(property)) return check_cover(X, *c);
  throw InvalidArgument("unknown property '" + std::string(property) + "'");
}

}  // namespace topolab
