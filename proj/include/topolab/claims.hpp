#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "classify.hpp"
#include "filters.hpp"
#include "properties.hpp"
#include "space_ops.hpp"
#include "symbolic.hpp"

namespace topolab {

// Three-valued connectives over verdict outcomes.

inline Outcome not3(Outcome a) {
  if (a == Outcome::Unknown) return a;
  return a == Outcome::True ? Outcome::False : Outcome::True;
}

inline Outcome and3(Outcome a, Outcome b) {
  if (a == Outcome::False || b == Outcome::False) return Outcome::False;
  if (a == Outcome::True && b == Outcome::True) return Outcome::True;
  return Outcome::Unknown;
}

inline Outcome or3(Outcome a, Outcome b) { return not3(and3(not3(a), not3(b))); }

inline Outcome iff3(Outcome a, Outcome b) {
  if (a == Outcome::Unknown || b == Outcome::Unknown) return Outcome::Unknown;
  return outcome_of(a == b);
}

enum class InstanceStatus { Pass, Fail, Unknown, Skip };

/// Result of one instance. `engaged` records that the hypothesis held, so
/// the conclusion was actually exercised.
struct Eval {
  InstanceStatus status = InstanceStatus::Pass;
  bool engaged = false;
  std::string detail;

  static Eval skip(std::string why) { return {InstanceStatus::Skip, false, std::move(why)}; }
};

/// h implies c, three-valued. `detail` is kept for failures.
inline Eval implies(Outcome h, Outcome c, std::string detail = {}) {
  if (h == Outcome::False) return {};
  if (h == Outcome::True && c == Outcome::True) return {InstanceStatus::Pass, true, {}};
  if (h == Outcome::True && c == Outcome::False) return {InstanceStatus::Fail, true, std::move(detail)};
  if (c == Outcome::True) return {};
  return {InstanceStatus::Unknown, false, std::move(detail)};
}

/// Conjunction of instance results: any failure wins, then any unknown.
inline Eval all_of(std::initializer_list<Eval> parts) {
  Eval r;
  for (const auto& e : parts) {
    r.engaged |= e.engaged;
    if (e.status == InstanceStatus::Fail && r.status != InstanceStatus::Fail) {
      r.status = InstanceStatus::Fail;
      r.detail = e.detail;
    } else if (e.status == InstanceStatus::Unknown && r.status == InstanceStatus::Pass) {
      r.status = InstanceStatus::Unknown;
      r.detail = e.detail;
    }
  }
  return r;
}

inline Eval check(bool ok, std::string detail) {
  return {ok ? InstanceStatus::Pass : InstanceStatus::Fail, true, ok ? std::string{} : std::move(detail)};
}

inline const CoverProperty& cover_property(std::string_view name) {
  for (const auto& p : kCoverProperties)
    if (p.name == name) return p;
  throw InvalidArgument("unknown cover property '" + std::string(name) + "'");
}

/// Finite space under test, with lazily built operator tables.
class FiniteCtx {
 public:
  FiniteCtx(const FiniteSpace& X, std::string label) : X_(X), label_(std::move(label)) {}
  FiniteCtx(const FiniteCtx&) = delete;
  FiniteCtx& operator=(const FiniteCtx&) = delete;

  const FiniteSpace& space() const { return X_; }
  const std::string& label() const { return label_; }

  const FiniteOps& ops() const {
    if (!ops_) ops_ = std::make_unique<FiniteOps>(X_);
    return *ops_;
  }

  Outcome prop(std::string_view name) const {
    auto it = props_.find(std::string(name));
    if (it != props_.end()) return it->second;
    const Outcome o = evaluate(X_, name).outcome;
    props_.emplace(std::string(name), o);
    return o;
  }

  /// s is p-closed (or the named cover notion) relative to X.
  Outcome rel(Mask s, std::string_view cover = "p-closed") const {
    return check_cover_relative(X_, s, cover_property(cover)).outcome;
  }

  /// Property of the subspace on a; the empty subspace has every cover property.
  Outcome sub(Mask a, std::string_view name = "p-closed") const {
    if (a == 0) return Outcome::True;
    return evaluate(subspace(X_, a).space, name).outcome;
  }

  ClassFlags flags(Mask a) const { return classify_set(ops(), a); }
  Mask cl(Mask a) const { return X_.closure(a); }
  Mask in(Mask a) const { return X_.interior(a); }
  Mask pcl(Mask a) const { return a | X_.closure(X_.interior(a)); }
  Mask pcl_theta(Mask a) const { return ops().pre_theta_closure(a); }
  Mask all() const { return X_.carrier(); }

 private:
  const FiniteSpace& X_;
  std::string label_;
  mutable std::unique_ptr<FiniteOps> ops_;
  mutable std::map<std::string, Outcome> props_;
};

/// A codomain with its preopen family.
struct Codomain {
  FiniteSpace space;
  std::vector<Mask> preopens;
  explicit Codomain(FiniteSpace Y) : space(std::move(Y)), preopens(preopen_family(space)) {}
};

struct Instance {
  std::vector<Mask> subsets;
  const Codomain* codomain = nullptr;  // maps and relabellings
  std::vector<int> table;
  const FiniteSpace* partner = nullptr;  // second factor of a product
};

class SkelCtx {
 public:
  SkelCtx(const SkeletonSpace& S, std::string label) : S_(S), label_(std::move(label)) {}
  SkelCtx(const SkelCtx&) = delete;
  SkelCtx& operator=(const SkelCtx&) = delete;

  const SkeletonSpace& space() const { return S_; }
  const std::string& label() const { return label_; }

  Outcome prop(std::string_view name) const {
    auto it = props_.find(std::string(name));
    if (it != props_.end()) return it->second;
    const Outcome o = evaluate(S_, name).outcome;
    props_.emplace(std::string(name), o);
    return o;
  }

  Outcome rel(const SymbolicSet& s, std::string_view cover = "p-closed") const {
    return check_cover_relative(S_, s, cover_property(cover)).outcome;
  }

  ClassFlags flags(const SymbolicSet& a) const { return sym_classify(S_, a); }
  bool empty(const SymbolicSet& a) const { return canonical(a) == canonical(uniform_set(S_, false)); }
  bool full(const SymbolicSet& a) const { return canonical(a) == canonical(uniform_set(S_, true)); }

  SymbolicSet complement(const SymbolicSet& a) const {
    SymbolicSet c = a;
    for (std::size_t i = 0; i < c.nodes.size(); ++i)
      for (auto& p : c.nodes[i]) p.pattern = static_cast<std::uint8_t>(S_.node(i).block.all() & ~p.pattern);
    return canonical(std::move(c));
  }

  std::string str(const SymbolicSet& a) const { return to_string(S_, a); }

 private:
  const SkeletonSpace& S_;
  std::string label_;
  mutable std::map<std::string, Outcome> props_;
};

struct SymInstance {
  std::vector<SymbolicSet> subsets;
  const SkeletonSpace* partner = nullptr;
  std::string partner_label;
};

/// Every distinct subset template of a skeleton, in enumeration order.
inline std::vector<SymbolicSet> skeleton_templates(const SkeletonSpace& S) {
  std::vector<SymbolicSet> out;
  std::vector<std::string> seen;
  for_each_template(S, [&](const SymbolicOps&, const Refinement& r) {
    auto a = r.overlay.extract(r.fresh);
    auto key = to_string(S, a);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(std::move(key));
      out.push_back(std::move(a));
    }
    return true;
  });
  return out;
}

enum class Quantifier { Spaces, Subsets, SubsetPairs, Maps, MapSubsets, Relabellings, Factors };

inline std::string_view name_of(Quantifier q) {
  switch (q) {
    case Quantifier::Spaces: return "spaces";
    case Quantifier::Subsets: return "subsets";
    case Quantifier::SubsetPairs: return "subset pairs";
    case Quantifier::Maps: return "maps";
    case Quantifier::MapSubsets: return "maps and subsets";
    case Quantifier::Relabellings: return "relabellings";
    case Quantifier::Factors: return "product factors";
  }
  return "?";
}

using FinitePredicate = std::function<Eval(const FiniteCtx&, const Instance&)>;
using SkeletonPredicate = std::function<Eval(const SkelCtx&, const SymInstance&)>;

/// An executable statement. Empirical claims carry a
/// converse so that a run can report which inclusion actually holds.
struct Claim {
  std::string id;
  std::string statement;
  Quantifier quantifier = Quantifier::Spaces;
  bool empirical = false;
  bool surjective_maps = false;
  FinitePredicate finite;
  SkeletonPredicate skeleton;  // empty: skeleton members are skipped
  FinitePredicate converse;
  std::string converse_statement;
  std::string note;
};

namespace claims_detail {

inline std::string m(Mask a) { return to_string(a); }

template <class Ctx>
Eval t1_any(const Ctx& c) {
  return implies(and3(c.prop("QHC"), c.prop("strongly-irresolvable")), c.prop("p-closed"),
                 "QHC and strongly irresolvable but not p-closed");
}

template <class Ctx>
Eval c1_any(const Ctx& c) {
  return implies(or3(c.prop("strongly-irresolvable"), c.prop("submaximal")), iff3(c.prop("p-closed"), c.prop("QHC")),
                 "strongly irresolvable or submaximal, yet p-closed and QHC differ");
}

template <class Ctx>
Eval t2_any(const Ctx& c) {
  return implies(and3(c.prop("p-closed"), c.prop("T0")), c.prop("strongly-irresolvable"),
                 "p-closed T0 but not strongly irresolvable");
}

template <class Ctx>
Eval t3_any(const Ctx& c) {
  return implies(c.prop("T0"), iff3(c.prop("p-closed"), and3(c.prop("QHC"), c.prop("strongly-irresolvable"))),
                 "T0, and p-closed differs from QHC and strongly irresolvable");
}

template <class Ctx>
Eval t4_any(const Ctx& c) {
  return all_of({implies(and3(c.prop("p-closed"), c.prop("aleph0-ed")), c.prop("nearly-compact"),
                         "p-closed and aleph0-ed but not nearly compact"),
                 implies(and3(c.prop("p-closed"), c.prop("extremally-disconnected")), c.prop("s-closed"),
                         "p-closed and extremally disconnected but not s-closed")});
}

template <class Ctx>
Eval t42_any(const Ctx& c) {
  return all_of({implies(and3(c.prop("p-closed"), c.prop("strongly-p-regular")), c.prop("strongly-compact"),
                         "p-closed and strongly p-regular but not strongly compact"),
                 implies(and3(c.prop("p-closed"), c.prop("p-regular")), c.prop("compact"),
                         "p-closed and p-regular but not compact"),
                 implies(and3(c.prop("p-closed"), c.prop("almost-p-regular")), c.prop("nearly-compact"),
                         "p-closed and almost p-regular but not nearly compact")});
}

template <class Ctx>
Eval tn1_any(const Ctx& c) {
  return implies(c.prop("p-closed"), c.prop("pre-theta-compact"),
                 "p-closed, yet some pre-theta-open cover has no finite subcover");
}

inline std::string clauses(const FilterClauses& f) {
  auto b = [](bool v) { return v ? "T" : "F"; };
  return std::string("clauses a=") + b(f.a) + " b=" + b(f.b) + " c=" + b(f.c) + " d=" + b(f.d);
}

inline Eval p41(const FiniteCtx& c, Mask a) {
  const auto f = c.flags(a);
  return all_of({implies(outcome_of(f.preopen), outcome_of(c.pcl(a) == c.pcl_theta(a)),
                         "preopen " + m(a) + ": pcl = " + m(c.pcl(a)) + ", pcl_theta = " + m(c.pcl_theta(a))),
                 implies(outcome_of(f.preregular), outcome_of(c.pcl_theta(a) == a),
                         "preregular " + m(a) + " has pcl_theta " + m(c.pcl_theta(a))),
                 implies(outcome_of(f.semi_open), outcome_of(c.pcl(a) == c.cl(a)),
                         "semi-open " + m(a) + ": pcl = " + m(c.pcl(a)) + ", cl = " + m(c.cl(a)))});
}

inline Eval p41_skel(const SkelCtx& c, const SymbolicSet& a) {
  const auto& S = c.space();
  const auto f = c.flags(a);
  const auto pcl = sym_operator(S, SymOp::Preclosure, a);
  const auto pth = sym_operator(S, SymOp::PreThetaClosure, a);
  const auto cl = sym_operator(S, SymOp::Closure, a);
  return all_of({implies(outcome_of(f.preopen), outcome_of(pcl == pth), "preopen " + c.str(a) + ": pcl != pcl_theta"),
                 implies(outcome_of(f.preregular), outcome_of(pth == canonical(a)),
                         "preregular " + c.str(a) + " is not pre-theta-closed"),
                 implies(outcome_of(f.semi_open), outcome_of(pcl == cl), "semi-open " + c.str(a) + ": pcl != cl")});
}

// pcl of b computed inside the subspace on a, in ambient labels.
inline Mask sub_pcl(const FiniteSpace& X, Mask a, Mask b) {
  const auto s = subspace(X, a);
  return s.embed(preclosure(s.space, s.restrict(b)));
}

inline Mask image(const Instance& in, Mask a) { return image_of(in.table, a); }

inline bool surjective(const Instance& in) {
  return image_of(in.table, full_mask(static_cast<int>(in.table.size()))) == in.codomain->space.carrier();
}

inline Eval tn3_finite(const FiniteCtx& c) {
  Outcome every = Outcome::True;
  std::string first;
  for (Mask a = 0; a <= c.all(); ++a)
    if (c.flags(a).preregular) {
      const Outcome r = c.rel(a);
      if (r != Outcome::True && first.empty()) first = m(a);
      every = and3(every, r);
    }
  return implies(c.prop("predisconnected"), iff3(c.prop("p-closed"), every),
                 "predisconnected; p-closed differs from 'every preregular set is p-closed relative' (first " +
                     first + ")");
}

inline Eval tn3_skel(const SkelCtx& c) {
  if (c.prop("predisconnected") == Outcome::False) return {};
  Outcome every = Outcome::True;
  std::string first;
  for (const auto& a : skeleton_templates(c.space()))
    if (c.flags(a).preregular) {
      const Outcome r = c.rel(a);
      if (r != Outcome::True && first.empty()) first = c.str(a);
      every = and3(every, r);
      if (every == Outcome::False) break;
    }
  return implies(c.prop("predisconnected"), iff3(c.prop("p-closed"), every),
                 "predisconnected; p-closed differs from 'every preregular set is p-closed relative' (first " +
                     first + ")");
}

inline Eval remark_skel(const SkelCtx& c) {
  if (c.label() != "remark-product") return Eval::skip("the remark concerns the catalog product only");
  const auto& pc = cover_property("p-closed");
  const Outcome product_fails = not3(c.prop("p-closed"));
  const Outcome factors = and3(check_cover(catalog_spaces::excluded_point_omega(), pc).outcome,
                               check_cover(catalog_spaces::indiscrete_two(), pc).outcome);
  Outcome every = Outcome::True;
  std::string first;
  for (const auto& a : skeleton_templates(c.space())) {
    if (c.empty(a) || c.full(a) || !c.flags(a).preregular) continue;
    const Outcome r = c.rel(a);
    if (r != Outcome::True && first.empty()) first = c.str(a) + " is " + std::string(name_of(r));
    every = and3(every, r);
  }
  return all_of({implies(Outcome::True, product_fails, "the product is p-closed"),
                 implies(Outcome::True, factors, "a factor is not p-closed"),
                 implies(Outcome::True, every, "proper preregular subset not p-closed relative: " + first)});
}

}  // namespace claims_detail

/// The claim registry, in a fixed order.
inline const std::vector<Claim>& claim_registry() {
  using namespace claims_detail;
  using Q = Quantifier;
  static const std::vector<Claim> registry = [] {
    std::vector<Claim> r;
    auto spaces = [&](std::string id, std::string st, auto f) {
      Claim c{std::move(id), std::move(st), Q::Spaces};
      c.finite = [f](const FiniteCtx& x, const Instance&) { return f(x); };
      c.skeleton = [f](const SkelCtx& x, const SymInstance&) { return f(x); };
      r.push_back(std::move(c));
    };
    spaces("T1", "QHC and strongly irresolvable implies p-closed", [](const auto& c) { return t1_any(c); });
    spaces("C1", "strongly irresolvable or submaximal: p-closed iff QHC", [](const auto& c) { return c1_any(c); });
    spaces("T2", "p-closed T0 implies strongly irresolvable", [](const auto& c) { return t2_any(c); });
    spaces("T3", "T0: p-closed iff QHC and strongly irresolvable", [](const auto& c) { return t3_any(c); });
    spaces("T4", "p-closed and aleph0-ed (extremally disconnected) implies nearly compact (s-closed)",
           [](const auto& c) { return t4_any(c); });

    {
      Claim c{"T41", "p-closed, maximal bases converge, bases accumulate and the preclosed family clause agree",
              Q::Spaces};
      c.finite = [](const FiniteCtx& x, const Instance&) {
        const auto f = check_t41(x.space());
        return check(f.agree(), clauses(f));
      };
      c.note = "filter clauses are evaluated on finite carriers only; skeleton members are skipped, so the "
               "negative direction is exercised only through clause agreement";
      r.push_back(std::move(c));
    }

    spaces("T42", "p-closed and strongly p-regular (p-regular, almost p-regular) implies strongly compact "
                  "(compact, nearly compact)",
           [](const auto& c) { return t42_any(c); });

    {
      Claim c{"T43", "relative filter clauses agree for every subset", Q::Subsets};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const auto f = check_t43(x.space(), in.subsets[0]);
        return check(f.agree(), "S = " + m(in.subsets[0]) + ": " + clauses(f));
      };
      c.note = "finite carriers only";
      r.push_back(std::move(c));
    }

    {
      Claim c{"P41", "preopen: pcl = pcl_theta; preregular: pre-theta-closed; semi-open: pcl = cl", Q::Subsets};
      c.finite = [](const FiniteCtx& x, const Instance& in) { return p41(x, in.subsets[0]); };
      c.skeleton = [](const SkelCtx& x, const SymInstance& in) { return p41_skel(x, in.subsets[0]); };
      r.push_back(std::move(c));
    }

    {
      Claim c{"L2A", "A preopen, B semi-open: A n B preopen in B; A preopen in preopen B: A preopen", Q::SubsetPairs};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const Mask a = in.subsets[0], b = in.subsets[1];
        const auto& X = x.space();
        Eval e1, e2;
        if (b != 0) {
          const auto sb = subspace(X, b);
          e1 = implies(outcome_of(x.flags(a).preopen && x.flags(b).semi_open),
                       outcome_of(is_preopen(sb.space, sb.restrict(a & b))),
                       "A = " + m(a) + ", B = " + m(b) + ": A n B not preopen in B");
          e2 = implies(outcome_of(subset_of(a, b) && is_preopen(sb.space, sb.restrict(a)) && x.flags(b).preopen),
                       outcome_of(x.flags(a).preopen), "A = " + m(a) + " preopen in B = " + m(b) + " but not in X");
        }
        return all_of({e1, e2});
      };
      r.push_back(std::move(c));
    }

    {
      Claim c{"L2", "B within A, A semi-open: pcl_A(B) within pcl(B)", Q::SubsetPairs};
      c.empirical = true;
      auto hyp = [](const FiniteCtx& x, Mask a, Mask b) { return a != 0 && subset_of(b, a) && x.flags(a).semi_open; };
      c.finite = [hyp](const FiniteCtx& x, const Instance& in) {
        const Mask a = in.subsets[0], b = in.subsets[1];
        if (!hyp(x, a, b)) return Eval{};
        const Mask pa = sub_pcl(x.space(), a, b), px = x.pcl(b);
        return check(subset_of(pa, px), "A = " + m(a) + ", B = " + m(b) + ": pcl_A(B) = " + m(pa) +
                                            ", pcl(B) = " + m(px));
      };
      c.converse = [hyp](const FiniteCtx& x, const Instance& in) {
        const Mask a = in.subsets[0], b = in.subsets[1];
        if (!hyp(x, a, b)) return Eval{};
        const Mask pa = sub_pcl(x.space(), a, b), px = x.pcl(b);
        return check(subset_of(px, pa), "A = " + m(a) + ", B = " + m(b) + ": pcl(B) = " + m(px) +
                                            ", pcl_A(B) = " + m(pa));
      };
      c.converse_statement = "B within A, A semi-open: pcl(B) within pcl_A(B)";
      r.push_back(std::move(c));
    }

    {
      Claim c{"L3", "A within B, B preopen, A preopen in B: pcl(A) within pcl_B(A)", Q::SubsetPairs};
      c.empirical = true;
      auto hyp = [](const FiniteCtx& x, Mask a, Mask b) {
        if (b == 0 || !subset_of(a, b) || !x.flags(b).preopen) return false;
        const auto sb = subspace(x.space(), b);
        return is_preopen(sb.space, sb.restrict(a));
      };
      c.finite = [hyp](const FiniteCtx& x, const Instance& in) {
        const Mask a = in.subsets[0], b = in.subsets[1];
        if (!hyp(x, a, b)) return Eval{};
        const Mask px = x.pcl(a), pb = sub_pcl(x.space(), b, a);
        return check(subset_of(px, pb), "A = " + m(a) + ", B = " + m(b) + ": pcl(A) = " + m(px) +
                                            ", pcl_B(A) = " + m(pb));
      };
      c.converse = [hyp](const FiniteCtx& x, const Instance& in) {
        const Mask a = in.subsets[0], b = in.subsets[1];
        if (!hyp(x, a, b)) return Eval{};
        const Mask px = x.pcl(a), pb = sub_pcl(x.space(), b, a);
        return check(subset_of(pb, px), "A = " + m(a) + ", B = " + m(b) + ": pcl_B(A) = " + m(pb) +
                                            ", pcl(A) = " + m(px));
      };
      c.converse_statement = "A within B, B preopen, A preopen in B: pcl_B(A) within pcl(A)";
      r.push_back(std::move(c));
    }

    {
      Claim c{"LP1", "preirresolute (precontinuous) iff f(pcl A) within pcl f(A) (cl f(A)) for all A", Q::Maps};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const auto& Y = in.codomain->space;
        const auto flags = map_classify(x.space(), Y, in.codomain->preopens, in.table);
        bool pre_ok = true, cont_ok = true;
        for (Mask a = 0; a <= x.all(); ++a) {
          const Mask fp = image(in, x.pcl(a)), fa = image(in, a);
          pre_ok &= subset_of(fp, fa | Y.closure(Y.interior(fa)));
          cont_ok &= subset_of(fp, Y.closure(fa));
        }
        return all_of({check(flags.preirresolute == pre_ok, "preirresolute flag differs from the pcl image test"),
                       check(flags.precontinuous == cont_ok, "precontinuous flag differs from the cl image test")});
      };
      r.push_back(std::move(c));
    }

    {
      Claim c{"T5", "hyperdisconnected, every proper semi-regular subspace p-closed: p-closed", Q::Spaces};
      c.finite = [](const FiniteCtx& x, const Instance&) {
        Outcome every = Outcome::True;
        for (Mask a = 1; a < x.all(); ++a)
          if (x.flags(a).semi_regular) every = and3(every, x.sub(a));
        return implies(and3(x.prop("hyperdisconnected"), every), x.prop("p-closed"),
                       "hypotheses hold but the space is not p-closed");
      };
      c.note = "subspaces are formed on finite carriers only";
      r.push_back(std::move(c));
    }

    {
      Claim c{"T6", "proper semi-regular A with A and its complement p-closed subspaces: p-closed", Q::Subsets};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const Mask a = in.subsets[0];
        if (a == 0 || a == x.all() || !x.flags(a).semi_regular) return Eval{};
        return implies(and3(x.sub(a), x.sub(x.all() & ~a)), x.prop("p-closed"), "A = " + m(a));
      };
      c.note = "subspaces are formed on finite carriers only";
      r.push_back(std::move(c));
    }

    {
      Claim c{"T7", "p-closed space, preregular A: A is a p-closed subspace", Q::Subsets};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const Mask a = in.subsets[0];
        return implies(and3(x.prop("p-closed"), outcome_of(a != 0 && x.flags(a).preregular)), x.sub(a),
                       "A = " + m(a));
      };
      c.note = "subspaces are formed on finite carriers only";
      r.push_back(std::move(c));
    }

    spaces("TN1", "p-closed: every pre-theta-open cover has a finite subcover", [](const auto& c) { return tn1_any(c); });

    {
      Claim c{"TN2", "A pre-theta-closed, B p-closed relative: A n B p-closed relative", Q::SubsetPairs};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const Mask a = in.subsets[0], b = in.subsets[1];
        return implies(and3(outcome_of(x.flags(a).pre_theta_closed), x.rel(b)), x.rel(a & b),
                       "A = " + m(a) + ", B = " + m(b));
      };
      r.push_back(std::move(c));
    }

    {
      Claim c{"C45", "pre-theta-closed K in a p-closed space is p-closed relative", Q::Subsets};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const Mask k = in.subsets[0];
        return implies(and3(x.prop("p-closed"), outcome_of(x.flags(k).pre_theta_closed)), x.rel(k), "K = " + m(k));
      };
      c.skeleton = [](const SkelCtx& x, const SymInstance& in) {
        const auto& k = in.subsets[0];
        if (!x.flags(k).pre_theta_closed) return Eval{};
        return implies(x.prop("p-closed"), x.rel(k), "K = " + x.str(k));
      };
      r.push_back(std::move(c));
    }

    {
      Claim c{"TN3", "predisconnected: p-closed iff every preregular subset is p-closed relative", Q::Spaces};
      c.finite = [](const FiniteCtx& x, const Instance&) { return tn3_finite(x); };
      c.skeleton = [](const SkelCtx& x, const SymInstance&) { return tn3_skel(x); };
      r.push_back(std::move(c));
    }

    {
      Claim c{"TN4", "proper preregular A with A and its complement p-closed relative: p-closed", Q::Subsets};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const Mask a = in.subsets[0];
        if (a == 0 || a == x.all() || !x.flags(a).preregular) return Eval{};
        return implies(and3(x.rel(a), x.rel(x.all() & ~a)), x.prop("p-closed"), "A = " + m(a));
      };
      c.skeleton = [](const SkelCtx& x, const SymInstance& in) {
        const auto& a = in.subsets[0];
        if (x.empty(a) || x.full(a) || !x.flags(a).preregular) return Eval{};
        return implies(and3(x.rel(a), x.rel(x.complement(a))), x.prop("p-closed"), "A = " + x.str(a));
      };
      r.push_back(std::move(c));
    }

    {
      Claim c{"TN5", "semi-open X0 that is a p-closed subspace is p-closed relative", Q::Subsets};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const Mask a = in.subsets[0];
        return implies(and3(outcome_of(a != 0 && x.flags(a).semi_open), x.sub(a)), x.rel(a), "X0 = " + m(a));
      };
      c.note = "subspaces are formed on finite carriers only";
      r.push_back(std::move(c));
    }

    {
      Claim c{"TN6", "preopen X0 that is p-closed relative is a p-closed subspace", Q::Subsets};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const Mask a = in.subsets[0];
        return implies(and3(outcome_of(a != 0 && x.flags(a).preopen), x.rel(a)), x.sub(a), "X0 = " + m(a));
      };
      c.note = "subspaces are formed on finite carriers only";
      r.push_back(std::move(c));
    }

    {
      Claim c{"C-ALPHA", "alpha-open X0: p-closed subspace iff p-closed relative", Q::Subsets};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const Mask a = in.subsets[0];
        return implies(outcome_of(a != 0 && x.flags(a).alpha_open), iff3(x.sub(a), x.rel(a)), "X0 = " + m(a));
      };
      c.note = "subspaces are formed on finite carriers only";
      r.push_back(std::move(c));
    }

    {
      Claim c{"T-IMG", "preirresolute (precontinuous) surjection: K p-closed relative gives f(K) p-closed (QHC) "
                       "relative",
              Q::MapSubsets};
      c.surjective_maps = true;
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        if (!surjective(in)) return Eval{};
        const auto& Y = in.codomain->space;
        const auto flags = map_classify(x.space(), Y, in.codomain->preopens, in.table);
        const Mask k = in.subsets[0], fk = image(in, k);
        const Outcome rk = x.rel(k);
        auto rel_y = [&](std::string_view cover) { return check_cover_relative(Y, fk, cover_property(cover)).outcome; };
        return all_of({implies(and3(outcome_of(flags.preirresolute), rk), rel_y("p-closed"),
                               "K = " + m(k) + ", f(K) = " + m(fk) + " not p-closed relative"),
                       implies(and3(outcome_of(flags.precontinuous), rk), rel_y("QHC"),
                               "K = " + m(k) + ", f(K) = " + m(fk) + " not QHC relative")});
      };
      r.push_back(std::move(c));
    }

    {
      Claim c{"C-TOPINV", "homeomorphic spaces get the same verdict on every property", Q::Relabellings};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const auto& Y = in.codomain->space;
        for (const auto& name : property_names()) {
          const Outcome a = x.prop(name), b = evaluate(Y, name).outcome;
          if (a != b) return check(false, name + " differs under relabelling");
        }
        return check(true, {});
      };
      r.push_back(std::move(c));
    }

    {
      Claim c{"C-PROD", "a p-closed product has p-closed factors", Q::Factors};
      c.finite = [](const FiniteCtx& x, const Instance& in) {
        const auto P = product(x.space(), *in.partner);
        const auto& pc = cover_property("p-closed");
        return implies(check_cover(P, pc).outcome, and3(x.prop("p-closed"), check_cover(*in.partner, pc).outcome),
                       "product p-closed but a factor is not");
      };
      c.skeleton = [](const SkelCtx& x, const SymInstance& in) {
        SkeletonSpace P = x.space();
        try {
          P = skeleton_product(x.space(), *in.partner);
        } catch (const SkeletonError& e) {
          return Eval::skip(std::string("product not representable: ") + e.what());
        }
        const auto& pc = cover_property("p-closed");
        return implies(check_cover(P, pc).outcome, and3(x.prop("p-closed"), check_cover(*in.partner, pc).outcome),
                       "product with " + in.partner_label + " p-closed but a factor is not");
      };
      r.push_back(std::move(c));
    }

    {
      Claim c{"REMARK", "the catalog product is not p-closed, its factors are, and every proper preregular subset "
                        "is p-closed relative",
              Q::Spaces};
      c.finite = [](const FiniteCtx&, const Instance&) {
        return Eval::skip("the remark concerns the catalog product only");
      };
      c.skeleton = [](const SkelCtx& x, const SymInstance&) { return remark_skel(x); };
      r.push_back(std::move(c));
    }
    return r;
  }();
  return registry;
}

inline const Claim* find_claim(std::string_view id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

inline std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const auto& c : claim_registry()) out.push_back(c.id);
  return out;
}

}  // namespace topolab
