#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "properties.hpp"

namespace topolab {

/// A filter base on a finite carrier: a nonempty family of nonempty subsets
/// in which any two members contain a third.
class FilterBase {
 public:
  static FilterBase make(const FiniteSpace& X, std::vector<Mask> members) {
    if (members.empty()) throw InvalidArgument("a filter base needs at least one member");
    for (Mask m : members) {
      X.require_fit(m);
      if (m == 0) throw InvalidArgument("a filter base has no empty member");
    }
    std::sort(members.begin(), members.end(), canonical_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (Mask a : members)
      for (Mask b : members)
        if (std::none_of(members.begin(), members.end(), [&](Mask c) { return subset_of(c, a & b); }))
          throw InvalidArgument("no member lies inside " + to_string(a) + " n " + to_string(b));
    return FilterBase(X.size(), std::move(members));
  }

  int carrier_size() const { return n_; }
  std::span<const Mask> members() const { return members_; }

  /// Least member. On a finite carrier the intersection of all members is
  /// itself a member, and it generates the same filter as the whole base.
  Mask kernel() const {
    Mask k = full_mask(n_);
    for (Mask m : members_) k &= m;
    return k;
  }

  /// Every member of `coarser` contains a member of this base.
  bool finer_than(const FilterBase& coarser) const {
    return std::all_of(coarser.members_.begin(), coarser.members_.end(), [&](Mask f) {
      return std::any_of(members_.begin(), members_.end(), [&](Mask g) { return subset_of(g, f); });
    });
  }

  bool equivalent(const FilterBase& o) const { return finer_than(o) && o.finer_than(*this); }

  bool meets(Mask s) const {
    return std::all_of(members_.begin(), members_.end(), [&](Mask m) { return (m & s) != 0; });
  }

 private:
  FilterBase(int n, std::vector<Mask> m) : n_(n), members_(std::move(m)) {}

  int n_;
  std::vector<Mask> members_;
};

namespace detail {

inline void require_point(const FiniteSpace& X, int x) {
  if (x < 0 || x >= X.size()) throw InvalidArgument("point " + std::to_string(x) + " out of range");
}

inline void require_same_carrier(const FiniteSpace& X, const FilterBase& F) {
  if (F.carrier_size() != X.size()) throw InvalidArgument("filter base lives on a different carrier");
}

inline bool converges(const FiniteSpace& X, std::span<const Mask> preopens, const FilterBase& F, int x) {
  for (Mask v : preopens) {
    if (!has(v, x)) continue;
    const Mask p = v | X.closure(X.interior(v));
    if (std::none_of(F.members().begin(), F.members().end(), [&](Mask m) { return subset_of(m, p); }))
      return false;
  }
  return true;
}

inline bool accumulates(const FiniteSpace& X, std::span<const Mask> preopens, const FilterBase& F, int x) {
  for (Mask v : preopens) {
    if (!has(v, x)) continue;
    const Mask p = v | X.closure(X.interior(v));
    for (Mask m : F.members())
      if (!(m & p)) return false;
  }
  return true;
}

}  // namespace detail

/// For every preopen V containing x some member lies inside pcl(V).
inline bool pre_theta_converges(const FiniteSpace& X, const FilterBase& F, int x) {
  detail::require_point(X, x);
  detail::require_same_carrier(X, F);
  return detail::converges(X, preopen_family(X), F, x);
}

/// pcl(V) meets every member, for every preopen V containing x.
inline bool pre_theta_accumulates(const FiniteSpace& X, const FilterBase& F, int x) {
  detail::require_point(X, x);
  detail::require_same_carrier(X, F);
  return detail::accumulates(X, preopen_family(X), F, x);
}

/// The principal ultrafilter bases {{x}}, one per point.
inline std::vector<FilterBase> maximal_filter_bases(const FiniteSpace& X) {
  std::vector<FilterBase> out;
  for (int x = 0; x < X.size(); ++x) out.push_back(FilterBase::make(X, {bit(x)}));
  return out;
}

/// Filter bases up to equivalence: one base {K} per nonempty kernel K.
inline std::vector<FilterBase> filter_representatives(const FiniteSpace& X) {
  std::vector<FilterBase> out;
  for (Mask k = 1; k <= X.carrier(); ++k) out.push_back(FilterBase::make(X, {k}));
  return out;
}

/// Per-clause outcomes of the filter characterisation, plus how much was
/// searched. `s` is the carrier for the absolute form.
struct FilterClauses {
  bool a = false;  // cover form
  bool b = false;  // maximal bases converge
  bool c = false;  // every base accumulates
  bool d = false;  // preclosed families with empty meet
  std::size_t filters = 0;
  std::size_t families = 0;
  bool agree() const { return a == b && b == c && c == d; }
  friend bool operator==(const FilterClauses&, const FilterClauses&) = default;
};

namespace detail {

inline std::vector<Mask> preclosed_family(const FiniteSpace& X) {
  std::vector<Mask> out;
  for (Mask a = 0;; ++a) {
    if (a == (a | X.closure(X.interior(a)))) out.push_back(a);
    if (a == X.carrier()) break;
  }
  return out;
}

/// Clause (d) over every family of preclosed sets. The meets shrink as a
/// family grows, so a finite family has a good finite subfamily exactly when
/// the whole family is one.
inline bool preclosed_families_clause(const FiniteSpace& X, Mask s, std::size_t& checked) {
  const auto pc = preclosed_family(X);
  const std::size_t k = pc.size();
  if (k > 24) throw InvalidArgument("too many preclosed sets for an exhaustive family scan");
  std::vector<Mask> pint(k);
  for (std::size_t i = 0; i < k; ++i) pint[i] = pc[i] & X.interior(X.closure(pc[i]));
  const std::uint64_t total = std::uint64_t{1} << k;
  std::vector<Mask> meet(total), pmeet(total);
  meet[0] = pmeet[0] = X.carrier();
  bool ok = true;
  for (std::uint64_t f = 1; f < total; ++f) {
    const int low = std::countr_zero(f);
    const std::uint64_t rest = f & (f - 1);
    meet[f] = meet[rest] & pc[low];
    pmeet[f] = pmeet[rest] & pint[low];
    if (meet[f] & s) continue;
    ++checked;
    if (pmeet[f] & s) ok = false;
  }
  return ok;
}

inline FilterClauses relative_clauses(const FiniteSpace& X, Mask s, bool absolute) {
  const FiniteOps ops(X);
  FilterClauses r;
  for (const auto& cp : kCoverProperties)
    if (cp.name == "p-closed")
      r.a = (absolute ? check_cover(X, cp) : check_cover_relative(X, s, cp)).outcome == Outcome::True;

  auto some_point = [&](auto&& pred) {
    for (int x : points_of(s))
      if (pred(x)) return true;
    return false;
  };

  r.b = true;
  for (const auto& F : maximal_filter_bases(X))
    if (F.meets(s) && !some_point([&](int x) { return converges(X, ops.preopens(), F, x); })) r.b = false;

  r.c = true;
  for (const auto& F : filter_representatives(X)) {
    if (!F.meets(s)) continue;
    ++r.filters;
    if (!some_point([&](int x) { return accumulates(X, ops.preopens(), F, x); })) r.c = false;
  }

  r.d = preclosed_families_clause(X, s, r.families);
  return r;
}

}  // namespace detail

/// Clauses of the filter characterisation of p-closedness, each computed
/// on its own terms.
inline FilterClauses check_t41(const FiniteSpace& X) { return detail::relative_clauses(X, X.carrier(), true); }

/// Relative clauses for a subset S: bases meeting S, points of S, and
/// families whose meet misses S.
inline FilterClauses check_t43(const FiniteSpace& X, Mask s) {
  X.require_fit(s);
  return detail::relative_clauses(X, s, false);
}

}  // namespace topolab
