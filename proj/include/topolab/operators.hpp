#pragma once

#include <algorithm>
#include <vector>

#include "finite_space.hpp"

namespace topolab {

// Operators on subsets of a finite space. Each takes the space and a member
// mask and returns a member mask; ill-fitting masks throw InvalidArgument.

inline Mask interior(const FiniteSpace& X, Mask a) {
  X.require_fit(a);
  return X.interior(a);
}

inline Mask closure(const FiniteSpace& X, Mask a) {
  X.require_fit(a);
  return X.closure(a);
}

/// int(cl A).
inline Mask consolidation(const FiniteSpace& X, Mask a) {
  X.require_fit(a);
  return X.interior(X.closure(a));
}

/// A u cl(int A), the smallest preclosed superset.
inline Mask preclosure(const FiniteSpace& X, Mask a) {
  X.require_fit(a);
  return a | X.closure(X.interior(a));
}

/// A n int(cl A), the largest preopen subset.
inline Mask preinterior(const FiniteSpace& X, Mask a) {
  X.require_fit(a);
  return a & X.interior(X.closure(a));
}

/// A u int(cl A). Standard semi-closure; needed for s-closedness.
inline Mask semi_closure(const FiniteSpace& X, Mask a) {
  X.require_fit(a);
  return a | X.interior(X.closure(a));
}

inline bool is_preopen(const FiniteSpace& X, Mask a) {
  return subset_of(a, X.interior(X.closure(a)));
}

inline bool is_regular_open(const FiniteSpace& X, Mask a) {
  return X.interior(X.closure(a)) == a;
}

inline std::vector<Mask> regular_opens(const FiniteSpace& X) {
  std::vector<Mask> out;
  for (Mask u : X.opens())
    if (is_regular_open(X, u)) out.push_back(u);
  return out;
}

/// Every preopen subset, canonically ordered.
inline std::vector<Mask> preopen_family(const FiniteSpace& X) {
  std::vector<Mask> out;
  const Mask all = X.carrier();
  for (Mask a = 0;; ++a) {
    if (is_preopen(X, a)) out.push_back(a);
    if (a == all) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

/// Preopen subsets containing x.
inline std::vector<Mask> preopen_at(const FiniteSpace& X, int x) {
  if (x < 0 || x >= X.size()) throw InvalidArgument("point out of range");
  std::vector<Mask> out;
  for (Mask a : preopen_family(X))
    if (has(a, x)) out.push_back(a);
  return out;
}

inline Mask delta_closure(const FiniteSpace& X, std::span<const Mask> regular, Mask a) {
  Mask r = 0;
  for (int x = 0; x < X.size(); ++x) {
    bool cluster = true;
    for (Mask u : regular)
      if (has(u, x) && !(u & a)) {
        cluster = false;
        break;
      }
    if (cluster) r |= bit(x);
  }
  return r;
}

/// Points whose every regular open neighbourhood meets A.
inline Mask delta_closure(const FiniteSpace& X, Mask a) {
  X.require_fit(a);
  const auto reg = regular_opens(X);
  return delta_closure(X, reg, a);
}

/// Points x such that pcl(V) meets A for every preopen V containing x.
inline Mask pre_theta_closure(const FiniteSpace& X, std::span<const Mask> preopens, Mask a) {
  Mask escaped = 0;
  for (Mask v : preopens)
    if (!((v | X.closure(X.interior(v))) & a)) escaped |= v;
  return X.carrier() & ~escaped;
}

inline Mask pre_theta_closure(const FiniteSpace& X, Mask a) {
  X.require_fit(a);
  const auto po = preopen_family(X);
  return pre_theta_closure(X, po, a);
}

inline bool is_delta_preopen(const FiniteSpace& X, std::span<const Mask> regular, Mask a) {
  return subset_of(a, X.interior(delta_closure(X, regular, a)));
}

/// Intersection of all delta-preclosed supersets of A.
inline Mask delta_preclosure(const FiniteSpace& X, std::span<const Mask> regular, Mask a) {
  const Mask all = X.carrier();
  Mask r = all;
  for_each_submask(all & ~a, [&](Mask extra) {
    const Mask f = a | extra;
    if (is_delta_preopen(X, regular, all & ~f)) r &= f;
  });
  return r;
}

inline Mask delta_preclosure(const FiniteSpace& X, Mask a) {
  X.require_fit(a);
  const auto reg = regular_opens(X);
  return delta_preclosure(X, reg, a);
}

/// Precomputed families of a finite space, shared by the classifier and the
/// property checkers. Presents the operator vocabulary the classification
/// templates expect (see set_classes.hpp).
class FiniteOps {
 public:
  using Set = Mask;

  explicit FiniteOps(const FiniteSpace& X)
      : X_(&X), preopens_(preopen_family(X)), regular_(regular_opens(X)) {}

  const FiniteSpace& space() const { return *X_; }
  std::span<const Mask> preopens() const { return preopens_; }
  std::span<const Mask> regular() const { return regular_; }

  Mask interior(Mask a) const { return X_->interior(a); }
  Mask closure(Mask a) const { return X_->closure(a); }
  Mask complement(Mask a) const { return X_->carrier() & ~a; }
  Mask unite(Mask a, Mask b) const { return a | b; }
  Mask meet(Mask a, Mask b) const { return a & b; }
  bool subset(Mask a, Mask b) const { return subset_of(a, b); }
  bool equal(Mask a, Mask b) const { return a == b; }
  bool empty(Mask a) const { return a == 0; }
  bool full(Mask a) const { return a == X_->carrier(); }
  Mask delta_closure(Mask a) const { return topolab::delta_closure(*X_, regular_, a); }
  Mask pre_theta_closure(Mask a) const {
    return topolab::pre_theta_closure(*X_, preopens_, a);
  }
  Mask delta_preclosure(Mask a) const { return topolab::delta_preclosure(*X_, regular_, a); }

 private:
  const FiniteSpace* X_;
  std::vector<Mask> preopens_;
  std::vector<Mask> regular_;
};

}  // namespace topolab
