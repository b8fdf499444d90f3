#pragma once

#include <array>
#include <string_view>
#include <utility>

namespace topolab {

/// Membership of one subset in every set class the library knows about.
struct ClassFlags {
  bool open = false;
  bool closed = false;
  bool regular_open = false;
  bool regular_closed = false;
  bool preopen = false;
  bool preclosed = false;
  bool semi_open = false;
  bool semi_closed = false;
  bool semi_regular = false;
  bool alpha_open = false;
  bool delta_preopen = false;
  bool delta_preclosed = false;
  bool preregular = false;
  bool pre_theta_open = false;
  bool pre_theta_closed = false;
  bool dense = false;
  bool nowhere_dense = false;
  bool locally_closed = false;
  bool locally_dense = false;

  friend bool operator==(const ClassFlags&, const ClassFlags&) = default;
};

inline constexpr std::array<std::pair<std::string_view, bool ClassFlags::*>, 19> kClassFlagFields{{
    {"open", &ClassFlags::open},
    {"closed", &ClassFlags::closed},
    {"regular_open", &ClassFlags::regular_open},
    {"regular_closed", &ClassFlags::regular_closed},
    {"preopen", &ClassFlags::preopen},
    {"preclosed", &ClassFlags::preclosed},
    {"semi_open", &ClassFlags::semi_open},
    {"semi_closed", &ClassFlags::semi_closed},
    {"semi_regular", &ClassFlags::semi_regular},
    {"alpha_open", &ClassFlags::alpha_open},
    {"delta_preopen", &ClassFlags::delta_preopen},
    {"delta_preclosed", &ClassFlags::delta_preclosed},
    {"preregular", &ClassFlags::preregular},
    {"pre_theta_open", &ClassFlags::pre_theta_open},
    {"pre_theta_closed", &ClassFlags::pre_theta_closed},
    {"dense", &ClassFlags::dense},
    {"nowhere_dense", &ClassFlags::nowhere_dense},
    {"locally_closed", &ClassFlags::locally_closed},
    {"locally_dense", &ClassFlags::locally_dense},
}};

// The templates below are written once against an "operator domain": a type
// with a nested Set and the primitives interior, closure, complement, unite,
// meet, subset, equal, empty, full, delta_closure, pre_theta_closure and
// delta_preclosure. FiniteOps (masks) and SymbolicOps (skeleton tracks) both
// provide them.

template <class Ops>
typename Ops::Set preclosure_of(const Ops& o, const typename Ops::Set& a) {
  return o.unite(a, o.closure(o.interior(a)));
}

template <class Ops>
typename Ops::Set preinterior_of(const Ops& o, const typename Ops::Set& a) {
  return o.meet(a, o.interior(o.closure(a)));
}

template <class Ops>
typename Ops::Set semi_closure_of(const Ops& o, const typename Ops::Set& a) {
  return o.unite(a, o.interior(o.closure(a)));
}

template <class Ops>
typename Ops::Set consolidation_of(const Ops& o, const typename Ops::Set& a) {
  return o.interior(o.closure(a));
}

template <class Ops>
bool is_preopen_in(const Ops& o, const typename Ops::Set& a) {
  return o.subset(a, o.interior(o.closure(a)));
}

template <class Ops>
bool is_delta_preopen_in(const Ops& o, const typename Ops::Set& a) {
  return o.subset(a, o.interior(o.delta_closure(a)));
}

template <class Ops>
bool is_pre_theta_closed_in(const Ops& o, const typename Ops::Set& a) {
  return o.equal(o.pre_theta_closure(a), a);
}

template <class Ops>
ClassFlags classify_with(const Ops& o, const typename Ops::Set& a) {
  ClassFlags f;
  const auto i = o.interior(a);
  const auto c = o.closure(a);
  const auto ic = o.interior(c);
  const auto ci = o.closure(i);
  const auto comp = o.complement(a);
  f.open = o.equal(i, a);
  f.closed = o.equal(c, a);
  f.regular_open = o.equal(ic, a);
  f.regular_closed = o.equal(ci, a);
  f.preopen = o.subset(a, ic);
  f.preclosed = o.subset(ci, a);
  f.semi_open = o.subset(a, ci);
  f.semi_closed = o.subset(ic, a);
  f.semi_regular = f.semi_open && f.semi_closed;
  f.alpha_open = o.subset(a, o.interior(ci));
  f.delta_preopen = is_delta_preopen_in(o, a);
  f.delta_preclosed = is_delta_preopen_in(o, comp);
  f.preregular = f.preopen && f.preclosed;
  f.pre_theta_closed = is_pre_theta_closed_in(o, a);
  f.pre_theta_open = is_pre_theta_closed_in(o, comp);
  f.dense = o.full(c);
  f.nowhere_dense = o.empty(ic);
  f.locally_closed = [&] {
    const auto u = o.unite(a, o.complement(c));
    return o.equal(o.interior(u), u);
  }();
  f.locally_dense = f.preopen;
  return f;
}

/// Set classes used as cover members.
enum class CoverClass { Open, Preopen, SemiOpen, AlphaOpen, RegularOpen, DeltaPreopen, PreThetaOpen };

/// Saturations applied to a finite subfamily before testing coverage.
enum class Saturation { Identity, Closure, Preclosure, SemiClosure, DeltaPreclosure };

template <class Ops>
bool in_cover_class(const Ops& o, CoverClass c, const typename Ops::Set& a) {
  switch (c) {
    case CoverClass::Open: return o.equal(o.interior(a), a);
    case CoverClass::Preopen: return is_preopen_in(o, a);
    case CoverClass::SemiOpen: return o.subset(a, o.closure(o.interior(a)));
    case CoverClass::AlphaOpen: return o.subset(a, o.interior(o.closure(o.interior(a))));
    case CoverClass::RegularOpen: return o.equal(o.interior(o.closure(a)), a);
    case CoverClass::DeltaPreopen: return is_delta_preopen_in(o, a);
    case CoverClass::PreThetaOpen: return is_pre_theta_closed_in(o, o.complement(a));
  }
  return false;
}

template <class Ops>
typename Ops::Set saturate(const Ops& o, Saturation s, const typename Ops::Set& a) {
  switch (s) {
    case Saturation::Identity: return a;
    case Saturation::Closure: return o.closure(a);
    case Saturation::Preclosure: return preclosure_of(o, a);
    case Saturation::SemiClosure: return semi_closure_of(o, a);
    case Saturation::DeltaPreclosure: return o.delta_preclosure(a);
  }
  return a;
}

inline std::string_view name_of(CoverClass c) {
  switch (c) {
    case CoverClass::Open: return "open";
    case CoverClass::Preopen: return "preopen";
    case CoverClass::SemiOpen: return "semi-open";
    case CoverClass::AlphaOpen: return "alpha-open";
    case CoverClass::RegularOpen: return "regular-open";
    case CoverClass::DeltaPreopen: return "delta-preopen";
    case CoverClass::PreThetaOpen: return "pre-theta-open";
  }
  return "?";
}

inline std::string_view name_of(Saturation s) {
  switch (s) {
    case Saturation::Identity: return "id";
    case Saturation::Closure: return "cl";
    case Saturation::Preclosure: return "pcl";
    case Saturation::SemiClosure: return "scl";
    case Saturation::DeltaPreclosure: return "delta-pcl";
  }
  return "?";
}

}  // namespace topolab
