#pragma once

#include <span>
#include <vector>

#include "operators.hpp"

namespace topolab {

/// A relative topology together with the embedding of its points.
struct Subspace {
  FiniteSpace space;
  std::vector<int> points;  // new label -> point of the ambient space

  /// Re-expresses an ambient subset (restricted to the subspace) in new labels.
  Mask restrict(Mask ambient) const {
    Mask r = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (has(ambient, points[i])) r |= bit(static_cast<int>(i));
    return r;
  }

  /// Maps a subset in new labels back to ambient labels.
  Mask embed(Mask local) const {
    Mask r = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (has(local, static_cast<int>(i))) r |= bit(points[i]);
    return r;
  }
};

/// Relative topology on A; points are relabelled in increasing order.
inline Subspace subspace(const FiniteSpace& X, Mask a) {
  X.require_fit(a);
  if (a == 0) throw InvalidArgument("empty subspaces are not modelled");
  Subspace s{FiniteSpace::from_opens(1, {}), points_of(a)};
  std::vector<Mask> nb;
  for (int p : s.points) nb.push_back(s.restrict(X.neighborhood(p)));
  s.space = FiniteSpace::from_neighborhoods(static_cast<int>(s.points.size()), std::move(nb));
  return s;
}

/// Binary product; point (x, y) gets label x * |Y| + y.
inline FiniteSpace product(const FiniteSpace& X, const FiniteSpace& Y) {
  const int n = X.size(), m = Y.size();
  if (n * m > kMaxPoints) throw InvalidArgument("product carrier exceeds the point limit");
  std::vector<Mask> nb(static_cast<std::size_t>(n * m), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < m; ++y) {
      Mask box = 0;
      for (int u : points_of(X.neighborhood(x)))
        for (int v : points_of(Y.neighborhood(y))) box |= bit(u * m + v);
      nb[x * m + y] = box;
    }
  return FiniteSpace::from_neighborhoods(n * m, std::move(nb));
}

/// A point table between two finite spaces.
class SpaceMap {
 public:
  SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> image)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
    if (image_.size() != static_cast<std::size_t>(domain_.size()))
      throw InvalidArgument("map table length differs from the domain size");
    for (int y : image_)
      if (y < 0 || y >= codomain_.size()) throw InvalidArgument("map sends a point outside the codomain");
  }

  const FiniteSpace& domain() const { return domain_; }
  const FiniteSpace& codomain() const { return codomain_; }
  std::span<const int> table() const { return image_; }

 private:
  FiniteSpace domain_;
  FiniteSpace codomain_;
  std::vector<int> image_;
};

inline Mask image_of(std::span<const int> f, Mask a) {
  Mask r = 0;
  for (int x : points_of(a)) r |= bit(f[x]);
  return r;
}

inline Mask preimage_of(std::span<const int> f, Mask b) {
  Mask r = 0;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (has(b, f[x])) r |= bit(static_cast<int>(x));
  return r;
}

struct MapFlags {
  bool continuous = false;
  bool precontinuous = false;
  bool preirresolute = false;
  friend bool operator==(const MapFlags&, const MapFlags&) = default;
};

/// Preimage tests against the opens (continuity, precontinuity) and the
/// preopen sets (preirresoluteness) of the codomain.
inline MapFlags map_classify(const FiniteSpace& X, const FiniteSpace& Y, std::span<const Mask> y_preopens,
                             std::span<const int> f) {
  MapFlags m{true, true, true};
  for (Mask v : Y.opens()) {
    const Mask pre = preimage_of(f, v);
    if (!X.is_open(pre)) m.continuous = false;
    if (!is_preopen(X, pre)) m.precontinuous = false;
  }
  for (Mask v : y_preopens)
    if (!is_preopen(X, preimage_of(f, v))) {
      m.preirresolute = false;
      break;
    }
  return m;
}

inline MapFlags map_classify(const SpaceMap& f) {
  const auto po = preopen_family(f.codomain());
  return map_classify(f.domain(), f.codomain(), po, f.table());
}

}  // namespace topolab
