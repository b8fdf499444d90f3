#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "bits.hpp"
#include "error.hpp"

namespace topolab {

/// A topology on the carrier {0, .., n-1}.
///
/// Opens are deduplicated and kept in canonical order (cardinality, then mask
/// value), so two spaces compare equal iff they carry the same topology.
/// Alongside the opens the space keeps the minimal open neighbourhood of each
/// point; a finite topology is determined by these, and interior and closure
/// reduce to O(n) scans over them.
class FiniteSpace {
 public:
  /// Validates `opens` as a topology. The empty set and the carrier may be
  /// omitted. Throws TopologyError naming the first pair whose union or
  /// intersection is missing.
  static FiniteSpace from_opens(int n, std::vector<Mask> opens) {
    check_size(n);
    const Mask all = full_mask(n);
    for (Mask m : opens)
      if (m & ~all)
        throw InvalidArgument("open set " + to_string(m) + " does not fit a carrier of " +
                              std::to_string(n) + " points");
    opens.push_back(0);
    opens.push_back(all);
    std::sort(opens.begin(), opens.end(), canonical_less);
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
    auto present = [&](Mask m) {
      return std::binary_search(opens.begin(), opens.end(), m, canonical_less);
    };
    for (std::size_t i = 0; i < opens.size(); ++i)
      for (std::size_t j = i + 1; j < opens.size(); ++j) {
        const Mask a = opens[i], b = opens[j];
        if (!present(a | b))
          throw TopologyError("not closed under union: " + to_string(a) + " u " + to_string(b) +
                              " = " + to_string(a | b) + " is missing");
        if (!present(a & b))
          throw TopologyError("not closed under intersection: " + to_string(a) + " n " +
                              to_string(b) + " = " + to_string(a & b) + " is missing");
      }
    FiniteSpace s;
    s.n_ = n;
    s.opens_ = std::move(opens);
    s.nbhd_.assign(static_cast<std::size_t>(n), all);
    for (Mask u : s.opens_)
      for (int x = 0; x < n; ++x)
        if (has(u, x)) s.nbhd_[x] &= u;
    return s;
  }

  /// Space whose minimal neighbourhoods are `nbhd`. Requires x in nbhd[x] and
  /// y in nbhd[x] implies nbhd[y] within nbhd[x] (a preorder); throws otherwise.
  static FiniteSpace from_neighborhoods(int n, std::vector<Mask> nbhd) {
    check_size(n);
    if (nbhd.size() != static_cast<std::size_t>(n))
      throw InvalidArgument("neighbourhood table has wrong length");
    for (int x = 0; x < n; ++x) {
      if (!has(nbhd[x], x) || (nbhd[x] & ~full_mask(n)))
        throw InvalidArgument("neighbourhood of point " + std::to_string(x) + " is invalid");
      for (int y : points_of(nbhd[x]))
        if (!subset_of(nbhd[y], nbhd[x]))
          throw TopologyError("neighbourhoods of " + std::to_string(x) + " and " +
                              std::to_string(y) + " are not nested");
    }
    FiniteSpace s;
    s.n_ = n;
    s.nbhd_ = std::move(nbhd);
    s.opens_ = s.enumerate_up_sets();
    return s;
  }

  int size() const { return n_; }
  Mask carrier() const { return full_mask(n_); }
  std::span<const Mask> opens() const { return opens_; }
  Mask neighborhood(int x) const { return nbhd_[x]; }
  std::span<const Mask> neighborhoods() const { return nbhd_; }

  bool fits(Mask a) const { return (a & ~carrier()) == 0; }
  void require_fit(Mask a) const {
    if (!fits(a))
      throw InvalidArgument("subset " + to_string(a) + " does not fit a carrier of " +
                            std::to_string(n_) + " points");
  }

  /// Largest open subset.
  Mask interior(Mask a) const {
    Mask r = 0;
    for (int x = 0; x < n_; ++x)
      if (subset_of(nbhd_[x], a)) r |= bit(x);
    return r & a;
  }

  /// Smallest closed superset.
  Mask closure(Mask a) const {
    Mask r = 0;
    for (int x = 0; x < n_; ++x)
      if (nbhd_[x] & a) r |= bit(x);
    return r;
  }

  bool is_open(Mask a) const { return interior(a) == a; }
  bool is_closed(Mask a) const { return closure(a) == a; }

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.n_ == b.n_ && a.opens_ == b.opens_;
  }
  friend bool operator<(const FiniteSpace& a, const FiniteSpace& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.opens_.begin(), a.opens_.end(), b.opens_.begin(),
                                        b.opens_.end(), canonical_less);
  }

 private:
  FiniteSpace() = default;

  static void check_size(int n) {
    if (n < 1) throw InvalidArgument("carrier size must be positive");
    if (n > kMaxPoints)
      throw InvalidArgument("carrier size " + std::to_string(n) + " exceeds the limit of " +
                            std::to_string(kMaxPoints));
  }

  // Up-sets of the specialisation preorder, grown from {} by adding
  // neighbourhoods; each open is a union of minimal neighbourhoods.
  std::vector<Mask> enumerate_up_sets() const {
    std::vector<Mask> out{0};
    std::vector<Mask> frontier{0};
    std::vector<char> seen(std::size_t{1} << n_, 0);
    seen[0] = 1;
    while (!frontier.empty()) {
      std::vector<Mask> next;
      for (Mask u : frontier)
        for (int x = 0; x < n_; ++x) {
          if (has(u, x)) continue;
          const Mask v = u | nbhd_[x];
          if (!seen[v]) {
            seen[v] = 1;
            next.push_back(v);
            out.push_back(v);
          }
        }
      frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }

  int n_ = 0;
  std::vector<Mask> opens_;
  std::vector<Mask> nbhd_;
};

/// Smallest topology on n points containing every generator.
inline FiniteSpace build_space(int n, std::span<const Mask> generators) {
  if (n < 1) throw InvalidArgument("carrier size must be positive");
  if (n > kMaxPoints) throw InvalidArgument("carrier size exceeds the limit");
  std::vector<Mask> nbhd(static_cast<std::size_t>(n), full_mask(n));
  for (Mask g : generators) {
    if (g & ~full_mask(n))
      throw InvalidArgument("generator " + to_string(g) + " does not fit a carrier of " +
                            std::to_string(n) + " points");
    for (int x = 0; x < n; ++x)
      if (has(g, x)) nbhd[x] &= g;
  }
  // Intersections of generators are nested automatically: every generator
  // containing x contains each y in N(x), so N(y) lies inside N(x).
  return FiniteSpace::from_neighborhoods(n, std::move(nbhd));
}

inline FiniteSpace build_space(int n, std::initializer_list<Mask> generators) {
  return build_space(n, std::span<const Mask>(generators.begin(), generators.size()));
}

inline FiniteSpace discrete_space(int n) {
  std::vector<Mask> nb;
  for (int x = 0; x < n; ++x) nb.push_back(bit(x));
  return FiniteSpace::from_neighborhoods(n, nb);
}

inline FiniteSpace indiscrete_space(int n) { return build_space(n, std::span<const Mask>{}); }

/// Two-point space with opens {}, {1}, {0,1}.
inline FiniteSpace sierpinski_space() { return build_space(2, {bit(1)}); }

}  // namespace topolab
