#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "finite_space.hpp"

namespace topolab {

/// Labelled topologies on n <= 4 points by scanning every family of proper
/// nonempty subsets for closure under union and intersection.
inline std::vector<FiniteSpace> topologies_by_set_families(int n) {
  if (n < 1 || n > 4) throw InvalidArgument("set-family scan needs 1 <= n <= 4");
  const Mask all = full_mask(n);
  const int k = static_cast<int>(all) - 1;  // proper nonempty subsets 1..all-1
  std::vector<FiniteSpace> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    auto in = [&](Mask m) { return m == 0 || m == all || ((pick >> (m - 1)) & 1U); };
    bool ok = true;
    for (Mask a = 1; a < all && ok; ++a) {
      if (!in(a)) continue;
      for (Mask b = a + 1; b < all; ++b)
        if (in(b) && (!in(a | b) || !in(a & b))) {
          ok = false;
          break;
        }
    }
    if (!ok) continue;
    std::vector<Mask> opens;
    for (Mask m = 0; m <= all; ++m)
      if (in(m)) opens.push_back(m);
    out.push_back(FiniteSpace::from_opens(n, std::move(opens)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Labelled topologies on n <= 5 points from preorders: every reflexive
/// relation is tested for transitivity and turned into the space whose
/// minimal neighbourhood of x is the up-set of x.
inline std::vector<FiniteSpace> topologies_by_preorders(int n) {
  if (n < 1 || n > 5) throw InvalidArgument("preorder enumeration needs 1 <= n <= 5");
  std::vector<std::pair<int, int>> offdiag;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) offdiag.emplace_back(x, y);
  const int k = static_cast<int>(offdiag.size());
  std::vector<FiniteSpace> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
    std::vector<Mask> up(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) up[x] = bit(x);
    for (int i = 0; i < k; ++i)
      if ((pick >> i) & 1U) up[offdiag[i].first] |= bit(offdiag[i].second);
    bool transitive = true;
    for (int x = 0; x < n && transitive; ++x)
      for (int y : points_of(up[x]))
        if (!subset_of(up[y], up[x])) {
          transitive = false;
          break;
        }
    if (transitive) out.push_back(FiniteSpace::from_neighborhoods(n, std::move(up)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every labelled topology on n points, each once, in canonical order.
inline std::vector<FiniteSpace> all_topologies(int n) {
  if (n < 1 || n > 5) throw InvalidArgument("all_topologies needs 1 <= n <= 5, got " + std::to_string(n));
  return n <= 4 ? topologies_by_set_families(n) : topologies_by_preorders(n);
}

/// Image of X under a relabelling of its points.
inline FiniteSpace relabel(const FiniteSpace& X, const std::vector<int>& perm) {
  std::vector<Mask> nb(static_cast<std::size_t>(X.size()));
  for (int x = 0; x < X.size(); ++x) {
    Mask m = 0;
    for (int y : points_of(X.neighborhood(x))) m |= bit(perm[y]);
    nb[perm[x]] = m;
  }
  return FiniteSpace::from_neighborhoods(X.size(), std::move(nb));
}

namespace detail {

inline std::vector<int> open_signature(const FiniteSpace& X) {
  std::vector<int> sig;
  for (Mask u : X.opens()) sig.push_back(card(u));
  for (Mask nb : X.neighborhoods()) sig.push_back(100 + card(nb));
  std::sort(sig.begin(), sig.end());
  return sig;
}

inline bool extend_bijection(const FiniteSpace& X, const FiniteSpace& Y, std::vector<int>& f, Mask used, int x) {
  if (x == X.size()) return true;
  for (int y = 0; y < Y.size(); ++y) {
    if (has(used, y) || card(X.neighborhood(x)) != card(Y.neighborhood(y))) continue;
    bool ok = true;
    for (int z = 0; z < x && ok; ++z) {
      ok = has(X.neighborhood(x), z) == has(Y.neighborhood(y), f[z]) &&
           has(X.neighborhood(z), x) == has(Y.neighborhood(f[z]), y);
    }
    if (!ok) continue;
    f[x] = y;
    if (extend_bijection(X, Y, f, used | bit(y), x + 1)) return true;
  }
  return false;
}

}  // namespace detail

/// A homeomorphism X -> Y as a point table, if one exists.
inline std::optional<std::vector<int>> find_homeomorphism(const FiniteSpace& X, const FiniteSpace& Y) {
  if (X.size() != Y.size() || detail::open_signature(X) != detail::open_signature(Y)) return std::nullopt;
  std::vector<int> f(static_cast<std::size_t>(X.size()), -1);
  if (!detail::extend_bijection(X, Y, f, 0, 0)) return std::nullopt;
  return f;
}

/// Partition of `spaces` (by index) into homeomorphism classes. Spaces are
/// bucketed by the sorted cardinalities of their opens and neighbourhoods,
/// and inside a bucket compared by backtracking bijection search.
inline std::vector<std::vector<std::size_t>> homeomorphism_classes(const std::vector<FiniteSpace>& spaces) {
  std::map<std::pair<int, std::vector<int>>, std::vector<std::vector<std::size_t>>> buckets;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    auto& bucket = buckets[{spaces[i].size(), detail::open_signature(spaces[i])}];
    bool placed = false;
    for (auto& c : bucket)
      if (find_homeomorphism(spaces[c.front()], spaces[i])) {
        c.push_back(i);
        placed = true;
        break;
      }
    if (!placed) bucket.push_back({i});
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [key, list] : buckets)
    for (auto& c : list) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace topolab
