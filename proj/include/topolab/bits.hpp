#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace topolab {

/// Member mask of a subset of a finite carrier; bit i set iff point i belongs.
using Mask = std::uint32_t;

inline constexpr int kMaxPoints = 20;

constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }
constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has(Mask m, int i) { return (m >> i) & 1U; }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr int card(Mask m) { return std::popcount(m); }

/// Canonical order on subsets: by cardinality, then by mask value.
constexpr bool canonical_less(Mask a, Mask b) {
  const int ca = card(a), cb = card(b);
  return ca != cb ? ca < cb : a < b;
}

inline std::vector<int> points_of(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1U) out.push_back(i);
  return out;
}

inline Mask mask_of(const std::vector<int>& pts) {
  Mask m = 0;
  for (int p : pts) m |= bit(p);
  return m;
}

/// "{0,2}" style rendering.
inline std::string to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int p : points_of(m)) {
    if (!first) s += ',';
    s += std::to_string(p);
    first = false;
  }
  return s + "}";
}

/// Calls f(sub) for every submask of m, including 0 and m.
template <class F>
void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

}  // namespace topolab
