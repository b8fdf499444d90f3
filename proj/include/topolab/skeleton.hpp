#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finite_space.hpp"

namespace topolab {

/// Preorder on at most three elements, stored as up-masks: bit f of up[e] is
/// set iff e <= f.
class Block {
 public:
  static constexpr int kMaxSize = 3;

  Block() = default;

  /// Builds from an explicit relation; adds reflexivity, rejects intransitive input.
  static Block from_pairs(int size, const std::vector<std::pair<int, int>>& leq) {
    if (size < 1 || size > kMaxSize) throw SkeletonError("block size must be 1..3");
    Block b;
    b.size_ = size;
    for (int e = 0; e < size; ++e) b.up_[e] = static_cast<std::uint8_t>(1U << e);
    for (auto [e, f] : leq) {
      if (e < 0 || f < 0 || e >= size || f >= size) throw SkeletonError("block relation out of range");
      b.up_[e] |= static_cast<std::uint8_t>(1U << f);
    }
    for (int e = 0; e < size; ++e)
      for (int f = 0; f < size; ++f)
        if (b.leq(e, f) && !subset_of(b.up_[f], b.up_[e]))
          throw SkeletonError("block relation is not transitive at " + std::to_string(e) + " <= " +
                              std::to_string(f));
    return b;
  }

  /// chain1, chain2, chain3, clique2, clique3, antichain2, antichain3, or the
  /// generic form "K:e<=f,e<=f".
  static Block named(const std::string& name) {
    if (name == "chain1") return from_pairs(1, {});
    if (name == "chain2") return from_pairs(2, {{0, 1}});
    if (name == "chain3") return from_pairs(3, {{0, 1}, {1, 2}, {0, 2}});
    if (name == "clique2") return from_pairs(2, {{0, 1}, {1, 0}});
    if (name == "clique3") return from_pairs(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
    if (name == "antichain2") return from_pairs(2, {});
    if (name == "antichain3") return from_pairs(3, {});
    const auto colon = name.find(':');
    if (colon == std::string::npos || colon == 0) throw SkeletonError("unknown block '" + name + "'");
    int size = 0;
    try {
      size = std::stoi(name.substr(0, colon));
    } catch (const std::exception&) {
      throw SkeletonError("unknown block '" + name + "'");
    }
    std::vector<std::pair<int, int>> pairs;
    std::string rest = name.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      const std::string item = rest.substr(pos, comma - pos);
      const auto le = item.find("<=");
      if (le == std::string::npos) throw SkeletonError("bad block relation '" + item + "'");
      try {
        pairs.emplace_back(std::stoi(item.substr(0, le)), std::stoi(item.substr(le + 2)));
      } catch (const std::exception&) {
        throw SkeletonError("bad block relation '" + item + "'");
      }
      pos = comma + 1;
    }
    return from_pairs(size, pairs);
  }

  int size() const { return size_; }
  std::uint8_t all() const { return static_cast<std::uint8_t>((1U << size_) - 1); }
  std::uint8_t up(int e) const { return up_[e]; }
  bool leq(int e, int f) const { return (up_[e] >> f) & 1U; }

  /// Elements below some member of `pattern`.
  std::uint8_t down_closure(std::uint8_t pattern) const {
    std::uint8_t r = 0;
    for (int e = 0; e < size_; ++e)
      if (up_[e] & pattern) r |= static_cast<std::uint8_t>(1U << e);
    return r;
  }

  /// Elements whose whole up-set lies in `pattern`.
  std::uint8_t up_kernel(std::uint8_t pattern) const {
    std::uint8_t r = 0;
    for (int e = 0; e < size_; ++e)
      if (subset_of(up_[e], pattern)) r |= static_cast<std::uint8_t>(1U << e);
    return r;
  }

  bool is_clique() const {
    for (int e = 0; e < size_; ++e)
      if (up_[e] != all()) return false;
    return true;
  }

  /// Canonical text form accepted by named().
  std::string name() const {
    for (const char* n : {"chain1", "chain2", "chain3", "clique2", "clique3", "antichain2", "antichain3"})
      if (named(n) == *this) return n;
    std::string s = std::to_string(size_) + ":";
    bool first = true;
    for (int e = 0; e < size_; ++e)
      for (int f = 0; f < size_; ++f)
        if (e != f && leq(e, f)) {
          if (!first) s += ',';
          s += std::to_string(e) + "<=" + std::to_string(f);
          first = false;
        }
    return s;
  }

  friend bool operator==(const Block& a, const Block& b) {
    return a.size_ == b.size_ && a.up_ == b.up_;
  }

 private:
  int size_ = 1;
  std::array<std::uint8_t, kMaxSize> up_{1, 0, 0};
};

enum class CopyMode { Antichain, Clique };

/// Number of copies of a node: a positive integer or countably infinite.
class Multiplicity {
 public:
  static Multiplicity finite(std::uint64_t n) {
    if (n == 0) throw SkeletonError("multiplicity must be positive");
    return Multiplicity(n);
  }
  static Multiplicity omega() { return Multiplicity(0); }

  bool is_omega() const { return n_ == 0; }
  std::uint64_t count() const { return n_; }
  std::string str() const { return is_omega() ? "omega" : std::to_string(n_); }

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  explicit Multiplicity(std::uint64_t n) : n_(n) {}
  std::uint64_t n_;  // 0 encodes omega
};

struct SkeletonNode {
  std::string name;
  Multiplicity mult = Multiplicity::finite(1);
  CopyMode mode = CopyMode::Antichain;
  Block block;
};

/// Declares node[from].e <= node[to].f for every pair of copies.
struct SkeletonRelation {
  int from_node = 0;
  int from_elem = 0;
  int to_node = 0;
  int to_elem = 0;
};

/// A point of a realised skeleton.
struct SkeletonPoint {
  int node;
  int copy;
  int elem;
};

/// Alexandrov space presented by finitely many symmetry classes.
///
/// Each node stands for `mult` copies of a small preorder (its block). Copies
/// of one node are mutually unrelated (antichain) or related exactly as the
/// block relates their elements (clique). Relations between different nodes
/// hold uniformly for all copies. The realised space carries the up-set
/// topology of the resulting preorder.
class SkeletonSpace {
 public:
  static SkeletonSpace build(std::vector<SkeletonNode> nodes, const std::vector<SkeletonRelation>& rels) {
    if (nodes.empty()) throw SkeletonError("a skeleton needs at least one node");
    SkeletonSpace s;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      auto& nd = nodes[i];
      if (nd.name.empty()) nd.name = "n" + std::to_string(i);
      for (std::size_t j = 0; j < i; ++j)
        if (nodes[j].name == nd.name) throw SkeletonError("duplicate node name '" + nd.name + "'");
      if (!nd.mult.is_omega() && nd.mult.count() == 1) nd.mode = CopyMode::Antichain;
    }
    s.nodes_ = std::move(nodes);
    const std::size_t n = s.nodes_.size();
    s.rel_.assign(n, std::vector<std::array<std::uint8_t, Block::kMaxSize>>(n, {0, 0, 0}));
    for (const auto& r : rels) {
      if (r.from_node < 0 || r.to_node < 0 || r.from_node >= static_cast<int>(n) ||
          r.to_node >= static_cast<int>(n))
        throw SkeletonError("relation refers to an unknown node");
      if (r.from_node == r.to_node)
        throw SkeletonError("relation inside node '" + s.nodes_[r.from_node].name +
                            "' is not class-uniform; express it in the block");
      const auto& a = s.nodes_[r.from_node].block;
      const auto& b = s.nodes_[r.to_node].block;
      if (r.from_elem < 0 || r.from_elem >= a.size() || r.to_elem < 0 || r.to_elem >= b.size())
        throw SkeletonError("relation refers to an element outside its block");
      s.rel_[r.from_node][r.to_node][r.from_elem] |= static_cast<std::uint8_t>(1U << r.to_elem);
    }
    s.validate_probe();
    return s;
  }

  std::size_t node_count() const { return nodes_.size(); }
  const SkeletonNode& node(std::size_t i) const { return nodes_[i]; }
  std::span<const SkeletonNode> nodes() const { return nodes_; }

  /// Elements f of node j with node[i].e <= node[j].f (i != j).
  std::uint8_t rel_up(std::size_t i, int e, std::size_t j) const { return rel_[i][j][e]; }

  std::vector<SkeletonRelation> relations() const {
    std::vector<SkeletonRelation> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      for (std::size_t j = 0; j < nodes_.size(); ++j)
        for (int e = 0; e < nodes_[i].block.size(); ++e)
          for (int f = 0; f < nodes_[j].block.size(); ++f)
            if ((rel_[i][j][e] >> f) & 1U)
              out.push_back({static_cast<int>(i), e, static_cast<int>(j), f});
    return out;
  }

  std::optional<int> find_node(const std::string& name) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].name == name) return static_cast<int>(i);
    return std::nullopt;
  }

  bool all_finite() const {
    return std::none_of(nodes_.begin(), nodes_.end(), [](const auto& n) { return n.mult.is_omega(); });
  }

  /// Realised order between two points.
  bool leq(const SkeletonPoint& p, const SkeletonPoint& q) const {
    if (p.node == q.node) {
      const auto& nd = nodes_[p.node];
      if (p.copy == q.copy || nd.mode == CopyMode::Clique) return nd.block.leq(p.elem, q.elem);
      return false;
    }
    return (rel_[p.node][q.node][p.elem] >> q.elem) & 1U;
  }

  /// Points of a finite realisation; omega nodes get `omega_copies` copies and
  /// finite nodes min(mult, cap) copies (cap <= 0 means no cap).
  std::vector<SkeletonPoint> realise(int omega_copies, int cap) const {
    std::vector<SkeletonPoint> pts;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const auto& nd = nodes_[i];
      std::uint64_t copies = nd.mult.is_omega() ? static_cast<std::uint64_t>(omega_copies) : nd.mult.count();
      if (cap > 0 && !nd.mult.is_omega()) copies = std::min<std::uint64_t>(copies, static_cast<std::uint64_t>(cap));
      for (std::uint64_t c = 0; c < copies; ++c)
        for (int e = 0; e < nd.block.size(); ++e) pts.push_back({static_cast<int>(i), static_cast<int>(c), e});
    }
    return pts;
  }

  std::string point_name(const SkeletonPoint& p) const {
    return nodes_[p.node].name + "#" + std::to_string(p.copy) + "." + std::to_string(p.elem);
  }

 private:
  SkeletonSpace() = default;

  // Class-uniform relations mean any transitivity failure already shows with
  // three copies of every node.
  void validate_probe() const {
    const auto pts = realise(3, 3);
    for (const auto& a : pts)
      for (const auto& b : pts) {
        if (!leq(a, b)) continue;
        for (const auto& c : pts)
          if (leq(b, c) && !leq(a, c))
            throw SkeletonError("transitivity violation: " + point_name(a) + " <= " + point_name(b) +
                                " <= " + point_name(c) + " but not " + point_name(a) + " <= " +
                                point_name(c));
      }
  }

  std::vector<SkeletonNode> nodes_;
  std::vector<std::vector<std::array<std::uint8_t, Block::kMaxSize>>> rel_;
};

/// Index of the first point of each node in the realisation order (node,
/// copy, element) used by expand().
inline std::vector<int> expansion_offsets(const SkeletonSpace& S) {
  std::vector<int> off;
  int acc = 0;
  for (const auto& nd : S.nodes()) {
    off.push_back(acc);
    acc += static_cast<int>(nd.mult.count()) * nd.block.size();
  }
  off.push_back(acc);
  return off;
}

/// Explicit finite space of an all-finite skeleton; point (i, c, e) gets
/// label offset(i) + c * |block(i)| + e.
inline FiniteSpace expand(const SkeletonSpace& S) {
  if (!S.all_finite()) throw SkeletonError("cannot expand a skeleton with an omega node");
  std::uint64_t total = 0;
  for (const auto& nd : S.nodes()) total += nd.mult.count() * static_cast<std::uint64_t>(nd.block.size());
  if (total > static_cast<std::uint64_t>(kMaxPoints))
    throw SkeletonError("expansion has " + std::to_string(total) + " points, above the limit");
  const auto pts = S.realise(0, 0);
  std::vector<Mask> nb(pts.size(), 0);
  for (std::size_t x = 0; x < pts.size(); ++x)
    for (std::size_t y = 0; y < pts.size(); ++y)
      if (S.leq(pts[x], pts[y])) nb[x] |= bit(static_cast<int>(y));
  return FiniteSpace::from_neighborhoods(static_cast<int>(pts.size()), std::move(nb));
}

/// Folds small finite clique nodes into single-copy blocks and collapses
/// omega clique nodes whose block is a clique to one element. The realised
/// space is unchanged up to homeomorphism.
inline SkeletonSpace normalize(const SkeletonSpace& S) {
  std::vector<SkeletonNode> nodes;
  // elem_map[i][e] = list of new element indices that old element e became
  std::vector<std::vector<std::vector<int>>> elem_map;
  for (const auto& nd : S.nodes()) {
    const int k = nd.block.size();
    SkeletonNode out = nd;
    std::vector<std::vector<int>> em(static_cast<std::size_t>(k));
    if (!nd.mult.is_omega() && nd.mode == CopyMode::Clique && nd.mult.count() > 1 &&
        nd.mult.count() * static_cast<std::uint64_t>(k) <= Block::kMaxSize) {
      const int m = static_cast<int>(nd.mult.count());
      std::vector<std::pair<int, int>> pairs;
      for (int c = 0; c < m; ++c)
        for (int e = 0; e < k; ++e) {
          em[e].push_back(c * k + e);
          for (int d = 0; d < m; ++d)
            for (int f = 0; f < k; ++f)
              if (nd.block.leq(e, f)) pairs.emplace_back(c * k + e, d * k + f);
        }
      out.block = Block::from_pairs(m * k, pairs);
      out.mult = Multiplicity::finite(1);
      out.mode = CopyMode::Antichain;
    } else if (nd.mult.is_omega() && nd.mode == CopyMode::Clique && nd.block.is_clique() && k > 1) {
      out.block = Block::named("chain1");
      for (int e = 0; e < k; ++e) em[e].push_back(0);
    } else {
      for (int e = 0; e < k; ++e) em[e].push_back(e);
    }
    nodes.push_back(out);
    elem_map.push_back(std::move(em));
  }
  std::vector<SkeletonRelation> rels;
  for (const auto& r : S.relations())
    for (int a : elem_map[r.from_node][r.from_elem])
      for (int b : elem_map[r.to_node][r.to_elem]) rels.push_back({r.from_node, a, r.to_node, b});
  return SkeletonSpace::build(std::move(nodes), rels);
}

/// Skeleton whose realisation is the product preorder. Throws SkeletonError
/// when a product node would need a block above three elements or when the
/// product relation is not class-uniform.
inline SkeletonSpace skeleton_product(const SkeletonSpace& S0, const SkeletonSpace& T0) {
  const SkeletonSpace S = normalize(S0), T = normalize(T0);
  const std::size_t ns = S.node_count(), nt = T.node_count();
  auto id = [nt](std::size_t i, std::size_t j) { return static_cast<int>(i * nt + j); };

  std::vector<SkeletonNode> nodes;
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < nt; ++j) {
      const auto& a = S.node(i);
      const auto& b = T.node(j);
      const int k = a.block.size() * b.block.size();
      if (k > Block::kMaxSize)
        throw SkeletonError("representation overflow: product of nodes '" + a.name + "' and '" + b.name +
                            "' needs a block of " + std::to_string(k) + " elements");
      std::vector<std::pair<int, int>> pairs;
      for (int e = 0; e < a.block.size(); ++e)
        for (int f = 0; f < b.block.size(); ++f)
          for (int e2 = 0; e2 < a.block.size(); ++e2)
            for (int f2 = 0; f2 < b.block.size(); ++f2)
              if (a.block.leq(e, e2) && b.block.leq(f, f2))
                pairs.emplace_back(e * b.block.size() + f, e2 * b.block.size() + f2);
      SkeletonNode nd;
      nd.name = a.name + "*" + b.name;
      nd.block = Block::from_pairs(k, pairs);
      const bool a1 = !a.mult.is_omega() && a.mult.count() == 1;
      const bool b1 = !b.mult.is_omega() && b.mult.count() == 1;
      if (a.mult.is_omega() || b.mult.is_omega())
        nd.mult = Multiplicity::omega();
      else
        nd.mult = Multiplicity::finite(a.mult.count() * b.mult.count());
      if (a1)
        nd.mode = b.mode;
      else if (b1)
        nd.mode = a.mode;
      else if (a.mode == b.mode)
        nd.mode = a.mode;
      else
        throw SkeletonError("representation overflow: copies of '" + a.name + "' x '" + b.name +
                            "' mix clique and antichain behaviour");
      nodes.push_back(nd);
    }

  // Possible values of the factor relation between element e of node i and
  // element e2 of node i2 over all copy choices the product can pair up.
  auto factor_values = [](const SkeletonSpace& F, std::size_t i, int e, std::size_t i2, int e2) {
    std::vector<bool> vals;
    if (i != i2) {
      vals.push_back((F.rel_up(i, e, i2) >> e2) & 1U);
      return vals;
    }
    const auto& nd = F.node(i);
    vals.push_back(nd.block.leq(e, e2));  // same copy
    if (nd.mult.is_omega() || nd.mult.count() > 1)
      vals.push_back(F.leq({static_cast<int>(i), 0, e}, {static_cast<int>(i), 1, e2}));
    return vals;
  };

  std::vector<SkeletonRelation> rels;
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < nt; ++j)
      for (std::size_t i2 = 0; i2 < ns; ++i2)
        for (std::size_t j2 = 0; j2 < nt; ++j2) {
          if (i == i2 && j == j2) continue;
          const auto& a = S.node(i);
          const auto& b = T.node(j);
          const auto& a2 = S.node(i2);
          const auto& b2 = T.node(j2);
          for (int e = 0; e < a.block.size(); ++e)
            for (int f = 0; f < b.block.size(); ++f)
              for (int e2 = 0; e2 < a2.block.size(); ++e2)
                for (int f2 = 0; f2 < b2.block.size(); ++f2) {
                  const auto sv = factor_values(S, i, e, i2, e2);
                  const auto tv = factor_values(T, j, f, j2, f2);
                  std::optional<bool> value;
                  for (bool x : sv)
                    for (bool y : tv) {
                      const bool v = x && y;
                      if (value && *value != v)
                        throw SkeletonError("representation overflow: relation between '" + a.name + "*" +
                                            b.name + "' and '" + a2.name + "*" + b2.name +
                                            "' depends on the copies involved");
                      value = v;
                    }
                  if (value.value_or(false))
                    rels.push_back({id(i, j), e * b.block.size() + f, id(i2, j2), e2 * b2.block.size() + f2});
                }
        }
  return normalize(SkeletonSpace::build(std::move(nodes), rels));
}

/// Skeleton of a finite space: one clique node per class of topologically
/// indistinguishable points.
inline SkeletonSpace skeletonize(const FiniteSpace& X) {
  std::vector<int> cls(static_cast<std::size_t>(X.size()), -1);
  std::vector<int> reps;
  for (int x = 0; x < X.size(); ++x) {
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (X.neighborhood(reps[k]) == X.neighborhood(x)) {
        cls[x] = static_cast<int>(k);
        break;
      }
    if (cls[x] < 0) {
      cls[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  }
  std::vector<SkeletonNode> nodes;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    const auto size = std::count(cls.begin(), cls.end(), static_cast<int>(k));
    nodes.push_back({"c" + std::to_string(k), Multiplicity::finite(static_cast<std::uint64_t>(size)),
                     CopyMode::Clique, Block::named("chain1")});
  }
  std::vector<SkeletonRelation> rels;
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      if (a != b && has(X.neighborhood(reps[a]), reps[b]))
        rels.push_back({static_cast<int>(a), 0, static_cast<int>(b), 0});
  return SkeletonSpace::build(std::move(nodes), rels);
}

}  // namespace topolab
