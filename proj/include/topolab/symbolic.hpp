#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "set_classes.hpp"
#include "skeleton.hpp"

namespace topolab {

// Symbolic subsets of skeleton spaces.
//
// Permuting the copies of a node is a homeomorphism of the realised space, so
// a subset is determined up to symmetry by how many copies carry each block
// pattern. On an omega node only ZERO / FIN / INF is kept. Interior and
// closure then act pattern by pattern, using per-node occurrence data.

enum class Card : std::uint8_t { Zero, Fin, Inf };

/// Number of copies carrying a pattern. Finite nodes use `exact`; omega
/// nodes only use `card`.
struct Count {
  Card card = Card::Zero;
  std::uint64_t exact = 0;

  static Count of(std::uint64_t n) { return {n ? Card::Fin : Card::Zero, n}; }
  static Count fin() { return {Card::Fin, 0}; }
  static Count inf() { return {Card::Inf, 0}; }

  bool zero() const { return card == Card::Zero; }

  std::string str() const {
    switch (card) {
      case Card::Zero: return "0";
      case Card::Inf: return "inf";
      case Card::Fin: return exact ? std::to_string(exact) : "fin";
    }
    return "?";
  }

  friend Count operator+(Count a, Count b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    if (a.card == Card::Inf || b.card == Card::Inf) return inf();
    return {Card::Fin, a.exact + b.exact};
  }
  friend bool operator==(const Count&, const Count&) = default;
};

struct SymbolicPart {
  std::uint8_t pattern = 0;
  Count count;
  friend bool operator==(const SymbolicPart&, const SymbolicPart&) = default;
};

/// For each node, the block patterns that occur and how often.
struct SymbolicSet {
  std::vector<std::vector<SymbolicPart>> nodes;
  friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;
};

/// Merges equal patterns, drops zero counts and sorts by pattern.
inline SymbolicSet canonical(SymbolicSet a) {
  for (auto& parts : a.nodes) {
    std::vector<SymbolicPart> out;
    std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.pattern < y.pattern; });
    for (const auto& p : parts) {
      if (p.count.zero()) continue;
      if (!out.empty() && out.back().pattern == p.pattern)
        out.back().count = out.back().count + p.count;
      else
        out.push_back(p);
    }
    parts = std::move(out);
  }
  return a;
}

/// Throws InvalidArgument unless A partitions every node of S.
inline void require_fit(const SkeletonSpace& S, const SymbolicSet& a) {
  if (a.nodes.size() != S.node_count())
    throw InvalidArgument("symbolic set has " + std::to_string(a.nodes.size()) + " nodes, skeleton has " +
                          std::to_string(S.node_count()));
  for (std::size_t i = 0; i < S.node_count(); ++i) {
    const auto& nd = S.node(i);
    std::uint64_t total = 0;
    bool infinite = false;
    for (const auto& p : a.nodes[i]) {
      if (!subset_of(p.pattern, nd.block.all()))
        throw InvalidArgument("pattern outside the block of node '" + nd.name + "'");
      if (nd.mult.is_omega()) {
        infinite |= p.count.card == Card::Inf;
      } else {
        if (p.count.card == Card::Inf) throw InvalidArgument("infinite count on finite node '" + nd.name + "'");
        if (p.count.card == Card::Fin && p.count.exact == 0)
          throw InvalidArgument("finite node '" + nd.name + "' needs exact counts");
        total += p.count.exact;
      }
    }
    if (nd.mult.is_omega() && !infinite)
      throw InvalidArgument("omega node '" + nd.name + "' needs an infinite pattern class");
    if (!nd.mult.is_omega() && total != nd.mult.count())
      throw InvalidArgument("counts on node '" + nd.name + "' add up to " + std::to_string(total) + ", not " +
                            nd.mult.str());
  }
}

inline Count whole_node(const SkeletonNode& nd) {
  return nd.mult.is_omega() ? Count::inf() : Count::of(nd.mult.count());
}

/// The set with one pattern on every copy of every node.
inline SymbolicSet uniform_set(const SkeletonSpace& S, bool full) {
  SymbolicSet a;
  for (const auto& nd : S.nodes())
    a.nodes.push_back({{static_cast<std::uint8_t>(full ? nd.block.all() : 0), whole_node(nd)}});
  return a;
}

/// Pattern of a set on each part of each node of an Overlay.
using Track = std::vector<std::vector<std::uint8_t>>;

/// A partition of every node's copies into parts; sets are Tracks over it.
class Overlay {
 public:
  explicit Overlay(const SkeletonSpace& S) : S_(&S) {
    for (const auto& nd : S.nodes()) counts_.push_back({whole_node(nd)});
  }

  Overlay(const SkeletonSpace& S, std::vector<std::vector<Count>> counts) : S_(&S), counts_(std::move(counts)) {}

  /// Overlay with one part per pattern class of A, and A's track on it.
  static std::pair<Overlay, Track> from_set(const SkeletonSpace& S, const SymbolicSet& a0) {
    require_fit(S, a0);
    const auto a = canonical(a0);
    std::vector<std::vector<Count>> counts;
    Track t;
    for (const auto& parts : a.nodes) {
      counts.emplace_back();
      t.emplace_back();
      for (const auto& p : parts) {
        counts.back().push_back(p.count);
        t.back().push_back(p.pattern);
      }
    }
    return {Overlay(S, std::move(counts)), std::move(t)};
  }

  const SkeletonSpace& space() const { return *S_; }
  std::size_t node_count() const { return counts_.size(); }
  std::size_t part_count(std::size_t i) const { return counts_[i].size(); }
  const Count& count(std::size_t i, std::size_t p) const { return counts_[i][p]; }

  Track uniform(bool full) const {
    Track t;
    for (std::size_t i = 0; i < counts_.size(); ++i)
      t.emplace_back(counts_[i].size(), full ? S_->node(i).block.all() : std::uint8_t{0});
    return t;
  }

  /// Collapses a track to a SymbolicSet.
  SymbolicSet extract(const Track& t) const {
    SymbolicSet a;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      a.nodes.emplace_back();
      for (std::size_t p = 0; p < counts_[i].size(); ++p) a.nodes.back().push_back({t[i][p], counts_[i][p]});
    }
    return canonical(std::move(a));
  }

 private:
  const SkeletonSpace* S_;
  std::vector<std::vector<Count>> counts_;
};

/// One way of splitting every part of a base overlay by a new set.
struct Refinement {
  Overlay overlay;
  Track fresh;                           // the new set on the refined parts
  std::vector<std::vector<int>> parent;  // refined part -> base part

  Track lift(const Track& base) const {
    Track t = fresh;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t k = 0; k < t[i].size(); ++k) t[i][k] = base[i][static_cast<std::size_t>(parent[i][k])];
    return t;
  }
};

/// Upper bound on refinements visited by one enumeration.
inline constexpr double kRefinementLimit = 4e6;

/// Visits every refinement of `base` by a set whose pattern on each part is
/// inside `allowed`; stops early when `visit` returns false. INF parts of
/// omega nodes may split into any nonempty set of patterns; FIN parts do too
/// when `split_fin` is set (the part is then taken to be large enough) and
/// otherwise take a single pattern. Finite nodes split by exact counts.
template <class Visit>
bool for_each_refinement(const Overlay& base, const Track& allowed, Visit&& visit, bool split_fin = true) {
  using Option = std::vector<std::pair<std::uint8_t, Count>>;
  struct Slot {
    std::size_t node;
    std::size_t part;
    std::vector<Option> options;
  };
  std::vector<Slot> slots;
  double total = 1;
  for (std::size_t i = 0; i < base.node_count(); ++i)
    for (std::size_t p = 0; p < base.part_count(i); ++p) {
      Slot slot{i, p, {}};
      std::vector<std::uint8_t> qs;
      for_each_submask(allowed[i][p], [&](Mask q) { qs.push_back(static_cast<std::uint8_t>(q)); });
      const Count c = base.count(i, p);
      if (base.space().node(i).mult.is_omega()) {
        for (std::uint32_t pick = 1; pick < (1U << qs.size()); ++pick) {
          if (!split_fin && c.card == Card::Fin && (pick & (pick - 1))) continue;
          Option o;
          for (std::size_t k = 0; k < qs.size(); ++k)
            if ((pick >> k) & 1U) o.push_back({qs[k], c.card == Card::Inf ? Count::inf() : Count::fin()});
          slot.options.push_back(std::move(o));
        }
      } else {
        // compositions of c.exact into qs.size() nonnegative summands
        Option cur;
        auto rec = [&](auto&& self, std::size_t k, std::uint64_t left) -> void {
          if (k + 1 == qs.size()) {
            if (left) cur.push_back({qs[k], Count::of(left)});
            slot.options.push_back(cur);
            if (left) cur.pop_back();
            return;
          }
          for (std::uint64_t take = 0; take <= left; ++take) {
            if (take) cur.push_back({qs[k], Count::of(take)});
            self(self, k + 1, left - take);
            if (take) cur.pop_back();
          }
        };
        rec(rec, 0, c.exact);
      }
      total *= static_cast<double>(slot.options.size());
      slots.push_back(std::move(slot));
    }
  if (total > kRefinementLimit)
    throw Error("symbolic search needs about " + std::to_string(static_cast<long long>(total)) +
                " refinements, above the limit");

  std::vector<std::size_t> pick(slots.size(), 0);
  while (true) {
    std::vector<std::vector<Count>> counts(base.node_count());
    Refinement r{Overlay(base.space()), Track(base.node_count()), std::vector<std::vector<int>>(base.node_count())};
    for (std::size_t s = 0; s < slots.size(); ++s)
      for (const auto& [q, c] : slots[s].options[pick[s]]) {
        const auto i = slots[s].node;
        counts[i].push_back(c);
        r.fresh[i].push_back(q);
        r.parent[i].push_back(static_cast<int>(slots[s].part));
      }
    r.overlay = Overlay(base.space(), std::move(counts));
    if (!visit(static_cast<const Refinement&>(r))) return false;
    std::size_t s = 0;
    while (s < slots.size() && ++pick[s] == slots[s].options.size()) pick[s++] = 0;
    if (s == slots.size()) return true;
  }
}

/// Operator domain over the tracks of one overlay (see set_classes.hpp).
class SymbolicOps {
 public:
  using Set = Track;

  explicit SymbolicOps(const Overlay& ov) : ov_(&ov) {}

  const Overlay& overlay() const { return *ov_; }

  Track closure(const Track& a) const {
    const auto& S = ov_->space();
    const auto occ = occurrence(a);
    Track r = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& nd = S.node(i);
      std::uint8_t ext = 0;
      for (int e = 0; e < nd.block.size(); ++e)
        for (std::size_t j = 0; j < a.size(); ++j)
          if (j != i && (S.rel_up(i, e, j) & occ[j])) ext |= static_cast<std::uint8_t>(1U << e);
      for (std::size_t p = 0; p < a[i].size(); ++p) {
        const std::uint8_t src = nd.mode == CopyMode::Clique ? occ[i] : a[i][p];
        r[i][p] = nd.block.down_closure(src) | ext;
      }
    }
    return r;
  }

  Track interior(const Track& a) const {
    const auto& S = ov_->space();
    const auto whole = fullness(a);
    Track r = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& nd = S.node(i);
      std::uint8_t ok = nd.block.all();
      for (int e = 0; e < nd.block.size(); ++e)
        for (std::size_t j = 0; j < a.size(); ++j)
          if (j != i && (S.rel_up(i, e, j) & ~whole[j])) ok &= static_cast<std::uint8_t>(~(1U << e));
      for (std::size_t p = 0; p < a[i].size(); ++p) {
        const std::uint8_t src = nd.mode == CopyMode::Clique ? whole[i] : a[i][p];
        r[i][p] = nd.block.up_kernel(src) & ok;
      }
    }
    return r;
  }

  Track complement(const Track& a) const {
    Track r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (auto& q : r[i]) q = static_cast<std::uint8_t>(~q & ov_->space().node(i).block.all());
    return r;
  }
  Track unite(const Track& a, const Track& b) const { return zip(a, b, [](auto x, auto y) { return x | y; }); }
  Track meet(const Track& a, const Track& b) const { return zip(a, b, [](auto x, auto y) { return x & y; }); }
  bool subset(const Track& a, const Track& b) const {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t p = 0; p < a[i].size(); ++p)
        if (a[i][p] & ~b[i][p]) return false;
    return true;
  }
  bool equal(const Track& a, const Track& b) const { return a == b; }
  bool empty(const Track& a) const { return a == ov_->uniform(false); }
  bool full(const Track& a) const { return a == ov_->uniform(true); }

  /// Union over refinements by a set G inside `allowed` with pred(child, r):
  /// for every base part, the patterns such a G can take there.
  template <class Pred>
  Track witness_union(const Track& allowed, Pred&& pred) const {
    Track got = ov_->uniform(false);
    for_each_refinement(*ov_, allowed, [&](const Refinement& r) {
      bool news = false;
      for (std::size_t i = 0; i < r.fresh.size() && !news; ++i)
        for (std::size_t k = 0; k < r.fresh[i].size(); ++k)
          if (r.fresh[i][k] & ~got[i][static_cast<std::size_t>(r.parent[i][k])]) news = true;
      if (!news) return true;
      const SymbolicOps child(r.overlay);
      if (!pred(child, r)) return true;
      for (std::size_t i = 0; i < r.fresh.size(); ++i)
        for (std::size_t k = 0; k < r.fresh[i].size(); ++k)
          got[i][static_cast<std::size_t>(r.parent[i][k])] |= r.fresh[i][k];
      return got != allowed;
    });
    return got;
  }

  /// Complement of the union of regular open sets missing A.
  Track delta_closure(const Track& a) const {
    const auto u = witness_union(complement(a), [](const SymbolicOps& c, const Refinement& r) {
      return c.equal(c.interior(c.closure(r.fresh)), r.fresh);
    });
    return complement(u);
  }

  /// Complement of the union of preopen V with pcl(V) missing A.
  Track pre_theta_closure(const Track& a) const {
    const auto u = witness_union(complement(a), [&a](const SymbolicOps& c, const Refinement& r) {
      return is_preopen_in(c, r.fresh) && c.empty(c.meet(preclosure_of(c, r.fresh), r.lift(a)));
    });
    return complement(u);
  }

  /// Complement of the union of delta-preopen subsets of the complement.
  Track delta_preclosure(const Track& a) const {
    const auto u = witness_union(complement(a), [](const SymbolicOps& c, const Refinement& r) {
      return is_delta_preopen_in(c, r.fresh);
    });
    return complement(u);
  }

 private:
  std::vector<std::uint8_t> occurrence(const Track& a) const {
    std::vector<std::uint8_t> occ(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (auto q : a[i]) occ[i] |= q;
    return occ;
  }

  std::vector<std::uint8_t> fullness(const Track& a) const {
    std::vector<std::uint8_t> w(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      w[i] = ov_->space().node(i).block.all();
      for (auto q : a[i]) w[i] &= q;
    }
    return w;
  }

  template <class F>
  static Track zip(const Track& a, const Track& b, F f) {
    Track r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t p = 0; p < a[i].size(); ++p) r[i][p] = static_cast<std::uint8_t>(f(a[i][p], b[i][p]));
    return r;
  }

  const Overlay* ov_;
};

enum class SymOp { Interior, Closure, Preclosure, Preinterior, DeltaClosure, PreThetaClosure, Consolidation, SemiClosure };

inline SymbolicSet sym_operator(const SkeletonSpace& S, SymOp op, const SymbolicSet& a) {
  const auto [ov, t] = Overlay::from_set(S, a);
  const SymbolicOps o(ov);
  Track r;
  switch (op) {
    case SymOp::Interior: r = o.interior(t); break;
    case SymOp::Closure: r = o.closure(t); break;
    case SymOp::Preclosure: r = preclosure_of(o, t); break;
    case SymOp::Preinterior: r = preinterior_of(o, t); break;
    case SymOp::DeltaClosure: r = o.delta_closure(t); break;
    case SymOp::PreThetaClosure: r = o.pre_theta_closure(t); break;
    case SymOp::Consolidation: r = consolidation_of(o, t); break;
    case SymOp::SemiClosure: r = semi_closure_of(o, t); break;
  }
  return ov.extract(r);
}

inline ClassFlags sym_classify(const SkeletonSpace& S, const SymbolicSet& a) {
  const auto [ov, t] = Overlay::from_set(S, a);
  return classify_with(SymbolicOps(ov), t);
}

/// Visits every subset template of S: visit(ops, refinement) sees the set as
/// refinement.fresh over refinement.overlay. Stops when visit returns false.
template <class Visit>
bool for_each_template(const SkeletonSpace& S, Visit&& visit) {
  const Overlay base(S);
  return for_each_refinement(base, base.uniform(true), [&](const Refinement& r) {
    const SymbolicOps ops(r.overlay);
    return visit(ops, r);
  });
}

// Bridges to explicit sets on expand(S) for all-finite skeletons.

/// Concrete subset of expand(S): copies of each node take the parts' patterns
/// in order.
inline Mask instantiate(const SkeletonSpace& S, const SymbolicSet& a) {
  require_fit(S, a);
  if (!S.all_finite()) throw InvalidArgument("cannot instantiate on an omega node");
  const auto off = expansion_offsets(S);
  Mask m = 0;
  for (std::size_t i = 0; i < S.node_count(); ++i) {
    const int k = S.node(i).block.size();
    std::uint64_t c = 0;
    for (const auto& p : a.nodes[i])
      for (std::uint64_t n = 0; n < p.count.exact; ++n, ++c)
        m |= static_cast<Mask>(p.pattern) << (off[i] + static_cast<int>(c) * k);
  }
  return m;
}

/// Pattern counts of a concrete subset of expand(S).
inline SymbolicSet abstract(const SkeletonSpace& S, Mask m) {
  if (!S.all_finite()) throw InvalidArgument("cannot abstract on an omega node");
  const auto off = expansion_offsets(S);
  SymbolicSet a;
  for (std::size_t i = 0; i < S.node_count(); ++i) {
    const int k = S.node(i).block.size();
    a.nodes.emplace_back();
    for (std::uint64_t c = 0; c < S.node(i).mult.count(); ++c) {
      const auto q = static_cast<std::uint8_t>((m >> (off[i] + static_cast<int>(c) * k)) & ((1U << k) - 1));
      a.nodes.back().push_back({q, Count::of(1)});
    }
  }
  return canonical(std::move(a));
}

/// Readable form, e.g. "t:{0}x inf, {}x fin; p:{0}x 1".
inline std::string to_string(const SkeletonSpace& S, const SymbolicSet& a) {
  std::string out;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    if (i) out += "; ";
    out += S.node(i).name + ":";
    bool first = true;
    for (const auto& p : a.nodes[i]) {
      out += first ? "" : ",";
      out += " " + to_string(static_cast<Mask>(p.pattern)) + "x" + p.count.str();
      first = false;
    }
  }
  return out;
}

}  // namespace topolab
