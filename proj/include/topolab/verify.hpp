#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "claims.hpp"
#include "enumerate.hpp"
#include "skel_io.hpp"

namespace topolab {

inline constexpr std::uint64_t kDefaultSeed = 20240501;

/// TOPOLAB_SEED when set to an integer, else the built-in seed.
inline std::uint64_t default_seed() {
  if (const char* s = std::getenv("TOPOLAB_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(s, &used);
      if (used == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("TOPOLAB_SEED is not an unsigned integer: '") + s + "'");
  }
  return kDefaultSeed;
}

// ---------------------------------------------------------------------------
// Universes

enum class UniverseKind { Exhaustive, Sampled, Catalog, Explicit };

inline std::string_view name_of(UniverseKind k) {
  switch (k) {
    case UniverseKind::Exhaustive: return "exhaustive";
    case UniverseKind::Sampled: return "sampled";
    case UniverseKind::Catalog: return "catalog";
    case UniverseKind::Explicit: return "explicit";
  }
  return "?";
}

struct UniverseSpec {
  UniverseKind kind = UniverseKind::Catalog;
  int n_min = 0;  // exhaustive and sampled: sizes n_min..n
  int n = 0;
  std::uint64_t seed = 0;  // sampled only
  std::size_t count = 0;   // members
  friend bool operator==(const UniverseSpec&, const UniverseSpec&) = default;
};

struct Member {
  std::string label;
  std::optional<FiniteSpace> finite;
  std::optional<SkeletonSpace> skeleton;
};

struct Universe {
  UniverseSpec spec;
  std::vector<Member> members;
};

inline std::string space_label(const FiniteSpace& X) {
  std::string s = "n=" + std::to_string(X.size()) + " opens";
  for (Mask u : X.opens()) s += " " + to_string(u);
  return s;
}

inline Universe exhaustive_universe(int n_min, int n_max) {
  if (n_min < 1 || n_max > 5 || n_min > n_max) throw InvalidArgument("exhaustive universes need 1 <= n <= 5");
  Universe u{{UniverseKind::Exhaustive, n_min, n_max, 0, 0}, {}};
  for (int n = n_min; n <= n_max; ++n)
    for (auto& X : all_topologies(n)) u.members.push_back({space_label(X), std::move(X), std::nullopt});
  u.spec.count = u.members.size();
  return u;
}

/// Topology of a random preorder: each ordered pair is related with
/// probability 1/3 before transitive closure.
inline FiniteSpace random_topology(int n, std::mt19937_64& rng) {
  std::vector<Mask> up(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    up[x] = bit(x);
    for (int y = 0; y < n; ++y)
      if (x != y && rng() % 3 == 0) up[x] |= bit(y);
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (int x = 0; x < n; ++x)
      for (int y : points_of(up[x]))
        if (!subset_of(up[y], up[x])) {
          up[x] |= up[y];
          grew = true;
        }
  }
  return FiniteSpace::from_neighborhoods(n, std::move(up));
}

inline Universe sampled_universe(int n, std::uint64_t seed, std::size_t count) {
  if (n < 1 || n > 8) throw InvalidArgument("sampled universes need 1 <= n <= 8");
  Universe u{{UniverseKind::Sampled, n, n, seed, count}, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    auto X = random_topology(n, rng);
    u.members.push_back({space_label(X), std::move(X), std::nullopt});
  }
  return u;
}

inline Universe catalog_universe() {
  Universe u{{UniverseKind::Catalog, 0, 0, 0, 0}, {}};
  for (const auto& name : catalog_names()) {
    auto e = catalog(name);
    u.members.push_back({name, std::move(e.finite), std::move(e.skeleton)});
  }
  u.spec.count = u.members.size();
  return u;
}

inline Universe explicit_universe(std::vector<Member> members) {
  Universe u{{UniverseKind::Explicit, 0, 0, 0, members.size()}, std::move(members)};
  return u;
}

/// "exhaustive:N", "exhaustive:A-B", "sampled:N:COUNT[:SEED]" or "catalog".
inline Universe parse_universe(const std::string& text, std::uint64_t seed) {
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw InvalidArgument("bad number '" + s + "' in universe '" + text + "'");
    return v;
  };
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i)
    if (i == text.size() || text[i] == ':') {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  if (parts[0] == "catalog" && parts.size() == 1) return catalog_universe();
  if (parts[0] == "exhaustive" && parts.size() == 2) {
    const auto dash = parts[1].find('-');
    if (dash == std::string::npos) return exhaustive_universe(num(parts[1]), num(parts[1]));
    return exhaustive_universe(num(parts[1].substr(0, dash)), num(parts[1].substr(dash + 1)));
  }
  if (parts[0] == "sampled" && (parts.size() == 3 || parts.size() == 4)) {
    const int count = num(parts[2]);
    if (count < 1) throw InvalidArgument("sampled universes need a positive count");
    return sampled_universe(num(parts[1]), parts.size() == 4 ? static_cast<std::uint64_t>(num(parts[3])) : seed,
                            static_cast<std::size_t>(count));
  }
  throw InvalidArgument("unknown universe '" + text + "'; expected exhaustive:N, exhaustive:A-B, "
                        "sampled:N:COUNT[:SEED] or catalog");
}

// ---------------------------------------------------------------------------
// Records

/// A space as stored in a report: opens for finite spaces, .skel text for
/// skeletons.
struct SpaceRecord {
  std::string label;
  int n = 0;
  std::vector<Mask> opens;
  std::string skel;
  bool is_skeleton() const { return !skel.empty(); }
  friend bool operator==(const SpaceRecord&, const SpaceRecord&) = default;
};

inline SpaceRecord record_of(const FiniteSpace& X, std::string label) {
  return {std::move(label), X.size(), std::vector<Mask>(X.opens().begin(), X.opens().end()), {}};
}

inline SpaceRecord record_of(const SkeletonSpace& S, std::string label) { return {std::move(label), 0, {}, write_skel(S)}; }

inline FiniteSpace finite_of(const SpaceRecord& r) { return FiniteSpace::from_opens(r.n, r.opens); }
inline SkeletonSpace skeleton_of(const SpaceRecord& r) { return parse_skel(r.skel); }

struct Violation {
  SpaceRecord space;
  std::vector<Mask> subsets;
  std::vector<std::string> symbolic;  // .sset text, skeleton members
  std::optional<SpaceRecord> codomain;
  std::vector<int> table;
  std::optional<SpaceRecord> factor;
  std::string detail;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Report {
  std::string claim;
  std::vector<UniverseSpec> universe;
  std::size_t checked = 0;  // instances evaluated
  std::size_t engaged = 0;  // instances whose hypothesis held
  std::size_t unknowns = 0;
  std::size_t skipped = 0;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // the first few, in universe order
  bool sampled = false;
  std::size_t samples = 0;
  bool empirical = false;
  std::size_t converse_count = 0;
  std::vector<Violation> converse_violations;
  std::string status;
  std::string direction;  // empirical claims: stated, converse, both or neither
  std::string notes;
  std::int64_t ms = 0;
  friend bool operator==(const Report&, const Report&) = default;
};

inline void finish(Report& r) {
  if (r.violation_count > 0)
    r.status = "fail";
  else if (r.unknowns > 0)
    r.status = "undetermined";
  else if (r.checked == 0)
    r.status = "not-applicable";
  else
    r.status = "pass";
  if (r.empirical) {
    const bool stated = r.violation_count == 0, conv = r.converse_count == 0;
    r.direction = stated && conv ? "both" : stated ? "stated" : conv ? "converse" : "neither";
  }
}

inline constexpr std::size_t kKeptViolations = 10;

/// Combines reports of one claim over consecutive universe segments.
inline Report merge(Report a, const Report& b) {
  if (a.claim.empty()) return b;
  a.universe.insert(a.universe.end(), b.universe.begin(), b.universe.end());
  a.checked += b.checked;
  a.engaged += b.engaged;
  a.unknowns += b.unknowns;
  a.skipped += b.skipped;
  a.violation_count += b.violation_count;
  for (const auto& v : b.violations)
    if (a.violations.size() < kKeptViolations) a.violations.push_back(v);
  a.converse_count += b.converse_count;
  for (const auto& v : b.converse_violations)
    if (a.converse_violations.size() < kKeptViolations) a.converse_violations.push_back(v);
  a.sampled |= b.sampled;
  a.samples += b.samples;
  if (a.notes.empty()) a.notes = b.notes;
  a.ms += b.ms;
  finish(a);
  return a;
}

// ---------------------------------------------------------------------------
// Running claims

struct RunOptions {
  unsigned jobs = 1;
  bool exhaustive = false;       // quantify subsets and maps exhaustively at every size
  std::size_t samples = 10000;   // draws per claim per universe at sizes above 3
  std::uint64_t seed = kDefaultSeed;
};

namespace verify_detail {

/// All spaces with 1..cap points, cap <= 4, built once.
inline const std::vector<std::unique_ptr<Codomain>>& codomains(int cap) {
  static const auto table = [] {
    std::vector<std::vector<std::unique_ptr<Codomain>>> t(5);
    for (int c = 1; c <= 4; ++c)
      for (int k = 1; k <= c; ++k)
        for (auto& Y : all_topologies(k)) t[c].push_back(std::make_unique<Codomain>(std::move(Y)));
    return t;
  }();
  return table[static_cast<std::size_t>(std::clamp(cap, 1, 4))];
}

inline std::uint64_t hash_id(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ULL;
  return h;
}

inline std::mt19937_64 member_rng(std::uint64_t seed, const std::string& claim, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(hash_id(claim)), static_cast<std::uint32_t>(hash_id(claim) >> 32),
                    static_cast<std::uint32_t>(index)};
  return std::mt19937_64(seq);
}

struct Tally {
  std::size_t checked = 0, engaged = 0, unknowns = 0, skipped = 0, violation_count = 0, converse_count = 0,
              samples = 0;
  bool sampled = false;
  std::vector<Violation> violations, converse_violations;

  void add(const Eval& e, bool converse, const std::function<Violation()>& record) {
    auto& count = converse ? converse_count : violation_count;
    auto& list = converse ? converse_violations : violations;
    if (converse) {
      if (e.status == InstanceStatus::Fail) {
        ++count;
        if (list.size() < kKeptViolations) {
          list.push_back(record());
          list.back().detail = e.detail;
        }
      }
      return;
    }
    switch (e.status) {
      case InstanceStatus::Skip: ++skipped; return;
      case InstanceStatus::Unknown: ++checked; ++unknowns; return;
      case InstanceStatus::Pass: ++checked; engaged += e.engaged; return;
      case InstanceStatus::Fail:
        ++checked;
        ++engaged;
        ++count;
        if (list.size() < kKeptViolations) {
          list.push_back(record());
          list.back().detail = e.detail;
        }
        return;
    }
  }
};

inline Eval guarded(const std::function<Eval()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    return Eval::skip(std::string("not evaluable: ") + e.what());
  }
}

inline std::vector<int> random_table(int n, int m, bool surjective, std::mt19937_64& rng) {
  std::vector<int> t(static_cast<std::size_t>(n));
  while (true) {
    Mask hit = 0;
    for (auto& y : t) {
      y = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
      hit |= bit(y);
    }
    if (!surjective || hit == full_mask(m)) return t;
  }
}

template <class Visit>
void for_each_table(int n, int m, Visit&& visit) {
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(t);
    int i = 0;
    while (i < n && ++t[i] == m) t[i++] = 0;
    if (i == n) return;
  }
}

inline void run_finite(const Claim& c, const Member& mb, std::size_t draws, bool exhaustive, std::mt19937_64& rng,
                       Tally& tally) {
  const FiniteSpace& X = *mb.finite;
  const int n = X.size();
  const Mask all = X.carrier();
  const FiniteCtx ctx(X, mb.label);

  auto eval = [&](const Instance& in) {
    auto record = [&] {
      Violation v;
      v.space = record_of(X, mb.label);
      v.subsets = in.subsets;
      if (in.codomain) v.codomain = record_of(in.codomain->space, space_label(in.codomain->space));
      v.table = in.table;
      if (in.partner) v.factor = record_of(*in.partner, space_label(*in.partner));
      return v;
    };
    tally.add(guarded([&] { return c.finite(ctx, in); }), false, record);
    if (c.converse) tally.add(guarded([&] { return c.converse(ctx, in); }), true, record);
  };
  auto rand_mask = [&] { return static_cast<Mask>(rng() & all); };
  auto sampled = [&] {
    tally.sampled = true;
    tally.samples += draws;
  };

  switch (c.quantifier) {
    case Quantifier::Spaces: eval({}); return;
    case Quantifier::Subsets:
      if (exhaustive) {
        for (Mask a = 0; a <= all; ++a) eval({{a}});
      } else {
        sampled();
        for (std::size_t i = 0; i < draws; ++i) eval({{rand_mask()}});
      }
      return;
    case Quantifier::SubsetPairs:
      if (exhaustive) {
        for (Mask a = 0; a <= all; ++a)
          for (Mask b = 0; b <= all; ++b) eval({{a, b}});
      } else {
        sampled();
        for (std::size_t i = 0; i < draws; ++i) {
          const Mask a = rand_mask();
          eval({{a, rand_mask()}});
        }
      }
      return;
    case Quantifier::Maps:
    case Quantifier::MapSubsets: {
      const auto& cods = codomains(std::min(n, 4));
      const bool with_k = c.quantifier == Quantifier::MapSubsets;
      if (exhaustive) {
        for (const auto& Y : cods) {
          if (c.surjective_maps && Y->space.size() > n) continue;
          for_each_table(n, Y->space.size(), [&](const std::vector<int>& t) {
            if (c.surjective_maps && image_of(t, all) != Y->space.carrier()) return;
            if (!with_k) return eval({{}, Y.get(), t});
            for (Mask k = 0; k <= all; ++k) eval({{k}, Y.get(), t});
          });
        }
      } else {
        sampled();
        std::vector<const Codomain*> pool;
        for (const auto& Y : cods)
          if (!c.surjective_maps || Y->space.size() <= n) pool.push_back(Y.get());
        for (std::size_t i = 0; i < draws; ++i) {
          const Codomain* Y = pool[rng() % pool.size()];
          auto t = random_table(n, Y->space.size(), c.surjective_maps, rng);
          std::vector<Mask> ks;
          if (with_k) ks.push_back(rand_mask());
          eval({ks, Y, std::move(t)});
        }
      }
      return;
    }
    case Quantifier::Relabellings: {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[i] = i;
      auto one = [&](const std::vector<int>& p) {
        const Codomain Y(relabel(X, p));
        eval({{}, &Y, p});
      };
      if (n <= 5 || exhaustive) {
        do one(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
      } else {
        sampled();
        for (std::size_t i = 0; i < draws; ++i) {
          std::shuffle(perm.begin(), perm.end(), rng);
          one(perm);
        }
      }
      return;
    }
    case Quantifier::Factors: {
      const auto& cods = codomains(std::min(n, 3));
      if (exhaustive) {
        for (const auto& Y : cods) eval({{}, nullptr, {}, &Y->space});
      } else {
        sampled();
        for (std::size_t i = 0; i < draws; ++i) eval({{}, nullptr, {}, &cods[rng() % cods.size()]->space});
      }
      return;
    }
  }
}

inline void run_skeleton(const Claim& c, const Member& mb, const std::vector<Member>& factors, Tally& tally) {
  const SkeletonSpace& S = *mb.skeleton;
  if (!c.skeleton) {
    ++tally.skipped;
    return;
  }
  const SkelCtx ctx(S, mb.label);
  auto eval = [&](const SymInstance& in) {
    auto record = [&] {
      Violation v;
      v.space = record_of(S, mb.label);
      for (const auto& a : in.subsets) v.symbolic.push_back(write_sset(S, a));
      if (in.partner) v.factor = record_of(*in.partner, in.partner_label);
      return v;
    };
    tally.add(guarded([&] { return c.skeleton(ctx, in); }), false, record);
  };
  switch (c.quantifier) {
    case Quantifier::Spaces: eval({}); return;
    case Quantifier::Subsets:
      for (auto& a : skeleton_templates(S)) eval({{std::move(a)}});
      return;
    case Quantifier::Factors:
      for (const auto& f : factors) eval({{}, &*f.skeleton, f.label});
      return;
    default: ++tally.skipped; return;
  }
}

}  // namespace verify_detail

/// Evaluates a claim on every member of `u`. Members are split across
/// `jobs` workers; each member draws its samples from its own seeded
/// stream, so the report does not depend on the worker count.
inline Report run_claim(const Claim& c, const Universe& u, const RunOptions& opt = {}) {
  using namespace verify_detail;
  const auto start = std::chrono::steady_clock::now();

  // The sample budget is shared by the members that are sampled at all.
  std::size_t sampled_count = 0;
  std::vector<Member> factors;  // small finite members, as skeletons, for product claims
  for (const auto& mb : u.members)
    if (mb.finite) {
      if (!opt.exhaustive && mb.finite->size() > 3) ++sampled_count;
      if (mb.finite->size() <= 3) factors.push_back({mb.label, std::nullopt, skeletonize(*mb.finite)});
    }
  const std::size_t draws = sampled_count ? (opt.samples + sampled_count - 1) / sampled_count : 0;

  std::vector<Tally> tallies(u.members.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < u.members.size();) {
      const auto& mb = u.members[i];
      if (mb.finite) {
        auto rng = member_rng(opt.seed, c.id, i);
        run_finite(c, mb, draws, opt.exhaustive || mb.finite->size() <= 3, rng, tallies[i]);
      } else {
        run_skeleton(c, mb, factors, tallies[i]);
      }
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(opt.jobs, static_cast<unsigned>(u.members.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  Report r;
  r.claim = c.id;
  r.universe = {u.spec};
  r.empirical = c.empirical;
  r.notes = c.note;
  for (auto& t : tallies) {
    r.checked += t.checked;
    r.engaged += t.engaged;
    r.unknowns += t.unknowns;
    r.skipped += t.skipped;
    r.violation_count += t.violation_count;
    r.converse_count += t.converse_count;
    r.sampled |= t.sampled;
    r.samples += t.samples;
    for (auto& v : t.violations)
      if (r.violations.size() < kKeptViolations) r.violations.push_back(std::move(v));
    for (auto& v : t.converse_violations)
      if (r.converse_violations.size() < kKeptViolations) r.converse_violations.push_back(std::move(v));
  }
  r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  finish(r);
  return r;
}

/// Runs a claim over several universes and merges the reports in order.
inline Report run_claim(const Claim& c, const std::vector<Universe>& us, const RunOptions& opt = {}) {
  Report r;
  for (const auto& u : us) r = merge(std::move(r), run_claim(c, u, opt));
  return r;
}

/// Re-evaluates a stored violation; returns the rebuilt record when the
/// instance still fails, nothing when it passes.
inline std::optional<Violation> replay(const Claim& c, const Violation& v, bool converse = false) {
  Eval e;
  if (v.space.is_skeleton()) {
    if (!c.skeleton || converse) throw InvalidArgument("claim " + c.id + " has no skeleton form");
    const auto S = skeleton_of(v.space);
    SymInstance in;
    for (const auto& t : v.symbolic) in.subsets.push_back(parse_sset(S, t));
    std::optional<SkeletonSpace> partner;
    if (v.factor) {
      partner = skeleton_of(*v.factor);
      in.partner = &*partner;
      in.partner_label = v.factor->label;
    }
    const SkelCtx ctx(S, v.space.label);
    e = c.skeleton(ctx, in);
  } else {
    const auto X = finite_of(v.space);
    Instance in;
    in.subsets = v.subsets;
    in.table = v.table;
    std::optional<Codomain> cod;
    std::optional<FiniteSpace> partner;
    if (v.codomain) {
      cod.emplace(finite_of(*v.codomain));
      in.codomain = &*cod;
    }
    if (v.factor) {
      partner = finite_of(*v.factor);
      in.partner = &*partner;
    }
    const FiniteCtx ctx(X, v.space.label);
    const auto& pred = converse ? c.converse : c.finite;
    if (!pred) throw InvalidArgument("claim " + c.id + " has no converse");
    e = pred(ctx, in);
  }
  if (e.status != InstanceStatus::Fail) return std::nullopt;
  Violation out = v;
  out.detail = e.detail;
  return out;
}

// ---------------------------------------------------------------------------
// Counterexample search

/// Wanted: `holds` True and `fails` False on one member, definite verdicts only.
struct HuntTarget {
  std::string id;
  std::string description;
  std::function<Outcome(const Member&)> holds;
  std::function<Outcome(const Member&)> fails;
};

struct HuntResult {
  std::string target;
  std::optional<std::string> witness;
  std::optional<SpaceRecord> space;
  std::size_t checked = 0;
  std::size_t unknowns = 0;
  std::string coverage;
};

inline Outcome member_property(const Member& m, const std::string& prop) {
  return m.finite ? evaluate(*m.finite, prop).outcome : evaluate(*m.skeleton, prop).outcome;
}

/// Reversal of the implication antecedent => consequent.
inline HuntTarget edge_reversal(const std::string& antecedent, const std::string& consequent) {
  for (const auto& p : {antecedent, consequent})
    if (!is_property_name(p)) throw InvalidArgument("unknown property '" + p + "'");
  return {antecedent + "=>" + consequent, consequent + " but not " + antecedent,
          [consequent](const Member& m) { return member_property(m, consequent); },
          [antecedent](const Member& m) { return member_property(m, antecedent); }};
}

inline Outcome proper_pre_theta_closed_relative(const Member& m) {
  Outcome every = Outcome::True;
  if (m.finite) {
    const FiniteCtx c(*m.finite, m.label);
    for (Mask a = 0; a < c.all(); ++a)
      if (c.flags(a).pre_theta_closed) every = and3(every, c.rel(a));
    return every;
  }
  const SkelCtx c(*m.skeleton, m.label);
  for (const auto& a : skeleton_templates(*m.skeleton)) {
    if (c.full(a) || !c.flags(a).pre_theta_closed) continue;
    every = and3(every, c.rel(a));
    if (every == Outcome::False) break;
  }
  return every;
}

/// Search targets for the two open questions and for diagram edge reversals
/// written "A=>B".
inline HuntTarget parse_hunt_target(const std::string& text) {
  if (text == "TN1-converse")
    return {text, "every pre-theta-open cover has a finite subcover, yet not p-closed",
            [](const Member& m) { return member_property(m, "pre-theta-compact"); },
            [](const Member& m) { return member_property(m, "p-closed"); }};
  if (text == "C45-converse")
    return {text, "every proper pre-theta-closed set is p-closed relative, yet not p-closed",
            proper_pre_theta_closed_relative, [](const Member& m) { return member_property(m, "p-closed"); }};
  const auto arrow = text.find("=>");
  if (arrow == std::string::npos)
    throw InvalidArgument("hunt target must be 'A=>B', 'TN1-converse' or 'C45-converse', got '" + text + "'");
  return edge_reversal(text.substr(0, arrow), text.substr(arrow + 2));
}

inline HuntResult search_counterexample(const HuntTarget& t, const Universe& u) {
  HuntResult r{t.id, std::nullopt, std::nullopt, 0, 0, {}};
  for (const auto& m : u.members) {
    ++r.checked;
    const Outcome f = t.fails(m);
    if (f == Outcome::True) continue;
    const Outcome h = t.holds(m);
    if (f == Outcome::False && h == Outcome::True) {
      r.witness = m.label;
      r.space = m.finite ? record_of(*m.finite, m.label) : record_of(*m.skeleton, m.label);
      break;
    }
    if (f == Outcome::Unknown || h == Outcome::Unknown) ++r.unknowns;
  }
  r.coverage = std::to_string(r.checked) + " of " + std::to_string(u.members.size()) + " " +
               std::string(name_of(u.spec.kind)) + " members examined, " + std::to_string(r.unknowns) +
               " undetermined";
  if (!r.witness) r.coverage += "; none found, which is not a proof that none exists";
  return r;
}

/// Reversal search for every diagram edge.
inline std::vector<HuntResult> hunt_diagram(const Universe& u) {
  std::vector<HuntResult> out;
  for (const auto& [a, b] : diagram_edges()) out.push_back(search_counterexample(edge_reversal(a, b), u));
  return out;
}

}  // namespace topolab
