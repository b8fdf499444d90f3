// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "random_skeletons.hpp"
#include "topolab/report_json.hpp"
#include "topolab/topo_io.hpp"

using namespace topolab;

namespace {

// Pinned limits.
constexpr double kEnumSmallSeconds = 10.0;    // n <= 4
constexpr double kEnumFiveSeconds = 300.0;    // n = 5
constexpr double kSuiteSeconds = 900.0;       // whole theorem suite
constexpr std::size_t kMinSamples = 10000;    // draws at n = 4
constexpr int kSkeletonRounds = 100;
constexpr std::uint64_t kSkeletonSeed = 20240501;

struct Result {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (detail.size() < 2000) detail += (detail.empty() ? "" : "; ") + what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RunOptions suite_options(unsigned jobs = 0) {
  RunOptions o;
  o.jobs = jobs ? jobs : std::max(1U, std::thread::hardware_concurrency());
  o.seed = default_seed();
  return o;
}

Result enumeration() {
  Result r;
  const std::size_t expected[] = {1, 4, 29, 355, 6942};
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 4; ++n) {
    const auto a = topologies_by_set_families(n);
    const auto b = topologies_by_preorders(n);
    r.require(all_topologies(n).size() == expected[n - 1], "count at n=" + std::to_string(n));
    r.require(a == b, "methods disagree at n=" + std::to_string(n));
  }
  const double small = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  const auto five = all_topologies(5);
  const double large = seconds_since(t0);
  r.require(five.size() == expected[4], "count at n=5 is " + std::to_string(five.size()));
  r.require(small < kEnumSmallSeconds, "n<=4 took " + std::to_string(small) + " s");
  r.require(large < kEnumFiveSeconds, "n=5 took " + std::to_string(large) + " s");
  if (r.pass) {
    std::ostringstream ss;
    ss << "1, 4, 29, 355, 6942; methods agree for n<=4; " << small << " s and " << large << " s";
    r.detail = ss.str();
  }
  return r;
}

Result catalog_examples() {
  Result r;
  auto expect = [&](const std::string& what, Outcome got, bool want) {
    if (got == Outcome::Unknown)
      r.require(false, what + " is Unknown");
    else
      r.require((got == Outcome::True) == want, what + " is " + std::string(name_of(got)));
  };
  namespace cs = catalog_spaces;
  const auto e1 = cs::e1iii();
  expect("e1iii p-closed", evaluate(e1, "p-closed").outcome, true);
  expect("e1iii s-closed", evaluate(e1, "s-closed").outcome, true);
  expect("e1iii alpha-compact", evaluate(e1, "alpha-compact").outcome, false);
  expect("e1iii strongly-compact", evaluate(e1, "strongly-compact").outcome, false);
  expect("e1iii delta-p-closed", evaluate(e1, "delta-p-closed").outcome, false);
  expect("excluded-point-omega p-closed", evaluate(cs::excluded_point_omega(), "p-closed").outcome, true);
  expect("isolated points p-closed", evaluate(cs::excluded_point_isolated(), "p-closed").outcome, false);
  for (int n = 1; n <= kMaxPoints; ++n)
    expect("indiscrete-" + std::to_string(n) + " p-closed", evaluate(indiscrete_space(n), "p-closed").outcome,
           true);
  const auto product = skeleton_product(cs::excluded_point_omega(), cs::indiscrete_two());
  expect("remark product p-closed", evaluate(product, "p-closed").outcome, false);
  expect("remark factor excluded-point-omega p-closed", evaluate(cs::excluded_point_omega(), "p-closed").outcome,
         true);
  expect("remark factor indiscrete-2 p-closed", evaluate(cs::indiscrete_two(), "p-closed").outcome, true);
  // The remark's last clause: every proper preregular subset of the product is p-closed relative.
  const auto rep = run_claim(*find_claim("REMARK"), catalog_universe(), suite_options());
  r.require(rep.unknowns == 0, "REMARK has Unknown instances");
  r.require(rep.violation_count == 0,
            "REMARK: " + (rep.violations.empty() ? std::string("violated") : rep.violations[0].detail));
  if (r.pass) r.detail = "all catalog verdicts definite and as stated";
  return r;
}

Result theorem_suite() {
  Result r;
  const char* ids[] = {"T1",  "C1",  "T2",  "T3",  "T4",  "T41", "T42", "T43",     "P41",   "L2A",     "LP1",    "T5", "T6",
                       "T7",  "TN1", "TN2", "C45", "TN3", "TN4", "TN5", "TN6", "C-ALPHA", "T-IMG", "C-TOPINV", "C-PROD"};
  const auto opt = suite_options();
  const std::vector<Universe> us{exhaustive_universe(1, 4), catalog_universe()};
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (const char* id : ids) {
    const auto rep = run_claim(*find_claim(id), us, opt);
    checked += rep.checked;
    r.require(rep.violation_count == 0,
              std::string(id) + " violated: " + (rep.violations.empty() ? "" : rep.violations[0].detail));
    r.require(rep.status == "pass", std::string(id) + " status " + rep.status);
    if (rep.sampled) r.require(rep.samples >= kMinSamples, std::string(id) + " drew " + std::to_string(rep.samples));
  }
  const double secs = seconds_since(t0);
  r.require(secs < kSuiteSeconds, "suite took " + std::to_string(secs) + " s");
  if (r.pass) r.detail = "25 claims, " + std::to_string(checked) + " instances, " + std::to_string(secs) + " s";
  return r;
}

json without_timing(json j) {
  j.erase("ms");
  return j;
}

Result empirical_lemmas() {
  Result r;
  std::string summary;
  for (const char* id : {"L2", "L3"}) {
    const Claim& c = *find_claim(id);
    const auto rep = run_claim(c, exhaustive_universe(1, 4), suite_options(8));
    const auto again = run_claim(c, exhaustive_universe(1, 4), suite_options(1));
    r.require(without_timing(json(rep)) == without_timing(json(again)), std::string(id) + " differs across job counts");
    const bool definitive = rep.unknowns == 0 && (rep.direction == "stated" || rep.direction == "converse" ||
                                                  rep.direction == "both" || rep.direction == "neither");
    r.require(definitive, std::string(id) + " direction '" + rep.direction + "'");
    for (bool converse : {false, true}) {
      const auto& list = converse ? rep.converse_violations : rep.violations;
      if (list.empty()) continue;
      const auto& first = list.front();
      const auto replayed = replay(c, first, converse);
      r.require(replayed && json(*replayed).dump() == json(first).dump(), std::string(id) + " replay differs");
      // Minimal: nothing smaller fails in the same direction.
      if (first.space.n > 1) {
        const auto smaller = run_claim(c, exhaustive_universe(1, first.space.n - 1), suite_options());
        r.require((converse ? smaller.converse_count : smaller.violation_count) == 0,
                  std::string(id) + " counterexample not minimal");
      }
    }
    summary += std::string(summary.empty() ? "" : ", ") + id + " " + rep.direction;
  }
  if (r.pass) r.detail = summary + "; minimal counterexamples replay identically";
  return r;
}

Result invariants() {
  Result r;
  std::size_t spaces = 0;
  for (const auto& X : oracle::spaces_up_to(4)) {
    ++spaces;
    const auto ref = oracle::ref_of(X);
    const FiniteOps ops(X);
    const std::string at = write_topo(X);
    bool po_in_so = true;
    std::vector<Mask> po;
    for (Mask a = 0; a <= X.carrier(); ++a) {
      const Mask p = preclosure(X, a);
      r.require(p == (a | ref.closure(ref.interior(a))), "pcl formula at " + at);
      r.require(preclosure(X, p) == p && subset_of(a, p) && ref.preclosed(p), "pcl laws at " + at);
      r.require(subset_of(ops.delta_preclosure(a), p), "delta-pcl outside pcl at " + at);
      const bool preopen = ref.preopen(a);
      const bool semi_open = subset_of(a, ref.closure(ref.interior(a)));
      const bool semi_closed = subset_of(ref.interior(ref.closure(a)), a);
      const bool preregular = preopen && ref.preclosed(a);
      const auto f = classify_set(ops, a);
      if (preopen) {
        po.push_back(a);
        r.require(p == ops.pre_theta_closure(a), "p41(i) at " + at);
        po_in_so &= semi_open;
      }
      if (preregular) r.require(f.pre_theta_closed, "p41(ii) at " + at);
      if (semi_open) r.require(p == ref.closure(a), "p41(iii) at " + at);
      r.require((semi_open && semi_closed) == ref.regular_sandwich(a), "semi-regular sandwich at " + at);
      r.require(f.semi_regular == ref.regular_sandwich(a), "semi_regular flag at " + at);
    }
    for (Mask a : po)
      for (Mask b : po) r.require(ref.preopen(a | b), "preopen union at " + at);
    const auto si = evaluate(X, "strongly-irresolvable").outcome;
    r.require(si != Outcome::Unknown && (si == Outcome::True) == po_in_so, "strongly irresolvable at " + at);
    for (const auto& cp : kCoverProperties)
      r.require(evaluate(X, cp.name).outcome == Outcome::True, std::string(cp.name) + " not True at " + at);
  }
  if (r.pass) r.detail = std::to_string(spaces) + " spaces, every subset";
  return r;
}

Mask core_op(const FiniteOps& o, SymOp op, Mask a) {
  const auto& X = o.space();
  switch (op) {
    case SymOp::Interior: return X.interior(a);
    case SymOp::Closure: return X.closure(a);
    case SymOp::Preclosure: return preclosure(X, a);
    case SymOp::Preinterior: return preinterior(X, a);
    case SymOp::DeltaClosure: return o.delta_closure(a);
    case SymOp::PreThetaClosure: return o.pre_theta_closure(a);
    case SymOp::Consolidation: return consolidation(X, a);
    case SymOp::SemiClosure: return semi_closure(X, a);
  }
  return 0;
}

Result symbolic_agreement() {
  Result r;
  constexpr SymOp ops_list[] = {SymOp::Interior,     SymOp::Closure,         SymOp::Preclosure,
                                SymOp::Preinterior,  SymOp::DeltaClosure,    SymOp::PreThetaClosure,
                                SymOp::Consolidation, SymOp::SemiClosure};
  std::mt19937_64 rng(kSkeletonSeed);
  std::size_t compared = 0, mismatches = 0;
  for (int round = 0; round < kSkeletonRounds; ++round) {
    const auto S = testing_support::random_finite_skeleton(rng, 10);
    const auto X = expand(S);
    const FiniteOps fo(X);
    for (Mask m = 0; m <= X.carrier(); ++m) {
      const auto a = abstract(S, m);
      const Mask inst = instantiate(S, a);
      for (SymOp op : ops_list) {
        ++compared;
        if (!(sym_operator(S, op, a) == abstract(S, core_op(fo, op, inst)))) ++mismatches;
      }
      ++compared;
      if (!(sym_classify(S, a) == classify_set(fo, inst))) ++mismatches;
    }
  }
  r.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  r.detail = (r.pass ? "" : r.detail + "; ") + std::to_string(kSkeletonRounds) + " skeletons, " +
             std::to_string(compared) + " comparisons, " + std::to_string(mismatches) + " mismatches";
  return r;
}

Result diagram_reversals() {
  Result r;
  const auto u = catalog_universe();
  const std::pair<const char*, const char*> required[] = {
      {"strongly-compact", "p-closed"}, {"delta-p-closed", "p-closed"}, {"p-closed", "QHC"}};
  for (const auto& [a, b] : required) {
    const auto h = search_counterexample(edge_reversal(a, b), u);
    r.require(h.witness.has_value(), std::string("no witness for ") + b + " => " + a);
  }
  std::string found, missing;
  for (const auto& h : hunt_diagram(u)) {
    auto& list = h.witness ? found : missing;
    list += (list.empty() ? "" : ", ") + h.target + (h.witness ? " by " + *h.witness : "");
  }
  r.detail = (r.pass ? "" : r.detail + "; ") + "reversed: " + found +
             "; not attempted (witnesses lie outside the catalog): " + (missing.empty() ? "none" : missing);
  return r;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Result()>> criteria[] = {
      {"enumeration", enumeration},
      {"catalog examples", catalog_examples},
      {"theorem suite", theorem_suite},
      {"empirical lemmas", empirical_lemmas},
      {"property invariants", invariants},
      {"symbolic oracle agreement", symbolic_agreement},
      {"diagram irreversibility", diagram_reversals}};
  int failed = 0;
  int k = 0;
  for (const auto& [name, fn] : criteria) {
    Result res;
    try {
      res = fn();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d (%s): %s: %s\n", ++k, name, res.pass ? "PASS" : "FAIL", res.detail.c_str());
    std::fflush(stdout);
    failed += res.pass ? 0 : 1;
  }
  std::printf("%d of %d criteria passed\n", k - failed, k);
  return failed ? 1 : 0;
}
