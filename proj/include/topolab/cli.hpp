#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "report_json.hpp"
#include "topo_io.hpp"

namespace topolab::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;  // claim violation or classification mismatch
inline constexpr int kUnknown = 2;    // Unknown verdict where a definite one was required
inline constexpr int kInputError = 3;

/// Input problem reported with exit code 3.
class InputError : public Error {
 public:
  using Error::Error;
};

struct LoadedSpace {
  std::string label;
  std::optional<FiniteSpace> finite;
  std::optional<SkeletonSpace> skeleton;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// A .topo or .skel file, or a catalog entry.
inline LoadedSpace load_space(const std::string& path, const std::string& catalog_name) {
  if (!catalog_name.empty()) {
    if (!path.empty()) throw InputError("give either --space or --catalog, not both");
    try {
      auto e = catalog(catalog_name);
      return {catalog_name, std::move(e.finite), std::move(e.skeleton)};
    } catch (const InvalidArgument& e) {
      throw InputError(e.what());
    }
  }
  if (path.empty()) throw InputError("a space is required: --space FILE or --catalog NAME");
  const auto text = read_file(path);
  try {
    if (ends_with(path, ".skel")) return {path, std::nullopt, parse_skel(text)};
    return {path, parse_topo(text), std::nullopt};
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// Comma-separated point indices; "" or "-" is the empty set.
inline Mask parse_set_literal(const std::string& text, int n) {
  if (text.empty() || text == "-") return 0;
  Mask m = 0;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int p = -1;
    try {
      p = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || p < 0 || p >= n)
      throw InputError("bad point '" + tok + "' in set literal (carrier has " + std::to_string(n) + " points)");
    m |= bit(p);
  }
  return m;
}

inline SymbolicSet load_sset(const SkeletonSpace& S, const std::string& path) {
  try {
    return parse_sset(S, read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

inline int worst(int a, int b) {
  auto rank = [](int c) { return c == kInputError ? 3 : c == kViolation ? 2 : c == kUnknown ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

inline void print_verdict(std::ostream& out, std::string_view prop, const Verdict& v) {
  out << prop << ": " << lower(name_of(v.outcome)) << "\n";
  if (!v.certificate.empty()) out << "  certificate: " << v.certificate << "\n";
  if (!v.witness.empty()) out << "  witness: " << v.witness << "\n";
}

inline Verdict evaluate_loaded(const LoadedSpace& s, std::string_view prop) {
  return s.finite ? evaluate(*s.finite, prop) : evaluate(*s.skeleton, prop);
}

inline void print_report_line(std::ostream& out, const Report& r) {
  out << r.claim << " " << r.status << " checked=" << r.checked << " engaged=" << r.engaged
      << " unknowns=" << r.unknowns << " skipped=" << r.skipped << " violations=" << r.violation_count;
  if (r.sampled) out << " samples=" << r.samples;
  if (r.empirical) out << " direction=" << r.direction << " converse_violations=" << r.converse_count;
  out << " ms=" << r.ms << "\n";
  if (!r.violations.empty())
    out << "  first violation: " << r.violations[0].space.label << ": " << r.violations[0].detail << "\n";
  if (r.empirical && !r.converse_violations.empty())
    out << "  first converse violation: " << r.converse_violations[0].space.label << ": "
        << r.converse_violations[0].detail << "\n";
}

inline int status_code(const Report& r) {
  if (r.status == "fail") return kViolation;
  if (r.status == "undetermined") return kUnknown;
  return kOk;
}

inline void write_json(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << j.dump(2) << "\n";
}

/// Runs one command line. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite and skeleton topological spaces: operators, p-closedness and the claim suite", "topolab"};
  app.require_subcommand(1);

  std::string space_path, catalog_name, set_text, sset_path, props, json_path, claims = "all", replay_path;
  std::vector<std::string> universes, reverses;
  std::string question;
  bool describe_flag = false, count_only = false, classes = false, exhaustive = false, diagram = false;
  int n = 0;
  unsigned jobs = 1;
  std::size_t samples = 10000;
  std::optional<std::uint64_t> seed;
  std::string method = "default";

  auto add_space = [&](CLI::App* c) {
    c->add_option("--space", space_path, "space file (.topo or .skel)");
    c->add_option("--catalog", catalog_name, "catalog entry name");
  };

  auto* ops = app.add_subcommand("ops", "apply every operator to a set");
  add_space(ops);
  ops->add_option("--set", set_text, "comma-separated points");
  ops->add_option("--sset", sset_path, "symbolic set file for skeletons");

  auto* classify_cmd = app.add_subcommand("classify", "list the set classes a set belongs to");
  add_space(classify_cmd);
  classify_cmd->add_option("--set", set_text, "comma-separated points");
  classify_cmd->add_option("--sset", sset_path, "symbolic set file for skeletons");

  auto* check_cmd = app.add_subcommand("check", "decide properties of a space");
  add_space(check_cmd);
  check_cmd->add_option("--prop", props, "property names, comma-separated, or 'all'")->required();
  check_cmd->add_flag("--describe", describe_flag, "print the space first");

  auto* relative = app.add_subcommand("relative", "decide a cover property of a set relative to the space");
  add_space(relative);
  relative->add_option("--set", set_text, "comma-separated points");
  relative->add_option("--sset", sset_path, "symbolic set file for skeletons");
  relative->add_option("--prop", props, "cover property")->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate labelled topologies");
  enumerate_cmd->add_option("--n", n, "number of points (1..5)")->required();
  enumerate_cmd->add_flag("--count", count_only, "print only the count");
  enumerate_cmd->add_flag("--classes", classes, "print the number of homeomorphism classes");
  enumerate_cmd->add_option("--method", method, "families, preorders or default");

  auto* verify = app.add_subcommand("verify", "run claims over universes");
  verify->add_option("--claims", claims, "claim ids, comma-separated, or 'all'");
  verify->add_option("--universe", universes, "exhaustive:N, exhaustive:A-B, sampled:N:COUNT[:SEED], catalog");
  verify->add_option("--json", json_path, "write the reports as JSON");
  verify->add_flag("--exhaustive", exhaustive, "quantify subsets and maps exhaustively at every size");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--seed", seed, "sampling seed (default TOPOLAB_SEED)");
  verify->add_option("--samples", samples, "draws per claim at sizes above 3");
  verify->add_option("--replay", replay_path, "replay the violations stored in a JSON report");

  auto* hunt = app.add_subcommand("hunt", "search a universe for counterexamples");
  hunt->add_option("--reverse", reverses, "edge A=>B whose reversal is wanted");
  hunt->add_option("--question", question, "TN1-converse or C45-converse");
  hunt->add_flag("--diagram", diagram, "every edge of the implication diagram");
  hunt->add_option("--universe", universes, "universe to search (default catalog)");
  hunt->add_option("--json", json_path, "write the results as JSON");

  auto* catalog_cmd = app.add_subcommand("catalog", "list catalog entries or check one against its expected flags");
  catalog_cmd->add_option("--name", catalog_name, "entry to check");
  catalog_cmd->add_flag("--describe", describe_flag, "print the space");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    auto need_set = [&](const LoadedSpace& s) -> std::variant<Mask, SymbolicSet> {
      if (s.finite) {
        if (!sset_path.empty()) throw InputError("--sset applies to skeletons; use --set");
        return parse_set_literal(set_text, s.finite->size());
      }
      if (sset_path.empty()) throw InputError("skeleton sets are read from files: use --sset");
      return load_sset(*s.skeleton, sset_path);
    };

    if (*ops) {
      const auto s = load_space(space_path, catalog_name);
      const auto a = need_set(s);
      if (s.finite) {
        const FiniteOps o(*s.finite);
        const Mask m = std::get<Mask>(a);
        s.finite->require_fit(m);
        out << "set " << to_string(m) << "\n";
        out << "interior " << to_string(o.interior(m)) << "\n";
        out << "closure " << to_string(o.closure(m)) << "\n";
        out << "consolidation " << to_string(consolidation_of(o, m)) << "\n";
        out << "preclosure " << to_string(preclosure_of(o, m)) << "\n";
        out << "preinterior " << to_string(preinterior_of(o, m)) << "\n";
        out << "semi-closure " << to_string(semi_closure_of(o, m)) << "\n";
        out << "delta-closure " << to_string(o.delta_closure(m)) << "\n";
        out << "pre-theta-closure " << to_string(o.pre_theta_closure(m)) << "\n";
        out << "delta-preclosure " << to_string(o.delta_preclosure(m)) << "\n";
      } else {
        const auto& S = *s.skeleton;
        const auto& t = std::get<SymbolicSet>(a);
        const std::pair<const char*, SymOp> table[] = {
            {"interior", SymOp::Interior},           {"closure", SymOp::Closure},
            {"consolidation", SymOp::Consolidation}, {"preclosure", SymOp::Preclosure},
            {"preinterior", SymOp::Preinterior},     {"semi-closure", SymOp::SemiClosure},
            {"delta-closure", SymOp::DeltaClosure},  {"pre-theta-closure", SymOp::PreThetaClosure}};
        out << "set " << to_string(S, t) << "\n";
        for (const auto& [name, op] : table) out << name << " " << to_string(S, sym_operator(S, op, t)) << "\n";
      }
      return kOk;
    }

    if (*classify_cmd) {
      const auto s = load_space(space_path, catalog_name);
      const auto a = need_set(s);
      const ClassFlags f = s.finite ? classify_set(*s.finite, std::get<Mask>(a))
                                    : sym_classify(*s.skeleton, std::get<SymbolicSet>(a));
      for (const auto& [name, field] : kClassFlagFields) out << name << " " << (f.*field ? "true" : "false") << "\n";
      return kOk;
    }

    if (*check_cmd) {
      const auto names = props == "all" ? property_names() : split_list(props);
      for (const auto& p : names)
        if (!is_property_name(p)) throw InputError("unknown property '" + p + "'");
      const auto s = load_space(space_path, catalog_name);
      if (describe_flag) out << (s.finite ? write_topo(*s.finite) : describe(*s.skeleton));
      int code = kOk;
      for (const auto& p : names) {
        const auto v = evaluate_loaded(s, p);
        print_verdict(out, p, v);
        if (v.outcome == Outcome::Unknown) code = worst(code, kUnknown);
      }
      return code;
    }

    if (*relative) {
      const auto cp = find_cover_property(props);
      if (!cp) throw InputError("unknown cover property '" + props + "'");
      const auto s = load_space(space_path, catalog_name);
      const auto a = need_set(s);
      Verdict v;
      if (s.finite) {
        const Mask m = std::get<Mask>(a);
        s.finite->require_fit(m);
        v = check_cover_relative(*s.finite, m, *cp);
      } else {
        v = check_cover_relative(*s.skeleton, std::get<SymbolicSet>(a), *cp);
      }
      print_verdict(out, props + " relative", v);
      return v.outcome == Outcome::Unknown ? kUnknown : kOk;
    }

    if (*enumerate_cmd) {
      if (n < 1 || n > 5) throw InputError("--n must be between 1 and 5");
      std::vector<FiniteSpace> spaces;
      if (method == "families")
        spaces = topologies_by_set_families(n);
      else if (method == "preorders")
        spaces = topologies_by_preorders(n);
      else if (method == "default")
        spaces = all_topologies(n);
      else
        throw InputError("unknown method '" + method + "'");
      if (count_only || classes) {
        if (count_only) out << spaces.size() << "\n";
        if (classes) out << homeomorphism_classes(spaces).size() << (count_only ? " classes\n" : "\n");
        return kOk;
      }
      for (const auto& X : spaces) out << space_label(X) << "\n";
      return kOk;
    }

    if (*verify) {
      if (!replay_path.empty()) {
        const auto j = json::parse(read_file(replay_path));
        const auto reports = j.is_array() ? j.get<std::vector<Report>>() : std::vector<Report>{j.get<Report>()};
        int code = kOk;
        for (const auto& r : reports) {
          const Claim* c = find_claim(r.claim);
          if (!c) throw InputError("unknown claim '" + r.claim + "' in report");
          auto replay_list = [&](const std::vector<Violation>& list, bool converse) {
            for (const auto& v : list) {
              const auto again = replay(*c, v, converse);
              const bool same = again && json(*again) == json(v);
              out << r.claim << (converse ? " converse" : "") << " replay " << (same ? "reproduced" : "differs")
                  << ": " << v.space.label << "\n";
              if (!same) code = worst(code, kViolation);
            }
          };
          replay_list(r.violations, false);
          replay_list(r.converse_violations, true);
        }
        return code;
      }
      std::vector<const Claim*> selected;
      for (const auto& id : claims == "all" ? claim_ids() : split_list(claims)) {
        const Claim* c = find_claim(id);
        if (!c) throw InputError("unknown claim '" + id + "'");
        selected.push_back(c);
      }
      RunOptions opt;
      opt.jobs = std::max(1U, jobs);
      opt.exhaustive = exhaustive;
      opt.samples = samples;
      opt.seed = seed ? *seed : default_seed();
      if (universes.empty()) universes = {"exhaustive:1-4", "catalog"};
      std::vector<Universe> us;
      for (const auto& u : universes) {
        try {
          us.push_back(parse_universe(u, opt.seed));
        } catch (const InvalidArgument& e) {
          throw InputError(e.what());
        }
      }
      int code = kOk;
      std::vector<Report> reports;
      for (const Claim* c : selected) {
        auto r = run_claim(*c, us, opt);
        print_report_line(out, r);
        code = worst(code, status_code(r));
        reports.push_back(std::move(r));
      }
      if (!json_path.empty()) write_json(json_path, json(reports));
      return code;
    }

    if (*hunt) {
      std::vector<HuntTarget> targets;
      try {
        for (const auto& r : reverses) targets.push_back(parse_hunt_target(r));
        if (!question.empty()) {
          if (question != "TN1-converse" && question != "C45-converse")
            throw InvalidArgument("unknown question '" + question + "'");
          targets.push_back(parse_hunt_target(question));
        }
        if (diagram)
          for (const auto& [a, b] : diagram_edges()) targets.push_back(edge_reversal(a, b));
      } catch (const InvalidArgument& e) {
        throw InputError(e.what());
      }
      if (targets.empty()) throw InputError("nothing to hunt: give --reverse, --question or --diagram");
      if (universes.empty()) universes = {"catalog"};
      std::vector<HuntResult> results;
      for (const auto& u : universes) {
        Universe uni;
        try {
          uni = parse_universe(u, default_seed());
        } catch (const InvalidArgument& e) {
          throw InputError(e.what());
        }
        for (const auto& t : targets) {
          auto h = search_counterexample(t, uni);
          out << h.target << ": " << (h.witness ? "witness " + *h.witness : "none found") << " (" << h.coverage
              << ")\n";
          results.push_back(std::move(h));
        }
      }
      if (!json_path.empty()) write_json(json_path, json(results));
      return kOk;
    }

    if (*catalog_cmd) {
      if (catalog_name.empty()) {
        for (const auto& name : catalog_names()) out << name << ": " << catalog(name).summary << "\n";
        return kOk;
      }
      CatalogEntry e;
      try {
        e = catalog(catalog_name);
      } catch (const InvalidArgument& ex) {
        throw InputError(ex.what());
      }
      out << e.name << ": " << e.summary << "\n";
      if (describe_flag) out << (e.finite ? write_topo(*e.finite) : describe(*e.skeleton));
      int code = kOk;
      for (const auto& f : e.expected) {
        const Outcome got = e.finite ? evaluate(*e.finite, f.property).outcome
                                     : evaluate(*e.skeleton, f.property).outcome;
        const bool match = got == outcome_of(f.value);
        out << f.property << " expected " << (f.value ? "true" : "false") << " got " << lower(name_of(got))
            << (f.provenance == Provenance::Literature ? " [literature]" : " [derived]")
            << (match ? "" : " MISMATCH") << "\n";
        if (got == Outcome::Unknown)
          code = worst(code, kUnknown);
        else if (!match)
          code = worst(code, kViolation);
      }
      return code;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace topolab::cli
