#pragma once

#include <istream>
#include <sstream>
#include <string>

#include "symbolic.hpp"

namespace topolab {

// .skel text format
//
//   node NAME [card INT|omega] [mode antichain|clique] [block BLOCK]
//   rel A.e <= B.f
//
// card defaults to 1, mode to antichain, block to chain1. BLOCK is a name
// accepted by Block::named. Blank lines and '#' comments are ignored.
//
// .sset text format (a subset of a given skeleton)
//
//   part NODE ELEMS COUNT
//
// ELEMS is "-" or a comma list of block elements; COUNT is an integer, "fin"
// or "inf". Nodes without part lines are missed entirely.

namespace detail {

inline std::string strip_comment(std::string line) {
  if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
  return line;
}

inline int parse_index(const std::string& tok, int lineno) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used == tok.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(lineno, "bad number '" + tok + "'");
}

}  // namespace detail

inline SkeletonSpace parse_skel(std::istream& in) {
  std::vector<SkeletonNode> nodes;
  struct PendingRel {
    std::string from, to;
    int e, f, line;
  };
  std::vector<PendingRel> pending;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(detail::strip_comment(line));
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "node") {
      SkeletonNode nd;
      if (!(ls >> nd.name) || nd.name.find('.') != std::string::npos)
        throw ParseError(lineno, "'node' needs a name without '.'");
      std::string key, value;
      while (ls >> key) {
        if (!(ls >> value)) throw ParseError(lineno, "'" + key + "' needs a value");
        if (key == "card") {
          if (value == "omega") {
            nd.mult = Multiplicity::omega();
          } else {
            const int c = detail::parse_index(value, lineno);
            if (c < 1) throw ParseError(lineno, "card must be positive");
            nd.mult = Multiplicity::finite(static_cast<std::uint64_t>(c));
          }
        } else if (key == "mode") {
          if (value == "antichain")
            nd.mode = CopyMode::Antichain;
          else if (value == "clique")
            nd.mode = CopyMode::Clique;
          else
            throw ParseError(lineno, "mode must be antichain or clique");
        } else if (key == "block") {
          try {
            nd.block = Block::named(value);
          } catch (const SkeletonError& e) {
            throw ParseError(lineno, e.what());
          }
        } else {
          throw ParseError(lineno, "unknown node attribute '" + key + "'");
        }
      }
      nodes.push_back(nd);
    } else if (word == "rel") {
      std::string a, le, b;
      if (!(ls >> a >> le >> b) || le != "<=") throw ParseError(lineno, "expected 'rel A.e <= B.f'");
      const auto da = a.rfind('.'), db = b.rfind('.');
      if (da == std::string::npos || db == std::string::npos)
        throw ParseError(lineno, "relation endpoints look like NODE.ELEMENT");
      pending.push_back({a.substr(0, da), b.substr(0, db), detail::parse_index(a.substr(da + 1), lineno),
                         detail::parse_index(b.substr(db + 1), lineno), lineno});
    } else {
      throw ParseError(lineno, "unknown directive '" + word + "'");
    }
  }
  if (nodes.empty()) throw ParseError(lineno, "no nodes");
  auto find = [&](const std::string& name, int at) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].name == name) return static_cast<int>(i);
    throw ParseError(at, "unknown node '" + name + "'");
  };
  std::vector<SkeletonRelation> rels;
  for (const auto& p : pending) rels.push_back({find(p.from, p.line), p.e, find(p.to, p.line), p.f});
  try {
    return SkeletonSpace::build(std::move(nodes), rels);
  } catch (const SkeletonError& e) {
    throw ParseError(lineno, e.what());
  }
}

inline SkeletonSpace parse_skel(const std::string& text) {
  std::istringstream in(text);
  return parse_skel(in);
}

inline std::string write_skel(const SkeletonSpace& S) {
  std::string out;
  for (const auto& nd : S.nodes())
    out += "node " + nd.name + " card " + nd.mult.str() + " mode " +
           (nd.mode == CopyMode::Clique ? "clique" : "antichain") + " block " + nd.block.name() + "\n";
  for (const auto& r : S.relations())
    out += "rel " + S.node(r.from_node).name + "." + std::to_string(r.from_elem) + " <= " +
           S.node(r.to_node).name + "." + std::to_string(r.to_elem) + "\n";
  return out;
}

inline SymbolicSet parse_sset(const SkeletonSpace& S, std::istream& in) {
  SymbolicSet a;
  std::vector<bool> seen(S.node_count(), false);
  a.nodes.resize(S.node_count());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(detail::strip_comment(line));
    std::string word, node, elems, count;
    if (!(ls >> word)) continue;
    if (word != "part") throw ParseError(lineno, "unknown directive '" + word + "'");
    if (!(ls >> node >> elems >> count)) throw ParseError(lineno, "expected 'part NODE ELEMS COUNT'");
    const auto idx = S.find_node(node);
    if (!idx) throw ParseError(lineno, "unknown node '" + node + "'");
    std::uint8_t pattern = 0;
    if (elems != "-") {
      std::istringstream es(elems);
      std::string tok;
      while (std::getline(es, tok, ',')) {
        const int e = detail::parse_index(tok, lineno);
        if (e >= S.node(*idx).block.size()) throw ParseError(lineno, "element " + tok + " outside the block");
        pattern |= static_cast<std::uint8_t>(1U << e);
      }
    }
    Count c;
    if (count == "inf")
      c = Count::inf();
    else if (count == "fin")
      c = Count::fin();
    else
      c = Count::of(static_cast<std::uint64_t>(detail::parse_index(count, lineno)));
    seen[static_cast<std::size_t>(*idx)] = true;
    a.nodes[static_cast<std::size_t>(*idx)].push_back({pattern, c});
  }
  for (std::size_t i = 0; i < S.node_count(); ++i)
    if (!seen[i]) a.nodes[i].push_back({0, whole_node(S.node(i))});
  a = canonical(std::move(a));
  try {
    require_fit(S, a);
  } catch (const InvalidArgument& e) {
    throw ParseError(lineno, e.what());
  }
  return a;
}

inline SymbolicSet parse_sset(const SkeletonSpace& S, const std::string& text) {
  std::istringstream in(text);
  return parse_sset(S, in);
}

inline std::string write_sset(const SkeletonSpace& S, const SymbolicSet& a0) {
  require_fit(S, a0);
  const auto a = canonical(a0);
  std::string out;
  for (std::size_t i = 0; i < a.nodes.size(); ++i)
    for (const auto& p : a.nodes[i]) {
      std::string elems;
      for (int e : points_of(p.pattern)) elems += (elems.empty() ? "" : ",") + std::to_string(e);
      out += "part " + S.node(i).name + " " + (elems.empty() ? "-" : elems) + " " + p.count.str() + "\n";
    }
  return out;
}

/// Point labels and open sets of the realisation, for finite skeletons; a
/// structural summary otherwise.
inline std::string describe(const SkeletonSpace& S) {
  std::string out;
  for (const auto& nd : S.nodes())
    out += "node " + nd.name + ": " + nd.mult.str() + " x " + nd.block.name() + " (" +
           (nd.mode == CopyMode::Clique ? "clique" : "antichain") + ")\n";
  if (!S.all_finite()) return out + "omega nodes present; no explicit open sets\n";
  const auto X = expand(S);
  const auto pts = S.realise(0, 0);
  for (std::size_t x = 0; x < pts.size(); ++x) out += "point " + std::to_string(x) + " = " + S.point_name(pts[x]) + "\n";
  for (Mask u : X.opens()) out += "open " + to_string(u) + "\n";
  return out;
}

}  // namespace topolab
