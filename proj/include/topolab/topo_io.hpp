#pragma once

#include <istream>
#include <sstream>
#include <string>

#include "finite_space.hpp"

namespace topolab {

// .topo text format
//
//   points N
//   open p1 p2 ...      one open set per line; {} and the carrier are implied
//
// Blank lines and '#' comments are ignored.

inline FiniteSpace parse_topo(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Mask> opens;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "points") {
      if (n != -1) throw ParseError(lineno, "duplicate 'points' line");
      if (!(ls >> n) || n < 1 || n > kMaxPoints)
        throw ParseError(lineno, "'points' needs a size between 1 and " + std::to_string(kMaxPoints));
    } else if (word == "open") {
      if (n == -1) throw ParseError(lineno, "'open' before 'points'");
      Mask m = 0;
      std::string tok;
      while (ls >> tok) {
        int p = -1;
        try {
          std::size_t used = 0;
          p = std::stoi(tok, &used);
          if (used != tok.size()) p = -1;
        } catch (const std::exception&) {
          p = -1;
        }
        if (p < 0 || p >= n) throw ParseError(lineno, "bad point '" + tok + "'");
        m |= bit(p);
      }
      opens.push_back(m);
    } else {
      throw ParseError(lineno, "unknown directive '" + word + "'");
    }
  }
  if (n == -1) throw ParseError(lineno, "missing 'points' line");
  try {
    return FiniteSpace::from_opens(n, std::move(opens));
  } catch (const TopologyError& e) {
    throw ParseError(lineno, e.what());
  }
}

inline FiniteSpace parse_topo(const std::string& text) {
  std::istringstream in(text);
  return parse_topo(in);
}

inline std::string write_topo(const FiniteSpace& X) {
  std::string out = "points " + std::to_string(X.size()) + "\n";
  for (Mask u : X.opens()) {
    if (u == 0 || u == X.carrier()) continue;
    out += "open";
    for (int p : points_of(u)) out += " " + std::to_string(p);
    out += "\n";
  }
  return out;
}

}  // namespace topolab
