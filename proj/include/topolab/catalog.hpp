#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skeleton.hpp"

namespace topolab {

enum class Provenance { Literature, Derived };

struct ExpectedFlag {
  std::string property;  // property name as used by the property registry
  bool value;
  Provenance provenance;
};

/// A named example space with the classification it is expected to get.
struct CatalogEntry {
  std::string name;
  std::string summary;
  std::optional<SkeletonSpace> skeleton;  // set for skeleton entries
  std::optional<FiniteSpace> finite;      // set for finite entries
  std::vector<ExpectedFlag> expected;
};

namespace catalog_spaces {

inline SkeletonNode node(std::string name, Multiplicity m, CopyMode mode, const char* block = "chain1") {
  return {std::move(name), m, mode, Block::named(block)};
}

/// The reals with opens {}, {0}, X: one open point below which everything sits.
inline SkeletonSpace e1iii() {
  return SkeletonSpace::build({node("r", Multiplicity::omega(), CopyMode::Clique),
                               node("z", Multiplicity::finite(1), CopyMode::Antichain)},
                              {{0, 0, 1, 0}});
}

/// Countable point excluded topology: p below countably many isolated points.
inline SkeletonSpace excluded_point_omega() {
  return SkeletonSpace::build({node("p", Multiplicity::finite(1), CopyMode::Antichain),
                               node("t", Multiplicity::omega(), CopyMode::Antichain)},
                              {{0, 0, 1, 0}});
}

/// The isolated points of the point excluded space: a countable discrete space.
inline SkeletonSpace excluded_point_isolated() {
  return SkeletonSpace::build({node("t", Multiplicity::omega(), CopyMode::Antichain)}, {});
}

inline SkeletonSpace indiscrete_omega() {
  return SkeletonSpace::build({node("x", Multiplicity::omega(), CopyMode::Clique)}, {});
}

inline SkeletonSpace indiscrete_two() {
  return SkeletonSpace::build({node("i", Multiplicity::finite(1), CopyMode::Antichain, "clique2")}, {});
}

}  // namespace catalog_spaces

inline std::vector<std::string> catalog_names() {
  return {"e1iii",           "excluded-point-omega", "excluded-point-omega-isolated",
          "indiscrete-omega", "remark-product",       "indiscrete-2",
          "indiscrete-3",     "sierpinski"};
}

/// Known names are those of catalog_names() plus "indiscrete-N" for 1 <= N <= kMaxPoints.
inline CatalogEntry catalog(const std::string& name) {
  using namespace catalog_spaces;
  const auto L = Provenance::Literature;
  const auto D = Provenance::Derived;
  if (name == "e1iii")
    return {name,
            "reals with opens {}, {0}, X",
            e1iii(),
            std::nullopt,
            {{"p-closed", true, L},
             {"s-closed", true, L},
             {"alpha-compact", false, L},
             {"strongly-compact", false, L},
             {"delta-p-closed", false, L},
             {"QHC", true, D},
             {"extremally-disconnected", true, D},
             {"aleph0-ed", true, D}}};
  if (name == "excluded-point-omega")
    return {name,
            "countable point excluded topology",
            excluded_point_omega(),
            std::nullopt,
            {{"p-closed", true, L}, {"T0", true, D}, {"QHC", true, D}, {"compact", true, D}}};
  if (name == "excluded-point-omega-isolated")
    return {name,
            "isolated points of the point excluded space",
            excluded_point_isolated(),
            std::nullopt,
            {{"p-closed", false, L}, {"QHC", false, D}}};
  if (name == "indiscrete-omega")
    return {name,
            "countable indiscrete space",
            indiscrete_omega(),
            std::nullopt,
            {{"QHC", true, D}, {"p-closed", false, D}, {"compact", true, D}}};
  if (name == "remark-product")
    return {name,
            "point excluded space times the two-point indiscrete space",
            skeleton_product(excluded_point_omega(), indiscrete_two()),
            std::nullopt,
            {{"p-closed", false, L}, {"QHC", true, D}}};
  if (name == "sierpinski")
    return {name, "two points, one open", std::nullopt, sierpinski_space(),
            {{"p-closed", true, D}, {"strongly-irresolvable", true, D}, {"T0", true, D}}};
  if (name.rfind("indiscrete-", 0) == 0) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(name.substr(11), &used);
      if (used != name.size() - 11) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n >= 1 && n <= kMaxPoints)
      return {name, "finite indiscrete space", std::nullopt, indiscrete_space(n),
              {{"p-closed", true, L}, {"QHC", true, D}}};
  }
  throw InvalidArgument("unknown catalog entry '" + name + "'");
}

}  // namespace topolab
