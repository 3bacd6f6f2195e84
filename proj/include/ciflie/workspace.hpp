#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ciflie/cifset.hpp"
#include "ciflie/graded_map.hpp"
#include "ciflie/superalgebra.hpp"

namespace ciflie {

struct NamedSpace {
  std::string name;
  AlgebraPtr algebra;
};

struct NamedSet {
  std::string name;
  std::string space;
  CIFSet set;
};

struct NamedMap {
  std::string name;
  std::string source;
  std::string target;
  GradedMap map;
};

/// Everything declared by one spec document, in declaration order per kind.
struct Workspace {
  PrimeField field{2};
  std::vector<NamedSpace> spaces;
  std::vector<NamedSet> sets;
  std::vector<NamedMap> maps;

  /// nullptr when the name is not declared.
  const NamedSpace* find_space(std::string_view name) const;
  const NamedSet* find_set(std::string_view name) const;
  const NamedMap* find_map(std::string_view name) const;

  /// Name of the space a given algebra was declared as, if any.
  std::optional<std::string> space_name(const AlgebraPtr& alg) const;

  friend bool operator==(const Workspace& a, const Workspace& b);
};

/// Parses the line-oriented spec language and runs every semantic check.
/// Throws ParseError with a 1-based line and column on any problem.
///
///   field P
///   space NAME dim N parity B1 ... BN
///   bracket NAME I J -> C1 ... CN         (1-based, I <= J)
///   cifset NAME on SPACE default R W RH WH
///   entry NAME V1 ... VN deg R W RH WH
///   map NAME SPACE -> SPACE kind plain|anti rows C ... / C ... /
Workspace parse_spec(std::string_view text);

/// Canonical text: field, spaces with their nonzero upper-triangle brackets,
/// sets with the most frequent nonzero-vector degree as default, then maps.
/// parse_spec(serialize(ws)) == ws.
std::string serialize(const Workspace& ws);

/// `cifset`/`entry` lines for one set, in canonical form.
std::string serialize_cifset(const std::string& name, const std::string& space, const CIFSet& set);

}  // namespace ciflie
