#pragma once

#include "ptg/labeling.hpp"
#include "ptg/reps.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ptg {

struct ExpectedVerdict {
  std::string cls;  // class name such as "cmptg" or "fifty_mtg"
  bool member = false;

  bool operator==(const ExpectedVerdict&) const = default;
};

struct Instance {
  std::string name;
  std::string description;
  Structure structure;
  std::optional<Representation> rep;
  // When present, the rep realizes this structure instead (claw_plus_two
  // carries a representation of the graph with one vertex removed).
  std::optional<Structure> rep_structure;
  std::vector<int> rep_vertices;  // rep item -> vertex of `structure`, when rep_structure is set
  std::optional<Labeling> labeling;
  std::vector<ExpectedVerdict> expected;
  std::vector<std::string> vertex_names;

  /// The structure the representation is meant to realize.
  const Structure& rep_target() const { return rep_structure ? *rep_structure : structure; }
};

struct CatalogParams {
  std::optional<int> n;
  std::optional<Rat> alpha;
};

struct CatalogEntry {
  std::string name;
  std::string summary;
  bool takes_n = false;
  bool takes_alpha = false;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Builds a named instance; throws InvalidInput for unknown names or
/// out-of-range parameters.
Instance instance(std::string_view name, const CatalogParams& params = {});

/// Open upper bound on the pendant spacing for the central star family.
Rat k1n_alpha_bound(int n);

/// Intervals of the half-tolerance cycle family, vertex i on the cycle.
std::vector<Interval> cycle_fifty_intervals(int n);

}  // namespace ptg
