#pragma once

#include "ptg/graph.hpp"
#include "ptg/rational.hpp"

#include <vector>

namespace ptg {

/// Injective map vertex -> positive rational; values[v] is the label of v.
struct Labeling {
  std::vector<Rat> values;

  int size() const noexcept { return static_cast<int>(values.size()); }
  const Rat& operator[](int v) const { return values[static_cast<std::size_t>(v)]; }

  /// Throws InvalidInput on a non-positive or repeated label.
  void validate() const;

  /// Vertices sorted by increasing label.
  Ordering order() const;

  bool operator==(const Labeling&) const = default;
};

/// A graph with an ordering and strictly increasing positive labels along it:
/// labels[k] belongs to vertex ordering[k].
struct LabeledGraph {
  Graph graph;
  Ordering ordering;
  std::vector<Rat> labels;
};

}  // namespace ptg
