#pragma once

#include "ptg/graph.hpp"
#include "ptg/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace ptg {

/// Closed interval [lo, hi] with lo < hi.
class Interval {
 public:
  Interval(Rat lo, Rat hi);

  const Rat& lo() const noexcept { return lo_; }
  const Rat& hi() const noexcept { return hi_; }
  Rat length() const { return hi_ - lo_; }
  Rat center() const { return (lo_ + hi_) / 2; }
  bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
  /// True iff this interval strictly contains `other` (other is a proper subset).
  bool properly_contains(const Interval& other) const;

  bool operator==(const Interval&) const = default;

 private:
  Rat lo_;
  Rat hi_;
};

/// Length of the intersection, zero when disjoint.
Rat overlap_length(const Interval& a, const Interval& b);

struct PointedInterval {
  Interval interval;
  Rat point;

  PointedInterval(Interval iv, Rat p);
  static PointedInterval central(Interval iv);
};

struct ToleranceInterval {
  Interval interval;
  Rat tolerance;

  ToleranceInterval(Interval iv, Rat t);
  static ToleranceInterval half(Interval iv);
};

enum class RepKind {
  interval,            // plain intersection rule, no points
  mptg,
  cmptg,
  max_tolerance,
  unit_max_tolerance,
  fifty_mtg,
  icd,
  cicd,
};

std::string to_string(RepKind kind);
RepKind parse_rep_kind(std::string_view name);

bool is_pointed(RepKind kind);
bool is_tolerance(RepKind kind);
bool is_directed(RepKind kind);

struct RepItem {
  Interval interval;
  std::optional<Rat> point;
  std::optional<Rat> tolerance;

  bool operator==(const RepItem&) const = default;
};

struct Representation {
  RepKind kind = RepKind::interval;
  std::vector<RepItem> items;

  int size() const noexcept { return static_cast<int>(items.size()); }

  /// Throws InvalidInput naming the first item that breaks the kind's rules.
  void validate() const;

  std::vector<PointedInterval> pointed() const;
  std::vector<ToleranceInterval> tolerances() const;
  std::vector<Interval> intervals() const;

  bool operator==(const Representation&) const = default;
};

/// Fills points with centers for cmptg/cicd and tolerances with half lengths
/// for fifty_mtg when they were left out, then validates.
Representation normalized(Representation rep);

Representation make_pointed(RepKind kind, std::span<const PointedInterval> items);
Representation make_central(RepKind kind, std::span<const Interval> intervals);
Representation make_tolerance(RepKind kind, std::span<const ToleranceInterval> items);
Representation make_intervals(std::span<const Interval> intervals);

using Structure = std::variant<Graph, Digraph>;

int structure_size(const Structure& s);

bool center_adjacent(const Interval& a, const Interval& b);
bool point_adjacent(const PointedInterval& a, const PointedInterval& b);
bool tolerance_adjacent(const ToleranceInterval& a, const ToleranceInterval& b);
/// Arc a -> b of an interval catch digraph: b's point lies in a's interval.
bool catches(const PointedInterval& a, const PointedInterval& b);

Structure realize(const Representation& rep);
Graph realize_graph(const Representation& rep);
Digraph realize_digraph(const Representation& rep);

/// Pairs of items whose points coincide. Realization is well defined with
/// ties, but constructions that order by center need them distinct.
std::vector<Edge> tied_points(const Representation& rep);

struct VerifyResult {
  bool ok = false;
  std::vector<Edge> missing;  // in target, not realized
  std::vector<Edge> extra;    // realized, not in target
};

VerifyResult verify(const Representation& rep, const Structure& target);

}  // namespace ptg
