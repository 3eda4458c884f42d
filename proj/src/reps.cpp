#include "ptg/reps.hpp"

#include "ptg/error.hpp"

#include <algorithm>
#include <array>

namespace ptg {

Interval::Interval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_))
    throw InvalidInput("degenerate interval [" + to_string(lo_) + "," + to_string(hi_) + "]");
}

bool Interval::properly_contains(const Interval& other) const {
  return lo_ <= other.lo_ && other.hi_ <= hi_ && !(*this == other);
}

Rat overlap_length(const Interval& a, const Interval& b) {
  Rat lo = std::max(a.lo(), b.lo());
  Rat hi = std::min(a.hi(), b.hi());
  return hi > lo ? Rat(hi - lo) : Rat(0);
}

PointedInterval::PointedInterval(Interval iv, Rat p) : interval(std::move(iv)), point(std::move(p)) {
  if (!interval.contains(point))
    throw InvalidInput("point " + to_string(point) + " outside its interval");
}

PointedInterval PointedInterval::central(Interval iv) {
  Rat c = iv.center();
  return PointedInterval(std::move(iv), std::move(c));
}

ToleranceInterval::ToleranceInterval(Interval iv, Rat t) : interval(std::move(iv)), tolerance(std::move(t)) {
  if (!(tolerance > 0)) throw InvalidInput("tolerance must be positive, got " + to_string(tolerance));
}

ToleranceInterval ToleranceInterval::half(Interval iv) {
  Rat t = iv.length() / 2;
  return ToleranceInterval(std::move(iv), std::move(t));
}

namespace {

constexpr std::array<std::pair<RepKind, std::string_view>, 8> kKindNames{{
    {RepKind::interval, "interval"},
    {RepKind::mptg, "mptg"},
    {RepKind::cmptg, "cmptg"},
    {RepKind::max_tolerance, "max_tolerance"},
    {RepKind::unit_max_tolerance, "unit_max_tolerance"},
    {RepKind::fifty_mtg, "fifty_mtg"},
    {RepKind::icd, "icd"},
    {RepKind::cicd, "cicd"},
}};

bool is_central(RepKind kind) { return kind == RepKind::cmptg || kind == RepKind::cicd; }

std::string item_label(int i) { return "item " + std::to_string(i); }

}  // namespace

std::string to_string(RepKind kind) {
  for (auto [k, name] : kKindNames)
    if (k == kind) return std::string(name);
  return "unknown";
}

RepKind parse_rep_kind(std::string_view name) {
  for (auto [k, n] : kKindNames)
    if (n == name) return k;
  throw InvalidInput("unknown representation kind \"" + std::string(name) + "\"");
}

bool is_pointed(RepKind kind) {
  return kind == RepKind::mptg || kind == RepKind::cmptg || kind == RepKind::icd || kind == RepKind::cicd;
}

bool is_tolerance(RepKind kind) {
  return kind == RepKind::max_tolerance || kind == RepKind::unit_max_tolerance || kind == RepKind::fifty_mtg;
}

bool is_directed(RepKind kind) { return kind == RepKind::icd || kind == RepKind::cicd; }

void Representation::validate() const {
  for (int i = 0; i < size(); ++i) {
    const auto& item = items[static_cast<std::size_t>(i)];
    if (is_pointed(kind)) {
      if (!item.point) throw InvalidInput(item_label(i) + " needs a point for kind " + to_string(kind), {i});
      if (!item.interval.contains(*item.point))
        throw InvalidInput(item_label(i) + " has its point outside the interval", {i});
      if (is_central(kind) && *item.point != item.interval.center())
        throw InvalidInput(item_label(i) + " has a non-central point under kind " + to_string(kind), {i});
    }
    if (is_tolerance(kind)) {
      if (!item.tolerance)
        throw InvalidInput(item_label(i) + " needs a tolerance for kind " + to_string(kind), {i});
      if (!(*item.tolerance > 0)) throw InvalidInput(item_label(i) + " has a non-positive tolerance", {i});
      if (kind == RepKind::fifty_mtg && *item.tolerance * 2 != item.interval.length())
        throw InvalidInput(item_label(i) + " tolerance is not half its length", {i});
      if (kind == RepKind::unit_max_tolerance && item.interval.length() != items.front().interval.length())
        throw InvalidInput(item_label(i) + " length differs from item 0", {i});
    }
  }
}

std::vector<PointedInterval> Representation::pointed() const {
  std::vector<PointedInterval> out;
  for (int i = 0; i < size(); ++i) {
    const auto& item = items[static_cast<std::size_t>(i)];
    if (!item.point) throw InvalidInput(item_label(i) + " has no point", {i});
    out.emplace_back(item.interval, *item.point);
  }
  return out;
}

std::vector<ToleranceInterval> Representation::tolerances() const {
  std::vector<ToleranceInterval> out;
  for (int i = 0; i < size(); ++i) {
    const auto& item = items[static_cast<std::size_t>(i)];
    if (!item.tolerance) throw InvalidInput(item_label(i) + " has no tolerance", {i});
    out.emplace_back(item.interval, *item.tolerance);
  }
  return out;
}

std::vector<Interval> Representation::intervals() const {
  std::vector<Interval> out;
  for (const auto& item : items) out.push_back(item.interval);
  return out;
}

Representation normalized(Representation rep) {
  for (auto& item : rep.items) {
    if (is_central(rep.kind) && !item.point) item.point = item.interval.center();
    if (rep.kind == RepKind::fifty_mtg && !item.tolerance) item.tolerance = item.interval.length() / 2;
  }
  rep.validate();
  return rep;
}

Representation make_pointed(RepKind kind, std::span<const PointedInterval> items) {
  Representation rep{kind, {}};
  for (const auto& p : items) rep.items.push_back({p.interval, p.point, std::nullopt});
  rep.validate();
  return rep;
}

Representation make_central(RepKind kind, std::span<const Interval> intervals) {
  Representation rep{kind, {}};
  for (const auto& iv : intervals) rep.items.push_back({iv, iv.center(), std::nullopt});
  rep.validate();
  return rep;
}

Representation make_tolerance(RepKind kind, std::span<const ToleranceInterval> items) {
  Representation rep{kind, {}};
  for (const auto& t : items) rep.items.push_back({t.interval, std::nullopt, t.tolerance});
  rep.validate();
  return rep;
}

Representation make_intervals(std::span<const Interval> intervals) {
  Representation rep{RepKind::interval, {}};
  for (const auto& iv : intervals) rep.items.push_back({iv, std::nullopt, std::nullopt});
  return rep;
}

int structure_size(const Structure& s) {
  return std::visit([](const auto& x) { return x.size(); }, s);
}

bool center_adjacent(const Interval& a, const Interval& b) {
  return abs(b.center() - a.center()) * 2 <= std::min(a.length(), b.length());
}

bool point_adjacent(const PointedInterval& a, const PointedInterval& b) {
  return a.interval.contains(b.point) && b.interval.contains(a.point);
}

bool tolerance_adjacent(const ToleranceInterval& a, const ToleranceInterval& b) {
  return overlap_length(a.interval, b.interval) >= std::max(a.tolerance, b.tolerance);
}

bool catches(const PointedInterval& a, const PointedInterval& b) { return a.interval.contains(b.point); }

Structure realize(const Representation& rep) {
  rep.validate();
  const int n = rep.size();
  if (is_directed(rep.kind)) {
    auto items = rep.pointed();
    Digraph d(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && catches(items[static_cast<std::size_t>(i)], items[static_cast<std::size_t>(j)]))
          d.add_arc(i, j);
    return d;
  }

  Graph g(n);
  auto add_where = [&](auto&& items, auto&& adjacent) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (adjacent(items[static_cast<std::size_t>(i)], items[static_cast<std::size_t>(j)])) g.add_edge(i, j);
  };
  if (is_pointed(rep.kind)) {
    add_where(rep.pointed(), point_adjacent);
  } else if (is_tolerance(rep.kind)) {
    add_where(rep.tolerances(), tolerance_adjacent);
  } else {
    add_where(rep.intervals(), [](const Interval& a, const Interval& b) {
      return std::max(a.lo(), b.lo()) <= std::min(a.hi(), b.hi());
    });
  }
  return g;
}

Graph realize_graph(const Representation& rep) {
  if (is_directed(rep.kind)) throw InvalidInput("kind " + to_string(rep.kind) + " realizes a digraph");
  return std::get<Graph>(realize(rep));
}

Digraph realize_digraph(const Representation& rep) {
  if (!is_directed(rep.kind)) throw InvalidInput("kind " + to_string(rep.kind) + " realizes a graph");
  return std::get<Digraph>(realize(rep));
}

std::vector<Edge> tied_points(const Representation& rep) {
  std::vector<Edge> out;
  for (int i = 0; i < rep.size(); ++i)
    for (int j = i + 1; j < rep.size(); ++j) {
      const auto& a = rep.items[static_cast<std::size_t>(i)].point;
      const auto& b = rep.items[static_cast<std::size_t>(j)].point;
      if (a && b && *a == *b) out.emplace_back(i, j);
    }
  return out;
}

namespace {

template <class S>
void diff_into(const S& realized, const S& target, VerifyResult& out) {
  if constexpr (std::is_same_v<S, Graph>) {
    for (auto e : target.edges())
      if (!realized.adjacent(e.first, e.second)) out.missing.push_back(e);
    for (auto e : realized.edges())
      if (!target.adjacent(e.first, e.second)) out.extra.push_back(e);
  } else {
    for (auto e : target.arcs())
      if (!realized.has_arc(e.first, e.second)) out.missing.push_back(e);
    for (auto e : realized.arcs())
      if (!target.has_arc(e.first, e.second)) out.extra.push_back(e);
  }
}

}  // namespace

VerifyResult verify(const Representation& rep, const Structure& target) {
  if (rep.size() != structure_size(target))
    throw InvalidInput("representation has " + std::to_string(rep.size()) + " items but the target has " +
                       std::to_string(structure_size(target)) + " vertices");
  Structure realized = realize(rep);
  if (realized.index() != target.index())
    throw InvalidInput(is_directed(rep.kind) ? "a digraph representation cannot verify against a graph"
                                             : "a graph representation cannot verify against a digraph");
  VerifyResult out;
  std::visit(
      [&](const auto& r) {
        using S = std::decay_t<decltype(r)>;
        diff_into(r, std::get<S>(target), out);
      },
      realized);
  out.ok = out.missing.empty() && out.extra.empty();
  return out;
}

}  // namespace ptg
