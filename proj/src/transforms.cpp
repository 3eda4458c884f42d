#include "ptg/transforms.hpp"

#include "ptg/error.hpp"
#include "ptg/recognize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ptg {

void Labeling::validate() const {
  for (int v = 0; v < size(); ++v)
    if (!((*this)[v] > 0)) throw InvalidInput("label of vertex " + std::to_string(v) + " is not positive", {v});
  auto ord = order();
  for (int k = 0; k + 1 < size(); ++k)
    if ((*this)[ord[k]] == (*this)[ord[k + 1]])
      throw InvalidInput("vertices " + std::to_string(std::min(ord[k], ord[k + 1])) + " and " +
                             std::to_string(std::max(ord[k], ord[k + 1])) + " share a label",
                         {std::min(ord[k], ord[k + 1]), std::max(ord[k], ord[k + 1])});
}

Ordering Labeling::order() const {
  Ordering ord = Ordering::identity(size());
  std::stable_sort(ord.perm.begin(), ord.perm.end(), [&](int a, int b) { return (*this)[a] < (*this)[b]; });
  return ord;
}

namespace {

void require_kind(const Representation& rep, RepKind kind, const char* op) {
  if (rep.kind != kind) throw InvalidInput(std::string(op) + " needs a " + to_string(kind) + " representation, got " + to_string(rep.kind));
  rep.validate();
}

void require_no_containment(const Representation& rep) {
  if (auto pair = find_proper_containment(rep))
    throw InvalidInput("interval " + std::to_string(pair->first) + " properly contains interval " + std::to_string(pair->second),
                       {pair->first, pair->second});
}

// Half the smallest distance from x to any other value, or 1 when alone.
Rat isolated_radius(const std::vector<Rat>& values, std::size_t self) {
  std::optional<Rat> gap;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k == self) continue;
    Rat d = abs(values[k] - values[self]);
    if (!gap || d < *gap) gap = d;
  }
  return gap ? Rat(*gap / 2) : Rat(1);
}

// Integer positions 1 = x_0 < x_1 < ... for vertices listed in an umbrella
// order, with a <-> b adjacent exactly when |x_a - x_b| <= K. Returns the
// smallest such K and the positions (difference constraints, Bellman-Ford).
std::pair<long long, std::vector<long long>> unit_positions(const Graph& q) {
  const int m = q.size();
  if (m == 0) return {1, {}};
  struct Arc {
    int from, to;
    long long w;
  };
  const long long cap = static_cast<long long>(m) * m + 2;
  for (long long K = 1; K <= cap; ++K) {
    std::vector<Arc> arcs;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        if (q.adjacent(a, b))
          arcs.push_back({a, b, K});  // x_b - x_a <= K
        else
          arcs.push_back({b, a, -(K + 1)});  // x_b - x_a >= K + 1
      }
    for (int a = 0; a + 1 < m; ++a) arcs.push_back({a + 1, a, -1});  // x_{a+1} - x_a >= 1

    std::vector<long long> dist(static_cast<std::size_t>(m), 0);
    bool changed = true;
    for (int round = 0; round <= m && changed; ++round) {
      changed = false;
      for (const auto& arc : arcs) {
        long long cand = dist[static_cast<std::size_t>(arc.from)] + arc.w;
        if (cand < dist[static_cast<std::size_t>(arc.to)]) {
          dist[static_cast<std::size_t>(arc.to)] = cand;
          changed = true;
        }
      }
    }
    if (changed) continue;  // negative cycle: K too small
    long long lo = *std::min_element(dist.begin(), dist.end());
    for (auto& x : dist) x = x - lo + 1;
    return {K, dist};
  }
  throw std::logic_error("ordering admits no unit positions; it is not an umbrella ordering");
}

}  // namespace

Representation cmptg_to_umtg(const Representation& rep) {
  require_kind(rep, RepKind::cmptg, "cmptg_to_umtg");
  Rat h0 = 1;
  for (const auto& item : rep.items) h0 = std::max(h0, Rat(item.interval.length() + 1));
  Representation out{RepKind::unit_max_tolerance, {}};
  for (const auto& item : rep.items) {
    Rat c = item.interval.center();
    out.items.push_back({Interval(c, c + h0 / 2), std::nullopt, Rat((h0 - item.interval.length()) / 2)});
  }
  out.validate();
  return out;
}

Representation umtg_to_cmptg(const Representation& rep) {
  if (!is_tolerance(rep.kind))
    throw InvalidInput("umtg_to_cmptg needs a max-tolerance representation, got " + to_string(rep.kind));
  rep.validate();
  Representation out{RepKind::cmptg, {}};
  if (rep.items.empty()) return out;
  const Rat h = rep.items.front().interval.length();
  for (int i = 0; i < rep.size(); ++i) {
    const auto& item = rep.items[static_cast<std::size_t>(i)];
    if (item.interval.length() != h)
      throw InvalidInput("interval " + std::to_string(i) + " has length " + to_string(item.interval.length()) + ", expected " + to_string(h), {i});
    if (*item.tolerance >= h)
      throw InvalidInput("tolerance of interval " + std::to_string(i) + " is not below the common length", {i});
    Rat r = h - *item.tolerance;
    const Rat& l = item.interval.lo();
    out.items.push_back({Interval(l - r, l + r), l, std::nullopt});
  }
  out.validate();
  return out;
}

std::optional<Edge> find_proper_containment(const Representation& rep) {
  for (int i = 0; i < rep.size(); ++i)
    for (int j = 0; j < rep.size(); ++j)
      if (i != j && rep.items[static_cast<std::size_t>(i)].interval.properly_contains(rep.items[static_cast<std::size_t>(j)].interval))
        return Edge{i, j};
  return std::nullopt;
}

Representation pcmptg_to_ucmptg(const Representation& rep) {
  require_kind(rep, RepKind::cmptg, "pcmptg_to_ucmptg");
  require_no_containment(rep);
  const int n = rep.size();
  if (n == 0) return rep;
  const auto& items = rep.items;
  bool unit = std::all_of(items.begin(), items.end(), [&](const RepItem& it) { return it.interval.length() == items.front().interval.length(); });
  if (unit) return rep;

  // Without containment, left endpoints, right endpoints and centers all
  // share one order; equal left endpoints mean equal intervals.
  std::vector<int> ord(static_cast<std::size_t>(n));
  std::iota(ord.begin(), ord.end(), 0);
  std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
    return items[static_cast<std::size_t>(a)].interval.lo() < items[static_cast<std::size_t>(b)].interval.lo();
  });
  std::vector<int> group_of(static_cast<std::size_t>(n));
  std::vector<int> leaders;
  for (int v : ord) {
    if (leaders.empty() || !(items[static_cast<std::size_t>(leaders.back())].interval == items[static_cast<std::size_t>(v)].interval))
      leaders.push_back(v);
    group_of[static_cast<std::size_t>(v)] = static_cast<int>(leaders.size()) - 1;
  }
  const int m = static_cast<int>(leaders.size());
  Graph q(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (center_adjacent(items[static_cast<std::size_t>(leaders[static_cast<std::size_t>(a)])].interval,
                          items[static_cast<std::size_t>(leaders[static_cast<std::size_t>(b)])].interval))
        q.add_edge(a, b);
  auto [K, x] = unit_positions(q);

  const Interval& first = items[static_cast<std::size_t>(leaders.front())].interval;
  const Rat radius = first.length() / 2;
  const Rat c0 = first.center();
  Representation out{RepKind::cmptg, {}};
  for (int v = 0; v < n; ++v) {
    long long steps = x[static_cast<std::size_t>(group_of[static_cast<std::size_t>(v)])] - x.front();
    Rat c = c0 + Rat(steps) * radius / K;
    out.items.push_back({Interval(c - radius, c + radius), c, std::nullopt});
  }
  out.validate();
  return out;
}

Representation proper_to_ucmptg(const Graph& g) {
  Certificate pi = is_proper_interval(g);
  if (pi.verdict != Verdict::yes) throw InvalidInput("graph is not a proper interval graph: " + pi.note);
  const Ordering& sigma = std::get<Ordering>(pi.payload);
  ReducedGraph red = reduced_graph(g);

  // Twin classes in order of first appearance; an induced suborder of an
  // umbrella ordering is again one.
  std::vector<int> class_pos(red.classes.size(), -1);
  std::vector<int> class_order;
  for (int v : sigma.perm) {
    int cls = red.class_of[static_cast<std::size_t>(v)];
    if (class_pos[static_cast<std::size_t>(cls)] < 0) {
      class_pos[static_cast<std::size_t>(cls)] = static_cast<int>(class_order.size());
      class_order.push_back(cls);
    }
  }
  const int m = static_cast<int>(class_order.size());
  Graph q(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (red.graph.adjacent(class_order[static_cast<std::size_t>(a)], class_order[static_cast<std::size_t>(b)])) q.add_edge(a, b);
  auto [K, x] = unit_positions(q);

  Representation out{RepKind::cmptg, {}};
  for (int v = 0; v < g.size(); ++v) {
    Rat c(x[static_cast<std::size_t>(class_pos[static_cast<std::size_t>(red.class_of[static_cast<std::size_t>(v)])])]);
    out.items.push_back({Interval(c - K, c + K), c, std::nullopt});
  }
  if (!verify(out, g).ok) throw std::logic_error("unit central representation does not realize the graph");
  return out;
}

Representation pcmptg_to_50mtg(const Representation& rep) {
  require_kind(rep, RepKind::cmptg, "pcmptg_to_50mtg");
  require_no_containment(rep);
  Representation out{RepKind::fifty_mtg, {}};
  for (const auto& item : rep.items) out.items.push_back({item.interval, std::nullopt, Rat(item.interval.length() / 2)});
  out.validate();
  return out;
}

Representation labeled_to_cmptg(const LabeledGraph& lg) {
  const Graph& g = lg.graph;
  const int n = g.size();
  lg.ordering.validate(n);
  if (static_cast<int>(lg.labels.size()) != n)
    throw InvalidInput("expected " + std::to_string(n) + " labels, got " + std::to_string(lg.labels.size()));
  const auto& x = lg.labels;
  for (int k = 0; k < n; ++k) {
    if (!(x[static_cast<std::size_t>(k)] > 0)) throw InvalidInput("label at position " + std::to_string(k) + " is not positive", {lg.ordering[k]});
    if (k > 0 && !(x[static_cast<std::size_t>(k - 1)] < x[static_cast<std::size_t>(k)]))
      throw InvalidInput("labels are not strictly increasing at position " + std::to_string(k), {lg.ordering[k]});
  }
  if (auto r = check_condition(g, lg.ordering, ConditionKind::mptg_4point); !r.holds)
    throw InvalidInput("ordering violates the four-point condition", r.violation);

  auto at = [&](int k) -> const Rat& { return x[static_cast<std::size_t>(k)]; };
  Representation out{RepKind::cmptg, std::vector<RepItem>(static_cast<std::size_t>(n), RepItem{Interval(0, 1), {}, {}})};
  for (int i = 0; i < n; ++i) {
    int i1 = i, i2 = i;
    for (int j = 0; j < n; ++j)
      if (j != i && g.adjacent(lg.ordering[i], lg.ordering[j])) {
        i1 = std::min(i1, j);
        i2 = std::max(i2, j);
      }
    if (i2 + 1 < n && !(at(i2 + 1) - at(i) > at(i) - at(i1)))
      throw InvalidInput("gap after the last neighbor of position " + std::to_string(i) + " is too small", {lg.ordering[i]});
    if (i1 >= 1 && !(at(i) - at(i1 - 1) > at(i2) - at(i)))
      throw InvalidInput("gap before the first neighbor of position " + std::to_string(i) + " is too small", {lg.ordering[i]});
    Rat r = std::max(Rat(at(i) - at(i1)), Rat(at(i2) - at(i)));
    if (r == 0) r = isolated_radius(x, static_cast<std::size_t>(i));
    out.items[static_cast<std::size_t>(lg.ordering[i])] = {Interval(at(i) - r, at(i) + r), at(i), std::nullopt};
  }
  return out;
}

Representation optimized_to_cicd(const Digraph& d, const Labeling& f) {
  if (auto r = check_optimized(d, f); !r.holds)
    throw InvalidInput("labeling is not optimized: arc " + std::to_string(r.violation[0]) + "->" + std::to_string(r.violation[1]) +
                           " is not shorter than non-arc to " + std::to_string(r.violation[2]),
                       r.violation);
  const int n = d.size();
  Representation out{RepKind::cicd, {}};
  for (int i = 0; i < n; ++i) {
    Rat lo = f[i], hi = f[i];
    for (int j : d.out_neighbors(i)) {
      lo = std::min(lo, f[j]);
      hi = std::max(hi, f[j]);
    }
    Rat r = std::max(Rat(f[i] - lo), Rat(hi - f[i]));
    if (r == 0) r = isolated_radius(f.values, static_cast<std::size_t>(i));
    out.items.push_back({Interval(f[i] - r, f[i] + r), f[i], std::nullopt});
  }
  return out;
}

Labeling cicd_to_labeling(const Representation& rep) {
  require_kind(rep, RepKind::cicd, "cicd_to_labeling");
  if (auto ties = tied_points(rep); !ties.empty())
    throw InvalidInput("centers of items " + std::to_string(ties.front().first) + " and " + std::to_string(ties.front().second) + " coincide",
                       {ties.front().first, ties.front().second});
  Labeling f;
  for (const auto& item : rep.items) f.values.push_back(*item.point);
  if (!f.values.empty()) {
    Rat lo = *std::min_element(f.values.begin(), f.values.end());
    if (lo <= 0)
      for (auto& v : f.values) v += 1 - lo;
  }
  return f;
}

Digraph rep_to_icd_digraph(std::span<const PointedInterval> items) {
  const int n = static_cast<int>(items.size());
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && catches(items[static_cast<std::size_t>(i)], items[static_cast<std::size_t>(j)])) d.add_arc(i, j);
  return d;
}

Digraph rep_to_icd_digraph(const Representation& rep) {
  if (!is_pointed(rep.kind)) throw InvalidInput("kind " + to_string(rep.kind) + " has no points");
  rep.validate();
  auto items = rep.pointed();
  return rep_to_icd_digraph(std::span<const PointedInterval>(items));
}

}  // namespace ptg
