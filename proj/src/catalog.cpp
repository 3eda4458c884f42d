#include "ptg/catalog.hpp"

#include "ptg/error.hpp"

#include <algorithm>

namespace ptg {

namespace {

Interval iv(std::string_view lo, std::string_view hi) { return Interval(parse_rat(lo), parse_rat(hi)); }

Representation fifty(const std::vector<Interval>& ivs) {
  std::vector<ToleranceInterval> items;
  for (const auto& i : ivs) items.push_back(ToleranceInterval::half(i));
  return make_tolerance(RepKind::fifty_mtg, items);
}

Representation tolerance_rep(RepKind kind, const std::vector<std::pair<Interval, std::string_view>>& pairs) {
  std::vector<ToleranceInterval> items;
  for (const auto& [i, t] : pairs) items.emplace_back(i, parse_rat(t));
  return make_tolerance(kind, items);
}

Graph complement_of_cycle(int n) { return complement(cycle_graph(n)); }

void forbid_params(std::string_view name, const CatalogParams& p) {
  if (p.n || p.alpha) throw InvalidInput("instance " + std::string(name) + " takes no parameters");
}

Instance k1n_cmptg(const CatalogParams& p) {
  if (p.alpha && !p.n) throw InvalidInput("k1n_cmptg needs --n when --alpha is given");
  const int n = p.n.value_or(3);
  if (n < 1 || n > 60) throw InvalidInput("k1n_cmptg needs 1 <= n <= 60, got " + std::to_string(n));
  const Rat bound = k1n_alpha_bound(n);
  const Rat alpha = p.alpha.value_or(bound / 2);
  if (!(alpha > 0 && alpha < bound))
    throw InvalidInput("alpha must lie strictly between 0 and " + to_string(bound) + ", got " + to_string(alpha));

  std::vector<Interval> ivs{Interval(10, 20)};
  for (int k = 1; k <= n; ++k) ivs.emplace_back(15 - (3 * pow2(k - 1) - 2) * alpha, 15 + alpha);
  Instance in;
  in.name = "k1n_cmptg";
  in.description = "star K_{1," + std::to_string(n) + "} with central intervals, spacing alpha = " + to_string(alpha);
  in.structure = star_graph(n);
  in.rep = make_central(RepKind::cmptg, ivs);
  in.expected = {{"cmptg", true}};
  return in;
}

Instance cn_50mtg(const CatalogParams& p) {
  if (p.alpha) throw InvalidInput("cn_50mtg takes no alpha");
  const int n = p.n.value_or(5);
  if (n < 3 || n > 200) throw InvalidInput("cn_50mtg needs 3 <= n <= 200, got " + std::to_string(n));
  Instance in;
  in.name = "cn_50mtg";
  in.description = "cycle C_" + std::to_string(n) + " with half-length tolerances";
  in.structure = cycle_graph(n);
  in.rep = fifty(cycle_fifty_intervals(n));
  in.expected = {{"fifty_mtg", true}, {"cmptg", true}};
  return in;
}

Instance c6bar_50mtg() {
  Instance in;
  in.name = "c6bar_50mtg";
  in.description = "complement of C_6 with a half-tolerance representation; it also has central ones";
  in.structure = complement_of_cycle(6);
  in.rep = tolerance_rep(RepKind::fifty_mtg, {{iv("0", "20"), "10"},
                                              {iv("12", "24"), "6"},
                                              {iv("0", "22"), "11"},
                                              {iv("9.5", "19.5"), "5"},
                                              {iv("7.5", "30.5"), "11.5"},
                                              {iv("10.5", "21.5"), "5.5"}});
  in.expected = {{"fifty_mtg", true}, {"cmptg", true}};
  return in;
}

Instance c4_umtg() {
  Instance in;
  in.name = "c4_umtg";
  in.description = "C_4 with equal-length max-tolerance intervals";
  in.structure = cycle_graph(4);
  in.rep = tolerance_rep(RepKind::unit_max_tolerance,
                         {{iv("1", "5"), "1"}, {iv("2", "6"), "3"}, {iv("3", "7"), "3"}, {iv("4", "8"), "1"}});
  in.expected = {{"unit_max_tolerance", true}};
  return in;
}

Instance c4_50() {
  Instance in;
  in.name = "c4_50";
  in.description = "C_4 with half-length tolerances";
  in.structure = cycle_graph(4);
  in.rep = fifty(cycle_fifty_intervals(4));
  in.expected = {{"fifty_mtg", true}};
  return in;
}

Instance k13_50() {
  Instance in;
  in.name = "k13_50";
  in.description = "claw K_{1,3} with half-length tolerances; vertex 0 is the hub";
  in.structure = star_graph(3);
  in.rep = tolerance_rep(RepKind::fifty_mtg,
                         {{iv("1.9", "6.1"), "2.1"}, {iv("0", "8"), "4"}, {iv("1.8", "4.3"), "1.25"}, {iv("3.6", "5.9"), "1.15"}});
  in.expected = {{"fifty_mtg", true}};
  return in;
}

Instance k1n_interval(const CatalogParams& p) {
  if (p.alpha) throw InvalidInput("k1n_interval takes no alpha");
  const int n = p.n.value_or(3);
  if (n < 1 || n > 1000) throw InvalidInput("k1n_interval needs 1 <= n <= 1000, got " + std::to_string(n));
  std::vector<Interval> ivs{Interval(1, 2 * n)};
  for (int i = 1; i <= n; ++i) ivs.emplace_back(2 * i - 1, 2 * i);
  Instance in;
  in.name = "k1n_interval";
  in.description = "star K_{1," + std::to_string(n) + "} as a plain interval graph";
  in.structure = star_graph(n);
  in.rep = make_intervals(ivs);
  in.expected = {{"interval", true}};
  return in;
}

Instance claw_plus_two() {
  // 0 is the claw center, 1..3 its leaves; 4 (v) and 5 (u) see all four.
  Graph g(6, {{0, 1}, {0, 2}, {0, 3}});
  for (int w = 0; w < 4; ++w) {
    g.add_edge(4, w);
    g.add_edge(5, w);
  }
  Instance in;
  in.name = "claw_plus_two";
  in.description = "claw plus two non-adjacent vertices seeing all of it; dropping u leaves a central graph";
  in.structure = g;
  in.vertex_names = {"c", "a1", "a2", "a3", "v", "u"};
  in.rep_vertices = {0, 1, 2, 3, 4};
  in.rep_structure = induced_subgraph(g, in.rep_vertices).graph;
  std::vector<Interval> ivs{iv("1", "29"), iv("-13", "15"), iv("3", "15"), iv("11", "15"), iv("1", "21")};
  in.rep = make_central(RepKind::cmptg, ivs);
  in.expected = {{"cmptg", false}};
  return in;
}

Instance maehara_g1() {
  Instance in;
  in.name = "maehara_g1";
  in.description = "interval catch digraph whose only catch orders admit no central representation";
  in.structure = Digraph(4, {{0, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 2}});
  in.vertex_names = {"v1", "v2", "v3", "v4"};
  in.expected = {{"icd", true}, {"cicd", false}};
  return in;
}

Instance od11() {
  Digraph d(8, {{0, 1},
                {1, 0}, {1, 2}, {1, 3}, {1, 4},
                {2, 3},
                {3, 1}, {3, 2}, {3, 4}, {3, 5},
                {4, 1}, {4, 2}, {4, 3}, {4, 5}, {4, 6},
                {5, 4},
                {6, 2}, {6, 3}, {6, 4}, {6, 5}, {6, 7},
                {7, 6}});
  Instance in;
  in.name = "od11";
  in.description = "optimized digraph on 8 vertices with its labels and central catch intervals";
  in.structure = d;
  in.vertex_names = {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"};
  Labeling f;
  for (auto s : {"2", "3", "6", "6.9", "8", "8.1", "12", "14"}) f.values.push_back(parse_rat(s));
  in.labeling = f;
  std::vector<Interval> ivs{iv("0", "4"), iv("-2", "8"), iv("5", "7"), iv("2.4", "11.4"),
                            iv("3", "13"), iv("7.6", "8.6"), iv("6", "18"), iv("11", "17")};
  in.rep = make_central(RepKind::cicd, ivs);
  in.expected = {{"cicd", true}};
  return in;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {"k1n_cmptg", "star K_{1,n} with central intervals (n >= 1, optional alpha)", true, true},
      {"cn_50mtg", "cycle C_n with half-length tolerances (n >= 3)", true, false},
      {"c6bar_50mtg", "complement of C_6 with half-length tolerances", false, false},
      {"c4_umtg", "C_4 with equal-length max-tolerance intervals", false, false},
      {"c4_50", "C_4 with half-length tolerances", false, false},
      {"k13_50", "claw with half-length tolerances", false, false},
      {"k1n_interval", "star K_{1,n} as a plain interval graph (n >= 1)", true, false},
      {"claw_plus_two", "claw plus two vertices; no central representation", false, false},
      {"maehara_g1", "catch digraph with no central representation", false, false},
      {"od11", "optimized digraph with labels and central catch intervals", false, false},
  };
  return entries;
}

Rat k1n_alpha_bound(int n) {
  if (n < 1) throw InvalidInput("star size must be positive");
  return Rat(5) / (3 * pow2(n - 1) - 2);
}

std::vector<Interval> cycle_fifty_intervals(int n) {
  if (n < 3) throw InvalidInput("cycles need n >= 3, got " + std::to_string(n));
  if (n == 3) return {Interval(1, 2), Interval(1, 2), Interval(1, 2)};
  if (n == 4) return {iv("1", "4.6"), iv("2", "4"), iv("2.9", "4.9"), iv("2.7", "6.3")};
  if (n == 5) return {iv("10", "30"), iv("16", "28"), iv("18", "24"), iv("15", "21"), iv("9", "21")};

  // 1-based as in the construction: I_1, I_2 are long; I_3..I_k hang right of
  // 1 with halving lengths, I_{k+1} straddles 1, the rest hang left of 1.
  std::vector<Interval> out{Interval(2 - n, n), Interval(1, n)};
  const Rat one(1);
  if (n % 2 == 0) {
    const int k = n / 2;
    for (int i = 3; i <= k; ++i) out.emplace_back(one, one + (k - 1) * pow2(4 - i));
    Rat w = (k - 1) * pow2(3 - k);
    out.emplace_back(one - w, one + w);
    for (int j = k + 2; j <= n; ++j) out.emplace_back(one - (k - 1) * pow2(j + 2 - n), one);
  } else {
    const int k = (n + 1) / 2;
    for (int i = 3; i <= k; ++i) out.emplace_back(one, one + (n - 2) * pow2(3 - i));
    Rat w = (3 * n - 6) * pow2(1 - k);
    out.emplace_back(one - w, one + w);
    for (int j = k + 2; j <= n; ++j) out.emplace_back(one - (3 * n - 6) * pow2(j - n - 1), one);
  }
  return out;
}

Instance instance(std::string_view name, const CatalogParams& params) {
  const auto& entries = catalog_entries();
  if (std::none_of(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; }))
    throw InvalidInput("unknown instance \"" + std::string(name) + "\"");
  if (name == "k1n_cmptg") return k1n_cmptg(params);
  if (name == "cn_50mtg") return cn_50mtg(params);
  if (name == "k1n_interval") return k1n_interval(params);
  forbid_params(name, params);
  if (name == "c6bar_50mtg") return c6bar_50mtg();
  if (name == "c4_umtg") return c4_umtg();
  if (name == "c4_50") return c4_50();
  if (name == "k13_50") return k13_50();
  if (name == "claw_plus_two") return claw_plus_two();
  if (name == "maehara_g1") return maehara_g1();
  if (name == "od11") return od11();
  throw InvalidInput("unknown instance \"" + std::string(name) + "\"");
}

}  // namespace ptg
