// One line per acceptance criterion. Exit status is non-zero when any line
// reports FAIL. A DEVIATION line marks a criterion whose stated expectation
// is contradicted by a re-checkable witness; it does not fail the run.

#include "ptg/catalog.hpp"
#include "ptg/cli.hpp"
#include "ptg/io.hpp"
#include "ptg/recognize.hpp"
#include "ptg/transforms.hpp"
#include "support.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ptg;
namespace t = ptg::testing;

namespace {

struct Outcome {
  enum { pass, fail, deviation } status = pass;
  std::string detail;
};

int failures = 0;
int deviations = 0;

void criterion(const std::string& id, const std::string& title, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {Outcome::fail, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const char* tag = o.status == Outcome::pass ? "PASS" : o.status == Outcome::fail ? "FAIL" : "DEVIATION";
  if (o.status == Outcome::fail) ++failures;
  if (o.status == Outcome::deviation) ++deviations;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << "[" << tag << "] " << id << " " << title << ": " << o.detail << " (" << secs << "s)";
  std::cout << line.str() << std::endl;
}

// Counts failing cases and remembers the first one.
struct Tally {
  int cases = 0;
  int bad = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && bad++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (bad) return {Outcome::fail, std::to_string(bad) + "/" + std::to_string(cases) + " failed, first: " + first};
    return {Outcome::pass, summary + " (" + std::to_string(cases) + " checks)"};
  }
};

template <class T>
int sign(const T& x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

CatalogParams with_n(int n) {
  CatalogParams p;
  p.n = n;
  return p;
}

bool exists_order(int n, const std::function<bool(const std::vector<int>&)>& ok) {
  bool found = false;
  t::for_each_permutation(n, [&](const std::vector<int>& p) {
    found = ok(p);
    return !found;
  });
  return found;
}

Outcome golden_catalog() {
  Tally tl;
  for (int n = 3; n <= 40; ++n) tl.check(verify(*instance("cn_50mtg", with_n(n)).rep, cycle_graph(n)).ok, "cn_50mtg n=" + std::to_string(n));
  for (int n = 1; n <= 16; ++n) {
    tl.check(verify(*instance("k1n_cmptg", with_n(n)).rep, star_graph(n)).ok, "k1n_cmptg n=" + std::to_string(n));
    tl.check(verify(*instance("k1n_interval", with_n(n)).rep, star_graph(n)).ok, "k1n_interval n=" + std::to_string(n));
  }
  tl.check(verify(*instance("c6bar_50mtg").rep, complement(cycle_graph(6))).ok, "c6bar_50mtg");
  tl.check(verify(*instance("c4_umtg").rep, cycle_graph(4)).ok, "c4_umtg");
  tl.check(verify(*instance("c4_50").rep, cycle_graph(4)).ok, "c4_50");
  tl.check(verify(*instance("k13_50").rep, star_graph(3)).ok, "k13_50");
  return tl.outcome("every catalog representation realizes its graph exactly");
}

Outcome central_unit_round_trip() {
  t::Rng rng(1001);
  Tally tl;
  for (int i = 0; i < 200; ++i) {
    auto rep = t::random_central(rng, t::random_int(rng, 1, 12));
    tl.check(realize_graph(cmptg_to_umtg(rep)) == realize_graph(rep), "central rep #" + std::to_string(i));
  }
  for (int i = 0; i < 200; ++i) {
    auto rep = t::random_unit_tolerance(rng, t::random_int(rng, 1, 12));
    tl.check(realize_graph(umtg_to_cmptg(rep)) == realize_graph(rep), "unit tolerance rep #" + std::to_string(i));
  }
  return tl.outcome("200 + 200 random reps keep their realized graph");
}

Outcome unitization() {
  t::Rng rng(1002);
  Tally tl;
  for (int i = 0; i < 200; ++i) {
    auto rep = t::random_proper_central(rng, t::random_int(rng, 1, 12));
    auto u = pcmptg_to_ucmptg(rep);
    bool equal_lengths = true, order = true;
    for (int a = 0; a < rep.size(); ++a) {
      equal_lengths = equal_lengths && u.items[a].interval.length() == u.items[0].interval.length();
      for (int b = 0; b < rep.size(); ++b)
        order = order && sign(rep.items[a].interval.lo() - rep.items[b].interval.lo()) == sign(u.items[a].interval.lo() - u.items[b].interval.lo());
    }
    const std::string tag = " rep #" + std::to_string(i);
    tl.check(equal_lengths, "unequal lengths" + tag);
    tl.check(order, "left-endpoint order changed" + tag);
    tl.check(realize_graph(u) == realize_graph(rep), "graph changed" + tag);
  }
  return tl.outcome("200 random containment-free reps");
}

Outcome proper_pipeline() {
  t::Rng rng(1003);
  Tally tl;
  for (int i = 0; i < 100; ++i) {
    const int n = t::random_int(rng, 1, 15);
    Graph g = t::random_unit_interval_graph(rng, n);
    const std::string tag = " graph #" + std::to_string(i);
    tl.check(is_proper_interval(g).verdict == Verdict::yes, "not recognized" + tag);
    auto unit = proper_to_ucmptg(g);
    tl.check(verify(unit, g).ok, "unit rep" + tag);
    tl.check(verify(pcmptg_to_50mtg(unit), g).ok, "half-tolerance rep" + tag);
    // Centers are integers with radius K; twins share a center, so spread
    // them by less than 1/3 to get an injective labeling.
    std::vector<Rat> labels = t::centers_of(unit);
    for (int v = 0; v < n; ++v) labels[v] += Rat(v, 3 * n);
    tl.check(check_optimized(g, t::shifted_labels(labels)).holds, "center labeling" + tag);
  }
  return tl.outcome("100 random unit interval graphs, n <= 15");
}

Outcome counterexample_g1() {
  Tally tl;
  Digraph g1 = std::get<Digraph>(instance("maehara_g1").structure);
  auto ord = find_ordering(g1, ConditionKind::icd_order);
  tl.check(ord.verdict == Verdict::yes && std::get<Ordering>(ord.payload) == Ordering::identity(4), "first icd ordering is not (v1,v2,v3,v4)");
  int valid = 0;
  t::for_each_permutation(4, [&](const std::vector<int>& p) {
    Ordering o{p};
    if (check_condition(g1, o, ConditionKind::icd_order).holds) {
      ++valid;
      tl.check(cicd_feasible_for_ordering(g1, o).verdict == Verdict::no, "feasible positions for an icd ordering");
    }
    return true;
  });
  auto c = classify(g1, GraphClass::cicd, default_limits(GraphClass::cicd));
  tl.check(c.verdict == Verdict::no, "cicd verdict is not no");
  tl.check(recheck_certificate(g1, c).ok, "refutations do not recheck");
  return tl.outcome("icd order (v1,v2,v3,v4); " + std::to_string(valid) + " icd orderings all infeasible; cicd = no");
}

Outcome counterexample_claw() {
  Tally tl;
  Instance in = instance("claw_plus_two");
  const Graph& g = std::get<Graph>(in.structure);
  auto ob = common_neighborhood_obstruction(g);
  bool pair_ok = false, claw_ok = false;
  if (ob.verdict == Verdict::yes) {
    const auto& p = std::get<ObstructionPair>(ob.payload);
    pair_ok = (p.u == 4 && p.v == 5) || (p.u == 5 && p.v == 4);
    claw_ok = p.claw.has_value();
  }
  tl.check(pair_ok, "obstruction pair is not (u, v)");
  tl.check(claw_ok, "no induced claw reported");
  tl.check(recheck_certificate(g, ob).ok, "obstruction does not recheck");
  tl.check(in.rep->kind == RepKind::cmptg && verify(*in.rep, in.rep_target()).ok, "G minus u rep does not verify");
  // independent of the obstruction shortcut: the full search agrees
  SearchLimits lim = default_limits(GraphClass::cmptg);
  tl.check(exhaustive_recognize(g, GraphClass::cmptg, lim).verdict == Verdict::no, "exhaustive search does not say no");
  return tl.outcome("pair (u,v) with claw (c,a1,a2,a3); G minus u central rep verifies; exhaustive search agrees");
}

Outcome counterexample_c6bar() {
  Instance in = instance("c6bar_50mtg");
  const Graph& g = std::get<Graph>(in.structure);
  if (!verify(*in.rep, g).ok) return {Outcome::fail, "half-tolerance rep does not verify"};
  auto c = exhaustive_recognize(g, GraphClass::cmptg, default_limits(GraphClass::cmptg));
  if (c.verdict == Verdict::no) return {Outcome::pass, "half-tolerance rep verifies; exhaustive central search = none"};
  if (c.verdict != Verdict::yes) return {Outcome::fail, "central search did not finish"};
  const auto& rep = std::get<Representation>(c.payload);
  if (!verify(rep, g).ok) return {Outcome::fail, "central search returned a rep that does not verify"};
  // The witness also satisfies every necessary condition the library knows.
  bool nec = check_condition(g, t::order_by(t::centers_of(rep)), ConditionKind::cmptg_necessary).holds;
  bool c4p4 = verify_c4_p4_conditions(rep).holds;
  if (!nec || !c4p4) return {Outcome::fail, "central witness breaks a necessary condition"};
  std::ostringstream w;
  for (const auto& it : rep.items) w << "[" << to_string(it.interval.lo()) << "," << to_string(it.interval.hi()) << "]";
  return {Outcome::deviation,
          "half-tolerance rep verifies, but the complement of C6 HAS a central rep " + w.str() +
              " (verified exactly; C-order passes the necessary conditions), so the expected 'none' cannot hold"};
}

Outcome od11_reproduction() {
  Tally tl;
  Instance in = instance("od11");
  const Digraph& d = std::get<Digraph>(in.structure);
  BinaryMatrix want = BinaryMatrix::from_rows(
      {"11000000", "11111000", "00110000", "01111100", "01111110", "00001100", "00111111", "00000011"});
  tl.check(augmented_adjacency(d, in.labeling->order()) == want, "matrix rows differ");
  tl.check(verify(*in.rep, d).ok, "listed intervals do not realize the digraph");
  auto built = optimized_to_cicd(d, *in.labeling);
  tl.check(verify(built, d).ok, "intervals from the labels do not realize the digraph");
  tl.check(built.items[3].interval == Interval(3, parse_rat("10.8")), "v4 interval is not [3, 10.8]");
  tl.check(check_optimized(d, *in.labeling).holds, "labels are not optimized");
  return tl.outcome("matrix, listed intervals and label-built intervals all agree");
}

Outcome oracle_equivalences() {
  Tally tl;
  SearchLimits lim;
  // (i) digraphs with n <= 4
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t mask = 0; mask < (1ull << (n * (n - 1))); ++mask) {
      Digraph d = t::digraph_from_mask(n, mask);
      bool lib = find_ordering(d, ConditionKind::icd_order, lim).verdict == Verdict::yes;
      bool brute = exists_order(n, [&](const std::vector<int>& p) {
        return t::oracle_rows_consecutive(t::oracle_matrix(n, p, [&](int a, int b) { return d.has_arc(a, b); }));
      });
      tl.check(lib == brute, "digraph n=" + std::to_string(n) + " mask=" + std::to_string(mask));
    }
  // (i) and (ii) tournaments with n <= 5
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (1ull << (n * (n - 1) / 2)); ++mask) {
      Digraph d = t::tournament_from_mask(n, mask);
      bool lib = find_ordering(d, ConditionKind::icd_order, lim).verdict == Verdict::yes;
      bool brute = exists_order(n, [&](const std::vector<int>& p) {
        return t::oracle_rows_consecutive(t::oracle_matrix(n, p, [&](int a, int b) { return d.has_arc(a, b); }));
      });
      auto form = tournament_block_form(d, lim);
      const std::string tag = "tournament n=" + std::to_string(n) + " mask=" + std::to_string(mask);
      tl.check(lib == brute, tag + " icd");
      tl.check(brute == (form.verdict == Verdict::yes), tag + " block form");
      if (form.verdict == Verdict::yes) tl.check(recheck_certificate(d, form).ok, tag + " block form recheck");
    }
  // graphs with n <= 5
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (1ull << (n * (n - 1) / 2)); ++mask) {
      Graph g = t::graph_from_mask(n, mask);
      bool lib = find_ordering(g, ConditionKind::mptg_4point, lim).verdict == Verdict::yes;
      bool brute = exists_order(n, [&](const std::vector<int>& p) {
        return t::oracle_zero_pattern(t::oracle_matrix(n, p, [&](int a, int b) { return g.adjacent(a, b); }));
      });
      tl.check(lib == brute, "graph n=" + std::to_string(n) + " mask=" + std::to_string(mask));
    }
  return tl.outcome("all digraphs n<=4, tournaments n<=5, graphs n<=5");
}

Outcome necessity() {
  t::Rng rng(1008);
  Tally tl;
  for (int i = 0; i < 500; ++i) {
    auto rep = t::random_central(rng, t::random_int(rng, 1, 10));
    Graph g = realize_graph(rep);
    const std::string tag = " central rep #" + std::to_string(i);
    tl.check(check_condition(g, t::order_by(t::centers_of(rep)), ConditionKind::cmptg_necessary).holds, "necessary condition" + tag);
    tl.check(verify_c4_p4_conditions(rep).holds, "C4/P4 placement" + tag);
  }
  for (int i = 0; i < 500; ++i) {
    auto rep = t::random_central(rng, t::random_int(rng, 1, 10), RepKind::cicd);
    Digraph d = realize_digraph(rep);
    auto centers = t::centers_of(rep);
    const std::string tag = " catch rep #" + std::to_string(i);
    tl.check(check_condition(d, t::order_by(centers), ConditionKind::cicd_necessary).holds, "necessary condition" + tag);
    tl.check(check_optimized(d, t::shifted_labels(centers)).holds, "center labeling" + tag);
  }
  return tl.outcome("500 central and 500 central catch reps, n <= 10");
}

Outcome symmetric_part() {
  t::Rng rng(1009);
  Tally tl;
  for (int i = 0; i < 500; ++i) {
    const int n = t::random_int(rng, 1, 10);
    auto mptg = t::random_pointed(rng, n, RepKind::mptg);
    Representation icd = mptg;
    icd.kind = RepKind::icd;
    Graph g = realize_graph(mptg);
    Digraph d = realize_digraph(icd);
    const std::string tag = " rep #" + std::to_string(i);
    tl.check(g == intersect_transpose(d), "D and its transpose" + tag);
    Ordering id = Ordering::identity(n);
    BinaryMatrix m = augmented_adjacency(d, id);
    tl.check(augmented_adjacency(g, id) == wedge(m, m.transpose()), "matrix wedge" + tag);
  }
  return tl.outcome("500 random pointed reps, n <= 10");
}

Outcome honesty() {
  Tally tl;
  Graph c6bar = complement(cycle_graph(6));
  SearchLimits one = default_limits(GraphClass::cmptg);
  one.max_branches = 1;
  tl.check(exhaustive_recognize(c6bar, GraphClass::cmptg, one).verdict == Verdict::unknown, "1-branch search is not unknown");

  // CLI exit code for the same budget
  auto path = std::filesystem::temp_directory_path() / "ptg_acceptance_c6bar.json";
  std::ofstream(path) << io::to_json(instance("c6bar_50mtg")).dump();
  std::istringstream in;
  std::ostringstream out, err;
  int code = cli::run({"classify", path.string(), "--class", "cmptg", "--max-branches", "1"}, in, out, err);
  tl.check(code == cli::unknown, "CLI exit is " + std::to_string(code) + ", not 2");
  tl.check(io::parse_json(out.str())["verdict"] == "unknown", "CLI verdict is not unknown");

  // Known negatives under every smaller budget stay unknown, never "no".
  Digraph g1 = std::get<Digraph>(instance("maehara_g1").structure);
  Graph cp2 = std::get<Graph>(instance("claw_plus_two").structure);
  auto full_g1 = exhaustive_recognize(g1, GraphClass::cicd, default_limits(GraphClass::cicd));
  auto full_cp2 = exhaustive_recognize(cp2, GraphClass::cmptg, default_limits(GraphClass::cmptg));
  for (const auto& [s, cls, full] : {std::tuple<Structure, GraphClass, Certificate>{g1, GraphClass::cicd, full_g1},
                                     std::tuple<Structure, GraphClass, Certificate>{cp2, GraphClass::cmptg, full_cp2}}) {
    tl.check(full.verdict == Verdict::no, "full search is not no");
    for (long b : {1L, full.stats.branches / 2, full.stats.branches - 1}) {
      if (b < 1) continue;
      SearchLimits lim = default_limits(cls);
      lim.max_branches = b;
      tl.check(exhaustive_recognize(s, cls, lim).verdict == Verdict::unknown, "budget " + std::to_string(b) + " gave a verdict");
    }
  }
  SearchLimits small = default_limits(GraphClass::fifty_mtg);
  tl.check(exhaustive_recognize(star_graph(8), GraphClass::fifty_mtg, small).verdict == Verdict::unknown,
           "star with 8 leaves is not left unknown");
  return tl.outcome("budget exhaustion is unknown (exit 2); star with 8 leaves left unknown, no half-tolerance claim made");
}

}  // namespace

int main() {
  criterion("1", "golden catalog", golden_catalog);
  criterion("2", "central <-> unit max-tolerance round trip", central_unit_round_trip);
  criterion("3", "unit-ization of containment-free reps", unitization);
  criterion("4", "proper interval pipeline", proper_pipeline);
  criterion("5a", "catch digraph with no central rep", counterexample_g1);
  criterion("5b", "claw plus two vertices", counterexample_claw);
  criterion("5c", "complement of C6", counterexample_c6bar);
  criterion("6", "labeled optimized digraph", od11_reproduction);
  criterion("7", "oracle equivalences on small instances", oracle_equivalences);
  criterion("8", "necessity properties", necessity);
  criterion("9", "symmetric part identity", symmetric_part);
  criterion("10", "negative-knowledge honesty", honesty);
  if (failures)
    std::cout << "acceptance: FAILED (" << failures << " criteria)" << std::endl;
  else
    std::cout << "acceptance: no failures, " << deviations << " deviation(s) reported" << std::endl;
  return failures ? 1 : 0;
}
