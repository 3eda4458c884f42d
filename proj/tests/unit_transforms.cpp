#include "ptg/catalog.hpp"
#include "ptg/error.hpp"
#include "ptg/recognize.hpp"
#include "ptg/transforms.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ptg;

namespace {

Interval iv(const char* lo, const char* hi) { return Interval(parse_rat(lo), parse_rat(hi)); }

std::vector<Interval> ivs_of(const Representation& r) { return r.intervals(); }

Representation central(std::vector<Interval> ivs) { return make_central(RepKind::cmptg, ivs); }

Representation c4_umtg() { return *instance("c4_umtg").rep; }

}  // namespace

TEST_CASE("central to unit max-tolerance") {
  auto p3 = central({iv("0", "2"), iv("1", "3"), iv("2", "4")});
  auto u = cmptg_to_umtg(p3);
  CHECK(u.kind == RepKind::unit_max_tolerance);
  CHECK(ivs_of(u) == std::vector<Interval>{iv("1", "2.5"), iv("2", "3.5"), iv("3", "4.5")});
  for (const auto& it : u.items) CHECK(*it.tolerance == Rat(1, 2));
  CHECK(verify(u, path_graph(3)).ok);

  auto one = cmptg_to_umtg(central({iv("0", "2")}));
  CHECK(one.size() == 1);
  // T has length h0 / 2 and h0 must exceed the input length 2
  CHECK(one.items[0].interval.length() * 2 > 2);

  auto kn = cmptg_to_umtg(central(std::vector<Interval>(4, iv("0", "2"))));
  CHECK(verify(kn, complete_graph(4)).ok);
}

TEST_CASE("unit max-tolerance to central") {
  auto c = umtg_to_cmptg(c4_umtg());
  CHECK(ivs_of(c) == std::vector<Interval>{iv("-2", "4"), iv("1", "3"), iv("2", "4"), iv("1", "7")});
  CHECK(verify(c, cycle_graph(4)).ok);

  std::vector<ToleranceInterval> degenerate{ToleranceInterval(iv("0", "1"), Rat(1))};
  CHECK_THROWS_AS(umtg_to_cmptg(make_tolerance(RepKind::unit_max_tolerance, degenerate)), InvalidInput);

  std::vector<ToleranceInterval> far{ToleranceInterval(iv("0", "1"), Rat(1, 2)), ToleranceInterval(iv("10", "11"), Rat(1, 2))};
  auto f = umtg_to_cmptg(make_tolerance(RepKind::unit_max_tolerance, far));
  CHECK(f.size() == 2);
  CHECK(verify(f, Graph(2)).ok);
}

TEST_CASE("containment-free central reps become unit") {
  auto unit = central({iv("0", "2"), iv("1", "3"), iv("5", "7")});
  CHECK(pcmptg_to_ucmptg(unit) == unit);

  auto pair = central({iv("0", "2"), iv("1", "5")});
  CHECK(realize_graph(pair) == Graph(2));
  auto u = pcmptg_to_ucmptg(pair);
  CHECK(u.items[0].interval.length() == u.items[1].interval.length());
  CHECK(verify(u, Graph(2)).ok);

  CHECK_THROWS_AS(pcmptg_to_ucmptg(central({iv("0", "10"), iv("1", "5")})), InvalidInput);
  CHECK(find_proper_containment(central({iv("0", "10"), iv("1", "5")})) == Edge{0, 1});
  CHECK_FALSE(find_proper_containment(unit));
}

TEST_CASE("proper interval graphs get unit central reps") {
  auto p4 = proper_to_ucmptg(path_graph(4));
  CHECK(ivs_of(p4) == std::vector<Interval>{iv("0", "2"), iv("1", "3"), iv("2", "4"), iv("3", "5")});

  auto k4 = proper_to_ucmptg(complete_graph(4));
  auto ks = ivs_of(k4);
  CHECK(std::all_of(ks.begin(), ks.end(), [&](const Interval& i) { return i == ks[0]; }));

  CHECK_THROWS_AS(proper_to_ucmptg(star_graph(3)), InvalidInput);

  // twins and a diamond, where a fixed non-edge gap of 2 with radius 1 is not enough
  Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(verify(proper_to_ucmptg(diamond), diamond).ok);
}

TEST_CASE("half tolerances from containment-free central reps") {
  auto p4 = pcmptg_to_50mtg(proper_to_ucmptg(path_graph(4)));
  CHECK(p4.kind == RepKind::fifty_mtg);
  CHECK(verify(p4, path_graph(4)).ok);
  CHECK(verify(pcmptg_to_50mtg(central(std::vector<Interval>(3, iv("0", "1")))), complete_graph(3)).ok);
  CHECK(verify(pcmptg_to_50mtg(central({iv("0", "2"), iv("1", "3"), iv("2", "4")})), path_graph(3)).ok);
}

TEST_CASE("labels along an ordering give central reps") {
  LabeledGraph p3{path_graph(3), Ordering::identity(3), {Rat(1), Rat(2), Rat(3)}};
  auto r = labeled_to_cmptg(p3);
  CHECK(ivs_of(r) == std::vector<Interval>{iv("0", "2"), iv("1", "3"), iv("2", "4")});

  LabeledGraph k2{complete_graph(2), Ordering::identity(2), {Rat(1), Rat(2)}};
  CHECK(ivs_of(labeled_to_cmptg(k2)) == std::vector<Interval>{iv("0", "2"), iv("1", "3")});

  // isolated vertices get half the smallest gap, never a zero radius
  LabeledGraph two{Graph(2), Ordering::identity(2), {Rat(1), Rat(10)}};
  auto t = labeled_to_cmptg(two);
  CHECK(verify(t, Graph(2)).ok);
  CHECK(t.items[0].interval.length() == Rat(9));

  LabeledGraph bad{path_graph(3), Ordering::identity(3), {Rat(1), Rat(3), Rat(2)}};
  CHECK_THROWS_AS(labeled_to_cmptg(bad), InvalidInput);
}

TEST_CASE("optimized labels give central catch reps") {
  Instance od = instance("od11");
  const auto& d = std::get<Digraph>(od.structure);
  auto rep = optimized_to_cicd(d, *od.labeling);
  CHECK(rep.items[3].interval == iv("3", "10.8"));
  CHECK(verify(rep, d).ok);

  auto single = optimized_to_cicd(Digraph(1), Labeling{{Rat(1)}});
  CHECK(single.items[0].interval.length() > 0);

  Digraph both(2, {{0, 1}, {1, 0}});
  CHECK(ivs_of(optimized_to_cicd(both, Labeling{{Rat(1), Rat(2)}})) == std::vector<Interval>{iv("0", "2"), iv("1", "3")});
}

TEST_CASE("central catch reps give labelings") {
  Instance od = instance("od11");
  Labeling f = cicd_to_labeling(*od.rep);
  CHECK(f == *od.labeling);
  auto one = cicd_to_labeling(make_central(RepKind::cicd, std::vector<Interval>{iv("-3", "-1")}));
  CHECK(one[0] > 0);
  auto shifted = cicd_to_labeling(make_central(RepKind::cicd, std::vector<Interval>{iv("-2", "0"), iv("-1", "1")}));
  CHECK(shifted[0] > 0);
  CHECK(shifted[1] - shifted[0] == Rat(1));
}

TEST_CASE("pointed items to catch digraphs") {
  std::vector<PointedInterval> same(3, PointedInterval(iv("0", "2"), Rat(1)));
  CHECK(rep_to_icd_digraph(same) == symmetric_digraph(complete_graph(3)));
  Instance od = instance("od11");
  CHECK(rep_to_icd_digraph(*od.rep) == std::get<Digraph>(od.structure));

  Instance claw = instance("claw_plus_two");
  Representation as_icd = *claw.rep;
  as_icd.kind = RepKind::icd;
  CHECK(intersect_transpose(rep_to_icd_digraph(as_icd)) == std::get<Graph>(*claw.rep_structure));
}

TEST_CASE("randomized round trips") {
  testing::Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    int n = testing::random_int(rng, 1, 12);
    auto c = testing::random_central(rng, n);
    CHECK(verify(cmptg_to_umtg(c), realize(c)).ok);
    auto u = testing::random_unit_tolerance(rng, n);
    CHECK(verify(umtg_to_cmptg(u), realize(u)).ok);
    auto p = testing::random_proper_central(rng, n);
    auto pu = pcmptg_to_ucmptg(p);
    CHECK(verify(pu, realize(p)).ok);
    CHECK(verify(pcmptg_to_50mtg(p), realize(p)).ok);
  }
}

TEST_CASE("labeled construction separates every non-edge") {
  // Centers of a central rep in C-order satisfy the four-point condition but
  // only sometimes the gap conditions, which are sufficient and not necessary.
  testing::Rng rng(31);
  int accepted = 0;
  for (int t = 0; t < 400; ++t) {
    int n = testing::random_int(rng, 1, 10);
    auto src = testing::random_central(rng, n);
    Graph g = realize_graph(src);
    auto centers = testing::centers_of(src);
    Ordering ord = testing::order_by(centers);
    std::vector<Rat> labels;
    for (int k = 0; k < n; ++k) labels.push_back(centers[ord[k]] + 20);
    Representation rep;
    try {
      rep = labeled_to_cmptg(LabeledGraph{g, ord, labels});
    } catch (const InvalidInput&) {
      continue;
    }
    ++accepted;
    CHECK(verify(rep, g).ok);
    auto pos = ord.position();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b || g.adjacent(a, b) || pos[a] > pos[b]) continue;
        Rat gap = rep.items[b].interval.center() - rep.items[a].interval.center();
        Rat ra = rep.items[a].interval.length() / 2, rb = rep.items[b].interval.length() / 2;
        CHECK((gap > ra || gap > rb));
      }
  }
  CHECK(accepted >= 50);
}

TEST_CASE("relabeling a central catch rep by its centers keeps the digraph") {
  testing::Rng rng(37);
  for (int t = 0; t < 200; ++t) {
    auto rep = testing::random_central(rng, testing::random_int(rng, 1, 12), RepKind::cicd);
    Digraph d = realize_digraph(rep);
    CHECK(verify(optimized_to_cicd(d, cicd_to_labeling(rep)), d).ok);
  }
}
