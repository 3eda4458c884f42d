#pragma once

// Random instance generators and brute-force oracles shared by the unit and
// acceptance tests. The oracles deliberately re-derive every rule from its
// definition instead of calling into the library.

#include "ptg/graph.hpp"
#include "ptg/labeling.hpp"
#include "ptg/rational.hpp"
#include "ptg/reps.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace ptg::testing {

using Rng = std::mt19937_64;

inline Rat random_rat(Rng& rng, int lo, int hi, int den = 4) {
  std::uniform_int_distribution<int> num(lo * den, hi * den);
  return Rat(num(rng)) / den;
}

inline int random_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// n distinct values from a grid of step 1/den inside [lo, hi].
inline std::vector<Rat> distinct_rats(Rng& rng, int n, int lo, int hi, int den = 4) {
  std::set<Rat> seen;
  std::vector<Rat> out;
  while (static_cast<int>(out.size()) < n) {
    Rat r = random_rat(rng, lo, hi, den);
    if (seen.insert(r).second) out.push_back(r);
  }
  return out;
}

// Central representation with distinct centers.
inline Representation random_central(Rng& rng, int n, RepKind kind = RepKind::cmptg) {
  auto centers = distinct_rats(rng, n, -10, 10);
  std::vector<Interval> ivs;
  for (const Rat& c : centers) {
    Rat r = random_rat(rng, 0, 8) + Rat(1, 4);
    ivs.emplace_back(c - r, c + r);
  }
  return make_central(kind, ivs);
}

inline Representation random_unit_tolerance(Rng& rng, int n) {
  Rat h = random_rat(rng, 1, 10) + 1;
  std::vector<ToleranceInterval> items;
  for (int i = 0; i < n; ++i) {
    Rat l = random_rat(rng, -10, 10);
    // 0 < t < h on a fine grid
    Rat t = h * Rat(random_int(rng, 1, 15), 16);
    items.emplace_back(Interval(l, l + h), t);
  }
  return make_tolerance(RepKind::unit_max_tolerance, items);
}

// Left and right endpoints both strictly increasing, so no interval properly
// contains another; an occasional exact duplicate is kept on purpose.
inline Representation random_proper_central(Rng& rng, int n) {
  std::vector<Interval> ivs;
  Rat l = random_rat(rng, -10, 0);
  Rat r = l + random_rat(rng, 1, 6);
  for (int i = 0; i < n; ++i) {
    if (i > 0 && random_int(rng, 0, 9) != 0) {
      l += random_rat(rng, 0, 2) + Rat(1, 8);
      Rat step = random_rat(rng, 0, 2) + Rat(1, 8);
      r = std::max(Rat(r + step), Rat(l + Rat(1, 8)));
    }
    ivs.emplace_back(l, r);
  }
  std::shuffle(ivs.begin(), ivs.end(), rng);
  return make_central(RepKind::cmptg, ivs);
}

inline Representation random_pointed(Rng& rng, int n, RepKind kind) {
  std::vector<PointedInterval> items;
  for (int i = 0; i < n; ++i) {
    Rat lo = random_rat(rng, -10, 10);
    Rat hi = lo + random_rat(rng, 0, 8) + Rat(1, 4);
    // point on the grid inside [lo, hi]
    Rat p = lo + (hi - lo) * Rat(random_int(rng, 0, 8), 8);
    items.emplace_back(Interval(lo, hi), p);
  }
  return make_pointed(kind, items);
}

// Unit interval graph from random left endpoints.
inline Graph random_unit_interval_graph(Rng& rng, int n) {
  std::vector<Rat> left;
  for (int i = 0; i < n; ++i) left.push_back(random_rat(rng, 0, std::max(1, n / 3), 8));
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (abs(left[static_cast<std::size_t>(i)] - left[static_cast<std::size_t>(j)]) <= 1) g.add_edge(i, j);
  return g;
}

// --- oracles ---------------------------------------------------------------

inline Rat lo_of(const RepItem& it) { return it.interval.lo(); }
inline Rat hi_of(const RepItem& it) { return it.interval.hi(); }
inline bool inside(const Rat& x, const RepItem& it) { return lo_of(it) <= x && x <= hi_of(it); }

// Realized graph straight from the definitions, kind by kind.
inline Graph oracle_graph(const Representation& rep) {
  const int n = rep.size();
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& a = rep.items[static_cast<std::size_t>(i)];
      const auto& b = rep.items[static_cast<std::size_t>(j)];
      bool e = false;
      switch (rep.kind) {
        case RepKind::interval:
          e = std::max(lo_of(a), lo_of(b)) <= std::min(hi_of(a), hi_of(b));
          break;
        case RepKind::mptg:
        case RepKind::cmptg: {
          Rat pa = a.point ? *a.point : (lo_of(a) + hi_of(a)) / 2;
          Rat pb = b.point ? *b.point : (lo_of(b) + hi_of(b)) / 2;
          e = inside(pa, a) && inside(pa, b) && inside(pb, a) && inside(pb, b);
          break;
        }
        default: {
          Rat ov = std::min(hi_of(a), hi_of(b)) - std::max(lo_of(a), lo_of(b));
          if (ov < 0) ov = 0;
          e = ov >= std::max(*a.tolerance, *b.tolerance);
        }
      }
      if (e) g.add_edge(i, j);
    }
  return g;
}

inline Digraph oracle_catch_digraph(const Representation& rep) {
  const int n = rep.size();
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && inside(*rep.items[static_cast<std::size_t>(j)].point, rep.items[static_cast<std::size_t>(i)])) d.add_arc(i, j);
  return d;
}

template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (!f(p)) return;
  } while (std::next_permutation(p.begin(), p.end()));
}

// Row k of the augmented matrix under permutation p, read straight from the
// structure: cell (k, m) is 1 iff k == m or p[k] -> p[m].
template <class Adj>
std::vector<std::vector<int>> oracle_matrix(int n, const std::vector<int>& p, Adj adj) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < n; ++c) m[k][c] = (k == c || adj(p[k], p[c])) ? 1 : 0;
  return m;
}

inline bool oracle_rows_consecutive(const std::vector<std::vector<int>>& m) {
  for (const auto& row : m) {
    int first = -1, last = -1, count = 0;
    for (int c = 0; c < static_cast<int>(row.size()); ++c)
      if (row[c]) {
        if (first < 0) first = c;
        last = c;
        ++count;
      }
    if (count && last - first + 1 != count) return false;
  }
  return true;
}

// Zero pattern: every 0 above the diagonal has only 0s to its right or only
// 0s above it.
inline bool oracle_zero_pattern(const std::vector<std::vector<int>>& m) {
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (m[i][j]) continue;
      bool right = true, above = true;
      for (int c = j + 1; c < n; ++c) right = right && !m[i][c];
      for (int r = 0; r < i; ++r) above = above && !m[r][j];
      if (!right && !above) return false;
    }
  return true;
}

inline bool oracle_proper_interval(const Graph& g) {
  const int n = g.size();
  bool found = false;
  for_each_permutation(n, [&](const std::vector<int>& p) {
    auto m = oracle_matrix(n, p, [&](int a, int b) { return g.adjacent(a, b); });
    found = oracle_rows_consecutive(m);
    return !found;
  });
  return found;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1u) g.add_edge(i, j);
  return g;
}

inline Digraph digraph_from_mask(int n, std::uint64_t mask) {
  Digraph d(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (mask >> bit & 1u) d.add_arc(i, j);
      ++bit;
    }
  return d;
}

inline Digraph tournament_from_mask(int n, std::uint64_t mask) {
  Digraph d(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit) {
      if (mask >> bit & 1u)
        d.add_arc(i, j);
      else
        d.add_arc(j, i);
    }
  return d;
}

// Positive labels from the given values, keeping every gap.
inline Labeling shifted_labels(std::vector<Rat> values) {
  Rat m = *std::min_element(values.begin(), values.end());
  for (auto& v : values) v = v - m + 1;
  return Labeling{values};
}

inline Ordering order_by(const std::vector<Rat>& key) {
  Ordering o = Ordering::identity(static_cast<int>(key.size()));
  std::stable_sort(o.perm.begin(), o.perm.end(), [&](int a, int b) { return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)]; });
  return o;
}

inline std::vector<Rat> centers_of(const Representation& rep) {
  std::vector<Rat> c;
  for (const auto& it : rep.items) c.push_back(it.interval.center());
  return c;
}

}  // namespace ptg::testing
