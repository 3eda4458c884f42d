#include "ptg/recognize.hpp"

#include "ptg/error.hpp"
#include "ptg/lp.hpp"
#include "ptg/transforms.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace ptg {

namespace {

constexpr std::array<std::pair<ConditionKind, std::string_view>, 4> kConditionNames{{
    {ConditionKind::mptg_4point, "mptg_4point"},
    {ConditionKind::cmptg_necessary, "cmptg_necessary"},
    {ConditionKind::icd_order, "icd_order"},
    {ConditionKind::cicd_necessary, "cicd_necessary"},
}};

constexpr std::array<std::pair<GraphClass, std::string_view>, 6> kClassNames{{
    {GraphClass::icd, "icd"},
    {GraphClass::cicd, "cicd"},
    {GraphClass::mptg, "mptg"},
    {GraphClass::cmptg, "cmptg"},
    {GraphClass::fifty_mtg, "fifty_mtg"},
    {GraphClass::proper_interval, "proper_interval"},
}};

using Clock = std::chrono::steady_clock;

// Shared work counter for one search: each ordering visited and each node of
// a disjunction tree costs one branch.
class Budget {
 public:
  explicit Budget(const SearchLimits& lim) : lim_(lim), start_(Clock::now()) {}

  bool spend() {
    if (exhausted_) return false;
    ++used_;
    if (used_ > lim_.max_branches) exhausted_ = true;
    if (lim_.budget_ms > 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
      if (ms > lim_.budget_ms) exhausted_ = true;
    }
    return !exhausted_;
  }

  long used() const noexcept { return used_; }

 private:
  SearchLimits lim_;
  Clock::time_point start_;
  long used_ = 0;
  bool exhausted_ = false;
};

Certificate unknown(std::string claim, std::string note, SearchStats stats = {}) {
  Certificate c;
  c.verdict = Verdict::unknown;
  c.claim = std::move(claim);
  c.note = std::move(note);
  c.stats = stats;
  return c;
}

Certificate too_large(const std::string& claim, int n, const SearchLimits& lim) {
  return unknown(claim, "n=" + std::to_string(n) + " exceeds max_n=" + std::to_string(lim.max_n));
}

Certificate budget_spent(const std::string& claim, const SearchStats& stats) {
  return unknown(claim, "search budget exhausted after " + std::to_string(stats.branches) + " branches", stats);
}

std::vector<int> map_to_vertices(const Ordering& ord, std::initializer_list<int> positions) {
  std::vector<int> out;
  for (int p : positions) out.push_back(ord[p]);
  return out;
}

const Graph& expect_graph(const Structure& s, const std::string& what) {
  if (!std::holds_alternative<Graph>(s)) throw InvalidInput(what + " needs an undirected graph");
  return std::get<Graph>(s);
}

const Digraph& expect_digraph(const Structure& s, const std::string& what) {
  if (!std::holds_alternative<Digraph>(s)) throw InvalidInput(what + " needs a digraph");
  return std::get<Digraph>(s);
}

// Position-indexed view of a graph or digraph under an ordering.
template <class S>
struct Positioned {
  const S& s;
  const Ordering& ord;

  bool operator()(int a, int b) const {
    if constexpr (std::is_same_v<S, Graph>)
      return s.adjacent(ord[a], ord[b]);
    else
      return s.has_arc(ord[a], ord[b]);
  }
};

ConditionResult four_point(const Graph& g, const Ordering& ord, bool with_endpoints) {
  Positioned<Graph> a{g, ord};
  const int n = g.size();
  for (int x = 0; x < n; ++x)
    for (int u = x + 1; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (!a(x, v)) continue;
        for (int y = v + 1; y < n; ++y) {
          if (!a(u, y)) continue;
          if (!a(u, v)) return {false, map_to_vertices(ord, {x, u, v, y}), "middle pair not adjacent"};
          if (with_endpoints && !a(x, u) && !a(v, y))
            return {false, map_to_vertices(ord, {x, u, v, y}), "neither end pair adjacent"};
        }
      }
  return {};
}

ConditionResult icd_triples(const Digraph& d, const Ordering& ord) {
  Positioned<Digraph> a{d, ord};
  const int n = d.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        if (a(x, z) && !a(x, y)) return {false, map_to_vertices(ord, {x, y, z}), "forward arc skips the middle"};
        if (a(z, x) && !a(z, y)) return {false, map_to_vertices(ord, {x, y, z}), "backward arc skips the middle"};
      }
  return {};
}

// First and last position caught by each position (itself included).
std::pair<std::vector<int>, std::vector<int>> catch_span(const Digraph& d, const Ordering& ord) {
  const int n = d.size();
  Positioned<Digraph> a{d, ord};
  std::vector<int> first(static_cast<std::size_t>(n)), last(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int lo = i, hi = i;
    for (int j = 0; j < n; ++j)
      if (j != i && a(i, j)) {
        lo = std::min(lo, j);
        hi = std::max(hi, j);
      }
    first[static_cast<std::size_t>(i)] = lo;
    last[static_cast<std::size_t>(i)] = hi;
  }
  return {first, last};
}

ConditionResult cicd_pairs(const Digraph& d, const Ordering& ord) {
  if (auto r = icd_triples(d, ord); !r.holds) return r;
  auto [first, last] = catch_span(d, ord);
  const int n = d.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (first[static_cast<std::size_t>(i)] > first[static_cast<std::size_t>(j)] &&
          last[static_cast<std::size_t>(i)] > last[static_cast<std::size_t>(j)])
        return {false, map_to_vertices(ord, {i, j}), "catch span of the earlier vertex ends past the later one on both sides"};
  return {};
}

// --- exact feasibility search over disjunctions ---------------------------

bool satisfied(const lp::Constraint& c, const std::vector<Rat>& x) {
  Rat lhs = 0;
  for (const auto& t : c.terms) lhs += t.coef * x[static_cast<std::size_t>(t.var)];
  return c.strict ? lhs < c.rhs : lhs <= c.rhs;
}

enum class Outcome { found, exhausted, budget };

// Depth-first over the disjunctions in order, options in their listed order.
// The current system is feasible with witness `x` on entry.
Outcome branch(lp::System& sys, const std::vector<std::vector<lp::Constraint>>& disjunctions, std::size_t idx,
               const std::vector<Rat>& x, Budget& budget, std::vector<Rat>& found) {
  if (idx == disjunctions.size()) {
    found = x;
    return Outcome::found;
  }
  for (const auto& option : disjunctions[idx]) {
    if (!budget.spend()) return Outcome::budget;
    const std::size_t mark = sys.constraints().size();
    sys.add(option);
    std::vector<Rat> next;
    bool feasible = satisfied(option, x);
    if (feasible) {
      next = x;
    } else {
      auto r = lp::solve(sys);
      feasible = r.feasible;
      next = std::move(r.solution);
    }
    if (feasible) {
      auto out = branch(sys, disjunctions, idx + 1, next, budget, found);
      if (out != Outcome::exhausted) return out;
    }
    sys.truncate(mark);
  }
  return Outcome::exhausted;
}

lp::Term term(int var, long long coef) { return {var, Rat(coef)}; }

struct OrderingProblem {
  lp::System base;
  std::vector<std::vector<lp::Constraint>> disjunctions;
  bool trivially_infeasible = false;
};

// Center order c_0 < ... < c_{n-1}; variables c_k (k) and half-lengths s_k (n+k).
OrderingProblem cmptg_problem(const Graph& g, const Ordering& ord) {
  const int n = g.size();
  Positioned<Graph> adj{g, ord};
  OrderingProblem p{lp::System(2 * n), {}, false};
  auto c = [](int k) { return k; };
  auto s = [n](int k) { return n + k; };
  for (int k = 0; k < n; ++k) p.base.add_lt({term(s(k), -1)}, 0, "s" + std::to_string(k) + " > 0");
  for (int k = 0; k + 1 < n; ++k)
    p.base.add_lt({term(c(k), 1), term(c(k + 1), -1)}, 0, "c" + std::to_string(k) + " < c" + std::to_string(k + 1));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const std::string pair = std::to_string(a) + "," + std::to_string(b);
      if (adj(a, b)) {
        p.base.add_le({term(c(b), 1), term(c(a), -1), term(s(a), -1)}, 0, "edge " + pair + " within s" + std::to_string(a));
        p.base.add_le({term(c(b), 1), term(c(a), -1), term(s(b), -1)}, 0, "edge " + pair + " within s" + std::to_string(b));
        continue;
      }
      // A center lying between two centers of one interval is inside it, so
      // a neighbor of a beyond b forces gap <= s_a (and symmetrically).
      bool a_reaches_past = false, b_reaches_before = false;
      for (int y = b + 1; y < n; ++y) a_reaches_past = a_reaches_past || adj(a, y);
      for (int x = 0; x < a; ++x) b_reaches_before = b_reaches_before || adj(x, b);
      std::vector<lp::Constraint> options;
      if (!a_reaches_past)
        options.push_back({{term(s(a), 1), term(c(b), -1), term(c(a), 1)}, Rat(0), true, "non-edge " + pair + " beyond s" + std::to_string(a)});
      if (!b_reaches_before)
        options.push_back({{term(s(b), 1), term(c(b), -1), term(c(a), 1)}, Rat(0), true, "non-edge " + pair + " beyond s" + std::to_string(b)});
      if (options.empty()) p.trivially_infeasible = true;
      p.disjunctions.push_back(std::move(options));
    }
  return p;
}

// Left-endpoint order l_0 <= ... <= l_{n-1}; variables l_k (k) and r_k (n+k).
// Everything is doubled so the half-length tolerances stay integral.
OrderingProblem fifty_problem(const Graph& g, const Ordering& ord) {
  const int n = g.size();
  Positioned<Graph> adj{g, ord};
  OrderingProblem p{lp::System(2 * n), {}, false};
  auto l = [](int k) { return k; };
  auto r = [n](int k) { return n + k; };
  for (int k = 0; k < n; ++k) p.base.add_lt({term(l(k), 1), term(r(k), -1)}, 0, "l" + std::to_string(k) + " < r" + std::to_string(k));
  for (int k = 0; k + 1 < n; ++k)
    p.base.add_le({term(l(k), 1), term(l(k + 1), -1)}, 0, "l" + std::to_string(k) + " <= l" + std::to_string(k + 1));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const std::string pair = std::to_string(a) + "," + std::to_string(b);
      // overlap candidate R - l_b against half-length H/2, as 2R - 2l_b - H
      auto expr = [&](int R, int H, long long sign) {
        std::vector<lp::Term> t{term(R, 2 * sign), term(l(b), -2 * sign), term(r(H), -sign), term(l(H), sign)};
        return t;
      };
      const std::array<std::pair<int, int>, 4> combos{{{r(a), a}, {r(a), b}, {r(b), a}, {r(b), b}}};
      if (adj(a, b)) {
        for (auto [R, H] : combos) p.base.add_le(expr(R, H, -1), 0, "edge " + pair);
        continue;
      }
      std::vector<lp::Constraint> options;
      for (auto [R, H] : combos) options.push_back({expr(R, H, 1), Rat(0), true, "non-edge " + pair});
      p.disjunctions.push_back(std::move(options));
    }
  return p;
}

Representation cmptg_rep(const Ordering& ord, const std::vector<Rat>& x) {
  const int n = ord.size();
  Representation rep{RepKind::cmptg, std::vector<RepItem>(static_cast<std::size_t>(n), RepItem{Interval(0, 1), {}, {}})};
  for (int k = 0; k < n; ++k) {
    const Rat& c = x[static_cast<std::size_t>(k)];
    const Rat& s = x[static_cast<std::size_t>(n + k)];
    rep.items[static_cast<std::size_t>(ord[k])] = {Interval(c - s, c + s), c, std::nullopt};
  }
  return rep;
}

Representation fifty_rep(const Ordering& ord, const std::vector<Rat>& x) {
  const int n = ord.size();
  Representation rep{RepKind::fifty_mtg, std::vector<RepItem>(static_cast<std::size_t>(n), RepItem{Interval(0, 1), {}, {}})};
  for (int k = 0; k < n; ++k) {
    Interval iv(x[static_cast<std::size_t>(k)], x[static_cast<std::size_t>(n + k)]);
    Rat t = iv.length() / 2;
    rep.items[static_cast<std::size_t>(ord[k])] = {std::move(iv), std::nullopt, std::move(t)};
  }
  return rep;
}

Certificate search_intervals(const Graph& g, GraphClass cls, const SearchLimits& lim) {
  const std::string claim = to_string(cls);
  const int n = g.size();
  if (n > lim.max_n) return too_large(claim, n, lim);
  const bool central = cls == GraphClass::cmptg;

  Budget budget(lim);
  SearchStats stats;
  Ordering ord = Ordering::identity(n);
  do {
    // Mirroring a central representation reverses its center order, so only
    // orderings with perm[0] < perm[n-1] need to be tried.
    if (central && n >= 2 && ord.perm.front() > ord.perm.back()) continue;
    if (!budget.spend()) {
      stats.branches = budget.used();
      return budget_spent(claim, stats);
    }
    ++stats.orderings;
    if (central && !check_condition(g, ord, ConditionKind::cmptg_necessary).holds) continue;

    OrderingProblem p = central ? cmptg_problem(g, ord) : fifty_problem(g, ord);
    if (p.trivially_infeasible) continue;
    auto base = lp::solve(p.base);
    if (!base.feasible) continue;
    std::vector<Rat> x;
    auto out = branch(p.base, p.disjunctions, 0, base.solution, budget, x);
    if (out == Outcome::budget) {
      stats.branches = budget.used();
      return budget_spent(claim, stats);
    }
    if (out == Outcome::found) {
      Representation rep = central ? cmptg_rep(ord, x) : fifty_rep(ord, x);
      if (!verify(rep, g).ok) throw std::logic_error("exhaustive search produced a representation that does not verify");
      stats.branches = budget.used();
      Certificate c;
      c.verdict = Verdict::yes;
      c.claim = claim;
      c.payload = std::move(rep);
      c.stats = stats;
      return c;
    }
  } while (std::next_permutation(ord.perm.begin(), ord.perm.end()));

  stats.branches = budget.used();
  Certificate c;
  c.verdict = Verdict::no;
  c.claim = claim;
  c.stats = stats;
  c.note = "no " + std::string(central ? "center" : "left-endpoint") + " order admits a representation";
  return c;
}

constexpr std::size_t kMaxRefutations = 64;

Certificate search_cicd(const Digraph& d, const SearchLimits& lim) {
  const int n = d.size();
  if (n > lim.max_n) return too_large("cicd", n, lim);
  Budget budget(lim);
  SearchStats stats;
  Certificate result;
  result.claim = "cicd";
  Ordering ord = Ordering::identity(n);
  do {
    if (n >= 2 && ord.perm.front() > ord.perm.back()) continue;
    if (!budget.spend()) {
      stats.branches = budget.used();
      return budget_spent("cicd", stats);
    }
    if (!check_condition(d, ord, ConditionKind::icd_order).holds) continue;
    ++stats.orderings;
    auto nec = check_condition(d, ord, ConditionKind::cicd_necessary);
    if (!nec.holds) {
      if (result.refutations.size() < kMaxRefutations)
        result.refutations.push_back({ord, "cicd_necessary", nec.violation, {nec.clause}});
      continue;
    }
    if (!budget.spend()) {
      stats.branches = budget.used();
      return budget_spent("cicd", stats);
    }
    Certificate fit = cicd_feasible_for_ordering(d, ord);
    if (fit.verdict == Verdict::yes) {
      Representation rep = optimized_to_cicd(d, std::get<Labeling>(fit.payload));
      if (!verify(rep, d).ok) throw std::logic_error("cicd search produced a representation that does not verify");
      stats.branches = budget.used();
      Certificate c;
      c.verdict = Verdict::yes;
      c.claim = "cicd";
      c.payload = std::move(rep);
      c.stats = stats;
      return c;
    }
    if (result.refutations.size() < kMaxRefutations && !fit.refutations.empty())
      result.refutations.push_back(fit.refutations.front());
  } while (std::next_permutation(ord.perm.begin(), ord.perm.end()));

  stats.branches = budget.used();
  result.verdict = Verdict::no;
  result.stats = stats;
  result.note = stats.orderings == 0 ? "no ordering satisfies icd_order" : "every icd ordering is infeasible";
  return result;
}

// --- lexicographic breadth-first search ------------------------------------

// LexBFS; with `prev`, ties go to the vertex appearing last in prev (LexBFS+).
std::vector<int> lexbfs(const Graph& g, const std::vector<int>* prev) {
  const int n = g.size();
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  if (prev)
    for (int k = 0; k < n; ++k) rank[static_cast<std::size_t>((*prev)[static_cast<std::size_t>(k)])] = k;
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (done[static_cast<std::size_t>(v)]) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      const auto& lv = label[static_cast<std::size_t>(v)];
      const auto& lb = label[static_cast<std::size_t>(best)];
      if (lv > lb || (lv == lb && prev && rank[static_cast<std::size_t>(v)] > rank[static_cast<std::size_t>(best)])) best = v;
    }
    done[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
    for (int w : g.neighbors(best))
      if (!done[static_cast<std::size_t>(w)]) label[static_cast<std::size_t>(w)].push_back(n - step);
  }
  return order;
}

std::optional<std::array<int, 4>> find_claw(const Graph& g) {
  const int n = g.size();
  for (int h = 0; h < n; ++h) {
    auto nb = g.neighbors(h);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return std::array<int, 4>{h, nb[i], nb[j], nb[k]};
      }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(ConditionKind kind) {
  for (auto [k, name] : kConditionNames)
    if (k == kind) return std::string(name);
  return "unknown";
}

ConditionKind parse_condition_kind(std::string_view name) {
  for (auto [k, n] : kConditionNames)
    if (n == name) return k;
  throw InvalidInput("unknown condition \"" + std::string(name) + "\"");
}

bool is_digraph_condition(ConditionKind kind) {
  return kind == ConditionKind::icd_order || kind == ConditionKind::cicd_necessary;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

void SearchLimits::validate() const {
  if (max_n < 1) throw InvalidInput("max_n must be positive");
  if (max_branches < 1) throw InvalidInput("max_branches must be positive");
  if (budget_ms < 0) throw InvalidInput("budget_ms must be non-negative");
}

std::string to_string(GraphClass c) {
  for (auto [k, name] : kClassNames)
    if (k == c) return std::string(name);
  return "unknown";
}

GraphClass parse_graph_class(std::string_view name) {
  for (auto [k, n] : kClassNames)
    if (n == name) return k;
  throw InvalidInput("unknown class \"" + std::string(name) + "\"");
}

SearchLimits default_limits(GraphClass c) {
  SearchLimits lim;
  switch (c) {
    case GraphClass::cicd: lim.max_n = 8; break;
    case GraphClass::cmptg: lim.max_n = 7; break;
    case GraphClass::fifty_mtg: lim.max_n = 5; break;
    default: break;
  }
  return lim;
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::ordering: return "ordering";
    case CertificateKind::representation: return "representation";
    case CertificateKind::labeling: return "labeling";
    case CertificateKind::obstruction_pair: return "obstruction_pair";
    case CertificateKind::block_form: return "block_form";
    case CertificateKind::none: return "none";
  }
  return "none";
}

CertificateKind Certificate::kind() const {
  switch (payload.index()) {
    case 1: return CertificateKind::ordering;
    case 2: return CertificateKind::representation;
    case 3: return CertificateKind::labeling;
    case 4: return CertificateKind::obstruction_pair;
    case 5: return CertificateKind::block_form;
    default: return CertificateKind::none;
  }
}

ConditionResult check_condition(const Structure& s, const Ordering& ord, ConditionKind kind) {
  ord.validate(structure_size(s));
  const std::string what = "condition " + to_string(kind);
  switch (kind) {
    case ConditionKind::mptg_4point: return four_point(expect_graph(s, what), ord, false);
    case ConditionKind::cmptg_necessary: return four_point(expect_graph(s, what), ord, true);
    case ConditionKind::icd_order: return icd_triples(expect_digraph(s, what), ord);
    case ConditionKind::cicd_necessary: return cicd_pairs(expect_digraph(s, what), ord);
  }
  throw std::logic_error("unhandled condition");
}

Certificate find_ordering(const Structure& s, ConditionKind kind, const SearchLimits& lim) {
  lim.validate();
  const std::string claim = to_string(kind);
  if (is_digraph_condition(kind) != std::holds_alternative<Digraph>(s))
    throw InvalidInput("condition " + claim + (is_digraph_condition(kind) ? " needs a digraph" : " needs an undirected graph"));
  const int n = structure_size(s);
  if (n > lim.max_n) return too_large(claim, n, lim);

  Budget budget(lim);
  SearchStats stats;
  Ordering ord = Ordering::identity(n);
  do {
    if (!budget.spend()) {
      stats.branches = budget.used();
      return budget_spent(claim, stats);
    }
    ++stats.orderings;
    if (check_condition(s, ord, kind).holds) {
      Certificate c;
      c.verdict = Verdict::yes;
      c.claim = claim;
      c.payload = ord;
      c.condition = kind;
      stats.branches = budget.used();
      c.stats = stats;
      return c;
    }
  } while (std::next_permutation(ord.perm.begin(), ord.perm.end()));

  Certificate c;
  c.verdict = Verdict::no;
  c.claim = claim;
  c.condition = kind;
  stats.branches = budget.used();
  c.stats = stats;
  c.note = "all orderings violate " + claim;
  return c;
}

bool check_mptg_matrix_pattern(const BinaryMatrix& m) {
  if (!m.square()) throw InvalidInput("matrix pattern check needs a square matrix");
  for (int i = 0; i < m.rows(); ++i)
    if (!m.at(i, i)) throw InvalidInput("matrix diagonal must be all ones", {i});
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (m.at(i, j)) continue;
      bool right_clear = true, above_clear = true;
      for (int k = j + 1; k < n && right_clear; ++k) right_clear = !m.at(i, k);
      for (int k = 0; k < i && above_clear; ++k) above_clear = !m.at(k, j);
      if (!right_clear && !above_clear) return false;
    }
  return true;
}

OptimizedResult check_optimized(const Structure& s, const Labeling& f) {
  const int n = structure_size(s);
  if (f.size() != n)
    throw InvalidInput("labeling has " + std::to_string(f.size()) + " values for " + std::to_string(n) + " vertices");
  f.validate();
  auto near = [&](int i, int j) {
    return std::visit(
        [&](const auto& x) {
          if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Graph>)
            return x.adjacent(i, j);
          else
            return x.has_arc(i, j);
        },
        s);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i || !near(i, j)) continue;
      Rat dij = abs(f[i] - f[j]);
      for (int k = 0; k < n; ++k) {
        if (k == i || near(i, k)) continue;
        if (dij >= abs(f[i] - f[k])) return {false, {i, j, k}};
      }
    }
  return {};
}

Certificate cicd_feasible_for_ordering(const Digraph& d, const Ordering& ord) {
  ord.validate(d.size());
  if (auto r = check_condition(d, ord, ConditionKind::icd_order); !r.holds)
    throw InvalidInput("ordering violates icd_order (" + r.clause + ")", r.violation);
  const int n = d.size();
  auto [first, last] = catch_span(d, ord);
  Positioned<Digraph> arc{d, ord};

  lp::System sys(n);
  auto v = [&](int k) { return std::to_string(ord[k]); };
  for (int k = 0; k + 1 < n; ++k) sys.add_lt({term(k, 1), term(k + 1, -1)}, 0, "p(" + v(k) + ") < p(" + v(k + 1) + ")");
  // d(i, j) as a linear form, using the fixed position order.
  auto dist = [](int i, int j, long long sign, std::vector<lp::Term>& out) {
    if (j > i) {
      out.push_back(term(j, sign));
      out.push_back(term(i, -sign));
    } else {
      out.push_back(term(i, sign));
      out.push_back(term(j, -sign));
    }
  };
  for (int i = 0; i < n; ++i) {
    std::array<int, 2> ends{first[static_cast<std::size_t>(i)], last[static_cast<std::size_t>(i)]};
    for (int e = 0; e < 2; ++e) {
      int j = ends[static_cast<std::size_t>(e)];
      if (j == i || (e == 1 && j == ends[0])) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || arc(i, k)) continue;
        std::vector<lp::Term> t;
        dist(i, j, 1, t);
        dist(i, k, -1, t);
        sys.add_lt(std::move(t), 0, "d(" + v(i) + "," + v(j) + ") < d(" + v(i) + "," + v(k) + ")");
      }
    }
  }

  Certificate c;
  c.claim = "cicd";
  auto res = lp::solve(sys);
  if (res.feasible) {
    Rat lo = n > 0 ? res.solution.front() : Rat(0);
    Labeling f;
    f.values.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) f.values[static_cast<std::size_t>(ord[k])] = res.solution[static_cast<std::size_t>(k)] - lo + 1;
    if (!check_optimized(d, f).holds) throw std::logic_error("position solution is not an optimized labeling");
    c.verdict = Verdict::yes;
    c.payload = std::move(f);
    return c;
  }
  c.verdict = Verdict::no;
  Refutation ref{ord, "infeasible_positions", {}, {}};
  for (int idx : lp::infeasible_subsystem(sys)) ref.constraints.push_back(sys.constraints()[static_cast<std::size_t>(idx)].label);
  c.refutations.push_back(std::move(ref));
  return c;
}

Certificate exhaustive_recognize(const Structure& s, GraphClass cls, const SearchLimits& lim) {
  lim.validate();
  switch (cls) {
    case GraphClass::cicd: return search_cicd(expect_digraph(s, "cicd recognition"), lim);
    case GraphClass::cmptg:
    case GraphClass::fifty_mtg: return search_intervals(expect_graph(s, to_string(cls) + " recognition"), cls, lim);
    default: throw InvalidInput("exhaustive recognition supports cicd, cmptg and fifty_mtg, not " + to_string(cls));
  }
}

bool closed_neighborhoods_consecutive(const Graph& g, const Ordering& ord) {
  ord.validate(g.size());
  auto pos = ord.position();
  for (int v = 0; v < g.size(); ++v) {
    auto nb = g.closed_neighborhood(v);
    int lo = g.size(), hi = -1;
    for (int w : nb) {
      lo = std::min(lo, pos[static_cast<std::size_t>(w)]);
      hi = std::max(hi, pos[static_cast<std::size_t>(w)]);
    }
    if (hi - lo + 1 != static_cast<int>(nb.size())) return false;
  }
  return true;
}

Certificate is_proper_interval(const Graph& g) {
  // Three sweeps: LexBFS, then LexBFS+ twice; the last sweep is a proper
  // interval ordering exactly when one exists.
  auto s1 = lexbfs(g, nullptr);
  auto s2 = lexbfs(g, &s1);
  auto s3 = lexbfs(g, &s2);
  Certificate c;
  c.claim = "proper_interval";
  Ordering ord{s3};
  if (!closed_neighborhoods_consecutive(g, ord)) {
    c.verdict = Verdict::no;
    c.note = "some closed neighborhood is not consecutive under the final sweep";
    return c;
  }
  Ordering rev{std::vector<int>(s3.rbegin(), s3.rend())};
  if (rev.perm < ord.perm) ord = std::move(rev);
  c.verdict = Verdict::yes;
  c.payload = std::move(ord);
  return c;
}

Certificate common_neighborhood_obstruction(const Graph& g) {
  Certificate c;
  c.claim = "cmptg_obstruction";
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) continue;
      auto sub = common_neighborhood_subgraph(g, u, v);
      if (is_proper_interval(sub.graph).verdict == Verdict::yes) continue;
      ObstructionPair ob{u, v, sub, std::nullopt};
      if (auto claw = find_claw(sub.graph)) {
        std::array<int, 4> orig{};
        for (int k = 0; k < 4; ++k) orig[static_cast<std::size_t>(k)] = sub.vertices[static_cast<std::size_t>((*claw)[static_cast<std::size_t>(k)])];
        ob.claw = orig;
      }
      c.verdict = Verdict::yes;
      c.payload = std::move(ob);
      return c;
    }
  c.verdict = Verdict::no;
  c.note = "every common neighborhood of a non-adjacent pair is a proper interval graph";
  return c;
}

C4P4Result verify_c4_p4_conditions(const Representation& rep) {
  if (rep.kind != RepKind::cmptg) throw InvalidInput("C4/P4 conditions apply to cmptg representations");
  rep.validate();
  if (auto ties = tied_points(rep); !ties.empty())
    throw InvalidInput("centers must be distinct", {ties.front().first, ties.front().second});
  Graph g = realize_graph(rep);
  const int n = rep.size();
  Ordering ord = Ordering::identity(n);
  std::stable_sort(ord.perm.begin(), ord.perm.end(), [&](int a, int b) {
    return *rep.items[static_cast<std::size_t>(a)].point < *rep.items[static_cast<std::size_t>(b)].point;
  });
  Positioned<Graph> adj{g, ord};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const std::array<int, 4> q{a, b, c, d};
          std::array<int, 4> deg{};
          int edges = 0;
          for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
              if (adj(q[static_cast<std::size_t>(x)], q[static_cast<std::size_t>(y)])) {
                ++edges;
                ++deg[static_cast<std::size_t>(x)];
                ++deg[static_cast<std::size_t>(y)];
              }
          auto witness = map_to_vertices(ord, {a, b, c, d});
          if (edges == 4 && std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; })) {
            if (!(adj(a, b) && adj(b, c) && adj(c, d) && adj(a, d))) return {false, "C4", witness};
          } else if (edges == 3 && std::count(deg.begin(), deg.end(), 1) == 2 && std::count(deg.begin(), deg.end(), 2) == 2) {
            // some end edge of the path joins two neighbors in the C-order
            auto end_edge = [&](int x, int y) {
              return adj(q[static_cast<std::size_t>(x)], q[static_cast<std::size_t>(y)]) && (deg[static_cast<std::size_t>(x)] == 1 || deg[static_cast<std::size_t>(y)] == 1);
            };
            bool ok = end_edge(0, 1) || end_edge(1, 2) || end_edge(2, 3);
            if (!ok) return {false, "P4", witness};
          }
        }
  return {};
}

bool matches_block_form(const Digraph& d, const BlockForm& form) {
  const int n = d.size();
  form.ordering.validate(n);
  BinaryMatrix a = augmented_adjacency(d, form.ordering);
  if (!form.split) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.at(i, j) != (i >= j)) return false;
    return true;
  }
  const int l = *form.split;
  if (l < 1 || l >= n) return false;
  int prev_len = n - l;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool want;
      if (i < l && j < l) {
        want = i <= j;
      } else if (i >= l && j >= l) {
        want = i >= j;
      } else if (i >= l) {
        want = !a.at(j, i);
      } else {
        continue;  // the corner block is checked row by row below
      }
      if (a.at(i, j) != want) return false;
    }
  for (int i = 0; i < l; ++i) {
    int len = 0;
    while (l + len < n && a.at(i, l + len)) ++len;
    for (int j = l + len; j < n; ++j)
      if (a.at(i, j)) return false;
    if (len > prev_len) return false;
    prev_len = len;
  }
  return true;
}

Certificate tournament_block_form(const Digraph& d, const SearchLimits& lim) {
  lim.validate();
  if (!is_tournament(d)) throw InvalidInput("block form search needs a tournament");
  const int n = d.size();
  if (n > lim.max_n) return too_large("tournament_icd", n, lim);
  Budget budget(lim);
  SearchStats stats;
  Ordering ord = Ordering::identity(n);
  do {
    if (!budget.spend()) {
      stats.branches = budget.used();
      return budget_spent("tournament_icd", stats);
    }
    ++stats.orderings;
    std::vector<std::optional<int>> splits{std::nullopt};
    for (int l = 1; l < n; ++l) splits.emplace_back(l);
    for (const auto& split : splits) {
      BlockForm form{ord, split};
      if (matches_block_form(d, form)) {
        Certificate c;
        c.verdict = Verdict::yes;
        c.claim = "tournament_icd";
        c.payload = std::move(form);
        stats.branches = budget.used();
        c.stats = stats;
        return c;
      }
    }
  } while (std::next_permutation(ord.perm.begin(), ord.perm.end()));
  Certificate c;
  c.verdict = Verdict::no;
  c.claim = "tournament_icd";
  stats.branches = budget.used();
  c.stats = stats;
  c.note = "no ordering gives the block form";
  return c;
}

Certificate classify(const Structure& s, GraphClass cls, const SearchLimits& lim) {
  lim.validate();
  const std::string claim = to_string(cls);
  switch (cls) {
    case GraphClass::icd: {
      expect_digraph(s, claim + " classification");
      auto c = find_ordering(s, ConditionKind::icd_order, lim);
      c.claim = claim;
      return c;
    }
    case GraphClass::mptg: {
      expect_graph(s, claim + " classification");
      auto c = find_ordering(s, ConditionKind::mptg_4point, lim);
      c.claim = claim;
      return c;
    }
    case GraphClass::proper_interval: return is_proper_interval(expect_graph(s, claim + " classification"));
    case GraphClass::cmptg: {
      const Graph& g = expect_graph(s, claim + " classification");
      // Proper interval graphs have unit central representations outright.
      if (is_proper_interval(g).verdict == Verdict::yes) {
        Certificate c;
        c.verdict = Verdict::yes;
        c.claim = claim;
        c.payload = proper_to_ucmptg(g);
        c.note = "proper interval graph";
        return c;
      }
      auto ob = common_neighborhood_obstruction(g);
      if (ob.verdict == Verdict::yes) {
        ob.verdict = Verdict::no;
        ob.claim = claim;
        ob.note = "a common neighborhood of a non-adjacent pair is not a proper interval graph";
        return ob;
      }
      return exhaustive_recognize(s, cls, lim);
    }
    case GraphClass::fifty_mtg: {
      const Graph& g = expect_graph(s, claim + " classification");
      if (is_proper_interval(g).verdict == Verdict::yes) {
        Certificate c;
        c.verdict = Verdict::yes;
        c.claim = claim;
        c.payload = pcmptg_to_50mtg(proper_to_ucmptg(g));
        c.note = "proper interval graph";
        return c;
      }
      return exhaustive_recognize(s, cls, lim);
    }
    case GraphClass::cicd: return exhaustive_recognize(s, cls, lim);
  }
  throw std::logic_error("unhandled class");
}

RecheckResult recheck_certificate(const Structure& s, const Certificate& c) {
  const int n = structure_size(s);
  try {
    if (const auto* ord = std::get_if<Ordering>(&c.payload)) {
      if (ord->size() != n) return {false, "ordering length differs from the vertex count"};
      ord->validate(n);
      if (c.condition) {
        auto r = check_condition(s, *ord, *c.condition);
        return {r.holds, r.holds ? "ordering satisfies " + to_string(*c.condition) : "ordering violates " + to_string(*c.condition)};
      }
      if (c.claim == "proper_interval") {
        bool ok = closed_neighborhoods_consecutive(expect_graph(s, "proper interval check"), *ord);
        return {ok, ok ? "closed neighborhoods are consecutive" : "some closed neighborhood is not consecutive"};
      }
      return {false, "ordering certificate without a condition"};
    }
    if (const auto* rep = std::get_if<Representation>(&c.payload)) {
      auto r = verify(*rep, s);
      return {r.ok, r.ok ? "representation realizes the structure" : "representation realizes a different structure"};
    }
    if (const auto* f = std::get_if<Labeling>(&c.payload)) {
      auto r = check_optimized(s, *f);
      return {r.holds, r.holds ? "labeling is optimized" : "labeling is not optimized"};
    }
    if (const auto* ob = std::get_if<ObstructionPair>(&c.payload)) {
      const Graph& g = expect_graph(s, "obstruction check");
      if (ob->u < 0 || ob->v < 0 || ob->u >= n || ob->v >= n || ob->u == ob->v) return {false, "obstruction pair out of range"};
      if (g.adjacent(ob->u, ob->v)) return {false, "obstruction pair is adjacent"};
      auto sub = common_neighborhood_subgraph(g, ob->u, ob->v);
      if (ob->claw) {
        const auto& q = *ob->claw;
        for (int k = 0; k < 4; ++k)
          if (std::find(sub.vertices.begin(), sub.vertices.end(), q[static_cast<std::size_t>(k)]) == sub.vertices.end())
            return {false, "claw vertex outside the common neighborhood"};
        bool claw = g.adjacent(q[0], q[1]) && g.adjacent(q[0], q[2]) && g.adjacent(q[0], q[3]) && !g.adjacent(q[1], q[2]) &&
                    !g.adjacent(q[1], q[3]) && !g.adjacent(q[2], q[3]);
        if (!claw) return {false, "claw vertices do not induce a claw"};
      }
      bool proper = is_proper_interval(sub.graph).verdict == Verdict::yes;
      return {!proper, proper ? "common neighborhood is a proper interval graph" : "common neighborhood is not a proper interval graph"};
    }
    if (const auto* form = std::get_if<BlockForm>(&c.payload)) {
      bool ok = matches_block_form(expect_digraph(s, "block form check"), *form);
      return {ok, ok ? "matrix has the block form" : "matrix does not have the block form"};
    }
    if (!c.refutations.empty()) {
      // Each recorded ordering must fail again; completeness of the list is
      // the enumeration's claim and is not re-derived here.
      const Digraph& d = expect_digraph(s, "refutation check");
      for (const auto& r : c.refutations) {
        r.ordering.validate(n);
        bool refuted = false;
        if (r.reason == "cicd_necessary")
          refuted = !check_condition(d, r.ordering, ConditionKind::cicd_necessary).holds;
        else if (r.reason == "infeasible_positions")
          refuted = cicd_feasible_for_ordering(d, r.ordering).verdict == Verdict::no;
        if (!refuted) return {false, "recorded refutation does not hold for one ordering"};
      }
      return {true, std::to_string(c.refutations.size()) + " recorded refutations hold"};
    }
  } catch (const InvalidInput& e) {
    return {false, e.what()};
  }
  return {false, "certificate carries no payload"};
}

}  // namespace ptg
