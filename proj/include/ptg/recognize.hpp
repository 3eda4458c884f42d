#pragma once

#include "ptg/graph.hpp"
#include "ptg/labeling.hpp"
#include "ptg/reps.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ptg {

enum class ConditionKind {
  mptg_4point,      // x<u<v<y, xv,uy in E  =>  uv in E
  cmptg_necessary,  // the above, and additionally xu in E or vy in E
  icd_order,        // x<y<z: (xz => xy) and (zx => zy)
  cicd_necessary,   // icd_order, and for i<j: i1 <= j1 or i2 <= j2
};

std::string to_string(ConditionKind kind);
ConditionKind parse_condition_kind(std::string_view name);
bool is_digraph_condition(ConditionKind kind);

struct ConditionResult {
  bool holds = true;
  std::vector<int> violation;  // vertices of the first violating tuple
  std::string clause;          // which clause failed
};

/// Checks a condition under a fixed ordering. The violating tuple is the
/// lexicographically first one by positions, reported as vertices.
ConditionResult check_condition(const Structure& s, const Ordering& ord, ConditionKind kind);

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

struct SearchLimits {
  int max_n = 9;
  long max_branches = 20'000'000;
  long budget_ms = 0;  // 0 means no wall-clock limit

  void validate() const;
};

enum class GraphClass { icd, cicd, mptg, cmptg, fifty_mtg, proper_interval };
std::string to_string(GraphClass c);
GraphClass parse_graph_class(std::string_view name);

/// Default limits for the exhaustive recognizers: cicd 8, cmptg 7, fifty_mtg 5.
SearchLimits default_limits(GraphClass c);

struct ObstructionPair {
  int u = -1;
  int v = -1;
  InducedSubgraph common;               // G[N(u) ∩ N(v)]
  std::optional<std::array<int, 4>> claw;  // hub first, original vertex ids
};

struct BlockForm {
  Ordering ordering;
  std::optional<int> split;  // rows in the M block; empty for the pure N form
};

/// Why one ordering failed, recorded for small negative answers.
struct Refutation {
  Ordering ordering;
  std::string reason;
  std::vector<int> witness;
  std::vector<std::string> constraints;
};

struct SearchStats {
  long orderings = 0;
  long branches = 0;
};

enum class CertificateKind { ordering, representation, labeling, obstruction_pair, block_form, none };
std::string to_string(CertificateKind k);

struct Certificate {
  Verdict verdict = Verdict::unknown;
  std::string claim;  // what a "yes" asserts, e.g. "icd", "cmptg_obstruction"
  std::variant<std::monostate, Ordering, Representation, Labeling, ObstructionPair, BlockForm> payload;
  std::optional<ConditionKind> condition;  // for ordering certificates
  std::vector<Refutation> refutations;
  SearchStats stats;
  std::string note;

  CertificateKind kind() const;
};

/// Lexicographically first ordering satisfying `kind`, or a "no" after all
/// n! orderings. "unknown" when n exceeds the limit or the budget runs out.
Certificate find_ordering(const Structure& s, ConditionKind kind, const SearchLimits& lim = {});

/// Every 0 above the diagonal has only 0s to its right or only 0s above it.
bool check_mptg_matrix_pattern(const BinaryMatrix& m);

struct OptimizedResult {
  bool holds = true;
  std::vector<int> violation;  // (i, j, k): i->j present, i->k absent, d(i,j) >= d(i,k)
};

OptimizedResult check_optimized(const Structure& s, const Labeling& f);

/// Exact search for increasing positions along `ord` that make d optimized.
/// Yes carries the labeling; no carries an irreducible infeasible subsystem.
Certificate cicd_feasible_for_ordering(const Digraph& d, const Ordering& ord);

/// Bounded exhaustive recognition for cicd, cmptg and fifty_mtg. Never
/// answers "no" without a complete enumeration.
Certificate exhaustive_recognize(const Structure& s, GraphClass cls, const SearchLimits& lim);

/// Ordering under which every closed neighborhood is consecutive, or "no".
Certificate is_proper_interval(const Graph& g);

/// True iff every closed neighborhood is consecutive under `ord`.
bool closed_neighborhoods_consecutive(const Graph& g, const Ordering& ord);

/// First non-adjacent pair whose common neighborhood is not a proper interval
/// graph ("yes" = obstruction found, which rules out cmptg), or "no".
Certificate common_neighborhood_obstruction(const Graph& g);

struct C4P4Result {
  bool holds = true;
  std::string shape;         // "C4" or "P4" for the failing induced subgraph
  std::vector<int> witness;  // its vertices in C-order
};

C4P4Result verify_c4_p4_conditions(const Representation& rep);

bool matches_block_form(const Digraph& d, const BlockForm& form);
Certificate tournament_block_form(const Digraph& d, const SearchLimits& lim = {});

/// Dispatches to the recognizer for a class and wraps the answer.
Certificate classify(const Structure& s, GraphClass cls, const SearchLimits& lim);

struct RecheckResult {
  bool ok = false;
  std::string message;
};

/// Independently re-validates the payload of a "yes" certificate against s.
RecheckResult recheck_certificate(const Structure& s, const Certificate& c);

}  // namespace ptg
