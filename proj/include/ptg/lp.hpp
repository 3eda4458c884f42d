#pragma once

#include "ptg/rational.hpp"

#include <string>
#include <vector>

namespace ptg::lp {

struct Term {
  int var;
  Rat coef;
};

/// sum(coef * x[var]) <= rhs, or < rhs when strict.
struct Constraint {
  std::vector<Term> terms;
  Rat rhs;
  bool strict = false;
  std::string label;
};

/// A system of linear inequalities over free real variables.
class System {
 public:
  explicit System(int num_vars) : num_vars_(num_vars) {}

  int num_vars() const noexcept { return num_vars_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

  /// sum(terms) <= rhs
  void add_le(std::vector<Term> terms, Rat rhs, std::string label = {});
  /// sum(terms) < rhs
  void add_lt(std::vector<Term> terms, Rat rhs, std::string label = {});
  void add(Constraint c);

  /// Drops every constraint past the first `count`.
  void truncate(std::size_t count);

 private:
  int num_vars_;
  std::vector<Constraint> constraints_;
};

struct Result {
  bool feasible = false;
  std::vector<Rat> solution;  // one value per variable when feasible
  long pivots = 0;
};

/// Exact feasibility test. Strict rows are handled by homogenizing with an
/// extra variable s > 0 and normalizing every strict slack to at least 1,
/// which is exact because the homogenized system is a cone.
Result solve(const System& system);

/// Deletion filter: indices of an irreducible infeasible subset of the
/// constraints. Empty when the system is feasible.
std::vector<int> infeasible_subsystem(const System& system);

}  // namespace ptg::lp
