#include "ptg/lp.hpp"

#include <stdexcept>

namespace ptg::lp {

void System::add_le(std::vector<Term> terms, Rat rhs, std::string label) {
  add({std::move(terms), std::move(rhs), false, std::move(label)});
}

void System::add_lt(std::vector<Term> terms, Rat rhs, std::string label) {
  add({std::move(terms), std::move(rhs), true, std::move(label)});
}

void System::add(Constraint c) {
  for (const auto& t : c.terms)
    if (t.var < 0 || t.var >= num_vars_) throw std::out_of_range("lp term refers to an unknown variable");
  constraints_.push_back(std::move(c));
}

void System::truncate(std::size_t count) {
  if (count < constraints_.size()) constraints_.resize(count);
}

namespace {

// Dictionary form: basic[r] = d[r] + sum_k D[r][k] * nonbasic[k].
// Variable ids: [0, free_count) are free, the rest are nonnegative.
class Dictionary {
 public:
  Dictionary(int free_count, const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b)
      : free_count_(free_count) {
    const int m = static_cast<int>(a.size());
    basic_.resize(static_cast<std::size_t>(m));
    d_ = b;
    D_.assign(static_cast<std::size_t>(m), std::vector<Rat>(static_cast<std::size_t>(free_count) + 1));
    for (int r = 0; r < m; ++r) {
      basic_[static_cast<std::size_t>(r)] = free_count + r;
      for (int j = 0; j < free_count; ++j) D_[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = -a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < free_count; ++j) nonbasic_.push_back(j);
    artificial_ = free_count + m;
    nonbasic_.push_back(artificial_);  // column free_count, zero until phase 1 starts
    free_row_.assign(static_cast<std::size_t>(m), false);
    obj_.assign(nonbasic_.size(), Rat(0));
  }

  Result run() {
    Result res;
    eliminate_free_variables(res);

    int worst = -1;
    for (std::size_t r = 0; r < d_.size(); ++r)
      if (!free_row_[r] && d_[r] < 0 && (worst < 0 || d_[r] < d_[static_cast<std::size_t>(worst)])) worst = static_cast<int>(r);

    if (worst >= 0) {
      const std::size_t xc = column_of(artificial_);
      for (std::size_t r = 0; r < d_.size(); ++r) D_[r][xc] = free_row_[r] ? Rat(0) : Rat(1);
      obj_[xc] = -1;
      pivot(static_cast<std::size_t>(worst), xc);
      ++res.pivots;
      if (!phase_one(res)) return res;
    }

    res.feasible = true;
    res.solution.assign(static_cast<std::size_t>(free_count_), Rat(0));
    for (std::size_t r = 0; r < basic_.size(); ++r)
      if (basic_[r] < free_count_) res.solution[static_cast<std::size_t>(basic_[r])] = d_[r];
    return res;
  }

 private:
  std::size_t column_of(int var) const {
    for (std::size_t k = 0; k < nonbasic_.size(); ++k)
      if (nonbasic_[k] == var) return k;
    throw std::logic_error("variable is not nonbasic");
  }

  void eliminate_free_variables(Result& res) {
    for (int j = 0; j < free_count_; ++j) {
      std::size_t c = column_of(j);
      for (std::size_t r = 0; r < D_.size(); ++r) {
        if (!free_row_[r] && D_[r][c] != 0) {
          pivot(r, c);
          free_row_[r] = true;
          ++res.pivots;
          break;
        }
      }
    }
  }

  // Maximizes -x0 with Bland's rule; true iff x0 reaches zero.
  bool phase_one(Result& res) {
    for (;;) {
      int enter = -1;
      for (std::size_t k = 0; k < nonbasic_.size(); ++k)
        if (obj_[k] > 0 && (enter < 0 || nonbasic_[k] < nonbasic_[static_cast<std::size_t>(enter)])) enter = static_cast<int>(k);
      if (enter < 0) return obj_const_ == 0;

      const auto c = static_cast<std::size_t>(enter);
      int leave = -1;
      Rat best;
      for (std::size_t r = 0; r < D_.size(); ++r) {
        if (free_row_[r] || !(D_[r][c] < 0)) continue;
        Rat ratio = d_[r] / -D_[r][c];
        bool take = leave < 0 || ratio < best;
        if (!take && ratio == best) {
          int cur = basic_[static_cast<std::size_t>(leave)];
          take = basic_[r] == artificial_ || (cur != artificial_ && basic_[r] < cur);
        }
        if (take) {
          leave = static_cast<int>(r);
          best = std::move(ratio);
        }
      }
      if (leave < 0) throw std::logic_error("phase one objective is unbounded");
      bool artificial_leaves = basic_[static_cast<std::size_t>(leave)] == artificial_;
      pivot(static_cast<std::size_t>(leave), c);
      ++res.pivots;
      if (artificial_leaves) return true;
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t cols = nonbasic_.size();
    auto& row = D_[r];
    const Rat a = row[c];
    const Rat inv = 1 / a;

    // Solve row r for the entering variable.
    d_[r] = -d_[r] * inv;
    for (std::size_t k = 0; k < cols; ++k) {
      if (k == c) continue;
      if (row[k] != 0) row[k] = -row[k] * inv;
    }
    row[c] = inv;
    std::swap(basic_[r], nonbasic_[c]);

    auto substitute = [&](std::vector<Rat>& target, Rat& constant) {
      const Rat f = target[c];
      if (f == 0) return;
      constant += f * d_[r];
      for (std::size_t k = 0; k < cols; ++k) {
        if (k == c) continue;
        if (row[k] != 0) target[k] += f * row[k];
      }
      target[c] = f * row[c];
    };
    for (std::size_t i = 0; i < D_.size(); ++i)
      if (i != r) substitute(D_[i], d_[i]);
    substitute(obj_, obj_const_);
  }

  int free_count_;
  int artificial_ = -1;
  std::vector<int> basic_;
  std::vector<int> nonbasic_;
  std::vector<Rat> d_;
  std::vector<std::vector<Rat>> D_;
  std::vector<bool> free_row_;
  std::vector<Rat> obj_;
  Rat obj_const_ = 0;
};

}  // namespace

Result solve(const System& system) {
  bool any_strict = false;
  for (const auto& c : system.constraints()) any_strict = any_strict || c.strict;

  const int p = system.num_vars();
  const int cols = any_strict ? p + 1 : p;  // extra homogenizing variable s
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (const auto& c : system.constraints()) {
    std::vector<Rat> row(static_cast<std::size_t>(cols));
    for (const auto& t : c.terms) row[static_cast<std::size_t>(t.var)] += t.coef;
    if (any_strict) {
      row[static_cast<std::size_t>(p)] = -c.rhs;
      b.push_back(c.strict ? Rat(-1) : Rat(0));
    } else {
      b.push_back(c.rhs);
    }
    a.push_back(std::move(row));
  }
  if (any_strict) {
    std::vector<Rat> row(static_cast<std::size_t>(cols));
    row[static_cast<std::size_t>(p)] = -1;
    a.push_back(std::move(row));
    b.push_back(Rat(-1));
  }

  Result res = Dictionary(cols, a, b).run();
  if (res.feasible && any_strict) {
    Rat s = res.solution[static_cast<std::size_t>(p)];
    res.solution.resize(static_cast<std::size_t>(p));
    for (auto& x : res.solution) x /= s;
  }
  return res;
}

std::vector<int> infeasible_subsystem(const System& system) {
  if (solve(system).feasible) return {};
  std::vector<int> keep;
  for (int i = 0; i < static_cast<int>(system.constraints().size()); ++i) keep.push_back(i);

  for (std::size_t pos = 0; pos < keep.size();) {
    System trial(system.num_vars());
    for (std::size_t k = 0; k < keep.size(); ++k)
      if (k != pos) trial.add(system.constraints()[static_cast<std::size_t>(keep[k])]);
    if (!solve(trial).feasible) {
      keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(pos));
    } else {
      ++pos;
    }
  }
  return keep;
}

}  // namespace ptg::lp
