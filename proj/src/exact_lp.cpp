#include "fillscope/exact_lp.hpp"

#include <cstddef>
#include <optional>

#include "fillscope/error.hpp"

namespace fillscope {

namespace {

// Tableau over the structural columns only; artificial columns are never
// needed again once they leave the basis, so they are not stored.
class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b)
      : n_(A.empty() ? 0 : A.front().size()) {
    rows_.reserve(A.size());
    for (std::size_t i = 0; i < A.size(); ++i) {
      std::vector<Rational> row(A[i]);
      row.push_back(b[i]);
      if (b[i] < 0)
        for (auto& v : row) v = -v;
      rows_.push_back(std::move(row));
      basis_.push_back(n_ + i);  // artificial
    }
  }

  std::size_t rows() const { return rows_.size(); }

  // Phase one: minimize the sum of artificials. Returns false if infeasible.
  bool phase_one() {
    objective_.assign(n_ + 1, 0);
    for (const auto& row : rows_)
      for (std::size_t j = 0; j <= n_; ++j) objective_[j] -= row[j];
    iterate();
    if (objective_[n_] != 0) return false;
    // Pivot remaining zero-level artificials out, or drop their rows.
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    return true;
  }

  // Phase two with the real objective. Returns false if unbounded.
  bool phase_two(const std::vector<Rational>& cost) {
    objective_.assign(n_ + 1, 0);
    for (std::size_t j = 0; j < n_; ++j) objective_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= n_; ++j)
        if (rows_[i][j] != 0) objective_[j] -= cb * rows_[i][j];
    }
    return iterate();
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][n_];
    return x;
  }

 private:
  // Bland's rule: lowest-index improving column, lowest-index leaving basic
  // variable among ratio ties. Returns false on unboundedness.
  bool iterate() {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < n_; ++j) {
        if (objective_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      const std::size_t j = *entering;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][j] <= 0) continue;
        Rational ratio = rows_[i][n_] / rows_[i][j];
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, j);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    std::vector<Rational>& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j <= n_; ++j) {
      if (prow[j] == 0) continue;
      prow[j] *= inv;
      nonzero.push_back(j);
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational factor = row[c];
      for (std::size_t j : nonzero) row[j] -= factor * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(objective_);
    basis_[r] = c;
  }

  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> objective_;
};

}  // namespace

LpResult solve_standard_lp(const std::vector<std::vector<Rational>>& A,
                           const std::vector<Rational>& b,
                           const std::vector<Rational>& cost) {
  if (A.size() != b.size()) {
    throw Error(ErrorKind::dimension_mismatch, "LP row count mismatch");
  }
  for (const auto& row : A) {
    if (row.size() != cost.size()) {
      throw Error(ErrorKind::dimension_mismatch, "LP column count mismatch");
    }
  }
  LpResult result;
  Tableau tableau(A, b);
  if (A.empty()) {
    // No constraints: x = 0 is optimal iff no cost is negative.
    for (const auto& c : cost) {
      if (c < 0) {
        result.status = LpStatus::unbounded;
        return result;
      }
    }
    result.status = LpStatus::optimal;
    result.x.assign(cost.size(), 0);
    result.objective = 0;
    return result;
  }
  if (!tableau.phase_one()) {
    result.status = LpStatus::infeasible;
    return result;
  }
  if (!tableau.phase_two(cost)) {
    result.status = LpStatus::unbounded;
    return result;
  }
  result.status = LpStatus::optimal;
  result.x = tableau.solution();
  result.objective = 0;
  for (std::size_t j = 0; j < cost.size(); ++j) result.objective += cost[j] * result.x[j];
  return result;
}

}  // namespace fillscope
