#include "fillscope/smith.hpp"

#include <algorithm>
#include <string>

#include "fillscope/error.hpp"

namespace fillscope {

std::vector<Integer> SnfDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

namespace {

// Quotient rounded toward zero, so |a - q*b| < |b|.
Integer trunc_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

class SnfWorker {
 public:
  explicit SnfWorker(const IntMatrix& A)
      : D_(A), U_(IntMatrix::identity(A.rows())), V_(IntMatrix::identity(A.cols())) {}

  SnfDecomposition run() {
    const std::size_t limit = std::min(D_.rows(), D_.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
      if (!place_smallest_pivot(t)) break;
      reduce_at(t);
      if (D_(t, t) < 0) {
        D_.negate_row(t);
        U_.negate_row(t);
      }
    }
    return SnfDecomposition{std::move(U_), std::move(V_), std::move(D_), t};
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    D_.swap_rows(a, b);
    U_.swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    D_.swap_cols(a, b);
    V_.swap_cols(a, b);
  }
  void add_row(std::size_t target, std::size_t source, const Integer& k) {
    D_.add_row_multiple(target, source, k);
    U_.add_row_multiple(target, source, k);
  }
  void add_col(std::size_t target, std::size_t source, const Integer& k) {
    D_.add_col_multiple(target, source, k);
    V_.add_col_multiple(target, source, k);
  }

  // Moves the smallest nonzero entry (in absolute value) of the trailing
  // submatrix to (t, t). First occurrence in row-major order wins.
  bool place_smallest_pivot(std::size_t t) {
    std::size_t best_r = 0, best_c = 0;
    bool found = false;
    for (std::size_t r = t; r < D_.rows(); ++r) {
      for (std::size_t c = t; c < D_.cols(); ++c) {
        const Integer& v = D_(r, c);
        if (v == 0) continue;
        if (!found || mpz_cmpabs(v.get_mpz_t(), D_(best_r, best_c).get_mpz_t()) < 0) {
          best_r = r;
          best_c = c;
          found = true;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  void reduce_at(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < D_.rows(); ++r) {
        if (D_(r, t) == 0) continue;
        add_row(r, t, -trunc_div(D_(r, t), D_(t, t)));
        if (D_(r, t) != 0) {
          swap_rows(t, r);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < D_.cols(); ++c) {
        if (D_(t, c) == 0) continue;
        add_col(c, t, -trunc_div(D_(t, c), D_(t, t)));
        if (D_(t, c) != 0) {
          swap_cols(t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // Row and column are clear; enforce divisibility of the remainder.
      bool divisible = true;
      for (std::size_t r = t + 1; r < D_.rows() && divisible; ++r) {
        for (std::size_t c = t + 1; c < D_.cols(); ++c) {
          if (!mpz_divisible_p(D_(r, c).get_mpz_t(), D_(t, t).get_mpz_t())) {
            add_row(t, r, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) return;
    }
  }

  IntMatrix D_;
  IntMatrix U_;
  IntMatrix V_;
};

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& A) { return SnfWorker(A).run(); }

LatticeSolver::LatticeSolver(const IntMatrix& A)
    : rows_(A.rows()), cols_(A.cols()), snf_(smith_normal_form(A)) {}

std::optional<IntVector> LatticeSolver::solve(const IntVector& c) const {
  if (c.size() != rows_) {
    throw Error(ErrorKind::dimension_mismatch,
                "right-hand side has " + std::to_string(c.size()) +
                    " entries, matrix has " + std::to_string(rows_) + " rows");
  }
  IntVector transformed = snf_.U * c;
  IntVector y(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < snf_.rank) {
      const Integer& d = snf_.D(i, i);
      if (!mpz_divisible_p(transformed[i].get_mpz_t(), d.get_mpz_t())) {
        return std::nullopt;
      }
      mpz_divexact(y[i].get_mpz_t(), transformed[i].get_mpz_t(), d.get_mpz_t());
    } else if (transformed[i] != 0) {
      return std::nullopt;
    }
  }
  return snf_.V * y;
}

bool LatticeSolver::contains(const IntVector& c) const { return solve(c).has_value(); }

std::vector<IntVector> LatticeSolver::kernel_basis() const {
  std::vector<IntVector> basis;
  for (std::size_t j = snf_.rank; j < cols_; ++j) {
    IntVector v(cols_);
    for (std::size_t i = 0; i < cols_; ++i) v[i] = snf_.V(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& c) {
  if (c.size() != A.rows()) {
    throw Error(ErrorKind::dimension_mismatch,
                "right-hand side has " + std::to_string(c.size()) +
                    " entries, matrix has " + std::to_string(A.rows()) + " rows");
  }
  return LatticeSolver(A).solve(c);
}

HomologySummary homology_summary(const ChainComplex& cc, std::size_t d) {
  if (d > cc.top_dim()) {
    throw Error(ErrorKind::dimension_out_of_range,
                "homology in dimension " + std::to_string(d) +
                    " of a complex with top dimension " + std::to_string(cc.top_dim()));
  }
  std::size_t rank_out = 0;
  if (d >= 1) rank_out = smith_normal_form(cc.boundary_matrix(d).to_dense()).rank;
  HomologySummary summary;
  std::size_t rank_in = 0;
  if (d + 1 <= cc.top_dim()) {
    SnfDecomposition snf = smith_normal_form(cc.boundary_matrix(d + 1).to_dense());
    rank_in = snf.rank;
    for (const Integer& f : snf.invariant_factors())
      if (f > 1) summary.torsion.push_back(f);
  }
  summary.betti = cc.cell_count(d) - rank_out - rank_in;
  return summary;
}

}  // namespace fillscope
