#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fillscope/chain_complex.hpp"
#include "fillscope/integer.hpp"
#include "fillscope/matrix.hpp"

namespace fillscope {

// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_rank,
// all diagonal entries nonnegative.
struct SnfDecomposition {
  IntMatrix U;
  IntMatrix V;
  IntMatrix D;
  std::size_t rank = 0;

  // The nonzero invariant factors d_1..d_rank.
  std::vector<Integer> invariant_factors() const;
};

SnfDecomposition smith_normal_form(const IntMatrix& A);

// Integer solvability of A * x == c, backed by one Smith decomposition of A so
// that repeated membership queries against the same matrix stay cheap.
class LatticeSolver {
 public:
  explicit LatticeSolver(const IntMatrix& A);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return snf_.rank; }
  const SnfDecomposition& decomposition() const noexcept { return snf_; }

  // Some integer x with A * x == c, or nullopt if c is not in the integer
  // column lattice of A.
  std::optional<IntVector> solve(const IntVector& c) const;
  bool contains(const IntVector& c) const;

  // A basis of the integer kernel of A (columns of V past the rank).
  std::vector<IntVector> kernel_basis() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  SnfDecomposition snf_;
};

std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& c);

struct HomologySummary {
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors greater than one
};

HomologySummary homology_summary(const ChainComplex& cc, std::size_t d);

}  // namespace fillscope
