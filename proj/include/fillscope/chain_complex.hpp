#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fillscope/integer.hpp"
#include "fillscope/matrix.hpp"

namespace fillscope {

// An integer chain in a single dimension. Cells are referred to by their
// index in the owning complex's ordered cell list; zero coefficients are never
// stored.
class Chain {
 public:
  using Terms = std::map<std::size_t, Integer>;

  Chain() = default;
  explicit Chain(std::size_t dim) : dim_(dim) {}
  Chain(std::size_t dim, Terms coeffs);

  static Chain from_dense(std::size_t dim, const IntVector& values);

  std::size_t dim() const noexcept { return dim_; }
  const Terms& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::size_t support_size() const noexcept { return coeffs_.size(); }

  Integer coefficient(std::size_t cell) const;
  void add_term(std::size_t cell, const Integer& value);

  IntVector to_dense(std::size_t n_cells) const;

  Chain& operator+=(const Chain& other);
  Chain& operator-=(const Chain& other);
  Chain operator-() const;
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(const Integer& k, const Chain& c);

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::size_t dim_ = 0;
  Terms coeffs_;
};

// Sum of absolute coefficient values; this is the word length of the chain in
// the free abelian group on the cells.
Integer l1_norm(const Chain& c);

// A finite cellular chain complex given by its graded boundary matrices.
class ChainComplex {
 public:
  // cells[d] lists the identifiers of the d-cells; boundaries[d - 1] is the
  // |cells[d-1]| x |cells[d]| matrix of the boundary map out of dimension d.
  // Validates identifier uniqueness, matrix shapes and that consecutive
  // boundaries compose to zero.
  ChainComplex(std::vector<std::vector<std::string>> cells,
               std::vector<SparseMatrix> boundaries);

  std::size_t top_dim() const noexcept { return cells_.size() - 1; }
  std::size_t cell_count(std::size_t d) const;
  const std::vector<std::string>& cells(std::size_t d) const;
  const std::string& cell_id(std::size_t d, std::size_t index) const;

  std::optional<std::size_t> find_cell(std::size_t d, std::string_view id) const;
  // Throws unknown_cell when absent.
  std::size_t cell_index(std::size_t d, std::string_view id) const;

  // Boundary matrix out of dimension d, 1 <= d <= top_dim.
  const SparseMatrix& boundary_matrix(std::size_t d) const;

  // Throws when c's dimension or cell indices do not fit this complex.
  void validate(const Chain& c) const;

  Chain make_chain(std::size_t d,
                   const std::vector<std::pair<std::string, Integer>>& terms) const;
  std::vector<std::pair<std::string, Integer>> named_terms(const Chain& c) const;

  Integer euler_characteristic() const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    return a.cells_ == b.cells_ && a.boundaries_ == b.boundaries_;
  }

 private:
  std::vector<std::vector<std::string>> cells_;
  std::vector<SparseMatrix> boundaries_;
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
};

// Applies the boundary map out of c.dim(). Requires 1 <= c.dim() <= top_dim.
Chain boundary(const ChainComplex& cc, const Chain& c);

}  // namespace fillscope
