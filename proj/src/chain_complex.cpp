#include "fillscope/chain_complex.hpp"

#include <string>

#include "fillscope/error.hpp"

namespace fillscope {

Chain::Chain(std::size_t dim, Terms coeffs) : dim_(dim) {
  for (auto& [cell, value] : coeffs)
    if (value != 0) coeffs_.emplace(cell, std::move(value));
}

Chain Chain::from_dense(std::size_t dim, const IntVector& values) {
  Chain c(dim);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) c.coeffs_.emplace(i, values[i]);
  return c;
}

Integer Chain::coefficient(std::size_t cell) const {
  auto it = coeffs_.find(cell);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void Chain::add_term(std::size_t cell, const Integer& value) {
  if (value == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(cell, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) coeffs_.erase(it);
  }
}

IntVector Chain::to_dense(std::size_t n_cells) const {
  IntVector out(n_cells);
  for (const auto& [cell, value] : coeffs_) {
    if (cell >= n_cells) {
      throw Error(ErrorKind::unknown_cell,
                  "chain references cell index " + std::to_string(cell) +
                      " beyond " + std::to_string(n_cells) + " cells");
    }
    out[cell] = value;
  }
  return out;
}

Chain& Chain::operator+=(const Chain& other) {
  if (other.dim_ != dim_ && !other.is_zero() && !is_zero()) {
    throw Error(ErrorKind::dimension_mismatch, "adding chains of different dimension");
  }
  if (is_zero()) dim_ = other.dim_;
  for (const auto& [cell, value] : other.coeffs_) add_term(cell, value);
  return *this;
}

Chain& Chain::operator-=(const Chain& other) { return *this += -other; }

Chain Chain::operator-() const {
  Chain out(dim_);
  for (const auto& [cell, value] : coeffs_) out.coeffs_.emplace(cell, -value);
  return out;
}

Chain operator*(const Integer& k, const Chain& c) {
  Chain out(c.dim_);
  if (k == 0) return out;
  for (const auto& [cell, value] : c.coeffs_) out.coeffs_.emplace(cell, k * value);
  return out;
}

Integer l1_norm(const Chain& c) {
  Integer total = 0;
  for (const auto& [cell, value] : c.coeffs()) total += abs(value);
  return total;
}

ChainComplex::ChainComplex(std::vector<std::vector<std::string>> cells,
                           std::vector<SparseMatrix> boundaries)
    : cells_(std::move(cells)), boundaries_(std::move(boundaries)) {
  if (cells_.empty()) {
    throw Error(ErrorKind::invariant_violation, "complex has no dimensions");
  }
  if (boundaries_.size() != cells_.size() - 1) {
    throw Error(ErrorKind::invariant_violation,
                "expected " + std::to_string(cells_.size() - 1) +
                    " boundary maps, got " + std::to_string(boundaries_.size()));
  }
  index_.resize(cells_.size());
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    for (std::size_t i = 0; i < cells_[d].size(); ++i) {
      if (!index_[d].emplace(cells_[d][i], i).second) {
        throw Error(ErrorKind::invariant_violation,
                    "duplicate cell '" + cells_[d][i] + "' in dimension " +
                        std::to_string(d));
      }
    }
  }
  for (std::size_t d = 1; d < cells_.size(); ++d) {
    const SparseMatrix& m = boundaries_[d - 1];
    if (m.rows() != cells_[d - 1].size() || m.cols() != cells_[d].size()) {
      throw Error(ErrorKind::invariant_violation,
                  "boundary map out of dimension " + std::to_string(d) +
                      " has wrong shape");
    }
  }
  for (std::size_t d = 2; d < cells_.size(); ++d) {
    SparseMatrix composite = boundaries_[d - 2] * boundaries_[d - 1];
    for (std::size_t c = 0; c < composite.cols(); ++c) {
      if (!composite.column(c).empty()) {
        throw Error(ErrorKind::invariant_violation,
                    "boundary of boundary of cell '" + cells_[d][c] +
                        "' in dimension " + std::to_string(d) + " is nonzero");
      }
    }
  }
}

std::size_t ChainComplex::cell_count(std::size_t d) const {
  return d < cells_.size() ? cells_[d].size() : 0;
}

const std::vector<std::string>& ChainComplex::cells(std::size_t d) const {
  if (d >= cells_.size()) {
    throw Error(ErrorKind::dimension_out_of_range,
                "dimension " + std::to_string(d) + " exceeds top dimension " +
                    std::to_string(top_dim()));
  }
  return cells_[d];
}

const std::string& ChainComplex::cell_id(std::size_t d, std::size_t index) const {
  const auto& list = cells(d);
  if (index >= list.size()) {
    throw Error(ErrorKind::unknown_cell, "no cell with index " +
                                             std::to_string(index) +
                                             " in dimension " + std::to_string(d));
  }
  return list[index];
}

std::optional<std::size_t> ChainComplex::find_cell(std::size_t d,
                                                   std::string_view id) const {
  if (d >= index_.size()) return std::nullopt;
  auto it = index_[d].find(std::string(id));
  if (it == index_[d].end()) return std::nullopt;
  return it->second;
}

std::size_t ChainComplex::cell_index(std::size_t d, std::string_view id) const {
  if (d >= index_.size()) {
    throw Error(ErrorKind::dimension_out_of_range,
                "dimension " + std::to_string(d) + " exceeds top dimension " +
                    std::to_string(top_dim()));
  }
  if (auto found = find_cell(d, id)) return *found;
  throw Error(ErrorKind::unknown_cell, "unknown cell '" + std::string(id) +
                                           "' in dimension " + std::to_string(d));
}

const SparseMatrix& ChainComplex::boundary_matrix(std::size_t d) const {
  if (d == 0 || d > top_dim()) {
    throw Error(ErrorKind::dimension_out_of_range,
                "no boundary map out of dimension " + std::to_string(d) +
                    " (top dimension " + std::to_string(top_dim()) + ")");
  }
  return boundaries_[d - 1];
}

void ChainComplex::validate(const Chain& c) const {
  if (c.dim() > top_dim()) {
    throw Error(ErrorKind::dimension_out_of_range,
                "chain dimension " + std::to_string(c.dim()) +
                    " exceeds top dimension " + std::to_string(top_dim()));
  }
  if (!c.is_zero() && c.coeffs().rbegin()->first >= cell_count(c.dim())) {
    throw Error(ErrorKind::unknown_cell,
                "chain references cell index " +
                    std::to_string(c.coeffs().rbegin()->first) +
                    " not present in dimension " + std::to_string(c.dim()));
  }
}

Chain ChainComplex::make_chain(
    std::size_t d,
    const std::vector<std::pair<std::string, Integer>>& terms) const {
  Chain c(d);
  for (const auto& [id, value] : terms) c.add_term(cell_index(d, id), value);
  return c;
}

std::vector<std::pair<std::string, Integer>> ChainComplex::named_terms(
    const Chain& c) const {
  validate(c);
  std::vector<std::pair<std::string, Integer>> out;
  for (const auto& [cell, value] : c.coeffs())
    out.emplace_back(cells_[c.dim()][cell], value);
  return out;
}

Integer ChainComplex::euler_characteristic() const {
  Integer chi = 0;
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    if (d % 2 == 0)
      chi += static_cast<unsigned long>(cells_[d].size());
    else
      chi -= static_cast<unsigned long>(cells_[d].size());
  }
  return chi;
}

Chain boundary(const ChainComplex& cc, const Chain& c) {
  if (c.dim() == 0 || c.dim() > cc.top_dim()) {
    throw Error(ErrorKind::dimension_out_of_range,
                "boundary of a " + std::to_string(c.dim()) +
                    "-chain is undefined in a complex of top dimension " +
                    std::to_string(cc.top_dim()));
  }
  cc.validate(c);
  const SparseMatrix& m = cc.boundary_matrix(c.dim());
  Chain out(c.dim() - 1);
  for (const auto& [cell, value] : c.coeffs())
    for (const auto& [row, entry] : m.column(cell)) out.add_term(row, entry * value);
  return out;
}

}  // namespace fillscope
