#include "fillscope/filling.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "fillscope/error.hpp"
#include "fillscope/exact_lp.hpp"

namespace fillscope {

const char* to_string(FillStatus status) noexcept {
  switch (status) {
    case FillStatus::exact:
      return "Exact";
    case FillStatus::lower_bound:
      return "LowerBound";
    case FillStatus::infinite:
      return "Infinite";
  }
  return "unknown";
}

namespace {

void check_dimension(const ChainComplex& cc, std::size_t q) {
  if (q == 0 || q > cc.top_dim()) {
    throw Error(ErrorKind::dimension_out_of_range,
                "filling dimension " + std::to_string(q) + " outside [1, " +
                    std::to_string(cc.top_dim()) + "]");
  }
}

// Indices of a maximal linearly independent subset of the rows of m
// (restricted to `cols`), found by exact elimination in row order.
std::vector<std::size_t> independent_rows(const IntMatrix& m,
                                          const std::vector<std::size_t>& cols) {
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Rational> row(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) row[j] = m(r, cols[j]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational factor = row[pivots[b]];
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (basis[b][j] != 0) row[j] -= factor * basis[b][j];
    }
    std::size_t pivot = 0;
    while (pivot < cols.size() && row[pivot] == 0) ++pivot;
    if (pivot == cols.size()) continue;
    const Rational inv = 1 / row[pivot];
    for (auto& v : row) v *= inv;
    basis.push_back(std::move(row));
    pivots.push_back(pivot);
    chosen.push_back(r);
  }
  return chosen;
}

struct Node {
  std::vector<Integer> lo;
  std::vector<std::optional<Integer>> hi;
  std::vector<Rational> x;
  Rational value;
};

bool all_integral(const std::vector<Rational>& x) {
  for (const auto& v : x)
    if (!is_integral(v)) return false;
  return true;
}

// Most fractional variable; ties go to the lowest index, which is the lowest
// cell index since variables are laid out as (p_0, m_0, p_1, m_1, ...).
std::size_t branching_variable(const std::vector<Rational>& x) {
  std::optional<std::size_t> best;
  Rational best_distance;
  const Rational half(1, 2);
  for (std::size_t v = 0; v < x.size(); ++v) {
    Rational frac = x[v] - Rational(floor_of(x[v]));
    if (frac == 0) continue;
    Rational distance = abs(frac - half);
    if (!best || distance < best_distance) {
      best = v;
      best_distance = distance;
    }
  }
  return *best;
}

}  // namespace

FillSolver::FillSolver(const ChainComplex& cc, std::size_t q)
    : cc_(&cc),
      q_((check_dimension(cc, q), q)),
      boundary_(cc.boundary_matrix(q).to_dense()),
      lattice_(boundary_) {
  const SparseMatrix& sparse = cc.boundary_matrix(q);
  for (std::size_t j = 0; j < sparse.cols(); ++j)
    if (!sparse.column(j).empty()) active_.push_back(j);
  basis_rows_ = independent_rows(boundary_, active_);
  for (std::size_t r : basis_rows_) {
    std::vector<Rational> row(active_.size());
    for (std::size_t j = 0; j < active_.size(); ++j) row[j] = boundary_(r, active_[j]);
    reduced_.push_back(std::move(row));
  }
}

void FillSolver::check_chain(const Chain& c) const {
  if (c.dim() + 1 != q_) {
    throw Error(ErrorKind::dimension_mismatch,
                "filling in dimension " + std::to_string(q_) + " needs a " +
                    std::to_string(q_ - 1) + "-chain, got a " +
                    std::to_string(c.dim()) + "-chain");
  }
  cc_->validate(c);
}

bool FillSolver::is_boundary(const Chain& c) const {
  check_chain(c);
  return lattice_.contains(c.to_dense(boundary_.rows()));
}

FillResult FillSolver::solve(const Chain& c, const FillBudget& budget) const {
  check_chain(c);
  FillResult result;
  if (c.is_zero()) {
    result.status = FillStatus::exact;
    result.value = 0;
    result.witness = Chain(q_);
    return result;
  }
  const IntVector target = c.to_dense(boundary_.rows());
  auto particular = lattice_.solve(target);
  if (!particular) {
    result.status = FillStatus::infinite;
    return result;
  }

  const std::size_t k = active_.size();
  const std::size_t nvars = 2 * k;
  std::vector<Rational> rhs(basis_rows_.size());
  for (std::size_t i = 0; i < basis_rows_.size(); ++i) rhs[i] = target[basis_rows_[i]];

  // Incumbent from the lattice solution; zero columns contribute nothing.
  std::vector<Integer> incumbent(k);
  Integer incumbent_norm = 0;
  for (std::size_t j = 0; j < k; ++j) {
    incumbent[j] = (*particular)[active_[j]];
    incumbent_norm += abs(incumbent[j]);
  }

  auto solve_node = [&](Node& node) -> bool {
    std::vector<std::size_t> bounded;
    for (std::size_t v = 0; v < nvars; ++v) {
      if (!node.hi[v]) continue;
      if (*node.hi[v] < node.lo[v]) return false;
      bounded.push_back(v);
    }
    const std::size_t cols = nvars + bounded.size();
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < reduced_.size(); ++i) {
      std::vector<Rational> row(cols, 0);
      Rational shifted = rhs[i];
      for (std::size_t j = 0; j < k; ++j) {
        const Rational& a = reduced_[i][j];
        if (a == 0) continue;
        row[2 * j] = a;
        row[2 * j + 1] = -a;
        shifted -= a * Rational(node.lo[2 * j] - node.lo[2 * j + 1]);
      }
      A.push_back(std::move(row));
      b.push_back(std::move(shifted));
    }
    for (std::size_t s = 0; s < bounded.size(); ++s) {
      std::vector<Rational> row(cols, 0);
      row[bounded[s]] = 1;
      row[nvars + s] = 1;
      A.push_back(std::move(row));
      b.emplace_back(*node.hi[bounded[s]] - node.lo[bounded[s]]);
    }
    std::vector<Rational> cost(cols, 0);
    for (std::size_t v = 0; v < nvars; ++v) cost[v] = 1;
    LpResult lp = solve_standard_lp(A, b, cost);
    if (lp.status != LpStatus::optimal) return false;
    node.x.assign(nvars, 0);
    node.value = lp.objective;
    for (std::size_t v = 0; v < nvars; ++v) {
      node.x[v] = lp.x[v] + Rational(node.lo[v]);
      node.value += node.lo[v];
    }
    return true;
  };

  auto accept_integral = [&](const Node& node) {
    Integer norm = floor_of(node.value);
    if (norm < incumbent_norm) {
      incumbent_norm = norm;
      for (std::size_t j = 0; j < k; ++j)
        incumbent[j] = node.x[2 * j].get_num() - node.x[2 * j + 1].get_num();
    }
  };

  std::map<std::pair<Integer, std::size_t>, Node> open;
  std::size_t sequence = 0;
  bool budget_hit = false;
  Integer proved_bound = incumbent_norm;

  Node root{std::vector<Integer>(nvars, 0), std::vector<std::optional<Integer>>(nvars),
            {}, 0};
  if (!solve_node(root)) {
    throw std::logic_error("LP relaxation infeasible for a lattice-feasible chain");
  }
  if (all_integral(root.x)) {
    accept_integral(root);
  } else if (ceil_of(root.value) < incumbent_norm) {
    Integer bound = ceil_of(root.value);
    open.emplace(std::make_pair(bound, sequence++), std::move(root));
  }

  std::size_t processed = 0;
  while (!open.empty()) {
    auto best = open.begin();
    if (best->first.first >= incumbent_norm) break;
    if (processed >= budget.node_limit) {
      budget_hit = true;
      proved_bound = best->first.first;
      break;
    }
    Node node = std::move(best->second);
    open.erase(best);
    ++processed;

    const std::size_t v = branching_variable(node.x);
    Node down{node.lo, node.hi, {}, 0};
    down.hi[v] = floor_of(node.x[v]);
    Node up{node.lo, node.hi, {}, 0};
    up.lo[v] = ceil_of(node.x[v]);
    for (Node* child : {&down, &up}) {
      if (!solve_node(*child)) continue;
      if (all_integral(child->x)) {
        accept_integral(*child);
        continue;
      }
      Integer bound = ceil_of(child->value);
      if (bound < incumbent_norm)
        open.emplace(std::make_pair(std::move(bound), sequence++), std::move(*child));
    }
  }
  result.nodes = processed;

  if (budget_hit && proved_bound < incumbent_norm) {
    result.status = FillStatus::lower_bound;
    result.value = proved_bound;
    return result;
  }
  result.status = FillStatus::exact;
  result.value = incumbent_norm;
  Chain witness(q_);
  for (std::size_t j = 0; j < k; ++j) witness.add_term(active_[j], incumbent[j]);
  if (boundary(*cc_, witness) != c || l1_norm(witness) != result.value) {
    throw std::logic_error("filling witness failed verification");
  }
  result.witness = std::move(witness);
  return result;
}

FillResult fill_volume(const ChainComplex& cc, std::size_t q, const Chain& c,
                       const FillBudget& budget) {
  return FillSolver(cc, q).solve(c, budget);
}

FillResult fill_volume_bruteforce(const ChainComplex& cc, std::size_t q,
                                  const Chain& c, std::size_t norm_bound) {
  check_dimension(cc, q);
  if (c.dim() + 1 != q) {
    throw Error(ErrorKind::dimension_mismatch,
                "filling in dimension " + std::to_string(q) + " needs a " +
                    std::to_string(q - 1) + "-chain");
  }
  cc.validate(c);
  const SparseMatrix& bd = cc.boundary_matrix(q);
  const IntVector target = c.to_dense(bd.rows());
  FillResult result;
  if (!solve_integer(bd.to_dense(), target)) {
    result.status = FillStatus::infinite;
    return result;
  }
  for (std::size_t norm = 0; norm <= norm_bound; ++norm) {
    std::optional<Chain> found;
    for_each_vector_with_norm(bd.cols(), norm, [&](const std::vector<long>& b) {
      IntVector image(bd.rows());
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0) continue;
        for (const auto& [row, entry] : bd.column(j)) image[row] += entry * b[j];
      }
      if (image != target) return true;
      Chain witness(q);
      for (std::size_t j = 0; j < b.size(); ++j) witness.add_term(j, b[j]);
      found = std::move(witness);
      return false;
    });
    if (found) {
      result.status = FillStatus::exact;
      result.value = static_cast<unsigned long>(norm);
      result.witness = std::move(found);
      return result;
    }
  }
  result.status = FillStatus::lower_bound;
  result.value = static_cast<unsigned long>(norm_bound + 1);
  return result;
}

}  // namespace fillscope
