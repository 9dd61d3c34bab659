#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fillscope/chain_complex.hpp"
#include "fillscope/integer.hpp"
#include "fillscope/smith.hpp"

namespace fillscope {

enum class FillStatus { exact, lower_bound, infinite };

const char* to_string(FillStatus status) noexcept;

// Outcome of a chain filling computation.
//  - exact: value is the least L1 norm of a filling; witness attains it.
//  - lower_bound: no filling of norm < value exists; the search budget ran out.
//  - infinite: c is not in the integer image of the boundary map.
struct FillResult {
  FillStatus status = FillStatus::infinite;
  Integer value = 0;
  std::optional<Chain> witness;
  std::size_t nodes = 0;  // branch-and-bound nodes processed
};

struct FillBudget {
  std::size_t node_limit = 20000;
};

// Least-norm integer filling of a fixed (q-1)-chain by q-chains. Holds the
// Smith decomposition and the reduced LP system for one boundary map, so many
// chains can be filled against the same complex cheaply.
class FillSolver {
 public:
  FillSolver(const ChainComplex& cc, std::size_t q);

  std::size_t dimension() const noexcept { return q_; }
  const LatticeSolver& lattice() const noexcept { return lattice_; }

  bool is_boundary(const Chain& c) const;
  FillResult solve(const Chain& c, const FillBudget& budget = {}) const;

 private:
  void check_chain(const Chain& c) const;

  const ChainComplex* cc_;
  std::size_t q_;
  IntMatrix boundary_;
  LatticeSolver lattice_;
  std::vector<std::size_t> active_;      // q-cells with a nonzero boundary
  std::vector<std::size_t> basis_rows_;  // independent (q-1)-cell rows
  std::vector<std::vector<Rational>> reduced_;  // boundary_ on basis_rows_ x active_
};

// Minimizes ||b||_1 over integer q-chains b with boundary(b) == c by exact
// branch and bound on b = p - m, p, m >= 0, after certifying membership of c
// in the integer image of the boundary map.
FillResult fill_volume(const ChainComplex& cc, std::size_t q, const Chain& c,
                       const FillBudget& budget = {});

// Independent oracle: enumerates every integer q-chain with norm at most
// norm_bound in order of increasing norm.
FillResult fill_volume_bruteforce(const ChainComplex& cc, std::size_t q,
                                  const Chain& c, std::size_t norm_bound);

// Calls f(values) for every integer vector of length n with L1 norm exactly
// `norm`, in a fixed deterministic order. Stops early when f returns false.
template <typename F>
bool for_each_vector_with_norm(std::size_t n, std::size_t norm, F&& f);

}  // namespace fillscope

#include "fillscope/detail/enumerate.hpp"
