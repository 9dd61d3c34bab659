#include "fillscope/profile.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "fillscope/error.hpp"
#include "fillscope/parallel.hpp"
#include "fillscope/smith.hpp"

namespace fillscope {

std::string to_string(const ExtendedNatural& v) {
  return v.infinite ? std::string("inf") : v.value.get_str();
}

const char* to_string(EntryStatus status) noexcept {
  return status == EntryStatus::exact ? "Exact" : "LowerBound";
}

bool ProfileTable::all_exact() const {
  return std::all_of(entries.begin(), entries.end(), [](const ProfileEntry& e) {
    return e.status == EntryStatus::exact;
  });
}

ProfileTable ProfileTable::from_values(const std::vector<long>& values) {
  ProfileTable t;
  for (long v : values) t.entries.push_back({{false, Integer(v)}, EntryStatus::exact});
  return t;
}

namespace {

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) {
    throw Error(ErrorKind::invalid_argument,
                "boundary coefficient too large for candidate enumeration");
  }
  return v.get_si();
}

// Depth-first enumeration of (q-1)-chains on the support cells, pruned by the
// requirement that the chain be a cycle when q >= 2.
class CandidateEnumerator {
 public:
  CandidateEnumerator(const ChainComplex& cc, std::size_t q, std::size_t n_max,
                      std::size_t limit)
      : q_(q), n_max_(static_cast<long>(n_max)), limit_(limit) {
    const SparseMatrix& bd = cc.boundary_matrix(q);
    std::vector<bool> touched(bd.rows(), false);
    for (std::size_t j = 0; j < bd.cols(); ++j)
      for (const auto& [row, v] : bd.column(j)) touched[row] = true;
    for (std::size_t r = 0; r < bd.rows(); ++r)
      if (touched[r]) support_.push_back(r);

    const std::size_t n = support_.size();
    columns_.resize(n);
    closes_.resize(n);
    suffix_max_norm_.assign(n + 1, 0);
    if (q >= 2) {
      const SparseMatrix& lower = cc.boundary_matrix(q - 1);
      residual_.assign(lower.rows(), 0);
      std::vector<std::optional<std::size_t>> last(lower.rows());
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [row, v] : lower.column(support_[i])) {
          columns_[i].emplace_back(row, to_long(v));
          last[row] = i;
        }
      }
      for (std::size_t r = 0; r < lower.rows(); ++r)
        if (last[r]) closes_[*last[r]].push_back(r);
      for (std::size_t i = n; i-- > 0;) {
        long norm = 0;
        for (const auto& [row, v] : columns_[i]) norm += std::labs(v);
        suffix_max_norm_[i] = std::max(suffix_max_norm_[i + 1], norm);
      }
    }
    values_.assign(n, 0);
  }

  // Returns false if the candidate limit cut the enumeration short.
  template <typename F>
  bool run(F&& emit) {
    complete_ = true;
    count_ = 0;
    dfs(0, n_max_, false, emit);
    return complete_;
  }

  const std::vector<std::size_t>& support() const { return support_; }

 private:
  template <typename F>
  void dfs(std::size_t pos, long remaining, bool started, F& emit) {
    if (!complete_) return;
    if (residual_l1_ > remaining * suffix_max_norm_[pos]) return;
    if (pos == support_.size()) {
      if (!started || residual_l1_ != 0) return;
      if (++count_ > limit_) {
        complete_ = false;
        return;
      }
      Chain c(q_ - 1);
      for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] != 0) c.add_term(support_[i], values_[i]);
      emit(std::move(c));
      return;
    }
    for (long mag = 0; mag <= remaining; ++mag) {
      for (long sign : {1L, -1L}) {
        if (mag == 0 && sign < 0) break;
        // Sign symmetry: the first nonzero coefficient is positive.
        if (!started && sign < 0) continue;
        const long v = sign * mag;
        set(pos, v);
        bool closed_ok = true;
        for (std::size_t r : closes_[pos]) {
          if (residual_[r] != 0) {
            closed_ok = false;
            break;
          }
        }
        if (closed_ok) dfs(pos + 1, remaining - mag, started || v != 0, emit);
        set(pos, 0);
      }
    }
  }

  void set(std::size_t pos, long v) {
    const long delta = v - values_[pos];
    if (delta == 0) return;
    values_[pos] = v;
    for (const auto& [row, entry] : columns_[pos]) {
      long& r = residual_[row];
      residual_l1_ -= std::labs(r);
      r += delta * entry;
      residual_l1_ += std::labs(r);
    }
  }

  std::size_t q_;
  long n_max_;
  std::size_t limit_;
  std::vector<std::size_t> support_;
  std::vector<std::vector<std::pair<std::size_t, long>>> columns_;
  std::vector<std::vector<std::size_t>> closes_;
  std::vector<long> suffix_max_norm_;
  std::vector<long> residual_;
  long residual_l1_ = 0;
  std::vector<long> values_;
  bool complete_ = true;
  std::size_t count_ = 0;
};

}  // namespace

std::vector<Chain> boundary_candidates(const ChainComplex& cc, std::size_t q,
                                       std::size_t n_max, std::size_t max_candidates,
                                       bool* complete) {
  if (q == 0 || q > cc.top_dim()) {
    throw Error(ErrorKind::dimension_out_of_range,
                "profile dimension " + std::to_string(q) + " outside [1, " +
                    std::to_string(cc.top_dim()) + "]");
  }
  std::vector<Chain> out;
  bool finished = true;
  if (n_max > 0) {
    const LatticeSolver lattice(cc.boundary_matrix(q).to_dense());
    const std::size_t rows = cc.cell_count(q - 1);
    CandidateEnumerator enumerator(cc, q, n_max, max_candidates);
    finished = enumerator.run([&](Chain c) {
      if (lattice.contains(c.to_dense(rows))) out.push_back(std::move(c));
    });
  }
  if (complete) *complete = finished;
  return out;
}

ProfileTable chain_profile(const ChainComplex& cc, std::size_t q, std::size_t n_max,
                           const ProfileBudget& budget) {
  bool complete = true;
  std::vector<Chain> candidates =
      boundary_candidates(cc, q, n_max, budget.max_candidates, &complete);

  ProfileTable table;
  table.dimension = q;
  table.budgets["fill_node_limit"] = std::to_string(budget.fill.node_limit);
  table.budgets["max_candidates"] = std::to_string(budget.max_candidates);
  table.entries.assign(n_max + 1, ProfileEntry{});

  std::vector<FillResult> fills(candidates.size());
  if (!candidates.empty()) {
    const FillSolver solver(cc, q);
    parallel_for(candidates.size(),
                 [&](std::size_t i) { fills[i] = solver.solve(candidates[i], budget.fill); });
  }

  std::vector<Integer> best(n_max + 1, 0);
  std::vector<bool> partial(n_max + 1, false);
  std::size_t undecided = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::size_t norm = l1_norm(candidates[i]).get_ui();
    const FillResult& r = fills[i];
    if (r.status == FillStatus::infinite) {
      throw std::logic_error("admitted boundary candidate has no filling");
    }
    if (r.status == FillStatus::lower_bound) {
      partial[norm] = true;
      ++undecided;
    }
    if (r.value > best[norm]) best[norm] = r.value;
  }
  Integer running = 0;
  bool running_partial = false;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (best[n] > running) running = best[n];
    running_partial = running_partial || partial[n];
    const bool lower = running_partial || (!complete && n > 0);
    table.entries[n] = {{false, running},
                        lower ? EntryStatus::lower_bound : EntryStatus::exact};
  }
  if (undecided > 0) {
    table.caveats.push_back(std::to_string(undecided) +
                            " boundary chain(s) exhausted the fill budget of " +
                            std::to_string(budget.fill.node_limit) +
                            " nodes; affected entries are lower bounds");
  }
  if (!complete) {
    table.caveats.push_back("candidate enumeration stopped at " +
                            std::to_string(budget.max_candidates) +
                            " chains; entries for n >= 1 are lower bounds");
  }
  return table;
}

}  // namespace fillscope
