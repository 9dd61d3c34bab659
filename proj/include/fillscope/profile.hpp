#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fillscope/chain_complex.hpp"
#include "fillscope/filling.hpp"
#include "fillscope/integer.hpp"

namespace fillscope {

// A natural number or infinity; infinity orders above every natural.
struct ExtendedNatural {
  bool infinite = false;
  Integer value = 0;

  static ExtendedNatural infinity() { return {true, 0}; }

  friend bool operator==(const ExtendedNatural& a, const ExtendedNatural& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<(const ExtendedNatural& a, const ExtendedNatural& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
};

std::string to_string(const ExtendedNatural& v);

enum class EntryStatus { exact, lower_bound };
const char* to_string(EntryStatus status) noexcept;

struct ProfileEntry {
  ExtendedNatural value;
  EntryStatus status = EntryStatus::exact;

  friend bool operator==(const ProfileEntry& a, const ProfileEntry& b) {
    return a.value == b.value && a.status == b.status;
  }
};

// A sampled isoperimetric function n -> value for n = 0..n_max.
struct ProfileTable {
  std::vector<ProfileEntry> entries;
  std::string source;
  std::size_t dimension = 0;
  std::map<std::string, std::string> budgets;
  std::vector<std::string> caveats;

  std::size_t n_max() const { return entries.empty() ? 0 : entries.size() - 1; }
  bool all_exact() const;
  // Integer-valued table with every entry exact.
  static ProfileTable from_values(const std::vector<long>& values);
};

struct ProfileBudget {
  FillBudget fill;
  std::size_t max_candidates = 5'000'000;
};

// Chain profile in dimension q: for each n <= n_max, the supremum of the
// filling volume over boundaries of q-chains with norm at most n (0 when only
// the zero chain qualifies).
ProfileTable chain_profile(const ChainComplex& cc, std::size_t q, std::size_t n_max,
                           const ProfileBudget& budget = {});

// The boundaries of norm 1..n_max enumerated by chain_profile, up to sign:
// nonzero (q-1)-chains supported on rows of the boundary map, with vanishing
// boundary when q >= 2, that are in the integer image of the boundary map.
std::vector<Chain> boundary_candidates(const ChainComplex& cc, std::size_t q,
                                       std::size_t n_max,
                                       std::size_t max_candidates = 5'000'000,
                                       bool* complete = nullptr);

}  // namespace fillscope
