#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fillscope/integer.hpp"
#include "fillscope/profile.hpp"

namespace fillscope {

// Search space for f(x) <= A * g(B x) + C x + D. A is a closed range (the
// least feasible A is computed, then clamped up to a_min); B, C and D are
// explicit candidate lists tried in order B, then C, then D.
struct FitGrid {
  Rational a_min = 1;
  Rational a_max = 8;
  std::vector<Rational> b_values{1};
  std::vector<Rational> c_values{0};
  std::vector<Rational> d_values{0};

  // "A=1:8;B=1/2,1,2;C=0:8;D=0:8". For A, lo:hi is the range; for B, C and D
  // an integer range lo:hi expands to every integer in it.
  static FitGrid parse(std::string_view spec);
  std::string to_string() const;
};

struct QuasiFitWitness {
  Rational A, B, C, D;
  std::string direction;  // e.g. "f <= g"
};

struct QuasiFitOutcome {
  std::optional<QuasiFitWitness> witness;
  std::vector<std::size_t> samples_checked;
  std::vector<std::size_t> samples_excluded;  // floor(B x) beyond g's range
  std::vector<std::string> caveats;
};

// Looks for a witness that f is quasi-bounded by g at the sampled points
// x = 0..f.n_max(), using g(y) = g(floor(y)). Both tables must be exact.
QuasiFitOutcome quasi_bounded_fit(const ProfileTable& f, const ProfileTable& g,
                                  const FitGrid& grid);

// Re-checks a witness by substitution at every comparable sample.
bool verify_quasi_bound(const ProfileTable& f, const ProfileTable& g,
                        const QuasiFitWitness& w);

struct QuasiEquivalenceOutcome {
  QuasiFitOutcome forward;   // f <= g
  QuasiFitOutcome backward;  // g <= f
  bool equivalent() const { return forward.witness && backward.witness; }
};

QuasiEquivalenceOutcome quasi_equivalent_fit(const ProfileTable& f, const ProfileTable& g,
                                             const FitGrid& grid);

}  // namespace fillscope
