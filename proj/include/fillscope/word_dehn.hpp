#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fillscope/presentation.hpp"
#include "fillscope/profile.hpp"
#include "fillscope/smith.hpp"

namespace fillscope {

struct WordLimits {
  std::size_t max_word_len = 16;  // cap on intermediate (cyclic) word length
  std::size_t max_cost = 16;      // number of relator applications explored
};

enum class WordFillStatus { exact, lower_bound, not_trivial_within_budget };
const char* to_string(WordFillStatus status) noexcept;

// One relator application on a cyclic word. The current word is rotated to
// start at `word_rotation`; the applied relator word is rotation
// `relator_rotation` of relator `relator` (inverted if `inverted`); its first
// `consumed` letters match the start of the rotated word and are replaced by
// the inverse of its remaining letters. `result` is the cyclic normal form
// after free and cyclic reduction.
struct RewriteStep {
  std::size_t relator = 0;
  bool inverted = false;
  std::size_t relator_rotation = 0;
  std::size_t word_rotation = 0;
  std::size_t consumed = 0;
  Word result;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

struct FVWordResult {
  WordFillStatus status = WordFillStatus::not_trivial_within_budget;
  std::size_t value = 0;
  Word start;  // cyclic normal form of the input, where the certificate begins
  std::vector<RewriteStep> certificate;  // present iff exact
  // exact / lower_bound: the value also holds without the length cap.
  // not_trivial_within_budget: the word is proved nontrivial.
  bool unconditional = false;
  bool cap_reached = false;
  std::size_t states_explored = 0;
  std::vector<std::string> caveats;
};

// Applies one step to a cyclic word; nullopt if the step does not match.
std::optional<Word> apply_step(const Presentation& p, const Word& state,
                               const RewriteStep& step);

// Replays a certificate from w's cyclic normal form. True iff every step
// matches, each recorded result is reproduced, and the final word is empty.
bool replay_certificate(const Presentation& p, const Word& w,
                        const std::vector<RewriteStep>& certificate);

// Uniform-cost search for the filling volume of one word. Caches the relator
// rotations and the exponent-sum lattice of a presentation.
class WordFiller {
 public:
  explicit WordFiller(const Presentation& p);

  const Presentation& presentation() const noexcept { return *p_; }
  // True when w's exponent sums lie outside the relator lattice, which
  // proves w is not trivial.
  bool abelian_obstruction(const Word& w) const;
  FVWordResult fill(const Word& w, const WordLimits& limits) const;

 private:
  struct RelatorWord {
    Word word;
    std::size_t relator;
    bool inverted;
    std::size_t rotation;
  };

  const Presentation* p_;
  std::vector<RelatorWord> relator_words_;
  std::size_t max_relator_len_ = 0;
  LatticeSolver lattice_;
};

FVWordResult filling_volume_word(const Presentation& p, const Word& w,
                                 const WordLimits& limits = {});

// Reduced words of length <= n_max, in order of length then letters.
std::vector<Word> reduced_words(std::size_t generators, std::size_t n_max);

// Dehn function sampled at n = 0..n_max. Words proved trivial contribute their
// filling volume; undecided words make the affected entries lower bounds.
ProfileTable dehn_function(const Presentation& p, std::size_t n_max,
                           const WordLimits& limits = {});

}  // namespace fillscope
