#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fillscope/chain_complex.hpp"
#include "fillscope/simplicial.hpp"

namespace fillscope {

struct Letter {
  std::uint32_t generator = 0;
  std::int8_t sign = 1;  // +1 or -1

  Letter inverse() const { return Letter{generator, static_cast<std::int8_t>(-sign)}; }
  bool cancels(const Letter& other) const {
    return generator == other.generator && sign == -other.sign;
  }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A freely reduced word in the free group on the generators.
class Word {
 public:
  Word() = default;
  // Reduces `letters` freely.
  explicit Word(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word cyclically_reduced() const;
  // Rotation starting at position i; only meaningful for cyclically reduced
  // words, for which the result stays reduced.
  Word rotated(std::size_t i) const;
  // Cyclic reduction followed by the least rotation.
  Word cyclic_normal_form() const;

  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

Word free_reduce(const std::vector<Letter>& letters);

class Presentation {
 public:
  Presentation() = default;
  // Relators must be nonempty and use only the listed generators.
  Presentation(std::vector<std::string> generators, std::vector<Word> relators);

  const std::vector<std::string>& generators() const noexcept { return generators_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  std::optional<std::size_t> find_generator(std::string_view name) const;

  // Throws unknown_generator when w uses a letter outside the generators.
  void validate(const Word& w) const;

  // Tokens separated by whitespace: "a", "a^-1", "a^3". The empty string is
  // the empty word.
  Word parse_word(std::string_view text) const;
  // Runs of one letter are written as powers.
  std::string format_word(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

// Generators are the edges outside a spanning tree (named by their edge cell),
// one relator per 2-simplex read around its boundary with tree edges deleted,
// then cyclically reduced; empty relators are dropped. Without `tree`, a BFS
// tree from the least vertex is used.
Presentation edge_path_presentation(
    const SimplicialComplex& sc,
    const std::optional<std::set<std::pair<std::size_t, std::size_t>>>& tree =
        std::nullopt);

// One 0-cell "*", a 1-cell per generator, a 2-cell "r<i>" per relator whose
// boundary is the relator's exponent-sum vector.
ChainComplex presentation_complex(const Presentation& p);

// Exponent-sum 1-chain of w on presentation_complex(p).
Chain abelianized_chain(const Presentation& p, const Word& w);

// Rank of the abelianization Z^gens / (exponent-sum lattice of relators).
std::size_t abelianization_rank(const Presentation& p);

}  // namespace fillscope
