#include "fillscope/word_dehn.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "fillscope/error.hpp"
#include "fillscope/parallel.hpp"

namespace fillscope {

const char* to_string(WordFillStatus status) noexcept {
  switch (status) {
    case WordFillStatus::exact:
      return "Exact";
    case WordFillStatus::lower_bound:
      return "LowerBound";
    case WordFillStatus::not_trivial_within_budget:
      return "NotTrivialWithinBudget";
  }
  return "unknown";
}

namespace {

IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.generator_count(), p.relators().size());
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (const Letter& l : p.relators()[i].letters()) m(l.generator, i) += l.sign;
  return m;
}

// Replaces the first `consumed` letters of `rotated` (which must equal the
// start of `relator_word`) by the inverse of the rest of `relator_word`.
Word rewrite(const Word& rotated, const Word& relator_word, std::size_t consumed) {
  const auto& r = relator_word.letters();
  const auto& w = rotated.letters();
  std::vector<Letter> out;
  out.reserve(r.size() - consumed + w.size() - consumed);
  for (std::size_t i = r.size(); i-- > consumed;) out.push_back(r[i].inverse());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(consumed), w.end());
  return Word(out).cyclic_normal_form();
}

}  // namespace

std::optional<Word> apply_step(const Presentation& p, const Word& state,
                               const RewriteStep& step) {
  if (step.relator >= p.relators().size()) return std::nullopt;
  Word relator = p.relators()[step.relator].cyclically_reduced();
  if (step.inverted) relator = relator.inverse();
  if (step.relator_rotation >= relator.length()) return std::nullopt;
  relator = relator.rotated(step.relator_rotation);
  if (step.consumed > relator.length() || step.consumed > state.length()) return std::nullopt;
  if (!state.empty() && step.word_rotation >= state.length()) return std::nullopt;
  const Word rotated = state.rotated(step.word_rotation);
  for (std::size_t i = 0; i < step.consumed; ++i)
    if (rotated.letters()[i] != relator.letters()[i]) return std::nullopt;
  return rewrite(rotated, relator, step.consumed);
}

bool replay_certificate(const Presentation& p, const Word& w,
                        const std::vector<RewriteStep>& certificate) {
  Word state = w.cyclic_normal_form();
  for (const RewriteStep& step : certificate) {
    auto next = apply_step(p, state, step);
    if (!next || *next != step.result) return false;
    state = std::move(*next);
  }
  return state.empty();
}

WordFiller::WordFiller(const Presentation& p) : p_(&p), lattice_(exponent_matrix(p)) {
  std::vector<Word> seen;
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    for (bool inverted : {false, true}) {
      // A relator and its cyclic reduction are conjugate, so moves use the
      // reduced form.
      Word base = p.relators()[r].cyclically_reduced();
      if (inverted) base = base.inverse();
      for (std::size_t k = 0; k < base.length(); ++k) {
        Word rotated = base.rotated(k);
        if (std::find(seen.begin(), seen.end(), rotated) != seen.end()) continue;
        seen.push_back(rotated);
        relator_words_.push_back({rotated, r, inverted, k});
      }
    }
    max_relator_len_ = std::max(max_relator_len_, p.relators()[r].cyclically_reduced().length());
  }
}

bool WordFiller::abelian_obstruction(const Word& w) const {
  p_->validate(w);
  IntVector sums(p_->generator_count());
  for (const Letter& l : w.letters()) sums[l.generator] += l.sign;
  return !lattice_.contains(sums);
}

FVWordResult WordFiller::fill(const Word& w, const WordLimits& limits) const {
  p_->validate(w);
  FVWordResult result;
  result.start = w.cyclic_normal_form();
  if (result.start.empty()) {
    result.status = WordFillStatus::exact;
    result.value = 0;
    result.unconditional = true;
    return result;
  }
  if (abelian_obstruction(w)) {
    result.status = WordFillStatus::not_trivial_within_budget;
    result.unconditional = true;
    result.caveats.push_back("exponent sums lie outside the relator lattice: not trivial");
    return result;
  }

  struct State {
    Word word;
    std::size_t parent;
    RewriteStep step;
  };
  std::vector<State> states{{result.start, 0, {}}};
  std::unordered_map<Word, std::size_t, WordHash> index{{result.start, 0}};
  std::vector<std::size_t> frontier{0};
  std::optional<std::size_t> goal;

  std::size_t cost = 0;
  while (cost < limits.max_cost && !goal) {
    std::vector<std::size_t> next;
    for (std::size_t id : frontier) {
      const Word current = states[id].word;
      const std::size_t len = current.length();
      for (std::size_t rot = 0; rot < len && !goal; ++rot) {
        const Word rotated = current.rotated(rot);
        for (const RelatorWord& rw : relator_words_) {
          const auto& rl = rw.word.letters();
          for (std::size_t k = 0; k <= rl.size() && k <= len; ++k) {
            if (k > 0 && rotated.letters()[k - 1] != rl[k - 1]) break;
            Word successor = rewrite(rotated, rw.word, k);
            if (successor.length() > limits.max_word_len) {
              result.cap_reached = true;
              continue;
            }
            if (index.count(successor)) continue;
            const std::size_t sid = states.size();
            index.emplace(successor, sid);
            RewriteStep step{rw.relator, rw.inverted, rw.rotation, rot, k, successor};
            const bool done = successor.empty();
            states.push_back({std::move(successor), id, std::move(step)});
            if (done) {
              goal = sid;
              break;
            }
            next.push_back(sid);
          }
          if (goal) break;
        }
      }
      if (goal) break;
    }
    ++cost;
    if (goal) break;
    if (next.empty()) {
      result.states_explored = states.size();
      result.status = WordFillStatus::not_trivial_within_budget;
      result.unconditional = !result.cap_reached;
      result.caveats.push_back(
          result.unconditional
              ? "every reachable word was explored without reaching the empty word: not trivial"
              : "search space within length cap " + std::to_string(limits.max_word_len) +
                    " exhausted; triviality undecided");
      return result;
    }
    frontier = std::move(next);
  }
  result.states_explored = states.size();

  // A cheaper filling would visit words of length at most
  // |start| + k * max_relator_len after k moves; if the cap admits all of
  // them the result does not depend on the cap.
  const std::size_t start_len = result.start.length();
  auto cap_covers = [&](std::size_t moves_before_last) {
    return limits.max_word_len >= start_len + moves_before_last * max_relator_len_;
  };

  if (goal) {
    result.status = WordFillStatus::exact;
    result.value = cost;
    for (std::size_t id = *goal; id != 0; id = states[id].parent)
      result.certificate.push_back(states[id].step);
    std::reverse(result.certificate.begin(), result.certificate.end());
    result.unconditional = !result.cap_reached || cost <= 1 || cap_covers(cost - 2);
    if (!replay_certificate(*p_, w, result.certificate) ||
        result.certificate.size() != result.value) {
      throw std::logic_error("filling certificate failed replay");
    }
    if (!result.unconditional) {
      result.caveats.push_back("optimal among rewrites with words of length <= " +
                               std::to_string(limits.max_word_len));
    }
    return result;
  }
  result.status = WordFillStatus::lower_bound;
  result.value = limits.max_cost + 1;
  result.unconditional =
      !result.cap_reached || limits.max_cost == 0 || cap_covers(limits.max_cost - 1);
  result.caveats.push_back(
      "no filling with at most " + std::to_string(limits.max_cost) +
      " relator applications" +
      (result.unconditional ? std::string()
                            : " among words of length <= " +
                                  std::to_string(limits.max_word_len)) +
      "; the word may also be nontrivial");
  return result;
}

FVWordResult filling_volume_word(const Presentation& p, const Word& w,
                                 const WordLimits& limits) {
  return WordFiller(p).fill(w, limits);
}

std::vector<Word> reduced_words(std::size_t generators, std::size_t n_max) {
  std::vector<Word> out{Word{}};
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= n_max; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : layer) {
      for (std::uint32_t g = 0; g < generators; ++g) {
        for (std::int8_t sign : {std::int8_t{1}, std::int8_t{-1}}) {
          const Letter l{g, sign};
          if (!prefix.empty() && prefix.back().cancels(l)) continue;
          auto word = prefix;
          word.push_back(l);
          next.push_back(std::move(word));
        }
      }
    }
    for (const auto& letters : next) out.emplace_back(letters);
    layer = std::move(next);
  }
  return out;
}

ProfileTable dehn_function(const Presentation& p, std::size_t n_max,
                           const WordLimits& limits) {
  const WordFiller filler(p);
  const std::vector<Word> words = reduced_words(p.generator_count(), n_max);

  // The filling volume is invariant under conjugation and inversion, and the
  // search treats a word and its inverse symmetrically, so one search per
  // class suffices.
  std::map<Word, std::size_t> class_of;
  std::vector<Word> representatives;
  std::vector<std::size_t> word_class(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    Word a = words[i].cyclic_normal_form();
    Word b = words[i].inverse().cyclic_normal_form();
    Word key = std::min(a, b);
    auto [it, inserted] = class_of.try_emplace(key, representatives.size());
    if (inserted) representatives.push_back(words[i]);
    word_class[i] = it->second;
  }
  std::vector<FVWordResult> results(representatives.size());
  parallel_for(representatives.size(),
               [&](std::size_t i) { results[i] = filler.fill(representatives[i], limits); });

  std::vector<std::size_t> best(n_max + 1, 0);
  std::vector<bool> undecided(n_max + 1, false);
  std::size_t undecided_words = 0, cap_relative = 0, trivial_words = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::size_t len = words[i].length();
    const FVWordResult& r = results[word_class[i]];
    switch (r.status) {
      case WordFillStatus::exact:
        best[len] = std::max(best[len], r.value);
        ++trivial_words;
        if (!r.unconditional) ++cap_relative;
        break;
      case WordFillStatus::lower_bound:
        undecided[len] = true;
        ++undecided_words;
        break;
      case WordFillStatus::not_trivial_within_budget:
        if (!r.unconditional) {
          undecided[len] = true;
          ++undecided_words;
        }
        break;
    }
  }

  ProfileTable table;
  table.dimension = 2;
  table.budgets["max_word_len"] = std::to_string(limits.max_word_len);
  table.budgets["max_cost"] = std::to_string(limits.max_cost);
  std::size_t running = 0;
  bool running_undecided = false;
  for (std::size_t n = 0; n <= n_max; ++n) {
    running = std::max(running, best[n]);
    running_undecided = running_undecided || undecided[n];
    table.entries.push_back({{false, Integer(static_cast<unsigned long>(running))},
                             running_undecided ? EntryStatus::lower_bound
                                               : EntryStatus::exact});
  }
  table.budgets["words_enumerated"] = std::to_string(words.size());
  table.budgets["words_proved_trivial"] = std::to_string(trivial_words);
  if (cap_relative > 0) {
    table.caveats.push_back(std::to_string(cap_relative) +
                            " filling volume(s) are optimal only among rewrites with "
                            "words of length <= " +
                            std::to_string(limits.max_word_len));
  }
  if (undecided_words > 0) {
    table.caveats.push_back(std::to_string(undecided_words) +
                            " word(s) undecided within limits; affected entries are "
                            "lower bounds");
  }
  return table;
}

}  // namespace fillscope
