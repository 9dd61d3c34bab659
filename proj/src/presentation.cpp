#include "fillscope/presentation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "fillscope/error.hpp"
#include "fillscope/smith.hpp"

namespace fillscope {

Word free_reduce(const std::vector<Letter>& letters) { return Word(letters); }

Word::Word(const std::vector<Letter>& letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    if (l.sign != 1 && l.sign != -1) {
      throw Error(ErrorKind::invalid_argument, "letter sign must be +1 or -1");
    }
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::inverse() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back(it->inverse());
  return out;
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo].cancels(letters_[hi - 1])) {
    ++lo;
    --hi;
  }
  Word out;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                      letters_.begin() + static_cast<std::ptrdiff_t>(hi));
  return out;
}

Word Word::rotated(std::size_t i) const {
  Word out;
  if (letters_.empty()) return out;
  i %= letters_.size();
  out.letters_.reserve(letters_.size());
  out.letters_.insert(out.letters_.end(), letters_.begin() + static_cast<std::ptrdiff_t>(i),
                      letters_.end());
  out.letters_.insert(out.letters_.end(), letters_.begin(),
                      letters_.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

Word Word::cyclic_normal_form() const {
  Word reduced = cyclically_reduced();
  const auto& l = reduced.letters_;
  const std::size_t n = l.size();
  std::size_t best = 0;
  for (std::size_t start = 1; start < n; ++start) {
    for (std::size_t k = 0; k < n; ++k) {
      const Letter& a = l[(start + k) % n];
      const Letter& b = l[(best + k) % n];
      if (a == b) continue;
      if (a < b) best = start;
      break;
    }
  }
  return reduced.rotated(best);
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> joined = a.letters_;
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return Word(joined);
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (const Letter& l : w.letters()) {
    h ^= (static_cast<std::size_t>(l.generator) << 1) | (l.sign > 0 ? 1U : 0U);
    h *= 1099511628211ULL;
  }
  return h;
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.empty()) {
      throw Error(ErrorKind::invariant_violation, "empty generator name");
    }
    if (!seen.insert(g).second) {
      throw Error(ErrorKind::invariant_violation, "duplicate generator '" + g + "'");
    }
  }
  for (std::size_t i = 0; i < relators_.size(); ++i) {
    if (relators_[i].empty()) {
      throw Error(ErrorKind::invariant_violation,
                  "relator " + std::to_string(i) + " is empty after free reduction");
    }
    validate(relators_[i]);
  }
}

std::optional<std::size_t> Presentation::find_generator(std::string_view name) const {
  auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

void Presentation::validate(const Word& w) const {
  for (const Letter& l : w.letters()) {
    if (l.generator >= generators_.size()) {
      throw Error(ErrorKind::unknown_generator,
                  "word uses generator index " + std::to_string(l.generator) +
                      " but the presentation has " +
                      std::to_string(generators_.size()) + " generators");
    }
  }
}

Word Presentation::parse_word(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string token;
  while (in >> token) {
    std::string name = token;
    long power = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      try {
        std::size_t used = 0;
        power = std::stol(token.substr(caret + 1), &used);
        if (used != token.size() - caret - 1) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw Error(ErrorKind::parse_error, "bad exponent in token '" + token + "'");
      }
    }
    auto g = find_generator(name);
    if (!g) {
      throw Error(ErrorKind::unknown_generator, "unknown generator '" + name + "'");
    }
    const Letter l{static_cast<std::uint32_t>(*g),
                   static_cast<std::int8_t>(power < 0 ? -1 : 1)};
    for (long k = 0; k < std::labs(power); ++k) letters.push_back(l);
  }
  return Word(letters);
}

std::string Presentation::format_word(const Word& w) const {
  validate(w);
  std::string out;
  const auto& l = w.letters();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    const long power = static_cast<long>(j - i) * l[i].sign;
    if (!out.empty()) out += ' ';
    out += generators_[l[i].generator];
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

Presentation edge_path_presentation(
    const SimplicialComplex& sc,
    const std::optional<std::set<std::pair<std::size_t, std::size_t>>>& tree) {
  if (!sc.is_connected()) {
    throw Error(ErrorKind::disconnected,
                "edge-path presentation needs a connected complex");
  }
  const std::size_t n = sc.vertex_count();
  std::set<std::pair<std::size_t, std::size_t>> tree_edges;
  if (tree) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [u, v] : *tree) {
      if (u > v) std::swap(u, v);
      if (!sc.find_simplex(Simplex{u, v})) {
        throw Error(ErrorKind::invalid_argument, "tree edge is not an edge of the complex");
      }
      std::size_t a = root(u), b = root(v);
      if (a == b) {
        throw Error(ErrorKind::invalid_argument, "tree edges contain a cycle");
      }
      parent[a] = b;
      tree_edges.emplace(u, v);
    }
    if (tree_edges.size() + 1 != n) {
      throw Error(ErrorKind::invalid_argument, "tree does not span the complex");
    }
  } else {
    std::vector<std::vector<std::size_t>> adjacent(n);
    for (const Simplex& e : sc.simplices(1)) {
      adjacent[e[0]].push_back(e[1]);
      adjacent[e[1]].push_back(e[0]);
    }
    for (auto& a : adjacent) std::sort(a.begin(), a.end());
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adjacent[u]) {
        if (seen[v]) continue;
        seen[v] = true;
        tree_edges.emplace(std::min(u, v), std::max(u, v));
        queue.push_back(v);
      }
    }
  }

  std::vector<std::string> generators;
  std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> generator_of;
  for (const Simplex& e : sc.simplices(1)) {
    if (tree_edges.count({e[0], e[1]})) continue;
    generator_of.emplace(std::make_pair(e[0], e[1]),
                         static_cast<std::uint32_t>(generators.size()));
    generators.push_back(sc.simplex_name(e));
  }
  std::vector<Word> relators;
  for (const Simplex& t : sc.simplices(2)) {
    std::vector<Letter> loop;
    auto step = [&](std::size_t a, std::size_t b, std::int8_t sign) {
      auto it = generator_of.find({a, b});
      if (it != generator_of.end()) loop.push_back(Letter{it->second, sign});
    };
    step(t[0], t[1], 1);
    step(t[1], t[2], 1);
    step(t[0], t[2], -1);
    Word relator = Word(loop).cyclically_reduced();
    if (!relator.empty()) relators.push_back(std::move(relator));
  }
  return Presentation(std::move(generators), std::move(relators));
}

ChainComplex presentation_complex(const Presentation& p) {
  std::vector<std::vector<std::string>> cells(3);
  cells[0] = {"*"};
  cells[1] = p.generators();
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    cells[2].push_back("r" + std::to_string(i));
  SparseMatrix d1(1, p.generator_count());
  SparseMatrix d2(p.generator_count(), p.relators().size());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    SparseMatrix::Column column;
    for (const Letter& l : p.relators()[i].letters())
      column.emplace_back(l.generator, l.sign);
    d2.set_column(i, std::move(column));
  }
  return ChainComplex(std::move(cells), {std::move(d1), std::move(d2)});
}

Chain abelianized_chain(const Presentation& p, const Word& w) {
  p.validate(w);
  Chain c(1);
  for (const Letter& l : w.letters()) c.add_term(l.generator, l.sign);
  return c;
}

std::size_t abelianization_rank(const Presentation& p) {
  IntMatrix m(p.generator_count(), p.relators().size());
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (const Letter& l : p.relators()[i].letters()) m(l.generator, i) += l.sign;
  return p.generator_count() - smith_normal_form(m).rank;
}

}  // namespace fillscope
