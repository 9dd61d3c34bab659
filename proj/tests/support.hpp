#pragma once

// Shared helpers for the unit and acceptance tests: seeded random complexes
// and oracles that avoid the production code paths they check.

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "fillscope/chain_complex.hpp"
#include "fillscope/presentation.hpp"
#include "fillscope/simplicial.hpp"

namespace fillscope::testing {

// Random simplicial complex with at most `max_cells` simplices per dimension,
// up to dimension 2.
inline SimplicialComplex random_simplicial(std::mt19937& rng, std::size_t max_cells = 8) {
  for (;;) {
    std::uniform_int_distribution<std::size_t> nv(3, 6);
    const std::size_t n = nv(rng);
    std::vector<Simplex> gens;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> tri_count(0, 3), edge_count(0, 4);
    auto distinct = [&](std::size_t k) {
      std::set<std::size_t> s;
      while (s.size() < k) s.insert(pick(rng));
      return Simplex(s.begin(), s.end());
    };
    for (int i = tri_count(rng); i > 0; --i) gens.push_back(distinct(3));
    for (int i = edge_count(rng); i > 0; --i) gens.push_back(distinct(2));
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    SimplicialComplex sc(names, gens);
    bool fits = true;
    for (std::size_t c : sc.counts()) fits = fits && c <= max_cells;
    if (fits && sc.dim() >= 1) return sc;
  }
}

// Chain complex of a random simplicial complex with random cell orientation
// flips and each boundary map scaled by 1 or 2, so entries lie in [-2, 2] and
// the composite of consecutive maps stays zero.
inline ChainComplex random_complex(std::mt19937& rng) {
  const ChainComplex base = to_chain_complex(random_simplicial(rng));
  std::vector<std::vector<std::string>> cells;
  std::vector<std::vector<int>> flip;
  std::uniform_int_distribution<int> coin(0, 1);
  for (std::size_t d = 0; d <= base.top_dim(); ++d) {
    cells.push_back(base.cells(d));
    flip.emplace_back();
    for (std::size_t i = 0; i < base.cell_count(d); ++i) flip.back().push_back(coin(rng) ? -1 : 1);
  }
  std::vector<SparseMatrix> maps;
  for (std::size_t d = 1; d <= base.top_dim(); ++d) {
    const SparseMatrix& m = base.boundary_matrix(d);
    const int scale = coin(rng) ? 2 : 1;
    SparseMatrix out(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      SparseMatrix::Column col;
      for (const auto& [r, v] : m.column(j))
        col.emplace_back(r, Integer(v * (scale * flip[d - 1][r] * flip[d][j])));
      out.set_column(j, std::move(col));
    }
    maps.push_back(std::move(out));
  }
  return ChainComplex(std::move(cells), std::move(maps));
}

inline Chain random_chain(std::mt19937& rng, std::size_t dim, std::size_t n_cells, int max_abs,
                          std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> cell(0, n_cells - 1), terms(1, max_terms);
  std::uniform_int_distribution<int> coef(-max_abs, max_abs);
  Chain c(dim);
  if (n_cells == 0) return c;
  for (std::size_t i = terms(rng); i > 0; --i) c.add_term(cell(rng), coef(rng));
  return c;
}

// Dense boundary image computed by hand from the sparse columns.
inline IntVector apply_boundary(const ChainComplex& cc, std::size_t q, const std::vector<long>& b) {
  const SparseMatrix& m = cc.boundary_matrix(q);
  IntVector out(m.rows());
  for (std::size_t j = 0; j < b.size(); ++j)
    for (const auto& [r, v] : m.column(j)) out[r] += v * b[j];
  return out;
}

// Calls f on every integer vector of length n with entries in [-k, k].
template <typename F>
void for_each_box_vector(std::size_t n, long k, F&& f) {
  std::vector<long> v(n, -k);
  if (n == 0) {
    f(v);
    return;
  }
  for (;;) {
    f(v);
    std::size_t i = 0;
    while (i < n && v[i] == k) v[i++] = -k;
    if (i == n) return;
    ++v[i];
  }
}

inline long l1(const std::vector<long>& v) {
  long s = 0;
  for (long x : v) s += std::labs(x);
  return s;
}

// Chain profile by exhaustive enumeration of q-chains with entries in
// [-k, k]: for each boundary reached, the least norm of a chain reaching it,
// then the prefix maximum over boundary norms. Exact whenever every boundary
// of norm <= n_max has a minimal filling inside the box.
inline std::vector<long> profile_by_enumeration(const ChainComplex& cc, std::size_t q,
                                                std::size_t n_max, long k) {
  std::map<IntVector, long> least;
  for_each_box_vector(cc.cell_count(q), k, [&](const std::vector<long>& b) {
    IntVector c = apply_boundary(cc, q, b);
    const long norm = l1(b);
    auto [it, inserted] = least.emplace(std::move(c), norm);
    if (!inserted) it->second = std::min(it->second, norm);
  });
  std::vector<long> best(n_max + 1, 0);
  for (const auto& [c, fv] : least) {
    Integer norm = 0;
    for (const auto& x : c) norm += abs(x);
    if (norm <= static_cast<unsigned long>(n_max)) {
      auto& slot = best[norm.get_ui()];
      slot = std::max(slot, fv);
    }
  }
  for (std::size_t n = 1; n <= n_max; ++n) best[n] = std::max(best[n], best[n - 1]);
  return best;
}

// Filling volume by breadth-first search over linear words, applying the
// moves literally: replace a subword s by t^-1 whenever s t is a cyclic
// rotation of a relator or its inverse, then reduce freely. Returns -1 when
// the empty word is not reached within max_cost moves.
inline long word_fv_oracle(const Presentation& p, const Word& w, std::size_t max_len,
                           std::size_t max_cost) {
  std::vector<std::vector<Letter>> rels;
  for (const Word& r : p.relators()) {
    for (const Word& base : {r, r.inverse()}) {
      const auto& l = base.letters();
      for (std::size_t k = 0; k < l.size(); ++k) {
        std::vector<Letter> rot(l.begin() + static_cast<long>(k), l.end());
        rot.insert(rot.end(), l.begin(), l.begin() + static_cast<long>(k));
        rels.push_back(rot);
      }
    }
  }
  std::map<std::vector<Letter>, long> dist{{w.letters(), 0}};
  std::deque<std::vector<Letter>> queue{w.letters()};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    const long d = dist[cur];
    if (cur.empty()) return d;
    if (static_cast<std::size_t>(d) >= max_cost) continue;
    for (std::size_t i = 0; i <= cur.size(); ++i) {
      for (const auto& rel : rels) {
        for (std::size_t s = 0; s <= rel.size() && i + s <= cur.size(); ++s) {
          if (s > 0 && cur[i + s - 1] != rel[s - 1]) break;
          std::vector<Letter> next(cur.begin(), cur.begin() + static_cast<long>(i));
          for (std::size_t t = rel.size(); t-- > s;) next.push_back(rel[t].inverse());
          next.insert(next.end(), cur.begin() + static_cast<long>(i + s), cur.end());
          // Free reduction with a stack.
          std::vector<Letter> red;
          for (const Letter& l : next) {
            if (!red.empty() && red.back().cancels(l)) red.pop_back();
            else red.push_back(l);
          }
          if (red.size() > max_len) continue;
          if (dist.emplace(red, d + 1).second) queue.push_back(std::move(red));
        }
      }
    }
  }
  return -1;
}

}  // namespace fillscope::testing
