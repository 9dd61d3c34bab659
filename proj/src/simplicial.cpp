#include "fillscope/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "fillscope/error.hpp"

namespace fillscope {

namespace {

void add_faces(const Simplex& s, std::vector<std::set<Simplex>>& by_dim) {
  // Each subset of s is a face; s has at most a handful of vertices here.
  const std::size_t n = s.size();
  if (n > 20) {
    throw Error(ErrorKind::invalid_argument, "simplex dimension too large");
  }
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) face.push_back(s[i]);
    const std::size_t d = face.size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    by_dim[d].insert(std::move(face));
  }
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     const std::vector<Simplex>& generators)
    : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second) {
      throw Error(ErrorKind::invariant_violation,
                  "duplicate vertex '" + vertices_[i] + "'");
    }
  }
  std::vector<std::set<Simplex>> by_dim(1);
  for (std::size_t v = 0; v < vertices_.size(); ++v) by_dim[0].insert(Simplex{v});
  for (Simplex s : generators) {
    if (s.empty()) {
      throw Error(ErrorKind::invariant_violation, "empty simplex");
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(ErrorKind::invariant_violation,
                  "simplex repeats a vertex: " + simplex_name(s));
    }
    if (s.back() >= vertices_.size()) {
      throw Error(ErrorKind::invariant_violation,
                  "simplex references vertex index " + std::to_string(s.back()) +
                      " beyond " + std::to_string(vertices_.size()) + " vertices");
    }
    add_faces(s, by_dim);
  }
  for (auto& level : by_dim) simplices_.emplace_back(level.begin(), level.end());
}

SimplicialComplex SimplicialComplex::from_named(
    std::vector<std::string> vertices,
    const std::vector<std::vector<std::string>>& generators) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<Simplex> simplices;
  for (const auto& named : generators) {
    Simplex s;
    for (const auto& id : named) {
      auto it = index.find(id);
      if (it == index.end()) {
        throw Error(ErrorKind::invariant_violation,
                    "simplex references unknown vertex '" + id + "'");
      }
      s.push_back(it->second);
    }
    simplices.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(vertices), simplices);
}

std::optional<std::size_t> SimplicialComplex::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t d) const {
  static const std::vector<Simplex> none;
  return d < simplices_.size() ? simplices_[d] : none;
}

std::vector<std::size_t> SimplicialComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : simplices_) out.push_back(level.size());
  return out;
}

std::optional<std::size_t> SimplicialComplex::find_simplex(const Simplex& s) const {
  if (s.empty() || s.size() > simplices_.size()) return std::nullopt;
  const auto& level = simplices_[s.size() - 1];
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::set<Simplex> non_maximal;
  for (std::size_t d = 1; d < simplices_.size(); ++d) {
    for (const Simplex& s : simplices_[d]) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        non_maximal.insert(std::move(face));
      }
    }
  }
  std::vector<Simplex> out;
  for (const auto& level : simplices_)
    for (const Simplex& s : level)
      if (!non_maximal.count(s)) out.push_back(s);
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t d = 0; d < simplices_.size(); ++d) {
    const long n = static_cast<long>(simplices_[d].size());
    chi += (d % 2 == 0) ? n : -n;
  }
  return chi;
}

std::vector<std::size_t> SimplicialComplex::component_labels() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const Simplex& e : simplices(1)) {
    std::size_t a = find_root(parent, e[0]);
    std::size_t b = find_root(parent, e[1]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> labels(vertices_.size());
  std::unordered_map<std::size_t, std::size_t> root_label;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    auto [it, inserted] = root_label.try_emplace(find_root(parent, v), root_label.size());
    labels[v] = it->second;
  }
  return labels;
}

std::size_t SimplicialComplex::component_count() const {
  auto labels = component_labels();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::string SimplicialComplex::simplex_name(const Simplex& s) const {
  auto vertex_name = [&](std::size_t v) {
    return v < vertices_.size() ? vertices_[v] : "#" + std::to_string(v);
  };
  if (s.size() == 1) return vertex_name(s[0]);
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += vertex_name(s[i]);
  }
  return out + "]";
}

ChainComplex to_chain_complex(const SimplicialComplex& sc) {
  std::vector<std::vector<std::string>> cells;
  std::vector<SparseMatrix> boundaries;
  for (std::size_t d = 0; d <= sc.dim(); ++d) {
    std::vector<std::string> names;
    for (const Simplex& s : sc.simplices(d)) names.push_back(sc.simplex_name(s));
    cells.push_back(std::move(names));
    if (d == 0) continue;
    SparseMatrix m(sc.count(d - 1), sc.count(d));
    const auto& level = sc.simplices(d);
    for (std::size_t j = 0; j < level.size(); ++j) {
      SparseMatrix::Column column;
      for (std::size_t i = 0; i < level[j].size(); ++i) {
        Simplex face = level[j];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        column.emplace_back(*sc.find_simplex(face), i % 2 == 0 ? 1 : -1);
      }
      m.set_column(j, std::move(column));
    }
    boundaries.push_back(std::move(m));
  }
  return ChainComplex(std::move(cells), std::move(boundaries));
}

SimplicialComplex barycentric_subdivide(const SimplicialComplex& sc) {
  // Barycenters in (dimension, lexicographic) order; this is the global
  // vertex order of the subdivision, so a flag is increasing by dimension.
  std::vector<std::string> names;
  std::map<Simplex, std::size_t> barycenter;
  for (std::size_t d = 0; d <= sc.dim(); ++d) {
    for (const Simplex& s : sc.simplices(d)) {
      barycenter.emplace(s, names.size());
      if (d == 0) {
        names.push_back(sc.vertices()[s[0]]);
      } else {
        std::string name = "(";
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i) name += ',';
          name += sc.vertices()[s[i]];
        }
        names.push_back(name + ")");
      }
    }
  }
  std::vector<Simplex> flags;
  for (const Simplex& top : sc.maximal_simplices()) {
    Simplex order = top;
    do {
      Simplex flag;
      Simplex prefix;
      for (std::size_t v : order) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        flag.push_back(barycenter.at(prefix));
      }
      flags.push_back(std::move(flag));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SimplicialComplex(std::move(names), flags);
}

PermutationAssignment::PermutationAssignment(std::size_t sheets) : sheets_(sheets) {
  if (sheets == 0) {
    throw Error(ErrorKind::invalid_argument, "a cover needs at least one sheet");
  }
}

void PermutationAssignment::assign(std::size_t u, std::size_t v, Permutation perm) {
  if (u == v) {
    throw Error(ErrorKind::inconsistent_assignment, "edge endpoints coincide");
  }
  if (perm.size() != sheets_) {
    throw Error(ErrorKind::inconsistent_assignment,
                "permutation has " + std::to_string(perm.size()) +
                    " entries, expected " + std::to_string(sheets_));
  }
  std::vector<bool> seen(sheets_, false);
  for (std::size_t s : perm) {
    if (s >= sheets_ || seen[s]) {
      throw Error(ErrorKind::inconsistent_assignment,
                  "assigned map is not a permutation of the sheets");
    }
    seen[s] = true;
  }
  if (u > v) {
    Permutation inverse(sheets_);
    for (std::size_t s = 0; s < sheets_; ++s) inverse[perm[s]] = s;
    perm = std::move(inverse);
    std::swap(u, v);
  }
  perms_[{u, v}] = std::move(perm);
}

const PermutationAssignment::Permutation* PermutationAssignment::find(std::size_t u,
                                                                      std::size_t v) const {
  auto it = perms_.find({std::min(u, v), std::max(u, v)});
  return it == perms_.end() ? nullptr : &it->second;
}

PermutationAssignment PermutationAssignment::trivial(const SimplicialComplex& sc,
                                                     std::size_t sheets) {
  PermutationAssignment pa(sheets);
  Permutation identity(sheets);
  std::iota(identity.begin(), identity.end(), 0);
  for (const Simplex& e : sc.simplices(1)) pa.assign(e[0], e[1], identity);
  return pa;
}

void check_assignment(const SimplicialComplex& sc, const PermutationAssignment& pa) {
  for (const auto& [edge, perm] : pa.edges()) {
    if (!sc.find_simplex(Simplex{edge.first, edge.second})) {
      throw Error(ErrorKind::inconsistent_assignment,
                  "permutation assigned to non-edge " +
                      sc.simplex_name(Simplex{edge.first, edge.second}));
    }
  }
  for (const Simplex& e : sc.simplices(1)) {
    if (!pa.find(e[0], e[1])) {
      throw Error(ErrorKind::inconsistent_assignment,
                  "edge " + sc.simplex_name(e) + " has no permutation");
    }
  }
  for (const Simplex& t : sc.simplices(2)) {
    const auto& uv = *pa.find(t[0], t[1]);
    const auto& vw = *pa.find(t[1], t[2]);
    const auto& uw = *pa.find(t[0], t[2]);
    for (std::size_t s = 0; s < pa.sheets(); ++s) {
      if (uw[s] != vw[uv[s]]) {
        throw Error(ErrorKind::inconsistent_assignment,
                    "monodromy around 2-simplex " + sc.simplex_name(t) +
                        " is not trivial");
      }
    }
  }
}

bool acts_transitively(const PermutationAssignment& pa) {
  std::vector<bool> reached(pa.sheets(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    auto visit = [&](std::size_t next) {
      if (!reached[next]) {
        reached[next] = true;
        stack.push_back(next);
      }
    };
    for (const auto& [edge, perm] : pa.edges()) {
      visit(perm[s]);
      for (std::size_t t = 0; t < pa.sheets(); ++t)
        if (perm[t] == s) visit(t);
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

SimplicialComplex build_cover(const SimplicialComplex& sc,
                              const PermutationAssignment& pa) {
  if (!sc.is_connected()) {
    throw Error(ErrorKind::disconnected, "covers are built over connected complexes");
  }
  check_assignment(sc, pa);
  const std::size_t d = pa.sheets();
  std::vector<std::string> names;
  for (const auto& v : sc.vertices())
    for (std::size_t s = 0; s < d; ++s) names.push_back(v + "@" + std::to_string(s));
  std::vector<Simplex> lifts;
  for (const Simplex& top : sc.maximal_simplices()) {
    for (std::size_t s = 0; s < d; ++s) {
      Simplex lift{top[0] * d + s};
      for (std::size_t i = 1; i < top.size(); ++i)
        lift.push_back(top[i] * d + (*pa.find(top[0], top[i]))[s]);
      lifts.push_back(std::move(lift));
    }
  }
  return SimplicialComplex(std::move(names), lifts);
}

Chain push_forward(const SimplicialComplex& base, const SimplicialComplex& cover,
                   std::size_t sheets, const Chain& c) {
  if (sheets == 0 || cover.vertex_count() != base.vertex_count() * sheets) {
    throw Error(ErrorKind::dimension_mismatch,
                "cover vertex count is not a multiple of the base vertex count");
  }
  const auto& level = cover.simplices(c.dim());
  Chain out(c.dim());
  for (const auto& [cell, value] : c.coeffs()) {
    if (cell >= level.size()) {
      throw Error(ErrorKind::unknown_cell, "chain cell index outside the cover");
    }
    Simplex image;
    for (std::size_t v : level[cell]) image.push_back(v / sheets);
    auto found = base.find_simplex(image);
    if (!found) {
      throw Error(ErrorKind::invariant_violation,
                  "cover simplex does not project onto a base simplex");
    }
    out.add_term(*found, value);
  }
  return out;
}

}  // namespace fillscope
