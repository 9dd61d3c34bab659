#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fillscope/chain_complex.hpp"

namespace fillscope {

// Vertex indices in strictly increasing global order. That order is also the
// orientation of the simplex.
using Simplex = std::vector<std::size_t>;

class SimplicialComplex {
 public:
  // Builds the face closure of `generators`. Each generator is a set of
  // vertex indices in any order; every vertex is a 0-simplex.
  SimplicialComplex(std::vector<std::string> vertices,
                    const std::vector<Simplex>& generators);

  static SimplicialComplex from_named(
      std::vector<std::string> vertices,
      const std::vector<std::vector<std::string>>& generators);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::optional<std::size_t> find_vertex(std::string_view id) const;

  // Top dimension; 0 for a set of points.
  std::size_t dim() const noexcept { return simplices_.size() - 1; }
  // Lexicographically sorted d-simplices, empty if d > dim().
  const std::vector<Simplex>& simplices(std::size_t d) const;
  std::size_t count(std::size_t d) const { return simplices(d).size(); }
  std::vector<std::size_t> counts() const;
  std::optional<std::size_t> find_simplex(const Simplex& s) const;

  std::vector<Simplex> maximal_simplices() const;
  long euler_characteristic() const;

  // Component label per vertex, labels assigned in order of least vertex.
  std::vector<std::size_t> component_labels() const;
  std::size_t component_count() const;
  bool is_connected() const { return component_count() <= 1; }

  std::string simplex_name(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.simplices_ == b.simplices_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<Simplex>> simplices_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
};

// Cells are the simplices in the complex's order; 0-cells are named by their
// vertex, higher cells "[v0,v1,...]". The boundary of a simplex is the
// alternating sum of its codimension-one faces.
ChainComplex to_chain_complex(const SimplicialComplex& sc);

// Vertices of the subdivision are the simplices of `sc`, ordered by dimension
// then lexicographically; a vertex keeps its name and a higher barycenter is
// named "(v0,v1,...)".
SimplicialComplex barycentric_subdivide(const SimplicialComplex& sc);

// Monodromy of a finite cover: for each edge {u < v} a permutation taking the
// sheet over u to the sheet over v.
class PermutationAssignment {
 public:
  using Permutation = std::vector<std::size_t>;

  explicit PermutationAssignment(std::size_t sheets);

  std::size_t sheets() const noexcept { return sheets_; }
  // Edge endpoints are vertex indices, in either order; the stored
  // permutation is oriented from the smaller index to the larger.
  void assign(std::size_t u, std::size_t v, Permutation perm);
  const Permutation* find(std::size_t u, std::size_t v) const;
  const std::map<std::pair<std::size_t, std::size_t>, Permutation>& edges() const {
    return perms_;
  }

  // Every edge of `sc` gets the identity permutation.
  static PermutationAssignment trivial(const SimplicialComplex& sc, std::size_t sheets);

 private:
  std::size_t sheets_;
  std::map<std::pair<std::size_t, std::size_t>, Permutation> perms_;
};

// Throws inconsistent_assignment naming the first offending edge or 2-simplex.
void check_assignment(const SimplicialComplex& sc, const PermutationAssignment& pa);

// True when the permutations generate a transitive action on the sheets.
bool acts_transitively(const PermutationAssignment& pa);

// The d-sheeted cover. Vertex (v, s) has index v * d + s and is named "v@s".
SimplicialComplex build_cover(const SimplicialComplex& sc,
                              const PermutationAssignment& pa);

// Pushes a chain on to_chain_complex(cover) down to to_chain_complex(base) by
// summing over fibers.
Chain push_forward(const SimplicialComplex& base, const SimplicialComplex& cover,
                   std::size_t sheets, const Chain& c);

}  // namespace fillscope
