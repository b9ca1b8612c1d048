#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cda {

// A simplex is its sorted list of (positive integer) vertex labels.
using Simplex = std::vector<int>;

inline int simplex_dim(const Simplex& s) {
  return static_cast<int>(s.size()) - 1;
}

std::string simplex_to_string(const Simplex& s);
Simplex simplex_from_string(const std::string& text);

// A finite abstract simplicial complex: a face-closed set of simplices,
// stored sorted by (dimension, vertex lex order).
class SimplicialComplex {
 public:
  // The empty complex.
  SimplicialComplex() = default;

  // Validates simplices (sorted, distinct positive vertices), deduplicates,
  // and checks face closure; ValidationError otherwise.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

  const std::vector<Simplex>& simplices() const { return simplices_; }
  bool contains(const Simplex& s) const;
  std::size_t size() const { return simplices_.size(); }
  // -1 for the empty complex.
  int dimension() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<Simplex> simplices_;
};

// The clique complex of a graph, truncated at max_dim: vertices, the given
// edges, and every (k <= max_dim)-simplex all of whose edges are present.
// Edges must join distinct declared vertices; max_dim >= 1.
SimplicialComplex flag_complex(const std::vector<int>& vertices,
                               const std::vector<std::pair<int, int>>& edges,
                               int max_dim);

}  // namespace cda
