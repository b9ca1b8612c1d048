#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cda/barcode.hpp"

namespace cda {

// Exact bottleneck distance between the dim-dimensional parts of two
// barcodes. Finite bars may match each other (cost max(|birth shift|,
// |death shift|)) or be dropped to the diagonal (cost half-length);
// infinite bars match only infinite bars (cost |birth shift|), so unequal
// infinite-bar counts give +infinity, returned as nullopt.
//
// The optimum is found exactly: it is one of finitely many candidate values
// (pairwise costs, half-lengths, the optimal infinite-bar shift), and
// feasibility of a candidate is a bipartite matching question.
std::optional<Rational> bottleneck_distance(const Barcode& a, const Barcode& b,
                                            int dim);

// A matching of the dim-dimensional bars realizing cost <= eps, when one
// exists. `unmatched` lists bars dropped to the diagonal with their side
// (1 = first barcode, 2 = second); such bars always have half-length <=
// eps. When no matching of cost <= eps exists, `feasible` is false and the
// bar lists are empty.
struct BarMatching {
  bool feasible = false;
  Rational eps;
  std::vector<std::pair<Bar, Bar>> pairs;
  std::vector<std::pair<Bar, int>> unmatched;
};

// Requires eps >= 0 (ValidationError otherwise).
BarMatching match_bars(const Barcode& a, const Barcode& b, const Rational& eps,
                       int dim);

}  // namespace cda
