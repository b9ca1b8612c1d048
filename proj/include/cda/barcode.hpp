#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cda/filtration.hpp"

namespace cda {

// One persistence interval [birth, death); an absent death is +infinity.
struct Bar {
  int dim = 0;
  Rational birth;
  std::optional<Rational> death;

  bool is_infinite() const { return !death.has_value(); }
  bool operator==(const Bar&) const = default;
};

// Sorts (dim, birth, death) with finite deaths ascending before infinite.
bool bar_less(const Bar& a, const Bar& b);

struct Barcode {
  std::vector<Bar> bars;  // kept sorted by bar_less

  std::vector<Bar> in_dim(int dim) const;
  bool operator==(const Barcode&) const = default;
};

// Persistent homology over Q of a filtered complex, by column reduction of
// the boundary matrix with columns ordered by (entry time, dimension,
// vertex lex order). Zero-length bars (birth = death) are dropped.
Barcode compute_barcode(const SimplicialComplex& complex,
                        const Filtration& filtration);

// One line per bar: "<dim> <birth> <death>", death rendered as "p/q"/"p" or
// "inf", lines in bar_less order, trailing newline on each line.
std::string barcode_to_text(const Barcode& barcode);

}  // namespace cda
