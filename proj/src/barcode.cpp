#include "cda/barcode.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cda/errors.hpp"

namespace cda {

bool bar_less(const Bar& a, const Bar& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.birth != b.birth) return a.birth < b.birth;
  if (a.death.has_value() != b.death.has_value()) {
    return a.death.has_value();  // finite deaths sort before infinite
  }
  if (a.death && b.death && *a.death != *b.death) return *a.death < *b.death;
  return false;
}

std::vector<Bar> Barcode::in_dim(int dim) const {
  std::vector<Bar> out;
  for (const Bar& b : bars) {
    if (b.dim == dim) out.push_back(b);
  }
  return out;
}

namespace {

// A sparse column over Q: (row, coefficient) entries with ascending rows
// and nonzero coefficients.
using Column = std::vector<std::pair<std::size_t, Rational>>;

// target += scale * source
Column axpy(const Column& target, const Rational& scale,
            const Column& source) {
  Column out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() ||
        (i < target.size() && target[i].first < source[j].first)) {
      out.push_back(target[i]);
      ++i;
    } else if (i == target.size() || source[j].first < target[i].first) {
      Rational v = scale * source[j].second;
      out.emplace_back(source[j].first, std::move(v));
      ++j;
    } else {
      Rational v = target[i].second + scale * source[j].second;
      if (v != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Barcode compute_barcode(const SimplicialComplex& complex,
                        const Filtration& filtration) {
  if (!(filtration.complex() == complex)) {
    throw ValidationError("filtration is over a different complex");
  }

  const std::vector<Simplex>& simplices = complex.simplices();
  const std::size_t n = simplices.size();

  // Columns ordered by (entry time, dimension, vertex lex order); the
  // dimension tie-break guarantees faces precede cofaces at equal times.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Rational& ta = filtration.time(simplices[a]);
    const Rational& tb = filtration.time(simplices[b]);
    if (ta != tb) return ta < tb;
    if (simplices[a].size() != simplices[b].size()) {
      return simplices[a].size() < simplices[b].size();
    }
    return simplices[a] < simplices[b];
  });

  std::map<Simplex, std::size_t> position;
  for (std::size_t col = 0; col < n; ++col) {
    position.emplace(simplices[order[col]], col);
  }

  const auto time_of = [&](std::size_t col) -> const Rational& {
    return filtration.time(simplices[order[col]]);
  };
  const auto dim_of = [&](std::size_t col) {
    return simplex_dim(simplices[order[col]]);
  };

  std::vector<Column> reduced(n);
  std::map<std::size_t, std::size_t> pivot_owner;  // low row -> column
  std::vector<bool> paired(n, false);
  std::vector<bool> positive(n, false);
  std::vector<Bar> bars;

  for (std::size_t col = 0; col < n; ++col) {
    const Simplex& s = simplices[order[col]];
    Column column;
    if (s.size() >= 2) {
      // Boundary with alternating signs; rows collected then sorted.
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        Simplex facet;
        facet.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != skip) facet.push_back(s[i]);
        }
        column.emplace_back(position.at(facet),
                            skip % 2 == 0 ? Rational(1) : Rational(-1));
      }
      std::sort(column.begin(), column.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    while (!column.empty()) {
      const std::size_t low = column.back().first;
      auto owner = pivot_owner.find(low);
      if (owner == pivot_owner.end()) break;
      const Column& other = reduced[owner->second];
      Rational scale = -column.back().second / other.back().second;
      column = axpy(column, scale, other);
    }

    if (column.empty()) {
      positive[col] = true;
      continue;
    }
    const std::size_t low = column.back().first;
    pivot_owner.emplace(low, col);
    paired[low] = true;
    reduced[col] = std::move(column);
    if (time_of(low) != time_of(col)) {
      bars.push_back(Bar{dim_of(low), time_of(low), time_of(col)});
    }
  }

  for (std::size_t col = 0; col < n; ++col) {
    if (positive[col] && !paired[col]) {
      bars.push_back(Bar{dim_of(col), time_of(col), std::nullopt});
    }
  }

  std::sort(bars.begin(), bars.end(), bar_less);
  Barcode out;
  out.bars = std::move(bars);
  return out;
}

std::string barcode_to_text(const Barcode& barcode) {
  std::string out;
  for (const Bar& b : barcode.bars) {
    out += std::to_string(b.dim);
    out += ' ';
    out += to_string(b.birth);
    out += ' ';
    out += b.death ? to_string(*b.death) : std::string("inf");
    out += '\n';
  }
  return out;
}

}  // namespace cda
