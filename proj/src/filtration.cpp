#include "cda/filtration.hpp"

#include <algorithm>

#include "cda/errors.hpp"

namespace cda {

Filtration Filtration::create(SimplicialComplex complex,
                              std::map<Simplex, Rational> times) {
  for (const auto& [s, t] : times) {
    if (!complex.contains(s)) {
      throw ValidationError("filtration assigns a time to '" +
                            simplex_to_string(s) +
                            "', which is not in the complex");
    }
  }
  for (const Simplex& s : complex.simplices()) {
    auto it = times.find(s);
    if (it == times.end()) {
      throw ValidationError("filtration has no entry time for '" +
                            simplex_to_string(s) + "'");
    }
    if (s.size() < 2) continue;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      Simplex facet;
      facet.reserve(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != skip) facet.push_back(s[i]);
      }
      if (times.at(facet) > it->second) {
        throw ValidationError(
            "filtration is not monotone: face '" + simplex_to_string(facet) +
            "' enters at " + to_string(times.at(facet)) + ", after '" +
            simplex_to_string(s) + "' at " + to_string(it->second));
      }
    }
  }

  Filtration f;
  f.complex_ = std::move(complex);
  f.times_ = std::move(times);
  return f;
}

const Rational& Filtration::time(const Simplex& s) const {
  auto it = times_.find(s);
  if (it == times_.end()) {
    throw ValidationError("no entry time for simplex '" +
                          simplex_to_string(s) + "'");
  }
  return it->second;
}

Rational LinearFunctional::evaluate(const Element& c) const {
  Rational total(0);
  for (const auto& [w, q] : coeffs) {
    Rational part = q * c.coeff(w);
    total += part;
  }
  return total;
}

Rational LinearFunctional::norm_l1() const {
  Rational total(0);
  for (const auto& [w, q] : coeffs) total += rational_abs(q);
  return total;
}

Rational CurvatureFiltrationSpec::lipschitz_constant() const {
  Rational best(0);
  for (const auto& [name, ell] : functionals) {
    Rational norm = ell.norm_l1();
    if (norm > best) best = std::move(norm);
  }
  return best;
}

void CurvatureFiltrationSpec::validate() const {
  for (const auto& [s, name] : tagged) {
    if (!functionals.count(name)) {
      throw ValidationError("simplex '" + simplex_to_string(s) +
                            "' is tagged with unknown functional '" + name +
                            "'");
    }
  }
}

Filtration curvature_filtration(const SimplicialComplex& complex,
                                const CurvatureFiltrationSpec& spec,
                                const Element& c) {
  spec.validate();
  for (const auto& [s, name] : spec.tagged) {
    if (!complex.contains(s)) {
      throw ValidationError("tagged simplex '" + simplex_to_string(s) +
                            "' is not in the complex");
    }
  }
  if (!c.is_zero()) {
    for (const auto& [deg, part] : degree_components(c)) {
      if (deg != 2) {
        throw ValidationError(
            "curvature must be concentrated in degree 2; found a component "
            "of degree " +
            std::to_string(deg));
      }
    }
  }

  std::map<Simplex, Rational> times;
  for (const Simplex& s : complex.simplices()) {
    const int dim = simplex_dim(s);
    auto base = spec.base_times.find(dim);
    if (base == spec.base_times.end()) {
      throw ValidationError("no base entry time for dimension " +
                            std::to_string(dim));
    }
    Rational t = base->second;
    if (auto tag = spec.tagged.find(s); tag != spec.tagged.end()) {
      t += spec.functionals.at(tag->second).evaluate(c);
    }
    times.emplace(s, std::move(t));
  }
  return Filtration::create(complex, std::move(times));
}

Rational sup_shift(const Filtration& f, const Filtration& g) {
  if (!(f.complex() == g.complex())) {
    throw ValidationError(
        "entry-time shift needs filtrations over the same complex");
  }
  Rational best(0);
  for (const auto& [s, t] : f.times()) {
    Rational diff = rational_abs(Rational(t - g.time(s)));
    if (diff > best) best = std::move(diff);
  }
  return best;
}

}  // namespace cda
