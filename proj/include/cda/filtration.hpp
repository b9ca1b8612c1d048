#pragma once

#include <map>
#include <string>

#include "cda/element.hpp"
#include "cda/simplicial.hpp"

namespace cda {

// A monotone entry-time assignment over a fixed complex: every simplex has
// a time, and no simplex enters before its faces.
class Filtration {
 public:
  // Validates totality (a time for every simplex, and only for simplices of
  // the complex) and monotonicity; ValidationError otherwise.
  static Filtration create(SimplicialComplex complex,
                           std::map<Simplex, Rational> times);

  const SimplicialComplex& complex() const { return complex_; }
  const std::map<Simplex, Rational>& times() const { return times_; }
  const Rational& time(const Simplex& s) const;

  bool operator==(const Filtration&) const = default;

 private:
  Filtration() = default;

  SimplicialComplex complex_;
  std::map<Simplex, Rational> times_;
};

// A Q-linear functional on the degree-2 slice of a presented algebra,
// given by coefficients against canonical degree-2 words:
//   ell(c) = sum_w coeffs[w] * (coefficient of w in c).
struct LinearFunctional {
  TermMap coeffs;

  Rational evaluate(const Element& c) const;
  // The operator norm against the sup coefficient norm on elements: the
  // l1 norm of the coefficient vector.
  Rational norm_l1() const;
};

// Recipe for curvature-dependent filtrations: each simplex enters at the
// base time of its dimension, shifted by ell_tag(c) when the simplex is
// tagged with a functional.
struct CurvatureFiltrationSpec {
  std::map<int, Rational> base_times;
  std::map<Simplex, std::string> tagged;
  std::map<std::string, LinearFunctional> functionals;

  // Largest functional l1-norm; the Lipschitz constant of every induced
  // entry time as a function of c (sup coefficient norm). 0 with no
  // functionals.
  Rational lipschitz_constant() const;
  // Every tagged simplex must name an existing functional.
  void validate() const;
};

// Builds the induced filtration for curvature c. Errors: c not concentrated
// in degree 2; a present dimension with no base time; a tag naming no
// functional; and whatever monotonicity violation the resulting times
// exhibit (via Filtration::create).
Filtration curvature_filtration(const SimplicialComplex& complex,
                                const CurvatureFiltrationSpec& spec,
                                const Element& c);

// Max over simplices of |time_f(s) - time_g(s)|; the two filtrations must
// live on the same complex.
Rational sup_shift(const Filtration& f, const Filtration& g);

}  // namespace cda
