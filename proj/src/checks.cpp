#include "cda/checks.hpp"

#include <string>

#include "cda/errors.hpp"

namespace cda {

bool CheckReport::all_pass() const {
  for (const ClaimResult& c : claims) {
    if (!c.pass) return false;
  }
  return true;
}

namespace {

std::string size_str(const TestSet& ts) {
  return std::to_string(ts.elements.size());
}

}  // namespace

CheckReport check_structural_identities(const CurvedDGA& dga, const Element& x,
                                        const TestSet& ts) {
  if (!x.is_zero() && !x.homogeneous_degree()) {
    throw ValidationError(
        "structural identities need a homogeneous element x");
  }
  const int px = x.homogeneous_degree().value_or(0);
  const LinearOperator ad_x = LinearOperator::inner_derivation(x);
  const Element dx = dga.d.apply(x);
  const LinearOperator ad_dx = LinearOperator::inner_derivation(dx);
  const Rational sign = px % 2 == 0 ? Rational(1) : Rational(-1);

  CheckReport report;

  {
    ClaimResult claim;
    claim.claim = "d(ad_x(a)) - (-1)^|x| ad_x(d(a)) = ad_{d(x)}(a) on test set";
    claim.parameters = {{"x", to_expression_string(x)},
                        {"test_set_size", size_str(ts)}};
    claim.pass = true;
    for (const Element& a : ts.elements) {
      const Element lhs =
          dga.d.apply(ad_x.apply(a)) - sign * ad_x.apply(dga.d.apply(a));
      if (lhs != ad_dx.apply(a)) {
        claim.pass = false;
        claim.witness = a;
        break;
      }
    }
    report.claims.push_back(std::move(claim));
  }

  if (x == dga.curvature) {
    ClaimResult claim;
    claim.claim = "d commutes with ad_c on test set";
    claim.parameters = {{"test_set_size", size_str(ts)}};
    claim.pass = true;
    const LinearOperator adc = dga.ad_c();
    for (const Element& a : ts.elements) {
      if (dga.d.apply(adc.apply(a)) != adc.apply(dga.d.apply(a))) {
        claim.pass = false;
        claim.witness = a;
        break;
      }
    }
    report.claims.push_back(std::move(claim));
  }

  return report;
}

CheckReport CdaAxiomReport::to_report() const {
  CheckReport report;
  {
    ClaimResult c;
    c.claim = "d^2 = ad_c on test set";
    c.pass = d_squared_equals_ad_c;
    c.witness = witness_d_squared;
    report.claims.push_back(std::move(c));
  }
  {
    ClaimResult c;
    c.claim = "d(c) = 0";
    c.pass = d_of_c_zero;
    report.claims.push_back(std::move(c));
  }
  {
    ClaimResult c;
    c.claim = "d is homogeneous of its declared degree, |c| = 2 deg(d)";
    c.pass = degree_of_d_ok;
    c.witness = witness_degree;
    report.claims.push_back(std::move(c));
  }
  return report;
}

CdaAxiomReport check_cda_axioms(const CurvedDGA& dga, const TestSet& ts) {
  CdaAxiomReport rep;
  const LinearOperator adc = dga.ad_c();

  rep.d_squared_equals_ad_c = true;
  for (const Element& a : ts.elements) {
    if (dga.d.apply(dga.d.apply(a)) != adc.apply(a)) {
      rep.d_squared_equals_ad_c = false;
      rep.witness_d_squared = a;
      break;
    }
  }

  rep.d_of_c_zero = dga.d.apply(dga.curvature).is_zero();

  const std::optional<int> dd = dga.d.degree();
  if (!dd) {
    rep.degree_of_d_ok = false;
  } else {
    rep.degree_of_d_ok = true;
    for (const Element& a : ts.elements) {
      // Test elements are canonical forms of words, hence homogeneous.
      const int da = a.homogeneous_degree().value();
      const Element image = dga.d.apply(a);
      if (image.is_zero()) continue;
      const std::optional<int> di = image.homogeneous_degree();
      if (!di || *di != da + *dd) {
        rep.degree_of_d_ok = false;
        rep.witness_degree = a;
        break;
      }
    }
    if (rep.degree_of_d_ok && !dga.curvature.is_zero()) {
      const std::optional<int> dc = dga.curvature.homogeneous_degree();
      if (!dc || *dc != 2 * *dd) {
        rep.degree_of_d_ok = false;
        rep.witness_degree = dga.curvature;
      }
    }
  }

  return rep;
}

NilpotencyResult nilpotency_index(const LinearOperator& op, const TestSet& ts,
                                  int max_k) {
  if (max_k < 1) throw ValidationError("nilpotency search needs max_k >= 1");

  NilpotencyResult result;
  result.max_k = max_k;

  // images[i] = op^{k-1}(ts[i]) entering round k.
  std::vector<Element> images = ts.elements;
  for (int k = 1; k <= max_k; ++k) {
    std::vector<Element> next;
    next.reserve(images.size());
    bool all_zero = true;
    for (const Element& e : images) {
      Element im = op.apply(e);
      if (!im.is_zero()) all_zero = false;
      next.push_back(std::move(im));
    }
    if (all_zero) {
      result.index = k;
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (!images[i].is_zero()) {
          result.witness = ts.elements[i];
          result.witness_image = images[i];
          break;
        }
      }
      return result;
    }
    images = std::move(next);
  }
  return result;
}

CheckReport BoundReport::to_report() const {
  const std::string n_str = std::to_string(n);
  CheckReport report;
  {
    ClaimResult c;
    c.claim = "(ad_c)^(2n-1) = 0 on test set";
    c.parameters = {{"n", n_str}, {"power", std::to_string(2 * n - 1)}};
    c.pass = ad_power_zero;
    c.witness = witness_ad;
    report.claims.push_back(std::move(c));
  }
  {
    ClaimResult c;
    c.claim = "d^(4n-2) = 0 on test set";
    c.parameters = {{"n", n_str}, {"power", std::to_string(4 * n - 2)}};
    c.pass = d_power_zero;
    c.witness = witness_d;
    report.claims.push_back(std::move(c));
  }
  {
    ClaimResult c;
    c.claim = "sharpness probe: some a has d^(4n-3)(a) != 0";
    c.parameters = {{"n", n_str}, {"power", std::to_string(4 * n - 3)}};
    c.pass = sharp_probe_nonzero;
    c.witness = sharp_witness;
    report.claims.push_back(std::move(c));
  }
  return report;
}

BoundReport verify_bound_4n_minus_2(const CurvedDGA& dga, int n,
                                    const TestSet& ts) {
  if (n < 1) throw ValidationError("bound verification needs n >= 1");
  const Element cn = power(dga.curvature, n);
  if (!cn.is_zero()) {
    throw ValidationError("hypothesis violated: c^" + std::to_string(n) +
                          " = " + to_expression_string(cn) + " != 0");
  }

  BoundReport rep;
  rep.n = n;
  const LinearOperator adc = dga.ad_c();

  rep.ad_power_zero = true;
  for (const Element& a : ts.elements) {
    Element cur = a;
    for (int i = 0; i < 2 * n - 1; ++i) cur = adc.apply(cur);
    if (!cur.is_zero()) {
      rep.ad_power_zero = false;
      rep.witness_ad = a;
      break;
    }
  }

  rep.d_power_zero = true;
  for (const Element& a : ts.elements) {
    const Element probe = iterate_d(dga, 4 * n - 3, a);
    if (!probe.is_zero() && !rep.sharp_probe_nonzero) {
      rep.sharp_probe_nonzero = true;
      rep.sharp_witness = a;
    }
    if (!dga.d.apply(probe).is_zero()) {
      rep.d_power_zero = false;
      rep.witness_d = a;
      break;
    }
  }

  return rep;
}

CheckReport IdealNilpotencyReport::to_report() const {
  const std::string n_str = std::to_string(n);
  CheckReport report;
  {
    ClaimResult c;
    c.claim = "every product a0 c a1 ... c an vanishes (ideal power zero)";
    c.parameters = {{"n", n_str}};
    c.pass = ideal_power_zero;
    c.witness = nonzero_product;
    report.claims.push_back(std::move(c));
  }
  if (ideal_power_zero) {
    ClaimResult c;
    c.claim = "(ad_c)^n = 0 on test set";
    c.parameters = {{"n", n_str}};
    c.pass = ad_power_zero;
    c.witness = witness_ad;
    report.claims.push_back(std::move(c));
  }
  return report;
}

namespace {

// Depth-first sweep over products acc * c * a_{level+1} * ... * c * a_n with
// separators from seps; a zero partial product annihilates every completion,
// so the search prunes there. Returns the first nonzero full product.
std::optional<Element> nonzero_ideal_product(const std::vector<Element>& seps,
                                             const Element& c, int n,
                                             const Element& acc, int level) {
  if (level == n) return acc;
  for (const Element& sep : seps) {
    const Element next = acc * c * sep;
    if (next.is_zero()) continue;
    if (auto w = nonzero_ideal_product(seps, c, n, next, level + 1)) {
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

IdealNilpotencyReport check_curvature_ideal_nilpotent(const PresentationPtr& p,
                                                      const Element& c, int n,
                                                      const TestSet& ts) {
  if (!p) throw ValidationError("null presentation");
  if (n < 1) throw ValidationError("ideal nilpotency needs n >= 1");
  if (c.presentation() != p && !(*c.presentation() == *p)) {
    throw ValidationError("curvature lives in a different presentation");
  }

  IdealNilpotencyReport rep;
  rep.n = n;
  rep.ideal_power_zero = true;
  for (const Element& a0 : ts.elements) {
    if (auto w = nonzero_ideal_product(ts.elements, c, n, a0, 0)) {
      rep.ideal_power_zero = false;
      rep.nonzero_product = std::move(w);
      break;
    }
  }

  if (rep.ideal_power_zero) {
    rep.ad_power_zero = true;
    const LinearOperator adc = LinearOperator::inner_derivation(c);
    for (const Element& a : ts.elements) {
      Element cur = a;
      for (int i = 0; i < n; ++i) cur = adc.apply(cur);
      if (!cur.is_zero()) {
        rep.ad_power_zero = false;
        rep.witness_ad = a;
        break;
      }
    }
  }

  return rep;
}

}  // namespace cda
