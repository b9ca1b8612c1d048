#include "cda/stability.hpp"

#include <string>

#include "cda/errors.hpp"

namespace cda {

namespace {

std::string optional_to_string(const std::optional<Rational>& q) {
  return q ? to_string(*q) : std::string("inf");
}

}  // namespace

CheckReport StabilityReport::to_report() const {
  CheckReport report;
  std::string dims;
  for (const auto& [dim, dist] : bottleneck_by_dim) {
    if (!dims.empty()) dims += ", ";
    dims += "dim " + std::to_string(dim) + ": " + optional_to_string(dist);
  }
  const std::vector<std::pair<std::string, std::string>> params = {
      {"delta", to_string(delta)},
      {"curvature_dist", to_string(curvature_dist)},
      {"lipschitz_constant", to_string(lipschitz_constant)},
      {"bottleneck", dims}};
  {
    ClaimResult c;
    c.claim = "bottleneck distance <= entry-time shift (every dimension)";
    c.parameters = params;
    c.pass = bottleneck_le_delta;
    report.claims.push_back(std::move(c));
  }
  {
    ClaimResult c;
    c.claim = "entry-time shift <= L * |c - c'|_inf";
    c.parameters = params;
    c.pass = delta_le_lipschitz;
    report.claims.push_back(std::move(c));
  }
  {
    ClaimResult c;
    c.claim = "bottleneck distance <= L * |c - c'|_inf (every dimension)";
    c.parameters = params;
    c.pass = bottleneck_le_lipschitz;
    report.claims.push_back(std::move(c));
  }
  return report;
}

StabilityReport verify_stability(const SimplicialComplex& complex,
                                 const CurvatureFiltrationSpec& spec,
                                 const Element& c, const Element& c_prime) {
  const Filtration f = curvature_filtration(complex, spec, c);
  const Filtration g = curvature_filtration(complex, spec, c_prime);
  const Barcode bf = compute_barcode(complex, f);
  const Barcode bg = compute_barcode(complex, g);

  StabilityReport rep;
  rep.delta = sup_shift(f, g);
  rep.curvature_dist = coeff_norm_inf(c - c_prime);
  rep.lipschitz_constant = spec.lipschitz_constant();

  const Rational budget = rep.lipschitz_constant * rep.curvature_dist;
  rep.bottleneck_le_delta = true;
  rep.bottleneck_le_lipschitz = true;
  for (int dim = 0; dim <= complex.dimension(); ++dim) {
    std::optional<Rational> dist = bottleneck_distance(bf, bg, dim);
    if (!dist) {
      rep.bottleneck_le_delta = false;
      rep.bottleneck_le_lipschitz = false;
    } else {
      if (*dist > rep.delta) rep.bottleneck_le_delta = false;
      if (*dist > budget) rep.bottleneck_le_lipschitz = false;
    }
    rep.bottleneck_by_dim.emplace(dim, std::move(dist));
  }
  rep.delta_le_lipschitz = rep.delta <= budget;
  return rep;
}

}  // namespace cda
