#include "rb/params.hpp"

#include <cmath>
#include <stdexcept>

namespace rb {

double lambda1(double L) {
  if (L <= 0.0) throw std::invalid_argument("lambda1: L must be > 0");
  const double pi = std::acos(-1.0);
  return pi * pi * std::min(0.25, 1.0 / (L * L));
}

PhysParams params_from_ra_pr(double Ra, double Pr, double L) {
  if (Ra <= 0.0 || Pr <= 0.0 || L <= 0.0)
    throw std::invalid_argument("params: Ra, Pr, L must all be > 0");
  PhysParams p;
  p.Ra = Ra;
  p.Pr = Pr;
  p.L = L;
  p.nu = std::sqrt(Pr / Ra);
  p.kappa = 1.0 / std::sqrt(Ra * Pr);
  p.omega_vol = 2.0 * L;
  p.lambda1 = lambda1(L);
  return p;
}

PhysParams params_from_nu_kappa(double nu, double kappa, double L) {
  if (nu <= 0.0 || kappa <= 0.0 || L <= 0.0)
    throw std::invalid_argument("params: nu, kappa, L must all be > 0");
  PhysParams p;
  p.nu = nu;
  p.kappa = kappa;
  p.L = L;
  p.Ra = 1.0 / (nu * kappa);
  p.Pr = nu / kappa;
  p.omega_vol = 2.0 * L;
  p.lambda1 = lambda1(L);
  return p;
}

}  // namespace rb
