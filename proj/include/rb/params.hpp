#pragma once

namespace rb {

// Smallest positive eigenvalue of -Laplace on the zero-mean odd class:
// pi^2 * min(1/4, 1/L^2).
double lambda1(double L);

// Dimensionless physical parameters. nu = sqrt(Pr/Ra), kappa = 1/sqrt(Ra*Pr),
// Ra = 1/(nu*kappa), Pr = nu/kappa are kept mutually consistent.
struct PhysParams {
  double nu = 1.0;
  double kappa = 1.0;
  double L = 2.0;
  double Ra = 1.0;
  double Pr = 1.0;
  double omega_vol = 4.0;  // |Omega| = 2L
  double lambda1 = 0.0;    // pi^2 min(1/4, 1/L^2)
};

PhysParams params_from_ra_pr(double Ra, double Pr, double L);
PhysParams params_from_nu_kappa(double nu, double kappa, double L);

}  // namespace rb
