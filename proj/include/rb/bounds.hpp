#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rb/params.hpp"

namespace rb {

// Constants of the a-priori estimates. The analysis never assigns values, so
// defaults are c1 = c_agmon = 1 with c3 = 2*c1^2 reconstructed from the shape
// of the derivation (flagged in every report); c4 = 2*max(c_agmon, c3) is
// enforced on construction.
struct BoundConstants {
  double c1 = 1.0;       // Ladyzhenskaya chain (temperature-gradient bound)
  double c2 = 1.0;       // Agmon chain (palinstrophy curves)
  double c3 = 2.0;       // first display of the |A1 theta| estimate
  double c_agmon = 1.0;  // trilinear estimate in the |A1 theta| bound
  double c4 = 4.0;       // 2*max(c_agmon, c3)
  bool c3_reconstructed = true;
};

// c3 < 0 means "use the default reconstruction 2*c1^2".
BoundConstants make_bound_constants(double c1 = 1.0, double c2 = 1.0,
                                    double c3 = -1.0, double c_agmon = 1.0);

enum class ThetaForm { RigorousK2, Scaling };

// Bounding curve in the enstrophy--palinstrophy plane: three branches glued
// at (z1, q1) and (z2, q2) with z2 = (25/64) z1, anchored at
// q(z0) = q0 = (2/nu) sqrt(z0 * theta_bound).
struct CurveF {
  double nu = 0;
  double c2 = 0;
  double theta_bound_used = 0;
  double z0 = 0, q0 = 0;
  double z1 = 0, q1 = 0;
  double z2 = 0, q2 = 0;

  double f1(double z) const;
  double f2(double z) const;
  double f3(double z) const;
};

class DegenerateCurveError : public std::runtime_error {
 public:
  DegenerateCurveError(double q0, double parabola_at_z0);
  double q0;
  double parabola_at_z0;
};

CurveF build_curve_f(const PhysParams& p, const BoundConstants& c,
                     double theta_bound);
// Piecewise evaluation; throws std::domain_error outside [0, z0].
double eval_f(const CurveF& curve, double z);

// Bounding curve in the ||theta||^2 -- |A1 theta|^2 plane: descent line g1
// from (theta_max, eta0), power-law branch g2 through the breakpoint
// (phi1, eta1 = gamma*phi1), and the validity line g3.
struct CurveG {
  double kappa = 0;
  double c4 = 0;
  double z_max = 0;
  double lambda1 = 0;
  double theta_max = 0;
  double q_max_used = 0;
  double eta0 = 0;
  double gamma = 0;
  double gamma0 = 0;       // 4^{-1/3} gamma
  double gamma_tilde = 0;  // 8 c4 q^{1/2} / (lambda1^{1/4} kappa)
  double phi1 = 0, eta1 = 0;

  double g1(double phi) const;
  double g2(double phi) const;
  double g3(double phi) const;
};

CurveG build_curve_g(const PhysParams& p, const BoundConstants& c,
                     double theta_max, double q_max_used);
// max{g1, g2, g3} with phi clamped into [0, theta_max]
double eval_g(const CurveG& curve, double phi);

// Every algebraic bound on the attractor, evaluated for one (params, alpha).
struct AttractorBounds {
  double lambda1 = 0;
  double u_l2_sq_max = 0;          // |Omega|/(nu^2 lambda1^2) + alpha^2 |Omega|
  double z_max = 0;                // |Omega|/(nu^2 lambda1)
  double theta_K2 = 0;             // rigorous ||theta||^2 bound (explicit 2)
  double theta_max_scaling = 0;    // |Omega| z Ra Pr + sqrt(|Omega| z Ra Pr / lambda1)
  double theta_bound_used = 0;     // the form fed into the curves
  double q_max_scaling = 0;        // z^2/nu^2 + sqrt(z) sqrt(theta)/nu
  double q2_exact = 0;             // curve-derived palinstrophy bound
  double eta_max_scaling = 0;
  double eta1_exact = 0;           // gamma * phi1
  double absorbing_ball_v0_sq = 0; // (1+lambda1)|Omega|/(nu^2 lambda1^2) + alpha^2 |Omega|
};

AttractorBounds attractor_bounds(const PhysParams& p, const BoundConstants& c,
                                 double alpha,
                                 ThetaForm form = ThetaForm::Scaling);

// Nudging thresholds with all implied constants set to 1 (order-of-magnitude
// advisory values):
//   K1 = 1/(kappa lambda1) + 1/(nu kappa^2) + 1/kappa + q2_exact/nu
//   K2 = K1 + theta_bound * eta1_exact / kappa
//   h_star = sqrt(nu / K1)
struct NudgingThresholds {
  double K1 = 0;
  double K2 = 0;
  double h_star = 0;
};
NudgingThresholds nudging_thresholds(const PhysParams& p,
                                     const AttractorBounds& b);

// Log-spaced tabulation of both curves (plotting interface).
struct CurveSamples {
  std::vector<double> z, q;      // (z, f(z))
  std::vector<double> phi, eta;  // (phi, g(phi))
};
CurveSamples sample_curves(const CurveF& f, const CurveG& g, int n_samples);

}  // namespace rb
