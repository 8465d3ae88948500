#pragma once

#include <string>
#include <vector>

#include "rb/bounds.hpp"
#include "rb/solver.hpp"

namespace rb {

struct TrajectoryExtrema {
  double t_transient = 0;
  int n_samples = 0;  // post-transient samples used
  double max_z = 0;
  double max_q = 0;
  double max_phi = 0;
  double max_eta = 0;
  double max_u_l2_sq = 0;
};

// Maxima over samples with t >= t_transient. Requires at least 100 samples
// past the cut (throws std::invalid_argument otherwise).
TrajectoryExtrema trajectory_extrema(const std::vector<DiagnosticsRecord>& series,
                                     double t_transient,
                                     int min_samples = 100);

enum class BoundsForm { Scaling, ExactCurve };

struct SharpnessReport {
  double ratio_z = 0;    // z_max / max z
  double ratio_phi = 0;  // theta bound / max phi
  double ratio_q = 0;
  double ratio_eta = 0;
  double beta_z = 0;  // inflation exponent, base 100
  double beta_phi = 0;
  std::string bounds_used;  // "scaling" or "exact-curve"
};

// beta = log(ratio) / log(100)
double beta_of_ratio(double ratio);

SharpnessReport sharpness_ratios(const TrajectoryExtrema& ex,
                                 const AttractorBounds& b,
                                 BoundsForm form = BoundsForm::Scaling);

struct Violation {
  double t = 0;
  std::string quantity;  // "z", "q" or "eta"
  double value = 0;
  double bound = 0;
};

// Post-transient containment check: z <= z_max, q <= f(z)*(1+1e-6),
// eta <= g(phi)*(1+1e-6). Violations are returned as data, not thrown.
// Throws std::invalid_argument if no sample lies past the cut.
std::vector<Violation> region_check(const std::vector<DiagnosticsRecord>& series,
                                    const CurveF& curve_f, const CurveG& curve_g,
                                    double z_max, double t_transient);

}  // namespace rb
