#pragma once

#include <functional>
#include <vector>

#include "rb/solver.hpp"

namespace rb {

enum class InterpMode { BlockAverage, NodalSampling };

// Finite-rank observation operator of stride m on the collocation grid.
struct InterpolantSpec {
  InterpMode mode = InterpMode::BlockAverage;
  int stride = 8;  // must divide n1 and n2

  // realized coarse spacing h = max(m L / n1, 2 m / n2)
  double h(const GridSpec& g) const {
    return std::max(stride * g.L / g.n1, 2.0 * stride / g.n2);
  }
};

// Block-average mode replaces each m x m cell of collocation points by its
// mean; nodal-sampling mode extends every m-th nodal value over its cell.
// Both are followed by parity projection and dealiasing so the output stays
// in the symmetry class. Linear; constants are fixed points. Throws if the
// stride does not divide the grid.
Field apply_interpolant(const Field& f, const InterpolantSpec& spec);

// physical-space cell kernels (exposed for direct quadrature oracles)
void block_average_physical(const GridSpec& g, const RealVec& in, int stride,
                            RealVec& out);
void nodal_sample_physical(const GridSpec& g, const RealVec& in, int stride,
                           RealVec& out);

// Tendencies of the nudged auxiliary system: plain rhs of the auxiliary state
// plus the feedback term -mu P_sigma(I_h(aux_u1 - ref_u1) e1) in the momentum
// equation. The temperature equation receives no data term.
Tendency nudged_rhs(const State& ref, const State& aux, double mu,
                    const InterpolantSpec& spec, const PhysParams& p);

struct ErrorRecord {
  double t = 0;
  double err_u_h1 = 0;      // ||u - u~||
  double err_theta_l2 = 0;  // |theta - theta~|
  double err_theta_h1 = 0;  // ||theta - theta~||

  static constexpr const char* csv_header = "t,err_u_h1,err_theta_l2,err_theta_h1";
};

struct NudgeConfig {
  SimConfig sim;           // reference run; sim.t_end is the total end time
  double mu = 1.0;
  InterpolantSpec interp;
  double t_assim_start = 30.0;
  enum class AuxIc { Zero, RefClone };  // RefClone is a diagnostics mode
  AuxIc aux_ic = AuxIc::Zero;
};

struct TwinSinks {
  std::function<void(const ErrorRecord&)> on_error;
  std::function<void(const DiagnosticsRecord&)> on_ref_diag;
};

struct TwinResult {
  std::vector<ErrorRecord> series;
  State ref_final;
  State aux_final;
};

// Advances the reference from its initial condition; at t_assim_start starts
// the auxiliary system (default (0,0)) and advances both in lockstep with a
// shared dt, evaluating the feedback term at every Runge-Kutta stage.
TwinResult twin_run(const NudgeConfig& cfg, const TwinSinks& sinks = {});

struct DecayFit {
  double rate = 0;       // slope of log(err_u_h1 + err_theta_l2) vs t
  double r_squared = 0;
  bool floor_reached = false;
};

// Least-squares line fit over samples with t in [t_begin, t_end]. Requires at
// least 10 samples in the window; reports floor_reached instead of a rate if
// any error sum in the window is non-positive.
DecayFit decay_fit(const std::vector<ErrorRecord>& series, double t_begin,
                   double t_end);

}  // namespace rb
