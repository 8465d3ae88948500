#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rb/field.hpp"
#include "rb/operators.hpp"
#include "rb/params.hpp"

namespace rb {

struct IcSpec {
  enum class Kind { Zero, PerturbedConduction };
  Kind kind = Kind::PerturbedConduction;
  double amplitude = 1e-3;  // max|theta| of the seeded perturbation
  std::uint64_t seed = 7;
  double alpha = 0.0;  // spatial mean of u1
};

struct StepperOptions {
  bool auto_dt = true;   // advective CFL, re-evaluated every cfl_stride steps
  double dt = 0.0;       // fixed step when auto_dt is false
  double cfl_safety = 0.5;
  double dt_max = 0.025;  // cap for auto mode (CFL is unbounded at u = 0)
  int cfl_stride = 10;
};

struct SimConfig {
  PhysParams params;
  GridSpec grid;
  StepperOptions stepping;
  double t_end = 100.0;
  int diag_stride = 20;
  int checkpoint_stride = 0;  // 0 = only the final checkpoint
  IcSpec ic;
};

// Solution snapshot: divergence-free velocity pair plus temperature.
struct State {
  double t = 0.0;
  Field u1;
  Field u2;
  Field theta;

  // spatial mean of the horizontal velocity (conserved by the flow)
  double alpha() const { return u1.coeffs()[0].real(); }
};

// Per-sample norm tuple. z and q are the squared H1 seminorm and squared
// Laplacian norm of velocity; phi, eta the analogues for temperature.
struct DiagnosticsRecord {
  double t = 0;
  double u_l2_sq = 0;   // |u|^2
  double z = 0;         // ||u||^2
  double q = 0;         // |A0 u|^2
  double phi = 0;       // ||theta||^2
  double eta = 0;       // |A1 theta|^2
  double zeta = 0;      // |A0^{3/2} u|^2
  double xi = 0;        // |A1^{3/2} theta|^2
  double theta_l2 = 0;  // |theta|
  double theta_max = 0; // max |theta| on the collocation grid
  double alpha = 0;

  static constexpr const char* csv_header =
      "t,u_l2_sq,z,q,phi,eta,zeta,xi,theta_l2,theta_max,alpha";
};

DiagnosticsRecord diagnostics(const State& s);

State initial_state(const SimConfig& cfg);

// Nonlinear + coupling tendencies (convective form, dealiased products):
//   du     = P_sigma(-(u.grad)u + theta e2)
//   dtheta = -(u.grad)theta + u2
// Diffusion is handled exactly by the integrating factor and is not included.
struct Tendency {
  Field du1;
  Field du2;
  Field dtheta;
};
Tendency rhs(const State& s, const PhysParams& p);

// Workspace-backed tendency evaluator (same arithmetic as rhs(), reusable
// buffers for the stepping loop).
class RhsEval {
 public:
  RhsEval(const GridSpec& grid, const PhysParams& p);
  void eval(const Field& u1, const Field& u2, const Field& theta,
            Field& du1, Field& du2, Field& dtheta);

 private:
  GridSpec grid_;
  PhysParams p_;
  CxVec ca_, cb_;
  RealVec pu1_, pu2_, pd1u1_, pd2u1_, pd1u2_, pd2u2_, pd1th_, pd2th_, padv_;
};

// Integrating-factor SSP-RK3 over a list of spectral fields with per-field
// diffusivities. Diffusion is applied as exact per-mode exponentials; the
// supplied tendency callback provides everything else. Third order in dt.
class IfRk3 {
 public:
  using RhsFn =
      std::function<void(const std::vector<Field>&, std::vector<Field>&)>;

  IfRk3(const GridSpec& grid, std::vector<double> diffusivities);
  void advance(std::vector<Field>& s, double dt, const RhsFn& rhs);

 private:
  void update_factors(double dt);

  GridSpec grid_;
  std::vector<double> diff_;
  RealVec ksq_;
  double dt_cached_ = -1.0;
  std::vector<RealVec> efull_, ehalf_, ghalf_;
  std::vector<Field> s1_, s2_, n0_, n1_, n2_;
  bool buffers_ready_ = false;
};

class BlowupError : public std::runtime_error {
 public:
  explicit BlowupError(double t, const std::string& what);
  double t;
};

struct RunSinks {
  std::function<void(const DiagnosticsRecord&)> on_diag;
  std::function<void(const State&, long step)> on_checkpoint;
};

struct RunResult {
  State final_state;
  std::vector<DiagnosticsRecord> series;
  long steps = 0;
};

// Steps from t = 0 to t_end, emitting diagnostics every diag_stride steps
// (including step 0 and the final step) and checkpoints every
// checkpoint_stride steps plus one at the end. Deterministic for a fixed
// configuration. Throws BlowupError on non-finite coefficients.
RunResult run(const SimConfig& cfg, const RunSinks& sinks = {});

// Continues a run from an existing state (used for twin-experiment spin-up).
RunResult run_from(State s, const SimConfig& cfg, double t_end,
                   const RunSinks& sinks = {});

// Theta0 = |(theta(0)-1)_+| + |(theta(0)+1)_-| by collocation-grid quadrature
// of the pointwise positive/negative parts.
double theta0_deficit(const Field& theta);

// L2 maximum principle |theta(t)| <= |Omega|^{1/2} + Theta0 exp(-kappa t).
struct MaxPrincipleResult {
  bool pass;
  double margin;  // (bound + tol) - theta_l2
  double bound;
};
MaxPrincipleResult max_principle_check(const DiagnosticsRecord& rec,
                                       double theta0, const PhysParams& p);

}  // namespace rb
