#include "rb/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rb/fft.hpp"

namespace rb {

namespace {

DiagnosticsRecord diagnostics_from(double t, const Field& u1, const Field& u2,
                                   const Field& theta) {
  DiagnosticsRecord r;
  r.t = t;
  r.u_l2_sq = spectral_moment(u1, 0) + spectral_moment(u2, 0);
  r.z = spectral_moment(u1, 1) + spectral_moment(u2, 1);
  r.q = spectral_moment(u1, 2) + spectral_moment(u2, 2);
  r.zeta = spectral_moment(u1, 3) + spectral_moment(u2, 3);
  r.phi = spectral_moment(theta, 1);
  r.eta = spectral_moment(theta, 2);
  r.xi = spectral_moment(theta, 3);
  r.theta_l2 = std::sqrt(spectral_moment(theta, 0));
  r.theta_max = max_abs_physical(theta);
  r.alpha = u1.coeffs()[0].real();
  return r;
}

bool all_finite(const Field& f) {
  for (const auto& c : f.coeffs())
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

// uniform in [-1, 1), identical across standard libraries
double draw_uniform(std::mt19937_64& rng) {
  const double u01 = (rng() >> 11) * 0x1.0p-53;
  return 2.0 * u01 - 1.0;
}

}  // namespace

DiagnosticsRecord diagnostics(const State& s) {
  return diagnostics_from(s.t, s.u1, s.u2, s.theta);
}

State initial_state(const SimConfig& cfg) {
  const GridSpec& g = cfg.grid;
  State st{0.0, Field(g, Parity::EvenInX2), Field(g, Parity::OddInX2),
           Field(g, Parity::OddInX2)};
  st.u1.coeffs()[0] = cfg.ic.alpha;
  if (cfg.ic.kind == IcSpec::Kind::Zero) return st;

  // seeded odd noise on low modes, rescaled to the requested amplitude
  const int M1 = std::min({8, g.keep1, g.n1 / 2 - 1});
  const int M2 = std::min({8, g.keep2, g.n2 / 2 - 1});
  std::mt19937_64 rng(cfg.ic.seed);
  for (int m1 = 0; m1 <= M1; ++m1) {
    for (int m2 = 1; m2 <= M2; ++m2) {
      const double a = draw_uniform(rng);
      const double b = draw_uniform(rng);
      const double w = 1.0 / (1.0 + m1 * m1 + m2 * m2);
      // m1 = 0 modes must be purely imaginary for a real odd field
      const std::complex<double> z =
          m1 == 0 ? std::complex<double>(0.0, w * b)
                  : std::complex<double>(w * a, w * b);
      st.theta.at(m1, m2) = z;
      st.theta.at(m1, -m2) = -z;
      if (m1 > 0) {
        st.theta.at(-m1, -m2) = std::conj(z);
        st.theta.at(-m1, m2) = -std::conj(z);
      }
    }
  }
  const double mx = max_abs_physical(st.theta);
  if (mx > 0.0) {
    const double s = cfg.ic.amplitude / mx;
    for (auto& c : st.theta.coeffs()) c *= s;
  }
  return st;
}

// ---- tendency evaluation ----------------------------------------------------

RhsEval::RhsEval(const GridSpec& grid, const PhysParams& p)
    : grid_(grid),
      p_(p),
      ca_(grid.size()),
      cb_(grid.size()),
      pu1_(grid.size()),
      pu2_(grid.size()),
      pd1u1_(grid.size()),
      pd2u1_(grid.size()),
      pd1u2_(grid.size()),
      pd2u2_(grid.size()),
      pd1th_(grid.size()),
      pd2th_(grid.size()),
      padv_(grid.size()) {}

void RhsEval::eval(const Field& u1, const Field& u2, const Field& theta,
                   Field& du1, Field& du2, Field& dtheta) {
  const GridSpec& g = grid_;
  const std::size_t n = g.size();

  // inverse transform of a dealiased input, optionally differentiated
  // (deriv: 0 = none, 1 = d/dx1, 2 = d/dx2)
  auto inv = [&](const CxVec& src, int deriv, RealVec& dst) {
    for (int i1 = 0; i1 < g.n1; ++i1) {
      const int a1 = std::abs(g.m1[i1]);
      const double k1 = g.k1[i1];
      const std::complex<double>* srow = src.data() + g.idx(i1, 0);
      std::complex<double>* drow = ca_.data() + g.idx(i1, 0);
      if (a1 > g.keep1) {
        std::fill(drow, drow + g.n2, std::complex<double>(0.0));
        continue;
      }
      for (int i2 = 0; i2 < g.n2; ++i2) {
        std::complex<double> v =
            std::abs(g.m2[i2]) > g.keep2 ? std::complex<double>(0.0) : srow[i2];
        if (deriv == 1)
          v = std::complex<double>(-k1 * v.imag(), k1 * v.real());
        else if (deriv == 2)
          v = std::complex<double>(-g.k2[i2] * v.imag(), g.k2[i2] * v.real());
        if (g.m2[i2] & 1) v = -v;  // x2-origin phase
        drow[i2] = v;
      }
    }
    fft::backward(g, ca_.data(), cb_.data());
    for (std::size_t i = 0; i < n; ++i) dst[i] = cb_[i].real();
  };

  // forward transform of a physical tendency into a canonical dealiased field
  auto fwd = [&](const RealVec& src, Field& out) {
    for (std::size_t i = 0; i < n; ++i) ca_[i] = src[i];
    fft::forward(g, ca_.data(), cb_.data());
    kernels::forward_scale_phase(g, cb_.data());
    std::copy(cb_.begin(), cb_.end(), out.coeffs().begin());
    kernels::zero_nyquist(g, out.coeffs().data());
    kernels::parity_project(g, out.parity(), out.coeffs().data());
    kernels::dealias(g, out.coeffs().data());
  };

  inv(u1.coeffs(), 0, pu1_);
  inv(u2.coeffs(), 0, pu2_);
  inv(u1.coeffs(), 1, pd1u1_);
  inv(u1.coeffs(), 2, pd2u1_);
  inv(u2.coeffs(), 1, pd1u2_);
  inv(u2.coeffs(), 2, pd2u2_);
  inv(theta.coeffs(), 1, pd1th_);
  inv(theta.coeffs(), 2, pd2th_);

  for (std::size_t i = 0; i < n; ++i)
    padv_[i] = -(pu1_[i] * pd1u1_[i] + pu2_[i] * pd2u1_[i]);
  fwd(padv_, du1);

  for (std::size_t i = 0; i < n; ++i)
    padv_[i] = -(pu1_[i] * pd1u2_[i] + pu2_[i] * pd2u2_[i]);
  fwd(padv_, du2);

  for (std::size_t i = 0; i < n; ++i)
    padv_[i] = -(pu1_[i] * pd1th_[i] + pu2_[i] * pd2th_[i]);
  fwd(padv_, dtheta);

  // buoyancy theta e2 (spectral add of the retained modes), then project
  {
    const auto& th = theta.coeffs();
    auto& d2 = du2.coeffs();
    for (int i1 = 0; i1 < g.n1; ++i1)
      for (int i2 = 0; i2 < g.n2; ++i2)
        if (g.retained(i1, i2)) d2[g.idx(i1, i2)] += th[g.idx(i1, i2)];
  }
  kernels::leray(g, du1.coeffs().data(), du2.coeffs().data());

  // temperature source u . e2
  {
    const auto& c2 = u2.coeffs();
    auto& dth = dtheta.coeffs();
    for (int i1 = 0; i1 < g.n1; ++i1)
      for (int i2 = 0; i2 < g.n2; ++i2)
        if (g.retained(i1, i2)) dth[g.idx(i1, i2)] += c2[g.idx(i1, i2)];
  }
}

Tendency rhs(const State& s, const PhysParams& p) {
  RhsEval ev(s.u1.grid(), p);
  Tendency out{Field(s.u1.grid(), Parity::EvenInX2),
               Field(s.u1.grid(), Parity::OddInX2),
               Field(s.u1.grid(), Parity::OddInX2)};
  ev.eval(s.u1, s.u2, s.theta, out.du1, out.du2, out.dtheta);
  return out;
}

// ---- integrating-factor SSP-RK3 ----------------------------------------------

IfRk3::IfRk3(const GridSpec& grid, std::vector<double> diffusivities)
    : grid_(grid), diff_(std::move(diffusivities)), ksq_(grid.size()) {
  for (int i1 = 0; i1 < grid_.n1; ++i1)
    for (int i2 = 0; i2 < grid_.n2; ++i2)
      ksq_[grid_.idx(i1, i2)] =
          grid_.k1[i1] * grid_.k1[i1] + grid_.k2[i2] * grid_.k2[i2];
  efull_.resize(diff_.size());
  ehalf_.resize(diff_.size());
  ghalf_.resize(diff_.size());
}

void IfRk3::update_factors(double dt) {
  if (dt == dt_cached_) return;
  const std::size_t n = grid_.size();
  for (std::size_t f = 0; f < diff_.size(); ++f) {
    efull_[f].resize(n);
    ehalf_[f].resize(n);
    ghalf_[f].resize(n);
    const double d = diff_[f];
    for (int i1 = 0; i1 < grid_.n1; ++i1) {
      for (int i2 = 0; i2 < grid_.n2; ++i2) {
        const std::size_t i = grid_.idx(i1, i2);
        const double x = d * ksq_[i] * dt;
        efull_[f][i] = std::exp(-x);
        ehalf_[f][i] = std::exp(-0.5 * x);
        if (grid_.retained(i1, i2)) {
          if (0.5 * x > 700.0)
            throw std::runtime_error(
                "time step too large for this grid/diffusivity "
                "(integrating-factor stage overflow)");
          ghalf_[f][i] = std::exp(0.5 * x);
        } else {
          ghalf_[f][i] = 0.0;
        }
      }
    }
  }
  dt_cached_ = dt;
}

void IfRk3::advance(std::vector<Field>& s, double dt, const RhsFn& rhs_fn) {
  if (s.size() != diff_.size())
    throw std::invalid_argument("IfRk3: field count mismatch");
  update_factors(dt);
  if (!buffers_ready_) {
    s1_ = s;
    s2_ = s;
    n0_ = s;
    n1_ = s;
    n2_ = s;
    buffers_ready_ = true;
  }
  const std::size_t n = grid_.size();
  const std::size_t nf = s.size();

  rhs_fn(s, n0_);
  for (std::size_t f = 0; f < nf; ++f) {
    const auto* ef = efull_[f].data();
    const auto* sc = s[f].coeffs().data();
    const auto* t0 = n0_[f].coeffs().data();
    auto* o = s1_[f].coeffs().data();
    for (std::size_t i = 0; i < n; ++i) o[i] = ef[i] * (sc[i] + dt * t0[i]);
  }

  rhs_fn(s1_, n1_);
  for (std::size_t f = 0; f < nf; ++f) {
    const auto* eh = ehalf_[f].data();
    const auto* gh = ghalf_[f].data();
    const auto* sc = s[f].coeffs().data();
    const auto* t0 = n0_[f].coeffs().data();
    const auto* t1 = n1_[f].coeffs().data();
    auto* o = s2_[f].coeffs().data();
    const double q = 0.25 * dt;
    for (std::size_t i = 0; i < n; ++i)
      o[i] = eh[i] * (sc[i] + q * t0[i]) + q * gh[i] * t1[i];
  }

  rhs_fn(s2_, n2_);
  for (std::size_t f = 0; f < nf; ++f) {
    const auto* ef = efull_[f].data();
    const auto* eh = ehalf_[f].data();
    const auto* s2c = s2_[f].coeffs().data();
    const auto* t2 = n2_[f].coeffs().data();
    auto* sc = s[f].coeffs().data();
    for (std::size_t i = 0; i < n; ++i)
      sc[i] = (1.0 / 3.0) * ef[i] * sc[i] +
              (2.0 / 3.0) * eh[i] * (s2c[i] + dt * t2[i]);
  }
}

// ---- run loop ----------------------------------------------------------------

BlowupError::BlowupError(double t_, const std::string& what)
    : std::runtime_error(what), t(t_) {}

namespace {

double cfl_dt(const GridSpec& g, const StepperOptions& opt, const Field& u1,
              const Field& u2) {
  const double m1 = max_abs_physical(u1);
  const double m2 = max_abs_physical(u2);
  double dt = opt.dt_max;
  if (m1 > 0.0) dt = std::min(dt, opt.cfl_safety * g.dx1() / m1);
  if (m2 > 0.0) dt = std::min(dt, opt.cfl_safety * g.dx2() / m2);
  return dt;
}

}  // namespace

RunResult run_from(State st, const SimConfig& cfg, double t_end,
                   const RunSinks& sinks) {
  const GridSpec& g = cfg.grid;
  if (g.L != cfg.params.L)
    throw std::invalid_argument("run: grid.L and params.L disagree");
  if (!cfg.stepping.auto_dt && !(cfg.stepping.dt > 0.0))
    throw std::invalid_argument("run: fixed dt must be > 0");

  RunResult result;
  std::vector<Field> s;
  s.reserve(3);
  s.push_back(std::move(st.u1));
  s.push_back(std::move(st.u2));
  s.push_back(std::move(st.theta));
  double t = st.t;

  IfRk3 rk(g, {cfg.params.nu, cfg.params.nu, cfg.params.kappa});
  RhsEval ev(g, cfg.params);
  IfRk3::RhsFn rhs_fn = [&](const std::vector<Field>& in,
                            std::vector<Field>& out) {
    ev.eval(in[0], in[1], in[2], out[0], out[1], out[2]);
  };

  auto emit_diag = [&](double tt) {
    DiagnosticsRecord r = diagnostics_from(tt, s[0], s[1], s[2]);
    if (sinks.on_diag) sinks.on_diag(r);
    result.series.push_back(r);
  };
  auto make_state = [&](double tt) {
    return State{tt, s[0], s[1], s[2]};
  };

  long step = 0;
  emit_diag(t);
  double dt_cur = cfg.stepping.auto_dt ? cfl_dt(g, cfg.stepping, s[0], s[1])
                                       : cfg.stepping.dt;
  const double t_eps = 1e-12 * std::max(1.0, std::abs(t_end));
  bool diag_current = true;
  while (t < t_end - t_eps) {
    if (cfg.stepping.auto_dt && step % cfg.stepping.cfl_stride == 0 && step > 0)
      dt_cur = cfl_dt(g, cfg.stepping, s[0], s[1]);
    const double dt = std::min(dt_cur, t_end - t);
    rk.advance(s, dt, rhs_fn);
    t += dt;
    ++step;
    diag_current = false;
    if (!all_finite(s[0]) || !all_finite(s[1]) || !all_finite(s[2]))
      throw BlowupError(t, "solution blew up (non-finite coefficients) at t=" +
                               std::to_string(t));
    const bool last = !(t < t_end - t_eps);
    if ((cfg.diag_stride > 0 && step % cfg.diag_stride == 0) || last) {
      emit_diag(t);
      diag_current = true;
    }
    if (cfg.checkpoint_stride > 0 && step % cfg.checkpoint_stride == 0 &&
        sinks.on_checkpoint && !last)
      sinks.on_checkpoint(make_state(t), step);
  }
  if (!diag_current) emit_diag(t);

  result.final_state = make_state(t);
  if (sinks.on_checkpoint) sinks.on_checkpoint(result.final_state, step);
  result.steps = step;
  return result;
}

RunResult run(const SimConfig& cfg, const RunSinks& sinks) {
  return run_from(initial_state(cfg), cfg, cfg.t_end, sinks);
}

// ---- temperature diagnostics --------------------------------------------------

double theta0_deficit(const Field& theta) {
  RealVec v = to_physical(theta);
  double sp = 0.0, sm = 0.0;
  for (double x : v) {
    const double gp = std::max(x - 1.0, 0.0);
    const double gm = std::max(-x - 1.0, 0.0);
    sp += gp * gp;
    sm += gm * gm;
  }
  const double w = theta.grid().omega_vol() / static_cast<double>(v.size());
  return std::sqrt(w * sp) + std::sqrt(w * sm);
}

MaxPrincipleResult max_principle_check(const DiagnosticsRecord& rec,
                                       double theta0, const PhysParams& p) {
  const double bound =
      std::sqrt(p.omega_vol) + theta0 * std::exp(-p.kappa * rec.t);
  const double tol = 1e-8 + 1e-6 * bound;
  MaxPrincipleResult r;
  r.bound = bound;
  r.margin = bound + tol - rec.theta_l2;
  r.pass = rec.theta_l2 <= bound + tol;
  return r;
}

}  // namespace rb
