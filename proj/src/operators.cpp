#include "rb/operators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "rb/fft.hpp"
#include "rb/numfmt.hpp"

namespace rb {

namespace kernels {

void zero_nyquist(const GridSpec& g, std::complex<double>* c) {
  const int i1n = g.n1 / 2;
  const int i2n = g.n2 / 2;
  for (int i2 = 0; i2 < g.n2; ++i2) c[g.idx(i1n, i2)] = 0.0;
  for (int i1 = 0; i1 < g.n1; ++i1) c[g.idx(i1, i2n)] = 0.0;
}

void parity_project(const GridSpec& g, Parity p, std::complex<double>* c) {
  const int i2n = g.n2 / 2;
  for (int i1 = 0; i1 < g.n1; ++i1) {
    std::complex<double>* row = c + g.idx(i1, 0);
    if (p == Parity::OddInX2) row[0] = 0.0;  // m2 = 0 column
    row[i2n] = 0.0;                          // Nyquist pairs with itself
    for (int i2 = 1; i2 < i2n; ++i2) {
      const int j2 = g.n2 - i2;  // the -m2 partner
      if (p == Parity::EvenInX2) {
        std::complex<double> m = 0.5 * (row[i2] + row[j2]);
        row[i2] = m;
        row[j2] = m;
      } else {
        std::complex<double> m = 0.5 * (row[i2] - row[j2]);
        row[i2] = m;
        row[j2] = -m;
      }
    }
  }
}

void dealias(const GridSpec& g, std::complex<double>* c) {
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const int a1 = std::abs(g.m1[i1]);
    std::complex<double>* row = c + g.idx(i1, 0);
    if (a1 > g.keep1) {
      std::fill(row, row + g.n2, std::complex<double>(0.0));
      continue;
    }
    for (int i2 = 0; i2 < g.n2; ++i2)
      if (std::abs(g.m2[i2]) > g.keep2) row[i2] = 0.0;
  }
}

void forward_scale_phase(const GridSpec& g, std::complex<double>* c) {
  const double s = 1.0 / (static_cast<double>(g.n1) * g.n2);
  for (int i1 = 0; i1 < g.n1; ++i1) {
    std::complex<double>* row = c + g.idx(i1, 0);
    for (int i2 = 0; i2 < g.n2; ++i2) {
      // grid origin x2 = -1: coefficients of exp(i k2 x2) differ from the
      // DFT output by (-1)^m2
      const double f = (g.m2[i2] & 1) ? -s : s;
      row[i2] *= f;
    }
  }
}

void backward_phase(const GridSpec& g, std::complex<double>* c) {
  for (int i1 = 0; i1 < g.n1; ++i1) {
    std::complex<double>* row = c + g.idx(i1, 0);
    for (int i2 = 0; i2 < g.n2; ++i2)
      if (g.m2[i2] & 1) row[i2] = -row[i2];
  }
}

void leray(const GridSpec& g, std::complex<double>* c1,
           std::complex<double>* c2) {
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const double a = g.k1[i1];
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double b = g.k2[i2];
      const double s = a * a + b * b;
      if (s == 0.0) continue;  // the mean mode passes through
      const std::size_t i = g.idx(i1, i2);
      const std::complex<double> d = (a * c1[i] + b * c2[i]) / s;
      c1[i] -= a * d;
      c2[i] -= b * d;
    }
  }
}

}  // namespace kernels

Field to_spectral(const GridSpec& grid, std::span<const double> physical,
                  Parity parity) {
  if (physical.size() != grid.size())
    throw std::invalid_argument("physical array does not match the grid");
  CxVec in(grid.size()), out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) in[i] = physical[i];
  fft::forward(grid, in.data(), out.data());
  kernels::forward_scale_phase(grid, out.data());
  Field f = Field::from_coeffs(grid, parity, std::move(out));
  return f;
}

RealVec to_physical(const Field& f) {
  const GridSpec& g = f.grid();
  CxVec in = f.coeffs();
  kernels::backward_phase(g, in.data());
  CxVec out(g.size());
  fft::backward(g, in.data(), out.data());
  RealVec phys(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) phys[i] = out[i].real();
  return phys;
}

Field parity_project(Field f) {
  f.canonicalize();
  return f;
}

Field ddx1(const Field& f) {
  const GridSpec& g = f.grid();
  Field out(g, f.parity());
  const std::complex<double>* src = f.coeffs().data();
  std::complex<double>* dst = out.coeffs().data();
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const std::complex<double> ik(0.0, g.k1[i1]);
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const std::size_t i = g.idx(i1, i2);
      dst[i] = ik * src[i];
    }
  }
  return out;
}

Field ddx2(const Field& f) {
  const GridSpec& g = f.grid();
  Field out(g, flip(f.parity()));
  const std::complex<double>* src = f.coeffs().data();
  std::complex<double>* dst = out.coeffs().data();
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const std::size_t i = g.idx(i1, i2);
      dst[i] = std::complex<double>(0.0, g.k2[i2]) * src[i];
    }
  }
  return out;
}

VectorField leray_project(const Field& f1, const Field& f2) {
  if (!same_grid(f1.grid(), f2.grid()))
    throw std::invalid_argument("leray_project: grid mismatch");
  if (f1.parity() != Parity::EvenInX2 || f2.parity() != Parity::OddInX2)
    throw std::invalid_argument(
        "leray_project: expects (even, odd) input parities");
  VectorField u{f1, f2};
  kernels::leray(f1.grid(), u.u1.coeffs().data(), u.u2.coeffs().data());
  return u;
}

double divergence_residual(const VectorField& u) {
  const GridSpec& g = u.u1.grid();
  const auto& c1 = u.u1.coeffs();
  const auto& c2 = u.u2.coeffs();
  double worst = 0.0;
  for (int i1 = 0; i1 < g.n1; ++i1) {
    for (int i2 = 0; i2 < g.n2; ++i2) {
      if (!g.retained(i1, i2)) continue;
      const std::size_t i = g.idx(i1, i2);
      const double d = std::abs(g.k1[i1] * c1[i] + g.k2[i2] * c2[i]);
      worst = std::max(worst, d);
    }
  }
  return worst;
}

Field dealias(Field f) {
  kernels::dealias(f.grid(), f.coeffs().data());
  return f;
}

Field multiply(const Field& a, const Field& b) {
  if (!same_grid(a.grid(), b.grid()))
    throw std::invalid_argument("multiply: grid mismatch");
  const GridSpec& g = a.grid();
  Field ad = dealias(a);
  Field bd = dealias(b);
  RealVec pa = to_physical(ad);
  RealVec pb = to_physical(bd);
  for (std::size_t i = 0; i < g.size(); ++i) pa[i] *= pb[i];
  Field out = to_spectral(g, pa, product_parity(a.parity(), b.parity()));
  return dealias(std::move(out));
}

double spectral_moment(const Field& f, int p) {
  const GridSpec& g = f.grid();
  const auto& c = f.coeffs();
  double sum = 0.0;
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const double a = g.k1[i1];
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const std::size_t i = g.idx(i1, i2);
      const double m = std::norm(c[i]);
      if (m == 0.0) continue;
      const double ksq = a * a + g.k2[i2] * g.k2[i2];
      double w = 1.0;
      for (int r = 0; r < p; ++r) w *= ksq;
      sum += w * m;
    }
  }
  return g.omega_vol() * sum;
}

double norm_l2(const Field& f) { return std::sqrt(spectral_moment(f, 0)); }
double seminorm_h1(const Field& f) { return std::sqrt(spectral_moment(f, 1)); }
double norm_A(const Field& f) { return std::sqrt(spectral_moment(f, 2)); }
double norm_A32(const Field& f) { return std::sqrt(spectral_moment(f, 3)); }

double mean(const Field& f) { return f.coeffs()[0].real(); }

double max_abs_physical(const Field& f) {
  RealVec p = to_physical(f);
  double m = 0.0;
  for (double v : p) m = std::max(m, std::abs(v));
  return m;
}

double inner_l2(const Field& a, const Field& b) {
  if (!same_grid(a.grid(), b.grid()))
    throw std::invalid_argument("inner_l2: grid mismatch");
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  double sum = 0.0;
  for (std::size_t i = 0; i < ca.size(); ++i)
    sum += ca[i].real() * cb[i].real() + ca[i].imag() * cb[i].imag();
  return a.grid().omega_vol() * sum;
}

void dump_field(const Field& f, std::ostream& os) {
  const GridSpec& g = f.grid();
  os << "# spectral-field L=" << format_double(g.L) << " n1=" << g.n1
     << " n2=" << g.n2 << " dealias_fraction=" << format_double(g.dealias_fraction)
     << "\n";
  os << "# parity=" << (f.parity() == Parity::EvenInX2 ? "even" : "odd") << "\n";
  os << "k1,k2,re,im\n";
  const auto& c = f.coeffs();
  for (int i1 = 0; i1 < g.n1; ++i1)
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const std::size_t i = g.idx(i1, i2);
      os << format_double(g.k1[i1]) << ',' << format_double(g.k2[i2]) << ','
         << format_double(c[i].real()) << ',' << format_double(c[i].imag())
         << "\n";
    }
}

}  // namespace rb
