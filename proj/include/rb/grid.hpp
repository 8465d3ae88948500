#pragma once

#include <cstddef>
#include <vector>

namespace rb {

// Uniform collocation grid on the periodic extended domain (0,L) x (-1,1).
//
// Wavenumbers: k1 = (2*pi/L)*m1 with m1 in {-n1/2, ..., n1/2 - 1},
//              k2 = pi*m2       with m2 in {-n2/2, ..., n2/2 - 1}.
// Storage is k1-major; negative modes sit in the upper half of each axis
// (standard DFT layout). Nyquist modes (m = -n/2) are kept in storage but
// always zeroed: they have no conjugate partner.
struct GridSpec {
  double L = 2.0;
  int n1 = 0;
  int n2 = 0;
  double dealias_fraction = 2.0 / 3.0;

  std::vector<double> k1, k2;  // wavenumber by storage index
  std::vector<int> m1, m2;     // integer mode number by storage index
  int keep1 = 0, keep2 = 0;    // dealiasing: retain |m| <= keep

  std::size_t size() const { return static_cast<std::size_t>(n1) * n2; }
  std::size_t idx(int i1, int i2) const {
    return static_cast<std::size_t>(i1) * n2 + i2;
  }

  double dx1() const { return L / n1; }
  double dx2() const { return 2.0 / n2; }
  double x1(int i) const { return L * i / n1; }
  double x2(int j) const { return -1.0 + 2.0 * j / n2; }
  double omega_vol() const { return 2.0 * L; }

  // storage index of integer mode number m
  int index1(int m) const { return m >= 0 ? m : m + n1; }
  int index2(int m) const { return m >= 0 ? m : m + n2; }

  bool is_nyquist1(int i1) const { return i1 == n1 / 2; }
  bool is_nyquist2(int i2) const { return i2 == n2 / 2; }
  bool in_band(int i1, int i2) const {
    int a = m1[i1] < 0 ? -m1[i1] : m1[i1];
    int b = m2[i2] < 0 ? -m2[i2] : m2[i2];
    return a <= keep1 && b <= keep2;
  }
  // retained after dealiasing (inside band, not Nyquist)
  bool retained(int i1, int i2) const {
    return in_band(i1, i2) && !is_nyquist1(i1) && !is_nyquist2(i2);
  }
};

// Validates and builds a grid with precomputed wavenumber tables.
// Throws std::invalid_argument on odd/too-small resolutions or L <= 0.
GridSpec make_grid(double L, int n1, int n2, double dealias_fraction = 2.0 / 3.0);

bool same_grid(const GridSpec& a, const GridSpec& b);

}  // namespace rb
