#include "rb/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rb {

GridSpec make_grid(double L, int n1, int n2, double dealias_fraction) {
  if (L <= 0.0) throw std::invalid_argument("grid.L must be > 0");
  if (n1 < 8 || n1 % 2 != 0)
    throw std::invalid_argument("grid.n1 must be even and >= 8, got " +
                                std::to_string(n1));
  if (n2 < 8 || n2 % 2 != 0)
    throw std::invalid_argument("grid.n2 must be even and >= 8, got " +
                                std::to_string(n2));
  if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
    throw std::invalid_argument("grid.dealias_fraction must lie in (0, 1]");

  GridSpec g;
  g.L = L;
  g.n1 = n1;
  g.n2 = n2;
  g.dealias_fraction = dealias_fraction;

  const double pi = std::acos(-1.0);
  g.k1.resize(n1);
  g.m1.resize(n1);
  for (int i = 0; i < n1; ++i) {
    int m = i < n1 / 2 ? i : i - n1;
    g.m1[i] = m;
    g.k1[i] = 2.0 * pi / L * m;
  }
  g.k2.resize(n2);
  g.m2.resize(n2);
  for (int j = 0; j < n2; ++j) {
    int m = j < n2 / 2 ? j : j - n2;
    g.m2[j] = m;
    g.k2[j] = pi * m;
  }

  // retain |m| <= fraction*n/2; the epsilon keeps exact rational cutoffs
  // (like 2/3 * 24) from landing one mode short in binary arithmetic
  g.keep1 = static_cast<int>(std::floor(dealias_fraction * n1 / 2 + 1e-9));
  g.keep2 = static_cast<int>(std::floor(dealias_fraction * n2 / 2 + 1e-9));
  return g;
}

bool same_grid(const GridSpec& a, const GridSpec& b) {
  return a.L == b.L && a.n1 == b.n1 && a.n2 == b.n2 &&
         a.dealias_fraction == b.dealias_fraction;
}

}  // namespace rb
