#pragma once

#include <iosfwd>
#include <span>

#include "rb/field.hpp"

namespace rb {

// ---- transforms ------------------------------------------------------------
//
// Coefficients are those of the normalized expansion
//   f(x) = sum_k fhat_k exp(i k.x),
// so to_spectral divides by n1*n2 and corrects for the grid origin at
// x2 = -1 (columns with odd m2 pick up a factor (-1)^m2).

// to_spectral parity-projects its output, so the result always satisfies the
// field invariants. Throws on shape mismatch.
Field to_spectral(const GridSpec& grid, std::span<const double> physical,
                  Parity parity);
RealVec to_physical(const Field& f);

// Exact projection onto the parity class: even (c(k1,k2)+c(k1,-k2))/2,
// odd (c(k1,k2)-c(k1,-k2))/2. Idempotent; also zeroes Nyquist modes.
Field parity_project(Field f);

// ---- derivatives and projections -------------------------------------------

Field ddx1(const Field& f);  // i*k1 per mode; preserves parity
Field ddx2(const Field& f);  // i*k2 per mode; flips parity

// Per-mode removal of the component along the wavevector; the k = 0 mode
// passes through unchanged. f1 must be even, f2 odd (throws otherwise).
VectorField leray_project(const Field& f1, const Field& f2);

// max |i k1 u1hat + i k2 u2hat| over retained modes (divergence residual)
double divergence_residual(const VectorField& u);

// ---- products ---------------------------------------------------------------

Field dealias(Field f);  // zero all modes with |m1| > keep1 or |m2| > keep2

// Dealiased pointwise product: both inputs are dealiased, multiplied on the
// collocation grid, transformed back, dealiased and parity-projected with the
// product parity. Throws on grid mismatch.
Field multiply(const Field& a, const Field& b);

// ---- norms ------------------------------------------------------------------
//
// Parseval convention: |f|^2 = |Omega| * sum_k |fhat_k|^2 with |Omega| = 2L.

// |Omega| * sum |k|^(2p) |fhat|^2  for p = 0, 1, 2, 3
double spectral_moment(const Field& f, int p);

double norm_l2(const Field& f);      // |f|
double seminorm_h1(const Field& f);  // ||f||
double norm_A(const Field& f);       // |A f|   (|k|^2 weight)
double norm_A32(const Field& f);     // |A^{3/2} f|
double mean(const Field& f);         // fhat(0,0)
double max_abs_physical(const Field& f);

// |Omega| * Re sum conj(ahat) bhat  (L2 inner product)
double inner_l2(const Field& a, const Field& b);

// ---- debug dump -------------------------------------------------------------

// Text header (grid, parity) followed by CSV rows k1,k2,re,im.
void dump_field(const Field& f, std::ostream& os);

// ---- in-place kernels (shared by the solver hot path) ------------------------

namespace kernels {
void zero_nyquist(const GridSpec& g, std::complex<double>* c);
void parity_project(const GridSpec& g, Parity p, std::complex<double>* c);
void dealias(const GridSpec& g, std::complex<double>* c);
// scale by 1/(n1*n2) and apply the x2-origin phase after a forward DFT
void forward_scale_phase(const GridSpec& g, std::complex<double>* c);
// apply the x2-origin phase before a backward DFT
void backward_phase(const GridSpec& g, std::complex<double>* c);
void leray(const GridSpec& g, std::complex<double>* c1, std::complex<double>* c2);
}  // namespace kernels

}  // namespace rb
