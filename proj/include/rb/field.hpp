#pragma once

#include <complex>
#include <cstddef>
#include <new>
#include <vector>

#include "rb/grid.hpp"

namespace rb {

// Symmetry class in the x2-direction on the extended domain.
// Horizontal velocity and pressure-like fields are even; vertical velocity
// and temperature are odd.
enum class Parity { EvenInX2, OddInX2 };

inline Parity flip(Parity p) {
  return p == Parity::EvenInX2 ? Parity::OddInX2 : Parity::EvenInX2;
}
inline Parity product_parity(Parity a, Parity b) {
  return a == b ? Parity::EvenInX2 : Parity::OddInX2;
}

// 64-byte aligned allocator so coefficient arrays share one alignment class
// (required for executing cached FFTW plans on arbitrary field buffers).
template <class T>
struct AlignedAlloc {
  using value_type = T;
  static constexpr std::size_t alignment = 64;

  AlignedAlloc() noexcept = default;
  template <class U>
  AlignedAlloc(const AlignedAlloc<U>&) noexcept {}

  T* allocate(std::size_t n) {
    return static_cast<T*>(::operator new(n * sizeof(T), std::align_val_t(alignment)));
  }
  void deallocate(T* p, std::size_t) noexcept {
    ::operator delete(p, std::align_val_t(alignment));
  }
  template <class U>
  bool operator==(const AlignedAlloc<U>&) const noexcept {
    return true;
  }
};

using CxVec = std::vector<std::complex<double>, AlignedAlloc<std::complex<double>>>;
using RealVec = std::vector<double, AlignedAlloc<double>>;

// Parity-constrained double-Fourier coefficient field on the extended domain.
//
// Invariants (maintained by every constructor and operator in this library):
//   - Hermitian symmetry   coeff(-k) = conj(coeff(k))  (real physical field)
//   - parity               even: c(k1,k2) = c(k1,-k2); odd: c(k1,k2) = -c(k1,-k2)
//   - Nyquist modes zero
//   - odd fields have c(k1,0) = 0 for all k1 (hence zero spatial mean)
class Field {
 public:
  Field(GridSpec grid, Parity parity)
      : grid_(std::move(grid)), parity_(parity), coeffs_(grid_.size()) {}

  // Builds a field from raw coefficients and canonicalizes (zeroes Nyquist
  // modes, projects onto the parity class).
  static Field from_coeffs(GridSpec grid, Parity parity, CxVec coeffs);

  const GridSpec& grid() const { return grid_; }
  Parity parity() const { return parity_; }

  CxVec& coeffs() { return coeffs_; }
  const CxVec& coeffs() const { return coeffs_; }

  // access by integer mode number
  std::complex<double>& at(int m1, int m2) {
    return coeffs_[grid_.idx(grid_.index1(m1), grid_.index2(m2))];
  }
  const std::complex<double>& at(int m1, int m2) const {
    return coeffs_[grid_.idx(grid_.index1(m1), grid_.index2(m2))];
  }

  // Re-establishes the canonical form in place. A no-op (bitwise) on fields
  // that already satisfy the invariants.
  void canonicalize();

 private:
  GridSpec grid_;
  Parity parity_;
  CxVec coeffs_;
};

// Divergence-free velocity pair (u1 even, u2 odd).
struct VectorField {
  Field u1;
  Field u2;
};

}  // namespace rb
