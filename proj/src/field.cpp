#include "rb/field.hpp"

#include "rb/operators.hpp"

namespace rb {

Field Field::from_coeffs(GridSpec grid, Parity parity, CxVec coeffs) {
  Field f(std::move(grid), parity);
  if (coeffs.size() != f.grid_.size())
    throw std::invalid_argument("coefficient array does not match the grid");
  f.coeffs_ = std::move(coeffs);
  f.canonicalize();
  return f;
}

void Field::canonicalize() {
  kernels::zero_nyquist(grid_, coeffs_.data());
  kernels::parity_project(grid_, parity_, coeffs_.data());
}

}  // namespace rb
