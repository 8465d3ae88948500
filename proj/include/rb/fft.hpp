#pragma once

#include <complex>

#include "rb/grid.hpp"

namespace rb::fft {

// Unnormalized 2D complex DFTs in the GridSpec storage layout (k1-major).
// forward:  out[m] = sum_j in[j] exp(-2*pi*i*<j,m>/n)
// backward: out[j] = sum_m in[m] exp(+2*pi*i*<j,m>/n)
// Plans are cached per (n1,n2) and created with FFTW_ESTIMATE so that the
// algorithm choice, and hence the rounding, is reproducible run to run.
// in and out must be distinct, 64-byte aligned arrays of size n1*n2.
void forward(const GridSpec& grid, const std::complex<double>* in,
             std::complex<double>* out);
void backward(const GridSpec& grid, const std::complex<double>* in,
              std::complex<double>* out);

}  // namespace rb::fft
