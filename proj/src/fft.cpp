#include "rb/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace rb::fft {

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

// Plan creation is not thread-safe in FFTW; executing a cached plan on new
// arrays is. Arrays passed in are 64-byte aligned (AlignedAlloc), matching
// the fftw_malloc'd buffers the plans were created on.
std::mutex plan_mutex;
std::map<std::pair<int, int>, PlanPair>& plan_cache() {
  static std::map<std::pair<int, int>, PlanPair> cache;
  return cache;
}

const PlanPair& plans_for(int n1, int n2) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto& cache = plan_cache();
  auto it = cache.find({n1, n2});
  if (it != cache.end()) return it->second;

  fftw_complex* a = fftw_alloc_complex(static_cast<std::size_t>(n1) * n2);
  fftw_complex* b = fftw_alloc_complex(static_cast<std::size_t>(n1) * n2);
  PlanPair p;
  p.fwd = fftw_plan_dft_2d(n1, n2, a, b, FFTW_FORWARD, FFTW_ESTIMATE);
  p.bwd = fftw_plan_dft_2d(n1, n2, a, b, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_free(a);
  fftw_free(b);
  return cache.emplace(std::make_pair(n1, n2), p).first->second;
}

}  // namespace

void forward(const GridSpec& grid, const std::complex<double>* in,
             std::complex<double>* out) {
  const PlanPair& p = plans_for(grid.n1, grid.n2);
  fftw_execute_dft(p.fwd,
                   reinterpret_cast<fftw_complex*>(
                       const_cast<std::complex<double>*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void backward(const GridSpec& grid, const std::complex<double>* in,
              std::complex<double>* out) {
  const PlanPair& p = plans_for(grid.n1, grid.n2);
  fftw_execute_dft(p.bwd,
                   reinterpret_cast<fftw_complex*>(
                       const_cast<std::complex<double>*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace rb::fft
