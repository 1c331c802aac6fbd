#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace msm::detail {
namespace {

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    // FFTW_ESTIMATE keeps plans (and therefore results) deterministic.
    auto* in = fftw_alloc_complex(n * n);
    auto* out = fftw_alloc_complex(n * n);
    fftw_plan plan = fftw_plan_dft_2d(static_cast<int>(n), static_cast<int>(n), in, out,
                                      sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

void dft2d(std::size_t n, int sign, const std::complex<double>* in, std::complex<double>* out) {
  fftw_plan plan = cache().get(n, sign);
  // fftw_execute_dft does not modify the input for out-of-place plans.
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace msm::detail
