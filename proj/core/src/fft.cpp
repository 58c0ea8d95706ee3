#include "mlgp/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace mlgp::fft {

namespace {

// FFTW's planner is not thread-safe; plan creation is serialized and plans
// are reused via fftw_execute_dft, which is safe on distinct buffers.
// Plans are created with FFTW_ESTIMATE so the chosen algorithm (and hence
// the exact rounding of results) does not depend on runtime timings.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  void execute(std::vector<std::complex<double>>& data, const std::vector<int>& dims, int sign) {
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    if (data.size() != total) throw std::invalid_argument("fft: buffer/extent mismatch");

    fftw_plan plan;
    {
      std::scoped_lock lock(mutex_);
      auto key = std::make_pair(dims, sign);
      auto it = plans_.find(key);
      if (it == plans_.end()) {
        std::vector<std::complex<double>> scratch(total);
        auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
        plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), ptr, ptr, sign,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (plan == nullptr) throw std::runtime_error("fft: planning failed");
        plans_.emplace(key, plan);
      } else {
        plan = it->second;
      }
    }
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, ptr, ptr);
  }

 private:
  PlanCache() = default;
  std::mutex mutex_;
  std::map<std::pair<std::vector<int>, int>, fftw_plan> plans_;
};

}  // namespace

void forward(std::vector<std::complex<double>>& data, const std::vector<int>& dims) {
  PlanCache::instance().execute(data, dims, FFTW_FORWARD);
}

void backward(std::vector<std::complex<double>>& data, const std::vector<int>& dims) {
  PlanCache::instance().execute(data, dims, FFTW_BACKWARD);
}

int next_pow2(int v) {
  int p = 1;
  while (p < v) p *= 2;
  return p;
}

}  // namespace mlgp::fft
