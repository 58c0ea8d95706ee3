#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace mlgp {

/// Counter-based Philox4x64-10 generator.
///
/// All randomness in the library flows from a single master seed; independent
/// streams (chain proposals, acceptance draws, measurement noise, ...) are
/// obtained by keying the generator with (seed, stream) so they never overlap
/// and every run is reproducible from the seed alone. Output matches the
/// reference Philox4x64 sequence for a given key and counter.
class Philox {
 public:
  using result_type = std::uint64_t;

  Philox() : Philox(0, 0) {}
  Philox(std::uint64_t seed, std::uint64_t stream) : key_{seed, stream} {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<std::uint64_t>::max(); }

  result_type operator()() {
    if (have_ == 0) {
      block_ = round10(counter_, key_);
      bump_counter();
      have_ = 4;
    }
    return block_[4 - have_--];
  }

  /// Skip ahead to an absolute 256-bit counter position (block index).
  void set_counter(std::uint64_t c0, std::uint64_t c1 = 0) {
    counter_ = {c0, c1, 0, 0};
    have_ = 0;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; safe as a log() argument.
  double uniform_open() {
    return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
  }

  /// Standard normal draw (Box-Muller; caches the second variate).
  double normal();

 private:
  static std::array<std::uint64_t, 4> round10(std::array<std::uint64_t, 4> ctr,
                                              std::array<std::uint64_t, 2> key);
  void bump_counter() {
    for (auto& c : counter_) {
      if (++c != 0) break;
    }
  }

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> block_{};
  int have_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Fixed stream identifiers hung off the master seed. Chain c uses
/// kChainBase + c * kChainStride plus a per-purpose offset.
namespace streams {
inline constexpr std::uint64_t kMeasurementNoise = 1;
inline constexpr std::uint64_t kPrior = 2;
inline constexpr std::uint64_t kChainBase = 16;
inline constexpr std::uint64_t kChainStride = 8;
inline constexpr std::uint64_t kProposal = 0;
inline constexpr std::uint64_t kAccept = 1;
inline constexpr std::uint64_t kLastLayer = 2;
inline constexpr std::uint64_t kInit = 3;

inline std::uint64_t chain(std::uint64_t chain_index, std::uint64_t purpose) {
  return kChainBase + chain_index * kChainStride + purpose;
}
}  // namespace streams

}  // namespace mlgp
