#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace swarmnet {

// Source of uniform draws consumed by the optimizers. Every random quantity
// in the library is derived from uniform() so a scripted source can replay an
// exact stream in tests.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  // Uniform on [0, 1).
  virtual double uniform() = 0;

  // Uniform on [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }
};

// mt19937_64 with a portable mapping to doubles: the top 53 bits of each
// 64-bit output scaled by 2^-53. Both the engine and the mapping are fully
// specified, so streams are identical across platforms and standard
// libraries (std::uniform_real_distribution is not).
class Rng final : public RandomSource {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() override;

  // Uniform integer in [0, bound) by rejection; bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace swarmnet
