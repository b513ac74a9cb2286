#ifndef TRAPDIST_RANDOM_HPP
#define TRAPDIST_RANDOM_HPP

#include <cstdint>
#include <random>

namespace trapdist {

// Seedable random stream backed by MT19937-64 (std::mt19937_64, default
// parameters). Uniform variates take the top 53 bits of each 64-bit draw,
// so sequences are reproducible by any implementation of the same engine.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer on [0, n), as floor(n * uniform()).
  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(uniform() * n); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace trapdist

#endif  // TRAPDIST_RANDOM_HPP
