#ifndef GBM_RNG_HPP
#define GBM_RNG_HPP

#include <cstdint>

#include "gbm/gaussfn.hpp"

namespace gbm {

/** Counter-based generator: output i is a pure hash of (seed, stream, i), so
 * sequences are reproducible across platforms and insensitive to evaluation
 * order. Normal variates via the library's own inverse CDF. */
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() {
        std::uint64_t x = seed_ + 0x9E3779B97F4A7C15ull * (stream_ + 1);
        x = mix(x);
        x ^= mix(counter_++ * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull);
        return mix(x);
    }

    /** Uniform in the open interval (0,1). */
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    double normal() { return std_normal_inv(uniform()); }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace gbm

#endif
