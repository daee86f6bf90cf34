#pragma once

#include <cstdint>
#include <random>

namespace twisthom {

// Seeded generator with platform-independent output. The std distributions are
// implementation-defined, so bounded draws are done by rejection here.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    // Uniform in [0, n); n must be positive.
    uint64_t below(uint64_t n) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [lo, hi].
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo) + 1)); }

    bool coin() { return (engine_() >> 63) != 0; }

  private:
    std::mt19937_64 engine_;
};

} // namespace twisthom
