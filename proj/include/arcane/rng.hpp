#pragma once

#include <cstdint>
#include <random>

namespace arcane {

// Seeded random stream. std::mt19937_64 output is fixed by the standard,
// so runs are reproducible across platforms; the standard distributions
// are not, which is why bounded draws are implemented here by hand.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform on [0, n), n >= 1, via rejection sampling (unbiased).
    int uniform_int(int n) {
        uint64_t un = static_cast<uint64_t>(n);
        uint64_t limit = UINT64_MAX - UINT64_MAX % un;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return static_cast<int>(x % un);
    }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform_real() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    // Uniform on [lo, hi).
    double uniform_real(double lo, double hi) {
        return lo + (hi - lo) * uniform_real();
    }

    bool operator==(const Rng& other) const { return eng_ == other.eng_; }

    // Derives an independent child seed from (seed, stream index).
    // SplitMix64 finalizer; stable across platforms.
    static uint64_t derive(uint64_t seed, uint64_t stream) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace arcane
