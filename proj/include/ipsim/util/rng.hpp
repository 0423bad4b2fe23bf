#pragma once

#include <cstdint>
#include <random>

namespace ipsim {

/// splitmix64 step; used to derive independent seeds from a root seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives a child seed for task `index` from a root seed. Tasks seeded this
/// way produce identical streams regardless of scheduling order.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t s = root ^ (0x5851f42d4c957f2dULL * (index + 1));
    splitmix64(s);
    return splitmix64(s);
}

double normal_quantile(double p);  // math/special.cpp

/// Deterministic random stream. Uniforms come from raw mt19937_64 bits and
/// normals from the inverse-CDF, so draws are identical across platforms
/// (std::normal_distribution is implementation-defined and avoided).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    /// Uniform on (0, 1), never returning 0 or 1 exactly.
    double uniform() {
        const std::uint64_t bits = engine_() >> 11;  // 53 random bits
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Integer uniform on [0, n). Rejection sampling keeps the draw unbiased.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    double normal() { return normal_quantile(uniform()); }

    std::uint64_t seed() const { return seed_; }

    /// Independent child stream for task `index`.
    Rng child(std::uint64_t index) const { return Rng(derive_seed(seed_, index)); }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace ipsim
