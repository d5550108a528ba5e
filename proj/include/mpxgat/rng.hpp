#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mpxgat {

// Deterministic RNG. mt19937_64 with hand-rolled distributions so that a
// given seed produces the same stream on every platform/compiler
// (std::uniform_int_distribution et al. are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Unbiased integer in [0, n). n must be > 0.
    std::uint64_t uniform(std::uint64_t n);

    // 53-bit double in [0, 1).
    double uniform_real() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_real() < p; }

    // Standard normal, Box-Muller with one cached variate.
    double normal();

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // k distinct indices from [0, n), Floyd's algorithm; result sorted.
    std::vector<std::uint64_t> sample_indices(std::uint64_t n, std::uint64_t k);

    // Mixes a stream index into a base seed (splitmix64 finalizer).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 gen_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

} // namespace mpxgat
