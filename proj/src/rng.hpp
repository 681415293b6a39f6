#pragma once

#include <cstdint>
#include <random>

namespace edgerank::detail {

// mt19937_64 with hand-rolled value conversions so that sequences are
// identical across standard libraries.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(uint64_t seed) : eng(seed) {}

    uint64_t u64() { return eng(); }

    // uniform in [0,1), 53 bits
    double real() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

    double real(double lo, double hi) { return lo + (hi - lo) * real(); }

    // uniform in [0,k)
    size_t below(size_t k) {
        return static_cast<size_t>((static_cast<unsigned __int128>(eng()) * k) >> 64);
    }
};

// splitmix64 step; used to derive independent per-trial seeds.
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
    uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace edgerank::detail
