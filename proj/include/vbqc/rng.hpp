#pragma once

#include <cstdint>
#include <random>

namespace vbqc {

// splitmix64; used for seeding and child-stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Deterministic random stream. mt19937_64 output is fixed by the standard,
// and doubles/ints are derived from raw 64-bit draws here so results do not
// depend on the standard library's distribution internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // [0, bound); bound >= 1.
    std::uint32_t uniform_int(std::uint32_t bound) {
        // rejection sampling, no modulo bias
        std::uint64_t limit = (~0ull / bound) * bound;
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return static_cast<std::uint32_t>(v % bound);
    }

    int bit() { return static_cast<int>(next_u64() >> 63); }

    // Child-stream rule: child(seed, index) = splitmix64 chain over
    // (seed, index + 1). Runs seeded this way are order-independent.
    static std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t s = seed;
        std::uint64_t a = splitmix64(s);
        s = a ^ (0x9e3779b97f4a7c15ull * (index + 1));
        return splitmix64(s);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace vbqc
