#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace peftocr {

// SplitMix64 finalizer. Used both as the generator step and for deriving
// per-record child seeds, so every consumer of randomness in the project is
// reproducible from (seed, stream id) alone, on any platform.
inline uint64_t mix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Counter-based pseudo-random generator (SplitMix64). The whole state is one
// 64-bit counter; next_u64() advances the counter by the golden-ratio
// increment and finalizes it. Identical seeds give identical sequences.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    // Child generator for an independent stream (e.g. one dataset record).
    static Rng child(uint64_t seed, uint64_t stream) {
        return Rng(mix64(seed) ^ mix64(0x5851F42D4C957F2Dull + stream));
    }

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). Plain modulo; the bias is irrelevant at the
    // scales used here and keeps the algorithm one line to document.
    uint64_t next_below(uint64_t n) {
        return n == 0 ? 0 : next_u64() % n;
    }

    // Signed integer in [lo, hi] inclusive.
    int64_t next_range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(next_below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // Standard normal via Box-Muller; the spare value is cached so the
    // consumed uniform sequence is deterministic.
    double next_gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        double u2 = next_double();
        // 1 - u1 keeps the log argument strictly positive.
        double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
        double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    // Fisher-Yates from the top of the range down.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace peftocr
