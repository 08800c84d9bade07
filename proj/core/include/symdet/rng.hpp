#pragma once

#include <cstdint>
#include <random>

#include "symdet/errors.hpp"

namespace symdet {

// splitmix64; used to whiten seeds and to derive independent per-trial
// streams from one master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d4a2ca9f13d55ull * 2 + 1;
    x = x ^ (x >> 31);
    return x;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0) {
    return splitmix64(splitmix64(master ^ 0x6a09e667f3bcc908ull) ^
                      splitmix64(a * 0xd6e8feb86659fd93ull + b));
}

// All randomness flows through mt19937_64 with hand-rolled draws below, so a
// fixed seed reproduces the same values on every run of the same build.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, bound); unbiased via rejection. bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform integer on [lo, hi] inclusive.
    long integer(long lo, long hi) {
        if (lo > hi) throw InvalidRange("empty integer range");
        const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return static_cast<long>(static_cast<std::int64_t>(lo) +
                                 static_cast<std::int64_t>(below(span)));
    }

    // Uniform nonzero integer on [lo, hi] \ {0}.
    long nonzero_integer(long lo, long hi) {
        if (lo > hi || (lo == 0 && hi == 0))
            throw InvalidRange("range contains no nonzero integer");
        long v;
        do {
            v = integer(lo, hi);
        } while (v == 0);
        return v;
    }

    // Uniform double on [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace symdet
