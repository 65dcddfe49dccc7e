#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "rht/scalar.hpp"

namespace rht::testing {

// RHT_SEED overrides the default seed of the randomized property tests.
inline unsigned long long test_seed() {
    if (const char* s = std::getenv("RHT_SEED")) return std::stoull(s);
    return 20261015ULL;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(test_seed());
    return gen;
}

inline int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Scalar rand_scalar(int range = 3) {
    int n = 0;
    while (n == 0) n = rand_int(-range, range);
    Scalar out(n, rand_int(1, 2));
    out.canonicalize();
    return out;
}

}  // namespace rht::testing
