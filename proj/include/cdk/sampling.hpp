#pragma once

#include <random>

#include "cdk/element.hpp"

namespace cdk {

// All randomized suites draw from mt19937_64 so a seed pins the exact
// sample sequence across runs and platforms.
using Rng = std::mt19937_64;

// Coefficients uniform over {-3,...,3}; with halves = true, each coefficient
// additionally picks denominator 1 or 2. Small integers keep rational growth
// bounded while exercising every identity.
inline Element random_element(int level, Rng& rng, bool halves = true) {
    Element x(level);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    for (std::size_t i = 0; i < x.dim(); ++i) {
        Rat c(num(rng), halves ? den(rng) : 1);
        c.canonicalize();
        x.coeffs[i] = c;
    }
    return x;
}

inline Element random_pure(int level, Rng& rng, bool halves = true) {
    Element x = random_element(level, rng, halves);
    x.coeffs[0] = 0;
    return x;
}

inline Element random_doubly_pure(int level, Rng& rng, bool halves = true) {
    Element x = random_pure(level, rng, halves);
    x.coeffs[x.dim() / 2] = 0;
    return x;
}

inline Element random_nonzero_doubly_pure(int level, Rng& rng, bool halves = true) {
    for (;;) {
        Element x = random_doubly_pure(level, rng, halves);
        if (!x.is_zero()) return x;
    }
}

}  // namespace cdk
