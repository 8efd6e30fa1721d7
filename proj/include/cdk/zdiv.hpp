#pragma once

#include <string>

#include "cdk/element.hpp"
#include "cdk/qlinalg.hpp"

namespace cdk {

struct ZeroDivisorPair {
    int level = 0;
    Element x, y;  // xy = 0, both nonzero
};

struct Annihilator {
    Element x;
    std::vector<Element> basis;  // spans {y : xy = 0}
};

// Matrix of y |-> xy in the canonical basis.
RatMatrix left_mul_matrix(const Element& x);

// Matrix of y |-> yx.
RatMatrix right_mul_matrix(const Element& x);

// Kernel of left (or right) multiplication by x. Empty basis means x is not
// a zero divisor on that side. Throws for x = 0.
Annihilator annihilator(const Element& x, bool right = false);

bool is_xbar_member(const Element& x, const Element& y);

struct SearchParams {
    int level = 4;
    int support = 2;               // max nonzero coefficients per candidate
    std::vector<long> coeffs = {-1, 1};
    bool right = false;            // search yx = 0 instead of xy = 0
};

// Refuses candidate families larger than this many kernel solves.
inline constexpr unsigned long long kSearchCap = 10'000'000ULL;

// Deterministic enumeration of sparse candidates x (1..support nonzero
// coefficients from the given set); for each, the full annihilator is
// computed and every (x, kernel basis vector) pair is emitted. Output is
// sorted lexicographically by (x support indices, x coefficients).
std::vector<ZeroDivisorPair> search_pairs(const SearchParams& params);

struct SmokeReport {
    bool pass = false;
    int level = 0;
    int samples = 0;
    unsigned long long seed = 0;
    std::string message;
};

// Verifies norm2(xy) = norm2(x) norm2(y) and empty annihilators on seeded
// random pairs. Only meaningful for n <= 3; throws for larger levels, where
// zero divisors exist.
SmokeReport no_zero_divisors_smoke(int level, int samples, unsigned long long seed);

}  // namespace cdk
