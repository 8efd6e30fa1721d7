#pragma once

#include <array>
#include <utility>

#include "cdk/element.hpp"

namespace cdk {

// Frozen counterexamples. Each was computed once by the exhaustive searches
// in this repository (see tests), then pinned here so suites can cite a
// concrete witness without re-searching.

// Level 2: e1 e2 = e3 but e2 e1 = -e3.
std::pair<Element, Element> commutativity_witness();

// Level 3: (e1, e2, e4) has a nonzero associator.
std::array<Element, 3> associativity_witness();

// Level 4: x = e1 + e10, y = e4 with (x, x, y) != 0.
std::pair<Element, Element> alternativity_witness();

// Level 4 pair failing strong alternation (same witness: (x,x,y) != 0).
std::pair<Element, Element> non_alternating_pair();

// The lexicographically first level-4 zero-divisor pair found by
// search_pairs with support 2 and coefficients {-1, 1}.
std::pair<Element, Element> canonical_zero_divisor();

}  // namespace cdk
