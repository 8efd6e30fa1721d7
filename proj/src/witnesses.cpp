#include "cdk/witnesses.hpp"

#include <array>

namespace cdk {

std::pair<Element, Element> commutativity_witness() {
    return {basis_element(2, 1), basis_element(2, 2)};
}

std::array<Element, 3> associativity_witness() {
    return {basis_element(3, 1), basis_element(3, 2), basis_element(3, 4)};
}

std::pair<Element, Element> alternativity_witness() {
    return {basis_element(4, 1) + basis_element(4, 10), basis_element(4, 4)};
}

std::pair<Element, Element> non_alternating_pair() { return alternativity_witness(); }

std::pair<Element, Element> canonical_zero_divisor() {
    // First output of search_pairs at level 4, support 2, coefficients {-1,1}:
    // x = -e1 - e10, y = e7 + e12.
    Element x = -(basis_element(4, 1) + basis_element(4, 10));
    Element y = basis_element(4, 7) + basis_element(4, 12);
    return {x, y};
}

}  // namespace cdk
