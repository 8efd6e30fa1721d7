#pragma once

#include <optional>

#include "cdk/element.hpp"
#include "cdk/table.hpp"

namespace cdk {

// An ordered orthogonal basis of A_n together with the coordinates of every
// pairwise basis product in that basis. Basis order is meaningful: table
// comparison against a reference level is order-sensitive.
struct Subalgebra {
    int ambient_level = 0;
    std::vector<Element> basis;
    // table[i][j] = coordinates of basis[i]*basis[j] in the basis, or empty
    // (nullopt) when the product falls outside the span.
    std::vector<std::vector<std::optional<RatVec>>> table;
    bool closed = false;
};

// Computes the product table (exact span membership) for an ordered basis.
Subalgebra make_subalgebra(int ambient_level, std::vector<Element> basis);

// (a,a,b) = 0
bool alternates(const Element& a, const Element& b);

// (a,a,b) = 0 and (a,b,b) = 0. When not null, *failed is set to 1 or 2
// identifying which associator was the first to fail.
bool alternates_strongly(const Element& a, const Element& b, int* failed = nullptr);

// The quaternion copy H_a spanned by (e0, tilde(a), a, tilde(e0)) for a
// doubly pure, nonzero a. Table entries carry norm2(a) factors when a is
// not a unit. Throws if a is zero or not doubly pure.
Subalgebra quaternion_H(const Element& a);

// V(a;b) with ordered basis (e0, a, b, ab) for pure a, b. Closure is
// whatever the exact membership checks find; callers inspect .closed.
Subalgebra subalgebra_V(const Element& a, const Element& b);

// Orthonormal (norm2 = 1, pairwise inner 0), pairwise strongly alternating,
// pure, and c orthogonal to all of {e0, a, b, ab}.
bool is_special_triple(const Element& a, const Element& b, const Element& c);

// The octonion copy O(a;b;c) with ordered basis
// (e0, a, b, ab, c(ab), cb, ac, c). Throws if the triple is not special.
Subalgebra octonion_O(const Element& a, const Element& b, const Element& c);

// True iff the subalgebra's table, in its given basis order, matches the
// level-m structure table entry for entry. Throws if the basis does not
// have 2^m elements.
bool check_iso_to_level(const Subalgebra& sub, int m);

}  // namespace cdk
