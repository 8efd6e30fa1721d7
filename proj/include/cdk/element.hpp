#pragma once

#include <cstddef>
#include <vector>

#include "cdk/qlinalg.hpp"
#include "cdk/rational.hpp"

namespace cdk {

enum class Purity { general, pure, doubly_pure };

// A point of the Cayley-Dickson algebra A_n = Q^(2^n): level n plus 2^n
// exact rational coefficients. coeffs[0] is the real part (unit e0).
struct Element {
    int level = 0;
    RatVec coeffs;  // size 2^level

    Element() : coeffs(1, Rat(0)) {}
    explicit Element(int n) : level(n), coeffs(std::size_t(1) << n, Rat(0)) {}
    Element(int n, RatVec c);

    std::size_t dim() const { return coeffs.size(); }
    bool is_zero() const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;  // cd_mul
    bool operator==(const Element& o) const = default;
};

Element operator*(const Rat& s, const Element& x);

// e_i at level n.
Element basis_element(int n, std::size_t i);

// The recursive doubling product (a,b)(x,y) = (ax - conj(y)b, ya + b conj(x)).
// Level 0 is plain rational multiplication. Throws on level mismatch.
Element cd_mul(const Element& x, const Element& y);

// Negates every coefficient except index 0.
Element conjugate(const Element& x);

// 2 * real part.
Rat trace(const Element& x);

// Sum of squared coefficients; equals the e0-coefficient of x * conj(x).
Rat norm2(const Element& x);

// Standard dot product of coefficient vectors. Throws on level mismatch.
Rat inner(const Element& x, const Element& y);

// (a,b) -> (-b, a). Undefined at level 0; throws.
Element tilde(const Element& x);

// e_{2^(n-1)} at level n, i.e. tilde(e0).
Element e0_tilde(int n);

Purity purity(const Element& x);

// (xy)z - x(yz)
Element associator(const Element& x, const Element& y, const Element& z);

// xy - yx
Element commutator(const Element& x, const Element& y);

// Split an element of A_n into its two A_(n-1) halves.
std::pair<Element, Element> halves(const Element& x);

// Assemble (a, b) in A_(n+1) from two level-n halves.
Element from_halves(const Element& a, const Element& b);

}  // namespace cdk
