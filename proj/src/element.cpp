#include "cdk/element.hpp"

#include <stdexcept>

namespace cdk {

namespace {

void require_same_level(const Element& x, const Element& y, const char* op) {
    if (x.level != y.level)
        throw std::invalid_argument(std::string(op) + ": level mismatch");
}

}  // namespace

Element::Element(int n, RatVec c) : level(n), coeffs(std::move(c)) {
    if (coeffs.size() != (std::size_t(1) << n))
        throw std::invalid_argument("Element: coefficient count must be 2^level");
}

bool Element::is_zero() const {
    for (const Rat& c : coeffs)
        if (c != 0) return false;
    return true;
}

Element Element::operator+(const Element& o) const {
    require_same_level(*this, o, "add");
    Element r(level);
    for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = coeffs[i] + o.coeffs[i];
    return r;
}

Element Element::operator-(const Element& o) const {
    require_same_level(*this, o, "sub");
    Element r(level);
    for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = coeffs[i] - o.coeffs[i];
    return r;
}

Element Element::operator-() const {
    Element r(level);
    for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = -coeffs[i];
    return r;
}

Element Element::operator*(const Element& o) const { return cd_mul(*this, o); }

Element operator*(const Rat& s, const Element& x) {
    Element r(x.level);
    for (std::size_t i = 0; i < x.dim(); ++i) r.coeffs[i] = s * x.coeffs[i];
    return r;
}

Element basis_element(int n, std::size_t i) {
    Element r(n);
    if (i >= r.dim()) throw std::out_of_range("basis_element: index out of range");
    r.coeffs[i] = 1;
    return r;
}

std::pair<Element, Element> halves(const Element& x) {
    if (x.level < 1) throw std::invalid_argument("halves: level 0 has no halves");
    const std::size_t h = x.dim() / 2;
    Element a(x.level - 1), b(x.level - 1);
    for (std::size_t i = 0; i < h; ++i) {
        a.coeffs[i] = x.coeffs[i];
        b.coeffs[i] = x.coeffs[h + i];
    }
    return {std::move(a), std::move(b)};
}

Element from_halves(const Element& a, const Element& b) {
    require_same_level(a, b, "from_halves");
    Element r(a.level + 1);
    const std::size_t h = a.dim();
    for (std::size_t i = 0; i < h; ++i) {
        r.coeffs[i] = a.coeffs[i];
        r.coeffs[h + i] = b.coeffs[i];
    }
    return r;
}

Element cd_mul(const Element& x, const Element& y) {
    require_same_level(x, y, "cd_mul");
    if (x.level == 0) {
        Element r(0);
        r.coeffs[0] = x.coeffs[0] * y.coeffs[0];
        return r;
    }
    const auto [a, b] = halves(x);
    const auto [c, d] = halves(y);
    // (a,b)(c,d) = (ac - conj(d) b, da + b conj(c))
    return from_halves(cd_mul(a, c) - cd_mul(conjugate(d), b),
                       cd_mul(d, a) + cd_mul(b, conjugate(c)));
}

Element conjugate(const Element& x) {
    Element r = -x;
    r.coeffs[0] = x.coeffs[0];
    return r;
}

Rat trace(const Element& x) { return 2 * x.coeffs[0]; }

Rat norm2(const Element& x) {
    Rat s(0);
    for (const Rat& c : x.coeffs) s += c * c;
    return s;
}

Rat inner(const Element& x, const Element& y) {
    require_same_level(x, y, "inner");
    return dot(x.coeffs, y.coeffs);
}

Element tilde(const Element& x) {
    if (x.level < 1) throw std::invalid_argument("tilde: undefined at level 0");
    const auto [a, b] = halves(x);
    return from_halves(-b, a);
}

Element e0_tilde(int n) {
    if (n < 1) throw std::invalid_argument("e0_tilde: level must be >= 1");
    return basis_element(n, std::size_t(1) << (n - 1));
}

Purity purity(const Element& x) {
    if (x.coeffs[0] != 0) return Purity::general;
    if (x.level >= 1 && x.coeffs[x.dim() / 2] == 0) return Purity::doubly_pure;
    return Purity::pure;
}

Element associator(const Element& x, const Element& y, const Element& z) {
    require_same_level(x, y, "associator");
    require_same_level(y, z, "associator");
    return cd_mul(cd_mul(x, y), z) - cd_mul(x, cd_mul(y, z));
}

Element commutator(const Element& x, const Element& y) {
    require_same_level(x, y, "commutator");
    return cd_mul(x, y) - cd_mul(y, x);
}

}  // namespace cdk
