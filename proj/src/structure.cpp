#include "cdk/structure.hpp"

#include <stdexcept>

namespace cdk {

Subalgebra make_subalgebra(int ambient_level, std::vector<Element> basis) {
    Subalgebra sub;
    sub.ambient_level = ambient_level;
    sub.basis = std::move(basis);
    for (const Element& b : sub.basis)
        if (b.level != ambient_level)
            throw std::invalid_argument("make_subalgebra: basis level mismatch");

    std::vector<RatVec> span;
    span.reserve(sub.basis.size());
    for (const Element& b : sub.basis) span.push_back(b.coeffs);

    const std::size_t k = sub.basis.size();
    // A degenerate (linearly dependent) basis never counts as closed.
    RatMatrix mat(span.empty() ? 0 : span[0].size(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < mat.rows; ++i) mat.at(i, j) = span[j][i];
    sub.closed = rank(mat) == k;
    sub.table.assign(k, std::vector<std::optional<RatVec>>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const Element prod = cd_mul(sub.basis[i], sub.basis[j]);
            sub.table[i][j] = membership(span, prod.coeffs);
            if (!sub.table[i][j]) sub.closed = false;
        }
    }
    return sub;
}

bool alternates(const Element& a, const Element& b) {
    return associator(a, a, b).is_zero();
}

bool alternates_strongly(const Element& a, const Element& b, int* failed) {
    if (!associator(a, a, b).is_zero()) {
        if (failed) *failed = 1;
        return false;
    }
    if (!associator(a, b, b).is_zero()) {
        if (failed) *failed = 2;
        return false;
    }
    if (failed) *failed = 0;
    return true;
}

Subalgebra quaternion_H(const Element& a) {
    if (a.is_zero()) throw std::invalid_argument("quaternion_H: a must be nonzero");
    if (purity(a) != Purity::doubly_pure)
        throw std::invalid_argument("quaternion_H: a must be doubly pure");
    return make_subalgebra(a.level, {basis_element(a.level, 0), tilde(a), a, e0_tilde(a.level)});
}

Subalgebra subalgebra_V(const Element& a, const Element& b) {
    if (purity(a) == Purity::general || purity(b) == Purity::general)
        throw std::invalid_argument("V: a and b must be pure");
    if (a.level != b.level) throw std::invalid_argument("V: level mismatch");
    return make_subalgebra(a.level,
                           {basis_element(a.level, 0), a, b, cd_mul(a, b)});
}

bool is_special_triple(const Element& a, const Element& b, const Element& c) {
    if (a.level != b.level || b.level != c.level)
        throw std::invalid_argument("is_special_triple: level mismatch");
    if (purity(a) == Purity::general || purity(b) == Purity::general ||
        purity(c) == Purity::general)
        return false;
    // (i) orthonormal
    if (norm2(a) != 1 || norm2(b) != 1 || norm2(c) != 1) return false;
    if (inner(a, b) != 0 || inner(a, c) != 0 || inner(b, c) != 0) return false;
    // (ii) pairwise strong alternation
    if (!alternates_strongly(a, b) || !alternates_strongly(a, c) ||
        !alternates_strongly(b, c))
        return false;
    // (iii) c in V(a;b)^perp
    const Element ab = cd_mul(a, b);
    if (inner(c, basis_element(a.level, 0)) != 0 || inner(c, ab) != 0) return false;
    return true;
}

Subalgebra octonion_O(const Element& a, const Element& b, const Element& c) {
    if (!is_special_triple(a, b, c))
        throw std::invalid_argument("octonion_O: triple is not special");
    const Element ab = cd_mul(a, b);
    return make_subalgebra(a.level, {basis_element(a.level, 0), a, b, ab, cd_mul(c, ab),
                                     cd_mul(c, b), cd_mul(a, c), c});
}

bool check_iso_to_level(const Subalgebra& sub, int m) {
    const std::size_t dim = std::size_t(1) << m;
    if (sub.basis.size() != dim)
        throw std::invalid_argument("check_iso_to_level: basis size is not 2^m");
    const StructureTable& ref = structure_table(m);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const auto& coords = sub.table[i][j];
            if (!coords) return false;
            for (std::size_t k = 0; k < dim; ++k) {
                const Rat expected = (k == ref.index_at(i, j)) ? Rat(ref.sign_at(i, j)) : Rat(0);
                if ((*coords)[k] != expected) return false;
            }
        }
    }
    return true;
}

}  // namespace cdk
