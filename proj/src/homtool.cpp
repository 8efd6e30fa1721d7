#include "cdk/homtool.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cdk {

namespace {

std::string describe(const Element& x);

void require_shape(const Monomorphism& map) {
    const std::size_t src = std::size_t(1) << map.m;
    const std::size_t dst = std::size_t(1) << map.n;
    if (map.m < 0 || map.n < 0 || map.m > map.n)
        throw std::invalid_argument("monomorphism: need 0 <= m <= n");
    if (map.columns.size() != src)
        throw std::invalid_argument("monomorphism: expected 2^m columns");
    for (const RatVec& c : map.columns)
        if (c.size() != dst)
            throw std::invalid_argument("monomorphism: expected column length 2^n");
}

std::string describe(const Element& x) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (i) os << ",";
        os << rat_to_string(x.coeffs[i]);
    }
    os << "]";
    return os.str();
}

}  // namespace

Element Monomorphism::apply(const Element& x) const {
    if (x.level != m) throw std::invalid_argument("apply: source level mismatch");
    Element out(n);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (x.coeffs[i] == 0) continue;
        for (std::size_t k = 0; k < out.dim(); ++k)
            out.coeffs[k] += x.coeffs[i] * columns[i][k];
    }
    return out;
}

Element Monomorphism::column_element(std::size_t i) const {
    return Element(n, columns[i]);
}

VerifyReport verify_monomorphism(const Monomorphism& map) {
    require_shape(map);
    VerifyReport rep;

    if (map.column_element(0) != basis_element(map.n, 0)) {
        rep.message = "phi(e0) != e0";
        return rep;
    }

    const std::size_t src = std::size_t(1) << map.m;

    // Multiplicativity on all basis pairs; bilinearity makes this sufficient.
    struct Failure {
        std::size_t i, j;
    };
    std::vector<Failure> failures;
#pragma omp parallel for collapse(2) schedule(static)
    for (std::size_t i = 0; i < src; ++i) {
        for (std::size_t j = 0; j < src; ++j) {
            const auto [s, k] = basis_product(i, j, map.m);
            Element lhs = s > 0 ? map.column_element(k) : -map.column_element(k);
            Element rhs = cd_mul(map.column_element(i), map.column_element(j));
            if (lhs != rhs) {
#pragma omp critical
                failures.push_back({i, j});
            }
        }
    }
    if (!failures.empty()) {
        std::sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) {
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
        rep.pair_i = long(failures[0].i);
        rep.pair_j = long(failures[0].j);
        std::ostringstream os;
        os << "multiplicativity fails at basis pair (e" << failures[0].i << ", e"
           << failures[0].j << ")";
        rep.message = os.str();
        return rep;
    }

    // Injectivity: trivial kernel of the matrix whose columns are the images.
    RatMatrix mat(std::size_t(1) << map.n, src);
    for (std::size_t j = 0; j < src; ++j)
        for (std::size_t i = 0; i < mat.rows; ++i) mat.at(i, j) = map.columns[j][i];
    if (!kernel(mat).empty()) {
        rep.message = "not injective: columns are linearly dependent";
        return rep;
    }

    // Norm preservation on deterministic samples.
    for (int variant = 0; variant < 3; ++variant) {
        Element x(map.m);
        for (std::size_t i = 0; i < x.dim(); ++i) {
            if (variant == 0)
                x.coeffs[i] = 1;
            else if (variant == 1)
                x.coeffs[i] = (i % 2 == 0) ? 1 : -1;
            else {
                Rat c(long(i) + 1, 2);
                c.canonicalize();
                x.coeffs[i] = c;
            }
        }
        if (norm2(map.apply(x)) != norm2(x)) {
            rep.message = "norm preservation fails on sample " + describe(x);
            return rep;
        }
    }

    rep.ok = true;
    rep.message = "verified";
    return rep;
}

Monomorphism mono_from_unit_pure(const Element& w) {
    if (purity(w) == Purity::general)
        throw std::invalid_argument("mono_from_unit_pure: w must be pure");
    if (norm2(w) != 1)
        throw std::invalid_argument("mono_from_unit_pure: w must have norm2 = 1");
    Monomorphism map;
    map.m = 1;
    map.n = w.level;
    map.columns = {basis_element(w.level, 0).coeffs, w.coeffs};
    return map;
}

Monomorphism mono_from_pair(const Element& a, const Element& b) {
    if (a.level != b.level) throw std::invalid_argument("mono_from_pair: level mismatch");
    if (purity(a) == Purity::general || purity(b) == Purity::general)
        throw std::invalid_argument("mono_from_pair: a and b must be pure");
    if (norm2(a) != 1 || norm2(b) != 1)
        throw std::invalid_argument("mono_from_pair: a and b must have norm2 = 1");
    if (inner(a, b) != 0)
        throw std::invalid_argument("mono_from_pair: a and b must be orthogonal");
    int failed = 0;
    if (!alternates_strongly(a, b, &failed))
        throw std::invalid_argument(
            failed == 1 ? "mono_from_pair: (a,a,b) != 0" : "mono_from_pair: (a,b,b) != 0");
    Monomorphism map;
    map.m = 2;
    map.n = a.level;
    map.columns = {basis_element(a.level, 0).coeffs, a.coeffs, b.coeffs, cd_mul(a, b).coeffs};
    return map;
}

Monomorphism mono_from_triple(const Element& a, const Element& b, const Element& c) {
    if (!is_special_triple(a, b, c))
        throw std::invalid_argument("mono_from_triple: triple is not special");
    const Element ab = cd_mul(a, b);
    Monomorphism map;
    map.m = 3;
    map.n = a.level;
    map.columns = {basis_element(a.level, 0).coeffs,
                   a.coeffs,
                   b.coeffs,
                   ab.coeffs,
                   cd_mul(c, ab).coeffs,
                   cd_mul(c, b).coeffs,
                   cd_mul(a, c).coeffs,
                   c.coeffs};
    return map;
}

MonoType classify_type(const Monomorphism& map) {
    require_shape(map);
    MonoType result;
    if (map.n < 1) return result;
    std::vector<RatVec> span = map.columns;
    result.witness_e_tilde = membership(span, e0_tilde(map.n).coeffs);
    if (!result.witness_e_tilde) return result;
    result.tag = MonoTag::type_I;
    if (map.n < 2) return result;
    result.witness_epsilon = membership(span, epsilon_element(map.n).coeffs);
    if (result.witness_epsilon) result.tag = MonoTag::type_II;
    return result;
}

Element epsilon_element(int n) {
    if (n < 2) throw std::invalid_argument("epsilon_element: level must be >= 2");
    return basis_element(n, std::size_t(1) << (n - 2));
}

Type2Analysis analyze_type2_alpha(const Element& alpha) {
    if (alpha.level < 2)
        throw std::invalid_argument("analyze_type2_alpha: level must be >= 2");
    if (alpha.is_zero()) throw std::invalid_argument("analyze_type2_alpha: alpha is zero");
    if (purity(alpha) != Purity::doubly_pure)
        throw std::invalid_argument("analyze_type2_alpha: alpha must be doubly pure");
    const Element eps = epsilon_element(alpha.level);
    if (inner(alpha, eps) != 0 || inner(alpha, tilde(eps)) != 0)
        throw std::invalid_argument("analyze_type2_alpha: alpha must be orthogonal to H_epsilon");

    Type2Analysis out;
    out.alpha = alpha;
    auto [a, b] = halves(alpha);
    out.a = a;
    out.b = b;

    // Decompose the second slot against H of the first; mirrored if a = 0.
    Element ref = a;
    Element tgt = b;
    if (a.is_zero()) {
        out.mirrored = true;
        ref = b;
        tgt = a;
    }
    const Rat n2 = norm2(ref);
    const Element ref_t = tilde(ref);
    out.c = (inner(tgt, ref) / n2) * ref + (inner(tgt, ref_t) / n2) * ref_t;
    out.d = tgt - out.c;
    out.kind = out.d.is_zero() ? Type2Kind::Projective : Type2Kind::ZeroDivisor;
    out.associator_vanishes = associator(alpha, alpha, eps).is_zero();

    if (out.kind == Type2Kind::ZeroDivisor) {
        const bool annihilates =
            cd_mul(ref, out.d).is_zero() && cd_mul(tilde(ref), out.d).is_zero();
        if (annihilates != out.associator_vanishes)
            throw std::logic_error("analyze_type2_alpha: ad = 0 disagrees with the associator");
    }
    return out;
}

Monomorphism type2_octonion(const Element& alpha) {
    Type2Analysis analysis = analyze_type2_alpha(alpha);
    if (alpha.level < 3)
        throw std::invalid_argument("type2_octonion: level must be >= 3");
    if (norm2(alpha) != 1)
        throw std::invalid_argument("type2_octonion: alpha must have norm2 = 1");
    const Element eps = epsilon_element(alpha.level);
    const Element assoc = associator(alpha, alpha, eps);
    if (!assoc.is_zero())
        throw std::invalid_argument("type2_octonion: (alpha,alpha,eps) = " + describe(assoc) +
                                    " is nonzero");
    // O_alpha is octonion_O over the special triple (tilde(eps), eps, alpha):
    // the ordered basis comes out as
    // (e0, tilde(eps), eps, tilde(e0), tilde(alpha), alpha*eps, tilde(eps)*alpha, alpha).
    return mono_from_triple(tilde(eps), eps, alpha);
}

std::pair<Element, Element> associator_bridge(const Element& a, const Element& b) {
    if (a.level != b.level) throw std::invalid_argument("associator_bridge: level mismatch");
    if (a.level < 1) throw std::invalid_argument("associator_bridge: level must be >= 1");
    if (purity(a) != Purity::doubly_pure && !a.is_zero())
        throw std::invalid_argument("associator_bridge: a must be doubly pure");
    if (purity(b) != Purity::doubly_pure && !b.is_zero())
        throw std::invalid_argument("associator_bridge: b must be doubly pure");
    const Element alpha = from_halves(a, b);
    return {associator(a, e0_tilde(a.level), b),
            associator(alpha, alpha, epsilon_element(alpha.level))};
}

}  // namespace cdk
