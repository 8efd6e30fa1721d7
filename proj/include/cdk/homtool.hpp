#pragma once

#include <optional>
#include <string>

#include "cdk/structure.hpp"

namespace cdk {

// A linear map A_m -> A_n as a 2^n x 2^m rational matrix; column i is the
// image of e_i.
struct Monomorphism {
    int m = 0;
    int n = 0;
    std::vector<RatVec> columns;  // 2^m columns of length 2^n

    Element apply(const Element& x) const;
    Element column_element(std::size_t i) const;
};

struct VerifyReport {
    bool ok = false;
    std::string message;
    // Failing basis pair for multiplicativity violations, lexicographically
    // first; -1 otherwise.
    long pair_i = -1;
    long pair_j = -1;
};

// Checks phi(e0) = e0, multiplicativity on all 4^m basis pairs, and trivial
// kernel. On success also spot-checks norm preservation.
VerifyReport verify_monomorphism(const Monomorphism& map);

// A_1 -> A_n: x = r e0 + s e1 |-> r e0 + s w for a unit pure w.
Monomorphism mono_from_unit_pure(const Element& w);

// A_2 -> A_n: e1 -> a, e2 -> b, e3 -> ab for an orthonormal strongly
// alternating pure pair.
Monomorphism mono_from_pair(const Element& a, const Element& b);

// A_3 -> A_n: images follow the O(a;b;c) ordered basis.
Monomorphism mono_from_triple(const Element& a, const Element& b, const Element& c);

enum class MonoTag { plain, type_I, type_II };

struct MonoType {
    MonoTag tag = MonoTag::plain;
    std::optional<RatVec> witness_e_tilde;  // coordinates of tilde(e0) in the image
    std::optional<RatVec> witness_epsilon;  // coordinates of epsilon in the image
};

// Type I: tilde(e0) = e_{2^(n-1)} lies in the column span. Type II: also
// epsilon = e_{2^(n-2)} does (requires n >= 2).
MonoType classify_type(const Monomorphism& map);

enum class Type2Kind { Projective, ZeroDivisor };

struct Type2Analysis {
    Element alpha;
    Element a, b, c, d;  // half-level elements, b = c + d
    Type2Kind kind = Type2Kind::Projective;
    bool mirrored = false;           // a was zero; decomposition ran through b
    bool associator_vanishes = false;  // (alpha, alpha, epsilon) = 0
};

// Decomposes alpha = (a,b) with b = c + d, c in span{a, tilde(a)},
// d in H_a^perp. Requires alpha doubly pure, orthogonal to H_epsilon and
// nonzero. kind is Projective iff d = 0.
Type2Analysis analyze_type2_alpha(const Element& alpha);

// Builds the verified type II monomorphism A_3 -> A_n with image
// O_alpha = span{e0, tilde(eps), eps, tilde(e0), tilde(alpha), alpha*eps,
// tilde(eps)*alpha, alpha}. Requires norm2(alpha) = 1 and
// (alpha, alpha, epsilon) = 0; throws otherwise, reporting the nonzero
// associator in the message.
Monomorphism type2_octonion(const Element& alpha);

// The two sides of the level bridge: (a, tilde(e0), b) at level n and
// (alpha, alpha, epsilon) at level n+1 for alpha = (a,b). The first is zero
// iff the second is.
std::pair<Element, Element> associator_bridge(const Element& a, const Element& b);

// epsilon at level n, i.e. e_{2^(n-2)} = (tilde(e0), 0). Requires n >= 2.
Element epsilon_element(int n);

}  // namespace cdk
