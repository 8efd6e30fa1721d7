#include <doctest.h>

#include "cdk/sampling.hpp"
#include "cdk/table.hpp"
#include "cdk/witnesses.hpp"

using namespace cdk;

TEST_CASE("unit element and level-1 square") {
    // e0 x = x e0 = x exhaustively on basis, levels 0..4
    for (int n = 0; n <= 4; ++n) {
        const Element e0 = basis_element(n, 0);
        for (std::size_t i = 0; i < (std::size_t(1) << n); ++i) {
            const Element ei = basis_element(n, i);
            CHECK(cd_mul(e0, ei) == ei);
            CHECK(cd_mul(ei, e0) == ei);
        }
    }
    // e1^2 = -e0 at level 1
    CHECK(cd_mul(basis_element(1, 1), basis_element(1, 1)) == -basis_element(1, 0));
}

TEST_CASE("hand-expanded level-2 products") {
    CHECK(cd_mul(basis_element(2, 1), basis_element(2, 2)) == basis_element(2, 3));
    CHECK(cd_mul(basis_element(2, 2), basis_element(2, 1)) == -basis_element(2, 3));
    CHECK(cd_mul(basis_element(2, 1), basis_element(2, 3)) == -basis_element(2, 2));
}

TEST_CASE("cd_mul rejects level mismatch") {
    CHECK_THROWS_AS(cd_mul(basis_element(1, 0), basis_element(2, 0)), std::invalid_argument);
    CHECK_THROWS_AS(inner(basis_element(1, 0), basis_element(2, 0)), std::invalid_argument);
}

TEST_CASE("conjugate, trace, norm2, inner basics") {
    CHECK(conjugate(basis_element(2, 0)) == basis_element(2, 0));
    for (std::size_t i = 1; i < 8; ++i)
        CHECK(conjugate(basis_element(3, i)) == -basis_element(3, i));
    Element x = Rat(3) * basis_element(3, 0) + Rat(5) * basis_element(3, 7);
    CHECK(conjugate(x) == Rat(3) * basis_element(3, 0) - Rat(5) * basis_element(3, 7));
    CHECK(trace(basis_element(3, 0)) == 2);
    CHECK(trace(basis_element(3, 5)) == 0);
    CHECK(trace(x) == 6);
    CHECK(norm2(basis_element(4, 0)) == 1);
    CHECK(norm2(basis_element(4, 1) + basis_element(4, 10)) == 2);
    CHECK(norm2(Element(4)) == 0);
    CHECK(inner(basis_element(3, 2), basis_element(3, 2)) == 1);
    CHECK(inner(basis_element(3, 2), basis_element(3, 3)) == 0);
    CHECK(inner(basis_element(2, 1) + basis_element(2, 2), basis_element(2, 2)) == 1);
    // 2<e1,e1> = trace(e1 conj(e1))
    CHECK(2 * inner(basis_element(1, 1), basis_element(1, 1)) ==
          trace(cd_mul(basis_element(1, 1), conjugate(basis_element(1, 1)))));
}

TEST_CASE("conjugation and norm properties on random samples") {
    Rng rng(3);
    for (int n = 1; n <= 5; ++n) {
        for (int i = 0; i < 20; ++i) {
            const Element x = random_element(n, rng), y = random_element(n, rng);
            CHECK(x + conjugate(x) == trace(x) * basis_element(n, 0));
            CHECK(conjugate(conjugate(x)) == x);
            CHECK(conjugate(cd_mul(x, y)) == cd_mul(conjugate(y), conjugate(x)));
            CHECK(cd_mul(x, conjugate(x)) == norm2(x) * basis_element(n, 0));
            CHECK(cd_mul(conjugate(x), x) == norm2(x) * basis_element(n, 0));
            CHECK(2 * inner(x, y) == trace(cd_mul(x, conjugate(y))));
        }
    }
}

TEST_CASE("pure anticommutation iff orthogonal") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const Element a = random_pure(4, rng), b = random_pure(4, rng);
        const bool anti = cd_mul(a, b) == -cd_mul(b, a);
        CHECK((inner(a, b) == 0) == anti);
    }
}

TEST_CASE("tilde") {
    for (int n = 1; n <= 5; ++n)
        CHECK(tilde(basis_element(n, 0)) == basis_element(n, std::size_t(1) << (n - 1)));
    CHECK(tilde(basis_element(2, 1)) == basis_element(2, 3));
    Rng rng(6);
    for (int n = 1; n <= 5; ++n) {
        const Element x = random_element(n, rng);
        CHECK(tilde(tilde(x)) == -x);
        const Element d = random_doubly_pure(n >= 2 ? n : 2, rng);
        CHECK(tilde(d) == cd_mul(d, e0_tilde(d.level)));
    }
    CHECK_THROWS_AS(tilde(Element(0)), std::invalid_argument);
}

TEST_CASE("purity classification") {
    CHECK(purity(basis_element(4, 0)) == Purity::general);
    CHECK(purity(e0_tilde(4)) == Purity::pure);
    CHECK(purity(basis_element(4, 1) + basis_element(4, 10)) == Purity::doubly_pure);
}

TEST_CASE("associator and commutator") {
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
        const Element x = random_element(3, rng), y = random_element(3, rng);
        CHECK(associator(x, y, basis_element(3, 0)).is_zero());
        CHECK(associator(basis_element(3, 0), x, y).is_zero());
        CHECK(associator(x, basis_element(3, 0), y).is_zero());
        CHECK(associator(x, y, x).is_zero());
        CHECK(commutator(x, x).is_zero());
    }
    const auto w = associativity_witness();
    CHECK(!associator(w[0], w[1], w[2]).is_zero());
    CHECK(associator(basis_element(2, 1), basis_element(2, 2), basis_element(2, 0)).is_zero());
    CHECK(commutator(basis_element(2, 1), basis_element(2, 2)) ==
          Rat(2) * basis_element(2, 3));
    // level 1 is commutative, exhaustively on basis
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(commutator(basis_element(1, i), basis_element(1, j)).is_zero());
}

TEST_CASE("property ladder thresholds on basis and witnesses") {
    // associative at level 2: exhaustive basis triples
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                CHECK(associator(basis_element(2, i), basis_element(2, j), basis_element(2, k))
                          .is_zero());
    // alternative at level 3 on random samples
    Rng rng(9);
    for (int i = 0; i < 30; ++i) {
        const Element x = random_element(3, rng), y = random_element(3, rng);
        CHECK(associator(x, x, y).is_zero());
        CHECK(associator(x, y, y).is_zero());
    }
    // stored counterexamples at the next level each time
    const auto [cx, cy] = commutativity_witness();
    CHECK(!commutator(cx, cy).is_zero());
    const auto [ax, ay] = alternativity_witness();
    CHECK(!associator(ax, ax, ay).is_zero());
}

TEST_CASE("flexibility at levels 4 and 5") {
    Rng rng(10);
    for (int n = 4; n <= 5; ++n)
        for (int i = 0; i < 20; ++i) {
            const Element x = random_element(n, rng), y = random_element(n, rng);
            CHECK(associator(x, y, x).is_zero());
        }
}

TEST_CASE("norm multiplicativity holds up to level 3, fails at level 4") {
    Rng rng(12);
    for (int n = 0; n <= 3; ++n)
        for (int i = 0; i < 30; ++i) {
            const Element x = random_element(n, rng), y = random_element(n, rng);
            CHECK(norm2(cd_mul(x, y)) == norm2(x) * norm2(y));
        }
    const auto [x, y] = canonical_zero_divisor();
    CHECK(norm2(x) > 0);
    CHECK(norm2(y) > 0);
    CHECK(norm2(cd_mul(x, y)) == 0);
}

TEST_CASE("structure table matches cd_mul exhaustively and obeys the XOR law") {
    for (int n = 0; n <= 5; ++n) {
        const StructureTable& t = structure_table(n);
        const std::size_t dim = std::size_t(1) << n;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                CHECK(t.index_at(i, j) == (i ^ j));
                const Element expect = cd_mul(basis_element(n, i), basis_element(n, j));
                Element got(n);
                got.coeffs[t.index_at(i, j)] = int(t.sign_at(i, j));
                CHECK(got == expect);
            }
        }
        // unit row and column
        for (std::size_t j = 0; j < dim; ++j) {
            CHECK(t.sign_at(0, j) == 1);
            CHECK(t.sign_at(j, 0) == 1);
        }
    }
}

TEST_CASE("basis_product examples and bounds") {
    CHECK(basis_product(0, 5, 3) == std::pair<int, std::size_t>{1, 5});
    CHECK(basis_product(1, 2, 2) == std::pair<int, std::size_t>{1, 3});
    for (std::size_t i = 1; i < 16; ++i)
        CHECK(basis_product(i, i, 4) == std::pair<int, std::size_t>{-1, 0});
    CHECK_THROWS_AS(basis_product(4, 0, 2), std::out_of_range);
    CHECK_THROWS_AS(structure_table(kMaxTableLevel + 1), std::invalid_argument);
}

TEST_CASE("mul_table agrees with cd_mul on random elements") {
    Rng rng(13);
    for (int n = 0; n <= 5; ++n)
        for (int i = 0; i < 10; ++i) {
            const Element x = random_element(n, rng), y = random_element(n, rng);
            CHECK(mul_table(x, y) == cd_mul(x, y));
        }
}
