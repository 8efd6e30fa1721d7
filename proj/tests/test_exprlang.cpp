#include <doctest.h>

#include "cdk/exprlang.hpp"
#include "cdk/sampling.hpp"

using namespace cdk;

namespace {

Value run(const std::string& text, int level) {
    EvalContext ctx;
    ctx.level = level;
    return eval(parse(text), ctx);
}

Element elem(const Value& v) { return std::get<Element>(v); }
Rat scalar(const Value& v) { return std::get<Rat>(v); }

}  // namespace

TEST_CASE("parse shapes") {
    ExprPtr e = parse("e1*e2");
    CHECK(e->kind == Expr::Kind::Mul);
    CHECK(e->args[0]->kind == Expr::Kind::BasisRef);
    CHECK(e->args[0]->basis_index == 1);

    ExprPtr c = parse("assoc(e1,e2,e4)");
    CHECK(c->kind == Expr::Kind::Call);
    CHECK(c->name == "assoc");
    CHECK(c->args.size() == 3);
}

TEST_CASE("syntax errors carry a byte offset") {
    try {
        parse("a*(b*c");
        FAIL("expected a syntax error");
    } catch (const LangError& e) {
        CHECK(e.offset == 6);
        CHECK(std::string(e.what()).find("')'") != std::string::npos);
    }
}

TEST_CASE("parser is total on junk") {
    for (const char* bad : {"", ")", "1/", "e1)", "foo(", "1 2", "*e1", "e1 + ", "((1)", "@"}) {
        CHECK_THROWS_AS(parse(bad), LangError);
    }
}

TEST_CASE("eval basics") {
    CHECK(elem(run("e1*e2", 2)) == basis_element(2, 3));
    CHECK(scalar(run("trace(e0)", 4)) == 2);
    CHECK(!elem(run("assoc(e1,e2,e4)", 3)).is_zero());
    CHECK_THROWS_AS(run("assoc(e1,e2,e4)", 2), LangError);  // e4 out of range
    CHECK_THROWS_AS(run("nosuch(e1)", 3), LangError);
    CHECK_THROWS_AS(run("inner(e1)", 3), LangError);  // arity
    CHECK_THROWS_AS(run("x+e1", 3), LangError);       // unknown identifier
}

TEST_CASE("scalar coercion and precedence") {
    CHECK(elem(run("1/2*e5 - e2", 3)) ==
          Rat(1, 2) * basis_element(3, 5) - basis_element(3, 2));
    CHECK(scalar(run("2*3", 2)) == 6);
    CHECK(elem(run("2 + e1", 2)) == Rat(2) * basis_element(2, 0) + basis_element(2, 1));
    // '*' groups left: e1*e2*e4 = (e1*e2)*e4
    CHECK(elem(run("e1*e2*e4", 3)) ==
          cd_mul(cd_mul(basis_element(3, 1), basis_element(3, 2)), basis_element(3, 4)));
    CHECK(scalar(run("alt(e1,e2)", 3)) == 1);
    CHECK(scalar(run("altstrong(e1+e10,e4)", 4)) == 0);
    CHECK(elem(run("conj(3*e0+5*e7)", 3)) ==
          Rat(3) * basis_element(3, 0) - Rat(5) * basis_element(3, 7));
    CHECK(elem(run("tilde(e1)", 2)) == basis_element(2, 3));
    CHECK(scalar(run("norm2(e1+e10)", 4)) == 2);
    CHECK(scalar(run("inner(e1+e2,e2)", 2)) == 1);
    CHECK(elem(run("comm(e1,e2)", 2)) == Rat(2) * basis_element(2, 3));
}

TEST_CASE("bindings") {
    EvalContext ctx;
    ctx.level = 2;
    ctx.bindings["a"] = basis_element(2, 1);
    CHECK(std::get<Element>(eval(parse("a*a"), ctx)) == -basis_element(2, 0));
}

TEST_CASE("format examples") {
    CHECK(format(basis_element(3, 3)) == "e3");
    CHECK(format(-basis_element(3, 2) + Rat(1, 2) * basis_element(3, 5)) == "-e2 + 1/2*e5");
    CHECK(format(Element(3)) == "0");
}

TEST_CASE("format round-trips through parse and eval") {
    Rng rng(41);
    for (int n = 1; n <= 5; ++n)
        for (int i = 0; i < 20; ++i) {
            const Element x = random_element(n, rng);
            EvalContext ctx;
            ctx.level = n;
            const Value v = eval(parse(format(x)), ctx);
            if (std::holds_alternative<Rat>(v)) {
                Element e(n);
                e.coeffs[0] = std::get<Rat>(v);
                CHECK(e == x);
            } else {
                CHECK(std::get<Element>(v) == x);
            }
        }
}

TEST_CASE("eval agrees with direct composition") {
    // a handful of fixed ASTs evaluated both ways
    const int n = 3;
    Rng rng(43);
    for (int i = 0; i < 10; ++i) {
        const Element x = random_element(n, rng), y = random_element(n, rng);
        EvalContext ctx;
        ctx.level = n;
        ctx.bindings["x"] = x;
        ctx.bindings["y"] = y;
        CHECK(std::get<Element>(eval(parse("x*y - y*x"), ctx)) == commutator(x, y));
        CHECK(std::get<Element>(eval(parse("assoc(x,y,x)"), ctx)) == associator(x, y, x));
        CHECK(std::get<Rat>(eval(parse("norm2(x*y)"), ctx)) == norm2(cd_mul(x, y)));
        CHECK(std::get<Element>(eval(parse("conj(x)*conj(y)"), ctx)) ==
              cd_mul(conjugate(x), conjugate(y)));
    }
}

TEST_CASE("tilde at level 0 is an eval error") {
    CHECK_THROWS_AS(run("tilde(1)", 0), LangError);
}
