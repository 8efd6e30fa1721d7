#pragma once

#include <map>
#include <memory>
#include <string>
#include <variant>

#include "cdk/element.hpp"

namespace cdk {

// AST for the expression mini-language.
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*          ('*' groups left; parenthesize!)
//   factor  := '-' factor | primary
//   primary := rational | 'e' integer | identifier | call | '(' expr ')'
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { RationalLit, BasisRef, Ident, Neg, Add, Sub, Mul, Call };
    Kind kind;
    Rat lit;                       // RationalLit
    std::size_t basis_index = 0;   // BasisRef
    std::string name;              // Ident, Call
    std::vector<ExprPtr> args;     // Neg/Add/Sub/Mul operands, Call args
};

// Thrown by parse and eval; offset is a byte position into the source text.
struct LangError : std::runtime_error {
    std::size_t offset;
    LangError(std::size_t off, const std::string& msg)
        : std::runtime_error(msg), offset(off) {}
};

ExprPtr parse(const std::string& text);

using Value = std::variant<Rat, Element>;

struct EvalContext {
    int level = 3;
    std::map<std::string, Element> bindings;
};

// Exact evaluation. Scalars promote to r*e0 when mixed with elements;
// trace/norm2/inner return rationals; alt/altstrong return 0 or 1.
Value eval(const ExprPtr& e, const EvalContext& ctx);

// Canonical text: "c0*e0 + c1*e1 + ..." with zero terms omitted, "0" for
// the zero element. Round-trips through parse and eval.
std::string format(const Element& x);
std::string format(const Value& v);

}  // namespace cdk
