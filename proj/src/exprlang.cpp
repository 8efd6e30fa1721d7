#include "cdk/exprlang.hpp"

#include <cctype>
#include <sstream>

#include "cdk/structure.hpp"

namespace cdk {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, LParen, RParen, Comma, End };
    Kind kind;
    std::size_t offset;
    std::string text;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Token::Kind::End, start, ""};
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            return {Token::Kind::Number, start, src_.substr(start, pos_ - start)};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return {Token::Kind::Ident, start, src_.substr(start, pos_ - start)};
        }
        ++pos_;
        switch (c) {
            case '+': return {Token::Kind::Plus, start, "+"};
            case '-': return {Token::Kind::Minus, start, "-"};
            case '*': return {Token::Kind::Star, start, "*"};
            case '/': return {Token::Kind::Slash, start, "/"};
            case '(': return {Token::Kind::LParen, start, "("};
            case ')': return {Token::Kind::RParen, start, ")"};
            case ',': return {Token::Kind::Comma, start, ","};
            default:
                throw LangError(start, std::string("unexpected character '") + c + "'");
        }
    }

  private:
    const std::string& src_;
    std::size_t pos_ = 0;
};

class Parser {
  public:
    explicit Parser(const std::string& src) : lexer_(src) { advance(); }

    ExprPtr parse_all() {
        ExprPtr e = parse_expr();
        expect(Token::Kind::End, "end of input");
        return e;
    }

  private:
    Lexer lexer_;
    Token cur_;

    void advance() { cur_ = lexer_.next(); }

    void expect(Token::Kind k, const char* what) {
        if (cur_.kind != k)
            throw LangError(cur_.offset, std::string("expected ") + what);
        advance();
    }

    static ExprPtr node(Expr e) { return std::make_shared<Expr>(std::move(e)); }

    ExprPtr parse_expr() {
        ExprPtr left = parse_term();
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            const bool plus = cur_.kind == Token::Kind::Plus;
            advance();
            ExprPtr right = parse_term();
            Expr e;
            e.kind = plus ? Expr::Kind::Add : Expr::Kind::Sub;
            e.args = {left, right};
            left = node(std::move(e));
        }
        return left;
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_factor();
        while (cur_.kind == Token::Kind::Star) {
            advance();
            ExprPtr right = parse_factor();
            Expr e;
            e.kind = Expr::Kind::Mul;
            e.args = {left, right};
            left = node(std::move(e));
        }
        return left;
    }

    ExprPtr parse_factor() {
        if (cur_.kind == Token::Kind::Minus) {
            advance();
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.args = {parse_factor()};
            return node(std::move(e));
        }
        return parse_primary();
    }

    ExprPtr parse_primary() {
        if (cur_.kind == Token::Kind::Number) {
            const std::string num = cur_.text;
            advance();
            Expr e;
            e.kind = Expr::Kind::RationalLit;
            if (cur_.kind == Token::Kind::Slash) {
                advance();
                if (cur_.kind != Token::Kind::Number)
                    throw LangError(cur_.offset, "expected denominator");
                e.lit = rat_from_string(num + "/" + cur_.text);
                advance();
            } else {
                e.lit = rat_from_string(num);
            }
            return node(std::move(e));
        }
        if (cur_.kind == Token::Kind::Ident) {
            const std::string name = cur_.text;
            const std::size_t off = cur_.offset;
            advance();
            // "e<digits>" is a basis reference; the index is validated
            // against the level at eval time.
            if (name.size() > 1 && name[0] == 'e' &&
                name.find_first_not_of("0123456789", 1) == std::string::npos) {
                Expr e;
                e.kind = Expr::Kind::BasisRef;
                e.basis_index = std::stoul(name.substr(1));
                return node(std::move(e));
            }
            if (cur_.kind == Token::Kind::LParen) {
                advance();
                Expr e;
                e.kind = Expr::Kind::Call;
                e.name = name;
                if (cur_.kind != Token::Kind::RParen) {
                    e.args.push_back(parse_expr());
                    while (cur_.kind == Token::Kind::Comma) {
                        advance();
                        e.args.push_back(parse_expr());
                    }
                }
                expect(Token::Kind::RParen, "')'");
                return node(std::move(e));
            }
            Expr e;
            e.kind = Expr::Kind::Ident;
            e.name = name;
            (void)off;
            return node(std::move(e));
        }
        if (cur_.kind == Token::Kind::LParen) {
            advance();
            ExprPtr inner = parse_expr();
            expect(Token::Kind::RParen, "')'");
            return inner;
        }
        throw LangError(cur_.offset, "expected a rational, basis vector, name, or '('");
    }
};

Element promote(const Value& v, int level) {
    if (std::holds_alternative<Element>(v)) return std::get<Element>(v);
    Element e(level);
    e.coeffs[0] = std::get<Rat>(v);
    return e;
}

Element as_element(const Value& v, int level, const char* what) {
    if (std::holds_alternative<Element>(v)) {
        const Element& e = std::get<Element>(v);
        if (e.level != level) throw LangError(0, std::string(what) + ": level mismatch");
        return e;
    }
    return promote(v, level);
}

void check_arity(const Expr& e, std::size_t want) {
    if (e.args.size() != want)
        throw LangError(0, e.name + " expects " + std::to_string(want) + " argument(s), got " +
                               std::to_string(e.args.size()));
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).parse_all(); }

Value eval(const ExprPtr& e, const EvalContext& ctx) {
    switch (e->kind) {
        case Expr::Kind::RationalLit:
            return e->lit;
        case Expr::Kind::BasisRef: {
            if (e->basis_index >= (std::size_t(1) << ctx.level))
                throw LangError(0, "e" + std::to_string(e->basis_index) +
                                       " is out of range at level " + std::to_string(ctx.level));
            return basis_element(ctx.level, e->basis_index);
        }
        case Expr::Kind::Ident: {
            auto it = ctx.bindings.find(e->name);
            if (it == ctx.bindings.end()) throw LangError(0, "unknown identifier " + e->name);
            return it->second;
        }
        case Expr::Kind::Neg: {
            Value v = eval(e->args[0], ctx);
            if (std::holds_alternative<Rat>(v)) return Rat(-std::get<Rat>(v));
            return -std::get<Element>(v);
        }
        case Expr::Kind::Add:
        case Expr::Kind::Sub: {
            Value a = eval(e->args[0], ctx);
            Value b = eval(e->args[1], ctx);
            const bool sub = e->kind == Expr::Kind::Sub;
            if (std::holds_alternative<Rat>(a) && std::holds_alternative<Rat>(b)) {
                const Rat &x = std::get<Rat>(a), &y = std::get<Rat>(b);
                return sub ? Rat(x - y) : Rat(x + y);
            }
            Element x = promote(a, ctx.level), y = promote(b, ctx.level);
            if (x.level != y.level) throw LangError(0, "level mismatch in + or -");
            return sub ? x - y : x + y;
        }
        case Expr::Kind::Mul: {
            Value a = eval(e->args[0], ctx);
            Value b = eval(e->args[1], ctx);
            if (std::holds_alternative<Rat>(a) && std::holds_alternative<Rat>(b))
                return Rat(std::get<Rat>(a) * std::get<Rat>(b));
            if (std::holds_alternative<Rat>(a)) return std::get<Rat>(a) * std::get<Element>(b);
            if (std::holds_alternative<Rat>(b)) return std::get<Rat>(b) * std::get<Element>(a);
            const Element &x = std::get<Element>(a), &y = std::get<Element>(b);
            if (x.level != y.level) throw LangError(0, "level mismatch in *");
            return cd_mul(x, y);
        }
        case Expr::Kind::Call: {
            const std::string& f = e->name;
            auto arg = [&](std::size_t i) {
                return as_element(eval(e->args[i], ctx), ctx.level, f.c_str());
            };
            if (f == "conj") {
                check_arity(*e, 1);
                return conjugate(arg(0));
            }
            if (f == "tilde") {
                check_arity(*e, 1);
                if (ctx.level < 1) throw LangError(0, "tilde is undefined at level 0");
                return tilde(arg(0));
            }
            if (f == "trace") {
                check_arity(*e, 1);
                return trace(arg(0));
            }
            if (f == "norm2") {
                check_arity(*e, 1);
                return norm2(arg(0));
            }
            if (f == "inner") {
                check_arity(*e, 2);
                return inner(arg(0), arg(1));
            }
            if (f == "assoc") {
                check_arity(*e, 3);
                return associator(arg(0), arg(1), arg(2));
            }
            if (f == "comm") {
                check_arity(*e, 2);
                return commutator(arg(0), arg(1));
            }
            if (f == "alt") {
                check_arity(*e, 2);
                return Rat(alternates(arg(0), arg(1)) ? 1 : 0);
            }
            if (f == "altstrong") {
                check_arity(*e, 2);
                return Rat(alternates_strongly(arg(0), arg(1)) ? 1 : 0);
            }
            throw LangError(0, "unknown function " + f);
        }
    }
    throw LangError(0, "malformed expression tree");
}

std::string format(const Element& x) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const Rat& c = x.coeffs[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mag == 1)
            os << "e" << i;
        else
            os << rat_to_string(mag) << "*e" << i;
        first = false;
    }
    if (first) return "0";
    return os.str();
}

std::string format(const Value& v) {
    if (std::holds_alternative<Rat>(v)) return rat_to_string(std::get<Rat>(v));
    return format(std::get<Element>(v));
}

}  // namespace cdk
