#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radsurj/bigrat.hpp"
#include "radsurj/error.hpp"
#include "radsurj/param.hpp"
#include "radsurj/poly.hpp"

namespace radsurj {

namespace detail {

enum class Tok { ident, number, symbol, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

inline std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&] {
        if (src[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    auto digit = [&](std::size_t k) { return k < src.size() && std::isdigit(static_cast<unsigned char>(src[k])); };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n')
                advance();
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok.kind = Tok::ident;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                tok.text += src[i];
                advance();
            }
        } else if (digit(i) || (c == '.' && digit(i + 1))) {
            // Integers for polynomials; decimals and exponents only make sense in settings.
            tok.kind = Tok::number;
            while (digit(i) || (i < src.size() && src[i] == '.')) {
                tok.text += src[i];
                advance();
            }
            if (i < src.size() && (src[i] == 'e' || src[i] == 'E') &&
                (digit(i + 1) || (i + 1 < src.size() && (src[i + 1] == '-' || src[i + 1] == '+') && digit(i + 2)))) {
                tok.text += src[i];
                advance();
                tok.text += src[i];
                advance();
                while (digit(i)) {
                    tok.text += src[i];
                    advance();
                }
            }
        } else if (std::string_view("{}^=;/+-*()").find(c) != std::string_view::npos) {
            tok.kind = Tok::symbol;
            tok.text = c;
            advance();
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

/// Expression tree, kept until every name has been declared.
struct Expr {
    enum class Kind { number, name, add, sub, mul, neg, pow } kind = Kind::number;
    BigRat value;
    std::string name;
    std::uint32_t exponent = 0;
    std::size_t line = 0, column = 0;
    std::unique_ptr<Expr> lhs, rhs;
};

using ExprPtr = std::unique_ptr<Expr>;

inline bool is_integer(const std::string& s)
{
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return !s.empty();
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }

    bool at(std::string_view sym, std::size_t ahead = 0) const
    {
        return peek(ahead).kind == Tok::symbol && peek(ahead).text == sym;
    }

    bool at_end() const { return peek().kind == Tok::end; }

    [[noreturn]] void fail(const Token& tok, const std::string& message) const
    {
        throw ParseError(tok.line, tok.column, message);
    }

    [[noreturn]] void fail(const std::string& message) const { fail(peek(), message); }

    std::string describe(const Token& tok) const
    {
        return tok.kind == Tok::end ? std::string("end of input") : "'" + tok.text + "'";
    }

    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    void expect(std::string_view sym)
    {
        if (!at(sym))
            fail("expected '" + std::string(sym) + "', found " + describe(peek()));
        next();
    }

    Token expect_ident()
    {
        if (peek().kind != Tok::ident)
            fail("expected an identifier, found " + describe(peek()));
        return next();
    }

    Token expect_keyword(std::string_view word)
    {
        if (peek().kind != Tok::ident || peek().text != word)
            fail("expected '" + std::string(word) + "', found " + describe(peek()));
        return next();
    }

    std::uint32_t expect_small_int()
    {
        const Token tok = peek();
        if (tok.kind != Tok::number || !is_integer(tok.text))
            fail("expected an integer exponent, found " + describe(tok));
        if (tok.text.size() > 9)
            fail(tok, "exponent too large");
        next();
        return static_cast<std::uint32_t>(std::stoul(tok.text));
    }

    ExprPtr expression()
    {
        ExprPtr lhs = term();
        while (at("+") || at("-")) {
            const Token op = next();
            auto node = make(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub, op);
            node->lhs = std::move(lhs);
            node->rhs = term();
            lhs = std::move(node);
        }
        return lhs;
    }

private:
    static ExprPtr make(Expr::Kind kind, const Token& at)
    {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        e->line = at.line;
        e->column = at.column;
        return e;
    }

    ExprPtr term()
    {
        ExprPtr lhs = unary();
        while (at("*")) {
            const Token op = next();
            auto node = make(Expr::Kind::mul, op);
            node->lhs = std::move(lhs);
            node->rhs = unary();
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprPtr unary()
    {
        if (at("-")) {
            const Token op = next();
            auto node = make(Expr::Kind::neg, op);
            node->lhs = unary();
            return node;
        }
        if (at("+")) {
            next();
            return unary();
        }
        return power();
    }

    ExprPtr power()
    {
        ExprPtr base = atom();
        if (at("^")) {
            const Token op = next();
            auto node = make(Expr::Kind::pow, op);
            node->lhs = std::move(base);
            node->exponent = expect_small_int();
            return node;
        }
        return base;
    }

    ExprPtr atom()
    {
        const Token tok = peek();
        if (tok.kind == Tok::number) {
            if (!is_integer(tok.text))
                fail(tok, "polynomial coefficients must be integers or fractions a/b");
            next();
            auto node = make(Expr::Kind::number, tok);
            BigInt num(tok.text);
            BigInt den = 1;
            // a/b is a coefficient only when both sides are integer literals.
            if (at("/") && peek(1).kind == Tok::number && is_integer(peek(1).text)) {
                next();
                const Token d = next();
                den = BigInt(d.text);
                if (den == 0)
                    fail(d, "zero denominator in fraction");
            }
            node->value = BigRat(num, den);
            node->value.canonicalize();
            return node;
        }
        if (tok.kind == Tok::ident) {
            next();
            auto node = make(Expr::Kind::name, tok);
            node->name = tok.text;
            return node;
        }
        if (at("(")) {
            next();
            ExprPtr inner = expression();
            expect(")");
            return inner;
        }
        fail("expected a number, identifier or '(', found " + describe(tok));
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

inline MultiPoly resolve(const Expr& e, const VarTablePtr& vars)
{
    switch (e.kind) {
    case Expr::Kind::number: return MultiPoly::constant(vars, e.value);
    case Expr::Kind::name: {
        const auto idx = vars->find(e.name);
        if (!idx)
            throw ParseError(e.line, e.column, "unknown identifier '" + e.name + "'");
        return MultiPoly::variable(vars, *idx);
    }
    case Expr::Kind::add: return resolve(*e.lhs, vars) + resolve(*e.rhs, vars);
    case Expr::Kind::sub: return resolve(*e.lhs, vars) - resolve(*e.rhs, vars);
    case Expr::Kind::mul: return resolve(*e.lhs, vars) * resolve(*e.rhs, vars);
    case Expr::Kind::neg: return resolve(*e.lhs, vars) * BigRat(-1);
    case Expr::Kind::pow: return resolve(*e.lhs, vars).pow(e.exponent);
    }
    return MultiPoly(vars);
}

} // namespace detail

/// Values from the optional settings block; command-line flags take precedence.
struct SourceSettings {
    std::optional<std::string> mode;   // guilty | suspicious
    std::optional<std::string> ideal;  // exact | gcd | auto
    std::optional<std::size_t> points;
    std::optional<double> tol;
    std::optional<std::uint64_t> budget;
};

struct SourceFile {
    RawParametrization raw;
    SourceSettings settings;
};

/// Parse a source file into unvalidated form.
inline SourceFile parse_source(std::string_view text)
{
    using detail::Expr;
    using detail::ExprPtr;
    detail::Parser p(detail::tokenize(text));

    struct Level {
        detail::Token name;
        std::uint32_t exponent;
        ExprPtr radicand;
    };
    struct Component {
        detail::Token name;
        ExprPtr numerator, denominator;
    };
    std::vector<Level> levels;
    std::vector<Component> comps;
    std::vector<std::string> names{"t"};
    auto declare = [&](const detail::Token& tok) {
        for (const auto& n : names)
            if (n == tok.text)
                p.fail(tok, tok.text == "t" ? std::string("'t' is reserved for the parameter")
                                            : "'" + tok.text + "' is declared twice");
        names.push_back(tok.text);
    };

    p.expect_keyword("tower");
    p.expect("{");
    while (!p.at("}")) {
        Level lv{p.expect_ident(), 0, nullptr};
        declare(lv.name);
        p.expect("^");
        lv.exponent = p.expect_small_int();
        p.expect("=");
        lv.radicand = p.expression();
        p.expect(";");
        levels.push_back(std::move(lv));
    }
    p.expect("}");

    p.expect_keyword("param");
    p.expect("{");
    while (!p.at("}")) {
        Component c{p.expect_ident(), nullptr, nullptr};
        declare(c.name);
        p.expect("=");
        c.numerator = p.expression();
        if (p.at("/")) {
            p.next();
            c.denominator = p.expression();
        }
        p.expect(";");
        comps.push_back(std::move(c));
    }
    p.expect("}");

    SourceFile out;
    if (!p.at_end()) {
        p.expect_keyword("settings");
        p.expect("{");
        while (!p.at("}")) {
            const detail::Token key = p.expect_ident();
            p.expect("=");
            const detail::Token value = p.next();
            if (value.kind != detail::Tok::ident && value.kind != detail::Tok::number)
                p.fail(value, "expected a setting value, found " + p.describe(value));
            auto need_int = [&] {
                if (value.kind != detail::Tok::number || !detail::is_integer(value.text) || value.text.size() > 18)
                    p.fail(value, "setting '" + key.text + "' needs a non-negative integer");
                return std::stoull(value.text);
            };
            if (key.text == "mode") {
                if (value.text != "guilty" && value.text != "suspicious")
                    p.fail(value, "mode must be guilty or suspicious");
                out.settings.mode = value.text;
            } else if (key.text == "ideal") {
                if (value.text != "exact" && value.text != "gcd" && value.text != "auto")
                    p.fail(value, "ideal must be exact, gcd or auto");
                out.settings.ideal = value.text;
            } else if (key.text == "points") {
                out.settings.points = need_int();
            } else if (key.text == "budget") {
                out.settings.budget = need_int();
            } else if (key.text == "tol") {
                if (value.kind != detail::Tok::number)
                    p.fail(value, "tol needs a number");
                try {
                    out.settings.tol = std::stod(value.text);
                } catch (const std::exception&) {
                    p.fail(value, "malformed number");
                }
            } else {
                p.fail(key, "unknown setting '" + key.text + "'");
            }
            p.expect(";");
        }
        p.expect("}");
        if (!p.at_end())
            p.fail("unexpected " + p.describe(p.peek()) + " after the settings block");
    }

    std::vector<std::string> radicals, coordinates;
    for (const auto& lv : levels)
        radicals.push_back(lv.name.text);
    for (const auto& c : comps)
        coordinates.push_back(c.name.text);
    out.raw.vars = make_param_table(radicals, coordinates);
    for (const auto& lv : levels)
        out.raw.levels.push_back({lv.exponent, detail::resolve(*lv.radicand, out.raw.vars)});
    for (const auto& c : comps) {
        RawComponent rc;
        rc.name = c.name.text;
        rc.numerator = detail::resolve(*c.numerator, out.raw.vars);
        rc.denominator = c.denominator ? detail::resolve(*c.denominator, out.raw.vars)
                                       : MultiPoly::constant(out.raw.vars, 1);
        out.raw.components.push_back(std::move(rc));
    }
    return out;
}

/// Parse and validate: tower checks, normal forms.
inline RadicalParametrization parse(std::string_view text)
{
    return normalize_param(parse_source(text).raw);
}

/// A single polynomial over an existing table.
inline MultiPoly parse_polynomial(std::string_view text, const VarTablePtr& vars)
{
    detail::Parser p(detail::tokenize(text));
    auto e = p.expression();
    if (!p.at_end())
        p.fail("unexpected " + p.describe(p.peek()));
    return detail::resolve(*e, vars);
}

/// "d^2 = -t^2 + 1" for each level.
inline std::string level_text(const RadicalTower& tower, std::size_t i)
{
    return (*tower.vars())[tower.radical_var(i)].name + "^" + std::to_string(tower.exponent(i)) + " = " +
           tower.radicand(i).to_string();
}

/// Right-hand side of a component: "p" or "(p) / (q)".
inline std::string component_text(const ParamComponent& c)
{
    if (c.denominator.is_constant() && c.denominator.constant_value() == 1)
        return c.numerator.to_string();
    return "(" + c.numerator.to_string() + ") / (" + c.denominator.to_string() + ")";
}

/// Canonical source text; parsing it gives back the same parametrization.
inline std::string print_source(const RadicalParametrization& param)
{
    std::string out = "tower {\n";
    for (std::size_t i = 0; i < param.tower.size(); ++i)
        out += "  " + level_text(param.tower, i) + ";\n";
    out += "}\nparam {\n";
    for (const auto& c : param.components)
        out += "  " + c.name + " = " + component_text(c) + ";\n";
    out += "}\n";
    return out;
}

} // namespace radsurj
