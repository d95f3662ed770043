#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadext/ratfun.hpp"

namespace quadext {

/// Polynomial in y with RationalFunction coefficients (ascending powers).
/// This is the value domain of the parser; plain rational-function
/// expressions are the y-degree-0 case.
struct YPolynomial {
    std::vector<RationalFunction> coeffs;

    explicit YPolynomial(RationalFunction c) : coeffs{std::move(c)} {}
    YPolynomial(const FieldPtr& F, std::size_t ydeg) {
        coeffs.assign(ydeg + 1, RationalFunction::zero(F));
    }

    const FieldPtr& field() const { return coeffs[0].field(); }
    int ydeg() const {
        for (std::size_t i = coeffs.size(); i-- > 0;)
            if (!coeffs[i].is_zero()) return static_cast<int>(i);
        return -1;
    }
    bool is_scalar() const { return ydeg() <= 0; }
    void trim() {
        while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
    }
};

namespace detail {

inline YPolynomial yadd(const YPolynomial& a, const YPolynomial& b, bool sub) {
    YPolynomial r(a.field(), std::max(a.coeffs.size(), b.coeffs.size()) - 1);
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
        RationalFunction av = i < a.coeffs.size() ? a.coeffs[i] : RationalFunction::zero(a.field());
        RationalFunction bv = i < b.coeffs.size() ? b.coeffs[i] : RationalFunction::zero(a.field());
        r.coeffs[i] = sub ? av - bv : av + bv;
    }
    r.trim();
    return r;
}

inline YPolynomial ymul(const YPolynomial& a, const YPolynomial& b) {
    YPolynomial r(a.field(), a.coeffs.size() + b.coeffs.size() - 2);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            r.coeffs[i + j] = r.coeffs[i + j] + a.coeffs[i] * b.coeffs[j];
    r.trim();
    return r;
}

/// Recursive-descent parser for the expression grammar
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' uint)?
///   atom   := 'x' | 'w' | 'y' | uint | '(' expr ')'
/// No implicit multiplication; whitespace insignificant.
class ExprParser {
public:
    ExprParser(std::string_view text, FieldPtr field, std::optional<FieldElement> w, bool allow_y)
        : text_(text), field_(std::move(field)), w_(std::move(w)), allow_y_(allow_y) {}

    YPolynomial parse() {
        YPolynomial v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    unsigned long long parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        unsigned long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
            if (v > 1000000) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    YPolynomial expr() {
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        }
        YPolynomial v = term();
        if (neg) v = yadd(YPolynomial(RationalFunction::zero(field_)), v, true);
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                v = yadd(v, term(), false);
            } else if (c == '-') {
                ++pos_;
                v = yadd(v, term(), true);
            } else {
                return v;
            }
        }
    }

    YPolynomial term() {
        YPolynomial v = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = ymul(v, factor());
            } else if (c == '/') {
                std::size_t at = pos_;
                ++pos_;
                YPolynomial d = factor();
                if (!d.is_scalar()) {
                    pos_ = at;
                    fail("division by an expression containing y");
                }
                if (d.coeffs[0].is_zero()) {
                    pos_ = at;
                    fail("division by the zero function");
                }
                RationalFunction inv = d.coeffs[0].inverse();
                for (auto& cf : v.coeffs) cf = cf * inv;
            } else {
                return v;
            }
        }
    }

    YPolynomial factor() {
        YPolynomial v = atom();
        if (peek() == '^') {
            ++pos_;
            unsigned long long e = parse_uint();
            YPolynomial r(RationalFunction::one(field_));
            YPolynomial b = v;
            while (e) {
                if (e & 1) r = ymul(r, b);
                b = ymul(b, b);
                e >>= 1;
            }
            return r;
        }
        return v;
    }

    YPolynomial atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            YPolynomial v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'x') {
            ++pos_;
            return YPolynomial(RationalFunction(Polynomial::x(field_)));
        }
        if (c == 'w') {
            ++pos_;
            if (field_->degree() == 1)
                fail("generator symbol w is not defined over a prime field");
            FieldElement w = w_ ? *w_ : field_->generator();
            return YPolynomial(RationalFunction(Polynomial::constant(w)));
        }
        if (c == 'y' || c == 'Y') {
            ++pos_;
            if (!allow_y_) fail("symbol y is not allowed in this context");
            YPolynomial v(field_, 1);
            v.coeffs[1] = RationalFunction::one(field_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long long n = parse_uint();
            return YPolynomial(
                RationalFunction(Polynomial::constant(field_->scalar(static_cast<long long>(n)))));
        }
        fail("expected 'x', 'w', an integer, or '('");
    }

    std::string_view text_;
    FieldPtr field_;
    std::optional<FieldElement> w_;
    bool allow_y_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a rational-function expression over the given field.  `w` overrides
/// the element the symbol w maps to (defaults to the field's generator).
inline RationalFunction parse_expr(std::string_view text, const FieldPtr& field,
                                   std::optional<FieldElement> w = std::nullopt) {
    detail::ExprParser p(text, field, std::move(w), /*allow_y=*/false);
    return p.parse().coeffs[0];
}

/// Parse a polynomial-in-y expression (used for table equation texts).
/// Returns coefficients ascending in y.
inline std::vector<RationalFunction> parse_equation_text(std::string_view text,
                                                         const FieldPtr& field,
                                                         std::optional<FieldElement> w =
                                                             std::nullopt) {
    detail::ExprParser p(text, field, std::move(w), /*allow_y=*/true);
    return p.parse().coeffs;
}

namespace detail {
inline int term_count(const Polynomial& p) {
    int n = 0;
    for (unsigned c : p.coeff_values())
        if (c != 0) ++n;
    return n;
}
}  // namespace detail

/// Deterministic rendering of the reduced form; parse(format(f)) == f.
inline std::string format_canonical(const RationalFunction& f) {
    if (f.is_zero()) return "0";
    if (f.is_polynomial()) return f.num().str();
    std::string n = f.num().str();
    std::string d = f.den().str();
    if (detail::term_count(f.num()) > 1) n = "(" + n + ")";
    if (detail::term_count(f.den()) > 1) d = "(" + d + ")";
    return n + "/" + d;
}

/// Value equality of two expression texts over the same field.
inline bool exprs_equal(std::string_view a, std::string_view b, const FieldPtr& field,
                        std::optional<FieldElement> w = std::nullopt) {
    return parse_expr(a, field, w) == parse_expr(b, field, w);
}

}  // namespace quadext
