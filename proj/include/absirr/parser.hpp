#pragma once

/**
 * @file parser.hpp
 * @brief Text grammar for field specs and polynomials, and the canonical formatter.
 *
 * Field specs:   GF(p) | GF(p^n) | GF(p^n; c0,c1,...,cn)
 * Polynomials:   poly    := [+|-] term {(+|-) term}
 *                term    := factor {[*] factor}
 *                factor  := INT | a[^INT] | '(' coef ')'[^INT] | var[^INT]
 *                coef    := [+|-] cterm {(+|-) cterm}, cterm built from INT, a, (coef)
 *                var     := x | y | z | w | x1 .. x9
 * `a` is the class of t in GF(p)[t]/(modulus). Whitespace between tokens is
 * ignored. Polynomial subexpressions cannot be parenthesized.
 */

#include "absirr/error.hpp"
#include "absirr/gf.hpp"
#include "absirr/polynomial.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace absirr {

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char peek_raw() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char peek_raw(std::size_t ahead) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what, std::string(1, c));
    }
    std::size_t pos() {
        skip_ws();
        return pos_;
    }
    void advance(std::size_t k = 1) { pos_ += k; }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    /// Decimal integer; digits must fit in 64 bits.
    std::uint64_t integer(const char* what) {
        if (!at_digit()) fail(std::string("expected ") + what, "digit");
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const std::uint64_t d = static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10) fail_at(start, std::string(what) + " is too large", "");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    /// Decimal integer reduced modulo p while reading (arbitrary length).
    std::uint64_t integer_mod(std::uint64_t p) {
        if (!at_digit()) fail("expected a coefficient", "digit");
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = (v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0')) % p;
            ++pos_;
        }
        return v;
    }

    [[noreturn]] void fail(const std::string& msg, const std::string& expected, ErrorCode code = ErrorCode::Syntax) {
        skip_ws();
        throw ParseError(code, pos_, msg, expected);
    }
    [[noreturn]] void fail_at(std::size_t at, const std::string& msg, const std::string& expected,
                              ErrorCode code = ErrorCode::Syntax) {
        throw ParseError(code, at, msg, expected);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline FieldSpec parse_field_spec(std::string_view text) {
    detail::Cursor c(text);
    const std::size_t gf_at = c.pos();
    if (!(c.accept('G') && c.accept('F'))) c.fail_at(gf_at, "field spec must start with GF", "GF(");
    c.expect('(', "'('");
    const std::size_t p_at = c.pos();
    const std::uint64_t p = c.integer("characteristic");
    std::uint64_t n = 1;
    std::optional<std::vector<std::uint64_t>> modulus;
    if (c.accept('^')) {
        const std::size_t n_at = c.pos();
        n = c.integer("extension degree");
        if (n == 0 || n > 62) c.fail_at(n_at, "extension degree must be between 1 and 62", "", ErrorCode::InvalidField);
        if (c.accept(';')) {
            modulus.emplace();
            do {
                const std::size_t r_at = c.pos();
                const std::uint64_t r = c.integer("modulus residue");
                if (detail::is_prime(p) && r >= p)
                    c.fail_at(r_at, "modulus residue must be below p", "", ErrorCode::ReducibleModulus);
                modulus->push_back(r);
            } while (c.accept(','));
        }
    }
    c.expect(')', "')'");
    if (!c.at_end()) c.fail("unexpected trailing input", "end of input");
    if (!detail::is_prime(p)) {
        std::string msg = std::to_string(p) + " is not prime";
        if (n == 1) msg += "; extension fields are written GF(p^n)";
        c.fail_at(p_at, msg, "prime", ErrorCode::InvalidField);
    }
    try {
        if (!modulus) return field_build(p, static_cast<unsigned>(n));
        if (modulus->size() != n + 1)
            c.fail_at(p_at, "explicit modulus needs n + 1 residues", "", ErrorCode::ReducibleModulus);
        if (modulus->back() != 1) c.fail_at(p_at, "explicit modulus must be monic", "", ErrorCode::ReducibleModulus);
        return field_with_modulus(p, *modulus);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.code(), p_at, e.what());
    }
}

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const FieldSpec& field, std::optional<std::size_t> arity)
        : c_(text), field_(field), arity_hint_(arity) {}

    Polynomial parse() {
        struct Term {
            Residue coef;
            std::vector<std::uint32_t> exps;
        };
        std::vector<Term> terms;
        std::size_t max_var = 0;
        bool first = true;
        while (true) {
            bool negate = false;
            if (c_.accept('+')) {
            } else if (c_.accept('-')) {
                negate = true;
            } else if (!first) {
                if (c_.at_end()) break;
                c_.fail("expected '+' or '-' between terms", "+");
            }
            first = false;
            Term t{1, std::vector<std::uint32_t>(kMaxArity, 0)};
            parse_term(t.coef, t.exps, max_var);
            if (negate) t.coef = field_.neg(t.coef);
            terms.push_back(std::move(t));
            if (c_.at_end()) break;
        }
        std::size_t arity = std::max<std::size_t>(max_var, 1);
        if (arity_hint_) {
            if (*arity_hint_ < max_var)
                c_.fail_at(0, "polynomial uses x" + std::to_string(max_var) + " beyond arity " +
                                  std::to_string(*arity_hint_), "", ErrorCode::ArityMismatch);
            arity = *arity_hint_;
        }
        Polynomial out(field_, arity);
        for (auto& t : terms) {
            std::vector<std::uint32_t> e(t.exps.begin(), t.exps.begin() + static_cast<std::ptrdiff_t>(arity));
            out.add_term(Monomial(std::move(e)), t.coef);
        }
        return out;
    }

private:
    std::uint32_t exponent() {
        const std::size_t at = c_.pos();
        const std::uint64_t e = c_.integer("exponent");
        if (e > UINT32_MAX) c_.fail_at(at, "exponent exceeds 32 bits", "");
        return static_cast<std::uint32_t>(e);
    }

    bool at_factor() {
        const char ch = c_.peek();
        return std::isdigit(static_cast<unsigned char>(ch)) || ch == 'a' || ch == '(' || ch == 'x' || ch == 'y' ||
               ch == 'z' || ch == 'w';
    }

    Residue generator(std::size_t at) {
        if (field_.is_prime_field())
            c_.fail_at(at, "generator 'a' used over a prime field", "", ErrorCode::GeneratorOverPrimeField);
        return field_.generator();
    }

    // Coefficient-only factor: INT | a[^e] | (coef)[^e]
    bool coefficient_factor(Residue& coef) {
        const char ch = c_.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coef = field_.mul(coef, c_.integer_mod(field_.characteristic()));
            return true;
        }
        if (ch == 'a') {
            const std::size_t at = c_.pos();
            c_.advance();
            Residue g = generator(at);
            if (c_.accept('^')) g = field_.pow(g, exponent());
            coef = field_.mul(coef, g);
            return true;
        }
        if (ch == '(') {
            c_.advance();
            Residue inner = coefficient_expression();
            c_.expect(')', "')'");
            if (c_.accept('^')) inner = field_.pow(inner, exponent());
            coef = field_.mul(coef, inner);
            return true;
        }
        return false;
    }

    Residue coefficient_expression() {
        Residue sum = 0;
        bool first = true;
        while (true) {
            bool negate = false;
            if (c_.accept('+')) {
            } else if (c_.accept('-')) {
                negate = true;
            } else if (!first) {
                break;
            }
            first = false;
            Residue term = 1;
            bool any = false;
            while (true) {
                const char ch = c_.peek();
                if (ch == 'x' || ch == 'y' || ch == 'z' || ch == 'w')
                    c_.fail("variables cannot appear inside parentheses", "coefficient");
                if (!coefficient_factor(term)) break;
                any = true;
                c_.accept('*');
            }
            if (!any) c_.fail("expected a coefficient expression", "digit, 'a' or '('");
            sum = field_.add(sum, negate ? field_.neg(term) : term);
        }
        return sum;
    }

    std::size_t variable() {
        const char ch = c_.peek();
        c_.advance();
        switch (ch) {
        case 'x': {
            const char d = c_.peek_raw();
            if (d >= '1' && d <= '9') {
                c_.advance();
                return static_cast<std::size_t>(d - '0');
            }
            return 1;
        }
        case 'y': return 2;
        case 'z': return 3;
        default: return 4;  // 'w'
        }
    }

    void parse_term(Residue& coef, std::vector<std::uint32_t>& exps, std::size_t& max_var) {
        if (!at_factor()) c_.fail("expected a term", "coefficient or variable");
        bool pending_star = false;
        while (true) {
            if (!at_factor()) {
                if (pending_star) c_.fail("expected a factor after '*'", "coefficient or variable");
                break;
            }
            pending_star = false;
            const char ch = c_.peek();
            if (ch == 'x' || ch == 'y' || ch == 'z' || ch == 'w') {
                const std::size_t v = variable();
                max_var = std::max(max_var, v);
                std::uint32_t e = 1;
                if (c_.accept('^')) e = exponent();
                if (static_cast<std::uint64_t>(exps[v - 1]) + e > UINT32_MAX) c_.fail("exponent exceeds 32 bits", "");
                exps[v - 1] += e;
            } else {
                coefficient_factor(coef);
            }
            if (c_.accept('*')) pending_star = true;
        }
    }

    Cursor c_;
    FieldSpec field_;
    std::optional<std::size_t> arity_hint_;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const FieldSpec& field,
                                   std::optional<std::size_t> arity = std::nullopt) {
    return detail::PolyParser(text, field, arity).parse();
}

/// Field element as text: integers for the prime subfield, otherwise a
/// polynomial in `a`, highest power first ("a^2+2a+1").
inline std::string format_element(const FieldSpec& field, Residue v) {
    if (field.in_prime_subfield(v)) return std::to_string(v);
    const auto c = field.digits(v);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]);
        out += "a";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

inline std::string format_element(const FieldElement& x) { return format_element(x.field(), x.residue()); }

inline std::string variable_name(std::size_t i, std::size_t arity) {
    static constexpr const char* kShort[] = {"x", "y", "z", "w"};
    if (arity <= 4) return kShort[i];
    return "x" + std::to_string(i + 1);
}

/// Canonical text: grevlex-descending terms joined by " + ", unit coefficients
/// suppressed before variables, compound extension coefficients parenthesized.
inline std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const auto& field = f.field();
    std::string out;
    for (const auto& [m, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        std::string coef = format_element(field, c);
        if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
        if (m.is_constant()) {
            out += coef;
            continue;
        }
        if (c != 1) out += coef;
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (m[i] == 0) continue;
            out += variable_name(i, f.arity());
            if (m[i] > 1) out += "^" + std::to_string(m[i]);
        }
    }
    return out;
}

}  // namespace absirr
