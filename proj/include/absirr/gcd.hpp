#pragma once

/**
 * @file gcd.hpp
 * @brief GCDs of sparse polynomials over finite fields and the square-free test.
 *
 * Multivariate GCDs use a recursive primitive pseudo-remainder sequence: the
 * main variable is the one of least maximum degree (ties to the lowest index),
 * gcd(a, b) = gcd(cont a, cont b) * gcd(pp a, pp b), and the primitive parts
 * are reduced by pseudo-division over the coefficient ring, taking primitive
 * parts after every step. All results are normalized to grevlex leading
 * coefficient 1.
 */

#include "absirr/graded.hpp"
#include "absirr/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace absirr {

struct SquarefreeReport {
    bool squarefree = true;
    /// Nonconstant divisor of f witnessing a repeated factor.
    std::optional<Polynomial> obstruction;
};

inline Polynomial gcd_multivariate(const Polynomial& a, const Polynomial& b);

namespace detail {

inline Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
    auto q = divide_exact(f, g);
    if (!q) throw Error(ErrorCode::DegenerateInput, "internal: expected exact division");
    return std::move(*q);
}

/// Coefficients of f as a polynomial in x_i, keyed by x_i-degree (x_i removed).
inline std::map<std::uint32_t, Polynomial> coefficients_in(const Polynomial& f, std::size_t i) {
    std::map<std::uint32_t, Polynomial> out;
    for (const auto& [m, c] : f.terms()) {
        Monomial rest = m;
        rest[i] = 0;
        out.try_emplace(m[i], f.field(), f.arity()).first->second.add_term(rest, c);
    }
    return out;
}

inline Polynomial leading_coefficient_in(const Polynomial& f, std::size_t i) {
    return coefficients_in(f, i).rbegin()->second;
}

/// lc(b)^k * a reduced by b in x_i, one lc(b) factor per elimination step.
inline Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t i) {
    const std::uint32_t db = b.degree_in(i);
    const Polynomial lb = leading_coefficient_in(b, i);
    while (!a.is_zero()) {
        const std::uint32_t da = a.degree_in(i);
        if (da < db) break;
        const Polynomial la = leading_coefficient_in(a, i);
        Monomial shift(a.arity());
        shift[i] = da - db;
        a = lb * a - (la * b).shifted(shift);
    }
    return a;
}

inline std::optional<std::size_t> choose_main_variable(const Polynomial& a, const Polynomial& b) {
    std::optional<std::size_t> best;
    std::uint32_t best_deg = 0;
    for (std::size_t i = 0; i < a.arity(); ++i) {
        const std::uint32_t d = std::max(a.degree_in(i), b.degree_in(i));
        if (d == 0) continue;
        if (!best || d < best_deg) {
            best = i;
            best_deg = d;
        }
    }
    return best;
}

}  // namespace detail

/// GCD of the coefficients of f viewed as a polynomial in x_i.
inline Polynomial content(const Polynomial& f, std::size_t i) {
    if (i >= f.arity()) throw Error(ErrorCode::BadIndex, "variable index out of range");
    Polynomial g(f.field(), f.arity());
    for (const auto& [deg, coeff] : detail::coefficients_in(f, i)) {
        g = gcd_multivariate(g, coeff);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

inline Polynomial primitive_part(const Polynomial& f, std::size_t i) {
    if (f.is_zero()) return f;
    return detail::exact_quotient(f, content(f, i));
}

inline Polynomial gcd_univariate(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    if (a.arity() != 1) throw Error(ErrorCode::ArityMismatch, "gcd_univariate expects arity 1");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divide(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return x.normalized();
}

namespace detail {

/// GCD of two polynomials that are primitive with respect to x_i.
inline Polynomial primitive_prs(Polynomial a, Polynomial b, std::size_t i) {
    if (a.degree_in(i) < b.degree_in(i)) std::swap(a, b);
    while (true) {
        if (b.degree_in(i) == 0) return Polynomial::one(a.field(), a.arity());
        Polynomial r = pseudo_remainder(a, b, i);
        if (r.is_zero()) return b;
        a = std::move(b);
        b = primitive_part(r, i);
    }
}

}  // namespace detail

inline Polynomial gcd_multivariate(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    if (a.is_constant() || b.is_constant()) return Polynomial::one(a.field(), a.arity());
    const auto main = detail::choose_main_variable(a, b);
    const std::size_t i = *main;
    const Polynomial ca = content(a, i), cb = content(b, i);
    const Polynomial c = gcd_multivariate(ca, cb);
    const Polynomial pa = detail::exact_quotient(a, ca), pb = detail::exact_quotient(b, cb);
    return (c * detail::primitive_prs(pa, pb, i)).normalized();
}

/// Left fold of gcd_multivariate, stopping once the running GCD is constant.
inline Polynomial gcd_many(std::span<const Polynomial> polys) {
    if (polys.empty()) throw Error(ErrorCode::EmptyInput, "gcd of an empty list");
    Polynomial g = polys.front().normalized();
    for (std::size_t k = 1; k < polys.size(); ++k) {
        if (g.is_constant() && !g.is_zero()) break;
        g = gcd_multivariate(g, polys[k]);
    }
    return g;
}

inline Polynomial gcd_many(std::initializer_list<Polynomial> polys) {
    return gcd_many(std::span<const Polynomial>(polys.begin(), polys.size()));
}

/// h with h^p = f; each coefficient c maps to c^{p^{n-1}}, its unique p-th root.
inline Polynomial pth_power_root(const Polynomial& f) {
    const auto& field = f.field();
    const auto p = field.characteristic();
    std::uint64_t root_exp = 1;
    for (unsigned k = 1; k < field.degree(); ++k) root_exp *= p;
    Polynomial out(field, f.arity());
    for (const auto& [m, c] : f.terms()) {
        Monomial r(f.arity());
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (m[i] % p != 0) throw Error(ErrorCode::NotPthPower, "exponent not divisible by the characteristic");
            r[i] = static_cast<std::uint32_t>(m[i] / p);
        }
        out.add_term(r, field.pow(c, root_exp));
    }
    return out;
}

/// Square-free test via gcd(f, df/dx_1, ..., df/dx_n). When every partial
/// vanishes, f = h^p and the obstruction is h.
inline SquarefreeReport is_squarefree(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "square-free test of the zero polynomial");
    if (f.is_constant()) return {true, std::nullopt};
    std::vector<Polynomial> list{f};
    bool all_zero = true;
    for (std::size_t i = 0; i < f.arity(); ++i) {
        list.push_back(partial_derivative(f, i));
        if (!list.back().is_zero()) all_zero = false;
    }
    if (all_zero) return {false, pth_power_root(f).normalized()};
    Polynomial g = gcd_many(list);
    if (g.is_constant()) return {true, std::nullopt};
    return {false, std::move(g)};
}

}  // namespace absirr
