#pragma once

/**
 * @file random.hpp
 * @brief Reproducible random and exhaustive polynomial generation.
 *
 * Sampling uses std::mt19937_64 with explicit rejection instead of the
 * standard distributions, whose output is implementation-defined, so a seed
 * reproduces the same polynomials on every platform.
 */

#include "absirr/gf.hpp"
#include "absirr/polynomial.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace absirr {

using Rng = std::mt19937_64;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Uniform integer in [0, n), n > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = Rng::max() - Rng::max() % n;
    std::uint64_t v;
    do v = rng(); while (v >= limit);
    return v % n;
}

inline Residue random_element(const FieldSpec& f, Rng& rng) { return uniform_below(rng, f.order()); }
inline Residue random_nonzero(const FieldSpec& f, Rng& rng) { return 1 + uniform_below(rng, f.order() - 1); }

/// Monomials of total degree exactly `degree` in grevlex-descending order.
inline std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t degree) {
    std::vector<Monomial> out;
    Monomial m(arity);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 == arity) {
            m[i] = left;
            out.push_back(m);
            return;
        }
        for (std::uint32_t e = left + 1; e-- > 0;) {
            m[i] = e;
            self(self, i + 1, left - e);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), GrevlexDescending{});
    return out;
}

/// Monomials of total degree at most `max_degree`, highest degree first.
inline std::vector<Monomial> monomials_up_to(std::size_t arity, std::uint32_t max_degree) {
    std::vector<Monomial> out;
    for (std::uint32_t d = max_degree + 1; d-- > 0;) {
        auto layer = monomials_of_degree(arity, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

/// Every monomial of degree <= max_degree gets an independent uniform coefficient.
inline Polynomial random_polynomial(const FieldSpec& f, std::size_t arity, std::uint32_t max_degree, Rng& rng) {
    Polynomial out(f, arity);
    for (const auto& m : monomials_up_to(arity, max_degree)) out.add_term(m, random_element(f, rng));
    return out;
}

inline Polynomial random_homogeneous(const FieldSpec& f, std::size_t arity, std::uint32_t degree, Rng& rng) {
    Polynomial out(f, arity);
    for (const auto& m : monomials_of_degree(arity, degree)) out.add_term(m, random_element(f, rng));
    return out;
}

/// Uniform among polynomials of total degree exactly `degree` (resamples a
/// zero leading form).
inline Polynomial random_polynomial_exact_degree(const FieldSpec& f, std::size_t arity, std::uint32_t degree, Rng& rng) {
    while (true) {
        Polynomial out = random_polynomial(f, arity, degree, rng);
        if (!out.is_zero() && out.total_degree().value() == degree) return out;
    }
}

/// Calls visit(p) for every polynomial supported on `monomials`, in counter
/// order with the first monomial least significant.
template <class Visit>
void for_each_polynomial(const FieldSpec& f, const std::vector<Monomial>& monomials, Visit&& visit) {
    std::vector<Residue> c(monomials.size(), 0);
    const std::size_t arity = monomials.empty() ? 1 : monomials.front().arity();
    while (true) {
        Polynomial p(f, arity);
        for (std::size_t i = 0; i < c.size(); ++i) p.add_term(monomials[i], c[i]);
        visit(p);
        std::size_t i = 0;
        for (; i < c.size(); ++i) {
            if (++c[i] < f.order()) break;
            c[i] = 0;
        }
        if (i == c.size()) return;
    }
}

/// Monic univariate polynomials of exact degree `degree`.
template <class Visit>
void for_each_monic(const FieldSpec& f, std::uint32_t degree, Visit&& visit) {
    std::vector<Monomial> lower;
    for (std::uint32_t e = 0; e < degree; ++e) {
        Monomial m(1);
        m[0] = e;
        lower.push_back(m);
    }
    Monomial top(1);
    top[0] = degree;
    for_each_polynomial(f, lower, [&](Polynomial p) {
        p.add_term(top, 1);
        visit(p);
    });
}

}  // namespace absirr
