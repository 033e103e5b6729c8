#pragma once

/**
 * @file graded.hpp
 * @brief Homogeneous decomposition F = F_d + F_{d_1} + ... + F_{d_m} and the
 *        degree-gap sequence gamma_i = d - d_i derived from it.
 */

#include "absirr/polynomial.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace absirr {

struct HomogeneousForm {
    std::uint64_t degree;
    Polynomial form;
};

/// Nonzero homogeneous components in strictly decreasing degree.
struct GradedDecomposition {
    std::vector<HomogeneousForm> forms;

    std::size_t size() const { return forms.size(); }
    const HomogeneousForm& leading() const { return forms.front(); }
    const HomogeneousForm& lowest() const { return forms.back(); }
};

/// A degree-gap: a positive integer or infinity.
class Gap {
public:
    explicit Gap(std::uint64_t v) : v_(v) {}
    static Gap infinity() { return Gap(); }

    bool is_infinite() const { return !v_.has_value(); }
    std::uint64_t value() const {
        if (!v_) throw Error(ErrorCode::DegenerateInput, "infinite degree-gap has no value");
        return *v_;
    }

    friend bool operator==(const Gap&, const Gap&) = default;
    friend std::strong_ordering operator<=>(const Gap& a, const Gap& b) {
        if (!a.v_ || !b.v_) return b.v_.has_value() <=> a.v_.has_value();
        return *a.v_ <=> *b.v_;
    }

    std::string to_string() const { return v_ ? std::to_string(*v_) : "infinity"; }

private:
    Gap() = default;
    std::optional<std::uint64_t> v_;
};

struct GapProfile {
    std::uint64_t degree = 0;                 ///< d
    std::vector<std::uint64_t> gaps;          ///< gamma_1 < ... < gamma_m
    std::uint64_t tangent_cone_degree = 0;    ///< d - gamma_m, or d when m = 0

    std::size_t m() const { return gaps.size(); }

    /// 1-based i-th gap; infinity when the polynomial has fewer lower forms.
    Gap gap(std::size_t i) const {
        if (i == 0) throw Error(ErrorCode::BadIndex, "gap indices start at 1");
        return i <= gaps.size() ? Gap(gaps[i - 1]) : Gap::infinity();
    }
};

inline GradedDecomposition graded_decomposition(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "zero polynomial has no graded decomposition");
    GradedDecomposition out;
    // terms arrive in grevlex-descending order, hence by non-increasing degree
    for (const auto& [m, c] : f.terms()) {
        const auto d = m.degree();
        if (out.forms.empty() || out.forms.back().degree != d)
            out.forms.push_back({d, Polynomial(f.field(), f.arity())});
        out.forms.back().form.add_term(m, c);
    }
    return out;
}

inline Polynomial leading_form(const Polynomial& f) { return graded_decomposition(f).leading().form; }
inline Polynomial tangent_cone(const Polynomial& f) { return graded_decomposition(f).lowest().form; }

/// Degree-`deg` homogeneous component of f (zero when absent).
inline Polynomial homogeneous_component(const Polynomial& f, std::uint64_t deg) {
    Polynomial out(f.field(), f.arity());
    for (const auto& [m, c] : f.terms())
        if (m.degree() == deg) out.add_term(m, c);
    return out;
}

namespace detail {
inline void require_nonconstant(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "zero polynomial");
    if (f.is_constant()) throw Error(ErrorCode::DegenerateInput, "constant polynomial");
}
}  // namespace detail

inline GapProfile gap_profile(const GradedDecomposition& g) {
    GapProfile out;
    out.degree = g.leading().degree;
    for (std::size_t i = 1; i < g.forms.size(); ++i) out.gaps.push_back(out.degree - g.forms[i].degree);
    out.tangent_cone_degree = g.lowest().degree;
    return out;
}

inline GapProfile gap_profile(const Polynomial& f) {
    detail::require_nonconstant(f);
    return gap_profile(graded_decomposition(f));
}

/// d - d_1, or infinity for homogeneous f (single monomials included).
inline Gap degree_gap(const Polynomial& f) { return gap_profile(f).gap(1); }

}  // namespace absirr
