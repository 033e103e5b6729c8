#pragma once

/**
 * @file criteria.hpp
 * @brief Absolute irreducibility verdicts from the graded structure of F.
 *
 * Write F = F_d + F_{d-g_1} + ... + F_{d-g_m} with gaps g_1 < ... < g_m. With
 * F_d square-free and the forms coprime:
 *
 *  - g_m outside span_N{g_1..g_{m-1}}                 -> absolutely irreducible
 *  - K = largest k with g_k outside span_N{g_1..g_{k-1}} and gcd(F_d, F_{d-g_k}) = 1:
 *      every factor has degree >= g_K, so F has at most floor(d / g_K) factors,
 *      and F is absolutely irreducible when g_m < 2 g_K
 *  - gcd(F_d, F - F_d) = 1                             -> at most floor(d / g_1) factors
 *
 * Rules are tried in exactly that order. A failed hypothesis never yields a
 * reducibility claim; NotAbsolutelyIrreducible is only emitted together with
 * an explicit divisor.
 */

#include "absirr/gcd.hpp"
#include "absirr/gf.hpp"
#include "absirr/graded.hpp"
#include "absirr/polynomial.hpp"
#include "absirr/semigroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace absirr {

enum class VerdictKind { AbsolutelyIrreducible, FactorBounds, NotAbsolutelyIrreducible, Inconclusive };

enum class Rule {
    None,
    DegreeOne,
    MainTheorem,
    KthGapDoubling,
    KthGapFactorBound,
    DegreeGapFactorBound,
    DegreeGapFactorBoundDegenerate,
    Binomial,
    Trinomial,
    Quadrinomial,
    BinaryFormSplits,
    CommonFormDivisor,
};

inline const char* to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::AbsolutelyIrreducible: return "absolutely_irreducible";
    case VerdictKind::FactorBounds: return "factor_bounds";
    case VerdictKind::NotAbsolutelyIrreducible: return "not_absolutely_irreducible";
    case VerdictKind::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

inline const char* rule_id(Rule r) {
    switch (r) {
    case Rule::None: return "none";
    case Rule::DegreeOne: return "degree-one";
    case Rule::MainTheorem: return "main-theorem";
    case Rule::KthGapDoubling: return "kth-gap-doubling";
    case Rule::KthGapFactorBound: return "kth-gap-factor-bound";
    case Rule::DegreeGapFactorBound: return "degree-gap-factor-bound";
    case Rule::DegreeGapFactorBoundDegenerate: return "degree-gap-factor-bound-degenerate";
    case Rule::Binomial: return "binomial";
    case Rule::Trinomial: return "trinomial";
    case Rule::Quadrinomial: return "quadrinomial";
    case Rule::BinaryFormSplits: return "binary-form-splits";
    case Rule::CommonFormDivisor: return "common-form-divisor";
    }
    return "none";
}

/// Names used in `Verdict::failed_hypotheses`.
namespace hypothesis {
inline constexpr const char* kNonconstant = "nonconstant";
inline constexpr const char* kLeadingSquarefree = "leading-form-squarefree";
inline constexpr const char* kNotHomogeneous = "not-homogeneous";
inline constexpr const char* kRuleApplicable = "rule-applicable";
inline constexpr const char* kRootSearchBudget = "root-search-budget";
}  // namespace hypothesis

struct Hypotheses {
    SquarefreeReport leading_squarefree;
    Polynomial forms_gcd;
    bool forms_gcd_trivial = false;
    GapProfile gap_profile;
    /// Entry i: gap_{i+1} lies in span_N{gap_1, ..., gap_i}.
    std::vector<bool> span_status;
    /// Entry k-1: gcd(F_d, F_{d-gap_k}) = 1; evaluated only where the rules need it.
    std::vector<std::optional<bool>> pairwise_gcd_trivial;
    /// gcd(F_d, F - F_d) = 1; evaluated only when the fallback bound is reached.
    std::optional<bool> tail_gcd_trivial;
};

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    Rule rule = Rule::None;
    std::optional<Hypotheses> hypotheses;
    std::optional<std::uint64_t> max_factors;
    std::optional<std::uint64_t> min_factor_degree;
    /// 1-based index K of the gap used by the k-th gap rules.
    std::optional<std::size_t> gap_index;
    std::optional<Polynomial> witness;
    std::vector<std::string> failed_hypotheses;
};

namespace detail {

inline Hypotheses compute_hypotheses(const GradedDecomposition& g) {
    std::vector<Polynomial> forms;
    for (const auto& h : g.forms) forms.push_back(h.form);
    Polynomial forms_gcd = gcd_many(forms);
    const bool trivial = forms_gcd.is_constant();
    GapProfile profile = gap_profile(g);
    auto status = span_status(profile.gaps);
    std::vector<std::optional<bool>> pairwise(profile.m());
    return Hypotheses{is_squarefree(g.leading().form), std::move(forms_gcd), trivial, std::move(profile),
                      std::move(status), std::move(pairwise), std::nullopt};
}

inline bool coprime(const Polynomial& a, const Polynomial& b) { return gcd_multivariate(a, b).is_constant(); }

inline Verdict inconclusive(std::optional<Hypotheses> h, std::vector<std::string> failed) {
    Verdict v;
    v.kind = VerdictKind::Inconclusive;
    v.hypotheses = std::move(h);
    v.failed_hypotheses = std::move(failed);
    return v;
}

inline Verdict irreducible(Rule rule, Hypotheses h) {
    Verdict v;
    v.kind = VerdictKind::AbsolutelyIrreducible;
    v.rule = rule;
    v.hypotheses = std::move(h);
    v.max_factors = 1;
    return v;
}

/// A linear divisor of a homogeneous form in at most two variables, over the
/// smallest extension GF(q^k) holding a root of its dehomogenization.
inline std::optional<Polynomial> binary_form_linear_factor(const Polynomial& form, std::uint64_t budget) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < form.arity(); ++i)
        if (form.degree_in(i) > 0) vars.push_back(i);
    const auto& field = form.field();
    if (vars.size() == 1) return Polynomial::variable(field, form.arity(), vars[0]);
    const std::size_t u = vars[0], v = vars[1];
    const auto d = static_cast<std::uint32_t>(form.total_degree().value());
    // coefficient of u^j v^{d-j}
    std::vector<Residue> coeff(d + 1, 0);
    for (const auto& [m, c] : form.terms()) coeff[m[u]] = c;
    if (coeff[d] == 0) return Polynomial::variable(field, form.arity(), v);
    for (unsigned k = 1; k <= d; ++k) {
        const auto target_order = [&] {
            std::uint64_t o = 1;
            for (unsigned i = 0; i < field.degree() * k; ++i) {
                if (o > budget / field.characteristic()) return budget + 1;
                o *= field.characteristic();
            }
            return o;
        }();
        if (target_order > budget) return std::nullopt;
        const Embedding emb = extension_of(field, k);
        const FieldSpec& ext = emb.target();
        std::vector<Residue> lifted(d + 1);
        for (std::uint32_t j = 0; j <= d; ++j) lifted[j] = emb(coeff[j]);
        for (Residue r = 0; r < ext.order(); ++r) {
            Residue acc = 0;
            for (std::uint32_t j = d + 1; j-- > 0;) acc = ext.add(ext.mul(acc, r), lifted[j]);
            if (acc != 0) continue;
            // u - r v
            Polynomial w = Polynomial::variable(ext, form.arity(), u);
            Monomial mv(form.arity());
            mv[v] = 1;
            w.add_term(mv, ext.neg(r));
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Full verdict pipeline. Throws DegenerateInput for the zero polynomial.
inline Verdict analyze(const Polynomial& f, std::uint64_t root_search_budget = kDefaultEnumerationBudget) {
    if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "cannot analyze the zero polynomial");
    if (f.is_constant()) return detail::inconclusive(std::nullopt, {hypothesis::kNonconstant});

    const GradedDecomposition g = graded_decomposition(f);
    Hypotheses h = detail::compute_hypotheses(g);
    const auto& prof = h.gap_profile;
    const std::uint64_t d = prof.degree;
    const std::size_t m = prof.m();

    if (d == 1) return detail::irreducible(Rule::DegreeOne, std::move(h));

    if (m == 0) {
        std::size_t occurring = 0;
        for (std::size_t i = 0; i < f.arity(); ++i)
            if (f.degree_in(i) > 0) ++occurring;
        if (occurring > 2) return detail::inconclusive(std::move(h), {hypothesis::kNotHomogeneous});
        auto w = detail::binary_form_linear_factor(f, root_search_budget);
        if (!w) return detail::inconclusive(std::move(h), {hypothesis::kRootSearchBudget});
        Verdict v;
        v.kind = VerdictKind::NotAbsolutelyIrreducible;
        v.rule = Rule::BinaryFormSplits;
        v.hypotheses = std::move(h);
        v.witness = std::move(*w);
        return v;
    }

    if (!h.leading_squarefree.squarefree) return detail::inconclusive(std::move(h), {hypothesis::kLeadingSquarefree});

    if (!h.forms_gcd_trivial) {
        // a common divisor of every form divides their sum F
        Verdict v;
        v.kind = VerdictKind::NotAbsolutelyIrreducible;
        v.rule = Rule::CommonFormDivisor;
        v.witness = h.forms_gcd;
        v.hypotheses = std::move(h);
        return v;
    }

    if (!h.span_status[m - 1]) return detail::irreducible(Rule::MainTheorem, std::move(h));

    const Polynomial& lead = g.leading().form;
    for (std::size_t k = m - 1; k >= 1; --k) {
        if (h.span_status[k - 1]) continue;
        const bool ok = detail::coprime(lead, g.forms[k].form);
        h.pairwise_gcd_trivial[k - 1] = ok;
        if (!ok) continue;
        const std::uint64_t gk = prof.gaps[k - 1];
        const std::uint64_t gm = prof.gaps[m - 1];
        Verdict v;
        v.gap_index = k;
        if (gm < 2 * gk) {
            v.kind = VerdictKind::AbsolutelyIrreducible;
            v.rule = Rule::KthGapDoubling;
            v.max_factors = 1;
        } else {
            v.kind = VerdictKind::FactorBounds;
            v.rule = Rule::KthGapFactorBound;
            v.max_factors = d / gk;
            v.min_factor_degree = gk;
        }
        v.hypotheses = std::move(h);
        return v;
    }

    const bool tail_ok = detail::coprime(lead, f - lead);
    h.tail_gcd_trivial = tail_ok;
    if (tail_ok) {
        const std::uint64_t bound = d / prof.gaps[0];
        if (bound <= 1) return detail::irreducible(Rule::DegreeGapFactorBoundDegenerate, std::move(h));
        Verdict v;
        v.kind = VerdictKind::FactorBounds;
        v.rule = Rule::DegreeGapFactorBound;
        v.max_factors = bound;
        v.hypotheses = std::move(h);
        return v;
    }
    return detail::inconclusive(std::move(h), {hypothesis::kRuleApplicable});
}

namespace detail {

/// Shared gate of the few-forms checkers: exactly `forms` components, square-free
/// leading form, coprime forms, and the last gap outside the span of the others.
inline std::optional<Verdict> few_forms_check(const Polynomial& f, std::size_t forms, Rule rule) {
    if (f.is_constant()) return std::nullopt;
    const GradedDecomposition g = graded_decomposition(f);
    if (g.size() != forms) return std::nullopt;
    Hypotheses h = compute_hypotheses(g);
    if (!h.leading_squarefree.squarefree || !h.forms_gcd_trivial) return std::nullopt;
    if (h.span_status.back()) return std::nullopt;
    return irreducible(rule, std::move(h));
}

}  // namespace detail

/// F = F_d + F_e with F_d square-free and gcd(F_d, F_e) = 1.
inline std::optional<Verdict> check_binomial(const Polynomial& f) {
    return detail::few_forms_check(f, 2, Rule::Binomial);
}

/// Three forms; the second gap must not be a multiple of the first.
inline std::optional<Verdict> check_trinomial(const Polynomial& f) {
    return detail::few_forms_check(f, 3, Rule::Trinomial);
}

/// Four forms; the third gap must lie outside span_N of the first two.
inline std::optional<Verdict> check_quadrinomial(const Polynomial& f) {
    return detail::few_forms_check(f, 4, Rule::Quadrinomial);
}

struct FactorBound {
    std::uint64_t max_factors;
    std::optional<std::uint64_t> min_factor_degree;
};

inline std::optional<FactorBound> factor_bound(const Verdict& v) {
    if (v.kind == VerdictKind::AbsolutelyIrreducible) return FactorBound{1, std::nullopt};
    if (v.kind == VerdictKind::FactorBounds) return FactorBound{*v.max_factors, v.min_factor_degree};
    return std::nullopt;
}

inline std::optional<FactorBound> factor_bound(const Polynomial& f) { return factor_bound(analyze(f)); }

}  // namespace absirr
