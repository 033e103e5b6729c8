#pragma once

/**
 * @file soundness.hpp
 * @brief Cross-checks of criteria verdicts against the brute-force oracle.
 */

#include "absirr/certificate.hpp"
#include "absirr/criteria.hpp"
#include "absirr/oracle.hpp"
#include "absirr/parser.hpp"
#include "absirr/random.hpp"

#include <map>
#include <string>
#include <vector>

namespace absirr {

struct SoundnessTally {
    std::uint64_t inputs = 0;
    std::map<std::string, std::uint64_t> by_rule;  ///< "verdict/rule" -> count
    std::uint64_t oracle_checked = 0;
    std::uint64_t scope_errors = 0;
    std::uint64_t subsumption_checked = 0;
    /// Inconclusive inputs that the oracle shows are not absolutely irreducible.
    std::uint64_t near_misses = 0;
    std::vector<std::string> near_miss_samples;
    std::vector<std::string> violations;

    void merge(const SoundnessTally& o) {
        inputs += o.inputs;
        for (const auto& [k, v] : o.by_rule) by_rule[k] += v;
        oracle_checked += o.oracle_checked;
        scope_errors += o.scope_errors;
        subsumption_checked += o.subsumption_checked;
        near_misses += o.near_misses;
        near_miss_samples.insert(near_miss_samples.end(), o.near_miss_samples.begin(), o.near_miss_samples.end());
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
};

struct SoundnessOptions {
    std::uint64_t budget = oracle::kDefaultBudget;
    bool check_near_misses = false;
    std::size_t max_near_miss_samples = 5;
};

namespace detail {

inline void record_violation(SoundnessTally& t, const Polynomial& f, const std::string& what) {
    t.violations.push_back(to_string(f.field()) + " " + format_polynomial(f) + ": " + what);
}

inline void check_witness(SoundnessTally& t, const Polynomial& f, const Verdict& v) {
    const Polynomial& w = *v.witness;
    const Polynomial lifted = w.field() == f.field() ? f : lift_to_extension(f, w.field());
    if (w.is_constant() || w.total_degree() >= f.total_degree() || !divides(w, lifted))
        record_violation(t, f, "witness " + format_polynomial(w) + " is not a proper divisor");
}

}  // namespace detail

/// Analyzes f, checks the verdict against the oracle where in scope, and
/// checks that every firing shape rule is matched by analyze.
inline void check_soundness(const Polynomial& f, SoundnessTally& t, const SoundnessOptions& opt = {}) {
    if (f.is_zero()) return;
    ++t.inputs;
    const Verdict v = analyze(f);
    ++t.by_rule[std::string(to_string(v.kind)) + "/" + rule_id(v.rule)];

    for (auto check : {check_binomial, check_trinomial, check_quadrinomial}) {
        if (auto fired = check(f)) {
            ++t.subsumption_checked;
            if (v.kind != VerdictKind::AbsolutelyIrreducible)
                detail::record_violation(t, f, std::string(rule_id(fired->rule)) + " fires but analyze does not certify");
        }
    }
    if (v.witness) detail::check_witness(t, f, v);

    const bool oracle_in_scope = f.arity() <= 2 && !f.is_constant();
    if (!oracle_in_scope) return;
    try {
        switch (v.kind) {
        case VerdictKind::AbsolutelyIrreducible: {
            const auto rep = oracle::is_absolutely_irreducible(f, opt.budget);
            ++t.oracle_checked;
            if (!rep.absolutely_irreducible()) detail::record_violation(t, f, "certified but the oracle finds a split");
            break;
        }
        case VerdictKind::FactorBounds: {
            const auto rep = oracle::count_absolute_factors(f, opt.budget);
            ++t.oracle_checked;
            if (rep.max_factor_count > *v.max_factors)
                detail::record_violation(t, f, std::to_string(rep.max_factor_count) + " factors exceed the bound " +
                                                   std::to_string(*v.max_factors));
            if (v.min_factor_degree)
                for (const auto& p : *rep.sample_factorization)
                    if (p.total_degree().value() < *v.min_factor_degree)
                        detail::record_violation(t, f, "factor " + format_polynomial(p) + " below the degree bound");
            break;
        }
        case VerdictKind::NotAbsolutelyIrreducible: {
            const auto rep = oracle::is_absolutely_irreducible(f, opt.budget);
            ++t.oracle_checked;
            if (rep.absolutely_irreducible()) detail::record_violation(t, f, "witness given but the oracle finds no split");
            break;
        }
        case VerdictKind::Inconclusive: {
            if (!opt.check_near_misses) break;
            const auto rep = oracle::is_absolutely_irreducible(f, opt.budget);
            ++t.oracle_checked;
            if (!rep.absolutely_irreducible()) {
                ++t.near_misses;
                if (t.near_miss_samples.size() < opt.max_near_miss_samples)
                    t.near_miss_samples.push_back(to_string(f.field()) + " " + format_polynomial(f));
            }
            break;
        }
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::Scope) throw;
        ++t.scope_errors;
    }
}

/// Every polynomial of total degree <= max_degree over `field` in `arity` variables.
inline SoundnessTally exhaustive_sweep(const FieldSpec& field, std::size_t arity, std::uint32_t max_degree,
                                       const SoundnessOptions& opt = {}) {
    SoundnessTally t;
    for_each_polynomial(field, monomials_up_to(arity, max_degree), [&](const Polynomial& f) { check_soundness(f, t, opt); });
    return t;
}

inline SoundnessTally random_sweep(const FieldSpec& field, std::size_t arity, std::uint32_t max_degree,
                                   std::uint64_t count, std::uint64_t seed, const SoundnessOptions& opt = {}) {
    SoundnessTally t;
    Rng rng(seed);
    for (std::uint64_t i = 0; i < count; ++i) check_soundness(random_polynomial(field, arity, max_degree, rng), t, opt);
    return t;
}

}  // namespace absirr
