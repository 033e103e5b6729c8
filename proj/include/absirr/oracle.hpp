#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force ground truth for small univariate and bivariate inputs.
 *
 * Univariate factorization is trial division by every monic polynomial of
 * ascending degree, in canonical order. Bivariate divisors are found by an
 * exhaustive graded search: any factor P of F has a leading form dividing F_d,
 * so after scaling P_e is a product of a sub-multiset of the irreducible
 * factors of the binary form F_d, and every lower component is pinned down,
 * degree by degree, by the linear equations
 *
 *     L Q_{t-j} + M P_{e-j} = F_{d-j} - sum_{0<i<j} P_{e-i} Q_{t-j+i}.
 *
 * All solutions of each system are enumerated (particular solution plus
 * every kernel combination), so no divisor is missed. Each survivor is
 * re-multiplied against F before it is reported.
 *
 * Absolute irreducibility sweeps GF(q^k) for k = 1..deg F. This suffices: if F
 * is irreducible over GF(q) but not over the closure, its absolute factors
 * form r > 1 Frobenius conjugates of equal degree deg F / r, and all of them
 * are defined over GF(q^r) with r <= deg F.
 *
 * The budget caps the number of candidates actually visited (trial divisors
 * plus search nodes). Running out raises a Scope error, never a wrong answer.
 */

#include "absirr/error.hpp"
#include "absirr/gf.hpp"
#include "absirr/polynomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace absirr::oracle {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;
inline constexpr const char* kBudgetEnv = "ABSIRR_ORACLE_BUDGET";

/// ABSIRR_ORACLE_BUDGET when set, else kDefaultBudget.
inline std::uint64_t default_budget() {
    const char* env = std::getenv(kBudgetEnv);
    if (!env || !*env) return kDefaultBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0 || env[0] == '-')
        throw Error(ErrorCode::Syntax, std::string(kBudgetEnv) + " must be a positive integer");
    return v;
}

class Budget {
public:
    explicit Budget(std::uint64_t limit = default_budget()) : limit_(limit) {}

    void charge(std::uint64_t n = 1) {
        if (n > limit_ - used_) throw Error(ErrorCode::Scope, "oracle budget of " + std::to_string(limit_) + " exceeded");
        used_ += n;
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

namespace detail {

/// Dense univariate polynomial, lowest coefficient first, no trailing zeros.
using Upoly = std::vector<Residue>;
/// Binary form of degree size()-1; entry a is the coefficient of x^a y^{deg-a}.
using Form = std::vector<Residue>;

/// Bivariate polynomial as its homogeneous components forms[0..deg].
struct Dense {
    std::vector<Form> forms;
    std::size_t degree() const { return forms.size() - 1; }
};

inline void trim(Upoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline bool all_zero(const std::vector<Residue>& v) {
    for (auto c : v)
        if (c) return false;
    return true;
}

/// Quotient and remainder of a by nonzero b.
inline std::pair<Upoly, Upoly> divmod(const FieldSpec& F, Upoly a, const Upoly& b) {
    if (a.size() < b.size()) return {{}, std::move(a)};
    const Residue inv_lead = F.inv(b.back());
    Upoly q(a.size() - b.size() + 1, 0);
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0) continue;
        const Residue c = F.mul(a[i], inv_lead);
        const std::size_t shift = i + 1 - b.size();
        q[shift] = c;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = F.sub(a[shift + k], F.mul(c, b[k]));
    }
    trim(a);
    return {std::move(q), std::move(a)};
}

struct UnivariateFactors {
    Residue unit = 1;
    std::vector<std::pair<Upoly, unsigned>> factors;  // monic, ascending degree
};

/// Divides out `h` as often as possible; returns the multiplicity.
inline unsigned strip(const FieldSpec& F, Upoly& g, const Upoly& h) {
    unsigned mult = 0;
    while (g.size() >= h.size()) {
        auto [q, r] = divmod(F, g, h);
        if (!r.empty()) break;
        g = std::move(q);
        ++mult;
    }
    return mult;
}

inline UnivariateFactors factor_dense_univariate(const FieldSpec& F, Upoly g, Budget& budget) {
    trim(g);
    if (g.empty()) throw Error(ErrorCode::DegenerateInput, "cannot factor the zero polynomial");
    UnivariateFactors out;
    out.unit = g.back();
    const Residue inv_unit = F.inv(g.back());
    for (auto& c : g) c = F.mul(c, inv_unit);
    const std::uint64_t Q = F.order();

    // degree one: root evaluation
    if (g.size() >= 2) {
        for (Residue r = 0; r < Q && g.size() >= 2; ++r) {
            budget.charge();
            Residue acc = 0;
            for (std::size_t i = g.size(); i-- > 0;) acc = F.add(F.mul(acc, r), g[i]);
            if (acc != 0) continue;
            const Upoly lin{F.neg(r), 1};
            out.factors.emplace_back(lin, strip(F, g, lin));
        }
    }
    // degree e >= 2: every monic candidate, c_0 least significant in the counter
    for (std::size_t e = 2; 2 * e <= g.size() - 1; ++e) {
        Upoly cand(e + 1, 0);
        cand[e] = 1;
        cand[0] = 1;  // a zero constant term means a root at 0, already removed
        while (true) {
            budget.charge();
            if (const unsigned m = strip(F, g, cand)) out.factors.emplace_back(cand, m);
            if (2 * e > g.size() - 1) break;
            std::size_t i = 0;
            for (; i < e; ++i) {
                if (++cand[i] < Q) break;
                cand[i] = (i == 0) ? 1 : 0;
            }
            if (i == e) break;
        }
    }
    if (g.size() >= 2) out.factors.emplace_back(std::move(g), 1);
    std::stable_sort(out.factors.begin(), out.factors.end(),
                     [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
    return out;
}

inline Form form_mul(const FieldSpec& F, const Form& a, const Form& b) {
    Form out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return out;
}

/// a / b when b divides a exactly.
inline std::optional<Form> form_div(const FieldSpec& F, Form a, const Form& b) {
    std::size_t hb = b.size();
    while (hb-- > 0 && b[hb] == 0) {}
    if (a.size() < b.size()) return std::nullopt;
    const std::size_t dq = a.size() - b.size();
    Form q(dq + 1, 0);
    const Residue inv_lead = F.inv(b[hb]);
    for (std::size_t i = a.size(); i-- > hb;) {
        if (a[i] == 0) continue;
        const std::size_t pos = i - hb;
        if (pos > dq) return std::nullopt;
        const Residue c = F.mul(a[i], inv_lead);
        q[pos] = c;
        for (std::size_t k = 0; k <= hb; ++k) a[pos + k] = F.sub(a[pos + k], F.mul(c, b[k]));
    }
    if (!all_zero(a)) return std::nullopt;
    return q;
}

/// Irreducible factors of a nonzero binary form over F: y with its
/// multiplicity, then each monic factor of form(x, 1) homogenized.
inline std::vector<std::pair<Form, unsigned>> factor_binary_form(const FieldSpec& F, const Form& form, Budget& budget) {
    Upoly g(form.begin(), form.end());
    trim(g);
    std::vector<std::pair<Form, unsigned>> out;
    const std::size_t ymult = form.size() - g.size();
    if (ymult) out.push_back({Form{1, 0}, static_cast<unsigned>(ymult)});
    for (auto& [h, m] : factor_dense_univariate(F, g, budget).factors) out.emplace_back(std::move(h), m);
    return out;
}

struct Solution {
    std::vector<Residue> particular;
    std::vector<std::vector<Residue>> kernel;
};

/// All solutions of A x = b (A given by columns) over F, or none.
inline std::optional<Solution> solve(const FieldSpec& F, std::vector<std::vector<Residue>> cols, std::vector<Residue> b) {
    const std::size_t rows = b.size(), n = cols.size();
    std::vector<std::vector<Residue>> m(rows, std::vector<Residue>(n + 1, 0));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < rows; ++r) m[r][c] = cols[c][r];
    for (std::size_t r = 0; r < rows; ++r) m[r][n] = b[r];

    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < rows; ++c) {
        std::size_t sel = row;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        const Residue inv = F.inv(m[row][c]);
        for (auto& v : m[row]) v = F.mul(v, inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][c] == 0) continue;
            const Residue f = m[r][c];
            for (std::size_t k = c; k <= n; ++k) m[r][k] = F.sub(m[r][k], F.mul(f, m[row][k]));
        }
        pivots.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (m[r][n] != 0) return std::nullopt;

    Solution s;
    s.particular.assign(n, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) s.particular[pivots[i]] = m[i][n];
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Residue> k(n, 0);
        k[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = F.neg(m[i][free]);
        s.kernel.push_back(std::move(k));
    }
    return s;
}

/// Degree-by-degree search for P, Q with leading forms L, M and P Q = f.
class Lifter {
public:
    Lifter(const FieldSpec& F, const Dense& f, Budget& budget, Form L, Form M)
        : F_(F), f_(f), budget_(budget), e_(L.size() - 1), t_(M.size() - 1), d_(f.degree()) {
        P_.forms.resize(e_ + 1);
        Q_.forms.resize(t_ + 1);
        P_.forms[e_] = std::move(L);
        Q_.forms[t_] = std::move(M);
    }

    bool run() { return level(1); }
    Dense take_p() { return std::move(P_); }
    Dense take_q() { return std::move(Q_); }

private:
    bool level(std::size_t j) {
        if (j > d_) return verify();
        const std::size_t deg = d_ - j;
        Form rhs = f_.forms[deg];
        for (std::size_t i = 1; i < j; ++i) {
            if (i > e_ || j > t_ + i) continue;
            const Form prod = form_mul(F_, P_.forms[e_ - i], Q_.forms[t_ - j + i]);
            for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] = F_.sub(rhs[k], prod[k]);
        }
        const bool has_a = j <= t_, has_b = j <= e_;
        if (!has_a && !has_b) return all_zero(rhs) && level(j + 1);

        const std::size_t na = has_a ? t_ - j + 1 : 0, nb = has_b ? e_ - j + 1 : 0;
        std::vector<std::vector<Residue>> cols;
        const Form& L = P_.forms[e_];
        const Form& M = Q_.forms[t_];
        for (std::size_t a = 0; a < na; ++a) {
            std::vector<Residue> col(deg + 1, 0);
            for (std::size_t k = 0; k < L.size(); ++k) col[a + k] = L[k];
            cols.push_back(std::move(col));
        }
        for (std::size_t b = 0; b < nb; ++b) {
            std::vector<Residue> col(deg + 1, 0);
            for (std::size_t k = 0; k < M.size(); ++k) col[b + k] = M[k];
            cols.push_back(std::move(col));
        }
        auto sol = solve(F_, std::move(cols), std::move(rhs));
        if (!sol) return false;

        const std::size_t dim = sol->kernel.size();
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < dim; ++i) {
            if (combos > budget_.limit() / F_.order())
                throw Error(ErrorCode::Scope, "solution space exceeds the oracle budget");
            combos *= F_.order();
        }
        std::vector<Residue> lambda(dim, 0);
        for (std::uint64_t c = 0; c < combos; ++c) {
            budget_.charge();
            std::vector<Residue> x = sol->particular;
            for (std::size_t i = 0; i < dim; ++i)
                if (lambda[i])
                    for (std::size_t k = 0; k < x.size(); ++k) x[k] = F_.add(x[k], F_.mul(lambda[i], sol->kernel[i][k]));
            if (has_a) Q_.forms[t_ - j].assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(na));
            if (has_b) P_.forms[e_ - j].assign(x.begin() + static_cast<std::ptrdiff_t>(na), x.end());
            if (level(j + 1)) return true;
            for (std::size_t i = 0; i < dim; ++i) {
                if (++lambda[i] < F_.order()) break;
                lambda[i] = 0;
            }
        }
        return false;
    }

    bool verify() const {
        std::vector<Form> prod(d_ + 1);
        for (std::size_t k = 0; k <= d_; ++k) prod[k].assign(k + 1, 0);
        for (std::size_t a = 0; a <= e_; ++a)
            for (std::size_t b = 0; b <= t_; ++b) {
                const Form term = form_mul(F_, P_.forms[a], Q_.forms[b]);
                for (std::size_t k = 0; k < term.size(); ++k) prod[a + b][k] = F_.add(prod[a + b][k], term[k]);
            }
        return prod == f_.forms;
    }

    const FieldSpec& F_;
    const Dense& f_;
    Budget& budget_;
    std::size_t e_, t_, d_;
    Dense P_, Q_;
};

/// Calls visit(L) for each distinct product of a sub-multiset of `factors`
/// of total degree e; stops early when visit returns true.
template <class Visit>
bool for_each_submultiset(const FieldSpec& F, const std::vector<std::pair<Form, unsigned>>& factors, std::size_t e,
                          Visit&& visit, std::size_t idx = 0, Form acc = Form{1}) {
    if (acc.size() - 1 == e) return visit(acc);
    if (idx == factors.size()) return false;
    const auto& [h, mult] = factors[idx];
    const std::size_t hd = h.size() - 1;
    Form cur = acc;
    for (unsigned k = 0; k <= mult && cur.size() - 1 <= e; ++k) {
        if (for_each_submultiset(F, factors, e, visit, idx + 1, cur)) return true;
        if (cur.size() - 1 + hd > e) break;
        cur = form_mul(F, cur, h);
    }
    return false;
}

/// The first split f = P Q with 1 <= deg P <= deg Q in canonical search order.
inline std::optional<std::pair<Dense, Dense>> find_split(const FieldSpec& F, const Dense& f, Budget& budget) {
    const std::size_t d = f.degree();
    if (d < 2) return std::nullopt;
    const Form& lead = f.forms[d];
    const auto factors = factor_binary_form(F, lead, budget);
    std::optional<std::pair<Dense, Dense>> found;
    for (std::size_t e = 1; 2 * e <= d && !found; ++e) {
        for_each_submultiset(F, factors, e, [&](const Form& L) {
            budget.charge();
            auto M = form_div(F, lead, L);
            if (!M) throw Error(ErrorCode::DegenerateInput, "internal: leading-form factor does not divide");
            Lifter lift(F, f, budget, L, std::move(*M));
            if (!lift.run()) return false;
            found.emplace(lift.take_p(), lift.take_q());
            return true;
        });
    }
    return found;
}

/// Complete factorization of f into irreducibles (unit absorbed into one factor).
inline void factor_dense(const FieldSpec& F, const Dense& f, Budget& budget, std::vector<Dense>& out) {
    auto split = find_split(F, f, budget);
    if (!split) {
        out.push_back(f);
        return;
    }
    factor_dense(F, split->first, budget, out);
    factor_dense(F, split->second, budget, out);
}

inline Dense to_dense(const Polynomial& f) {
    if (f.arity() > 2) throw Error(ErrorCode::Scope, "the oracle handles at most two variables");
    if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "zero polynomial");
    Dense out;
    const std::size_t d = f.total_degree().value();
    out.forms.resize(d + 1);
    for (std::size_t k = 0; k <= d; ++k) out.forms[k].assign(k + 1, 0);
    for (const auto& [m, c] : f.terms()) out.forms[m.degree()][m[0]] = c;
    return out;
}

inline Polynomial from_dense(const FieldSpec& F, const Dense& f, std::size_t arity) {
    Polynomial out(F, arity);
    for (std::size_t k = 0; k < f.forms.size(); ++k)
        for (std::size_t a = 0; a <= k; ++a) {
            if (!f.forms[k][a]) continue;
            Monomial m(arity);
            m[0] = static_cast<std::uint32_t>(a);
            if (k != a) m[1] = static_cast<std::uint32_t>(k - a);
            out.add_term(m, f.forms[k][a]);
        }
    return out;
}

inline Dense lift(const Dense& f, const Embedding& emb) {
    Dense out = f;
    for (auto& form : out.forms)
        for (auto& c : form) c = emb(c);
    return out;
}

inline Polynomial from_upoly(const FieldSpec& F, const Upoly& g) {
    Polynomial out(F, 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        Monomial m(1);
        m[0] = static_cast<std::uint32_t>(i);
        out.add_term(m, g[i]);
    }
    return out;
}

inline void require_nonconstant(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "zero polynomial");
    if (f.is_constant()) throw Error(ErrorCode::DegenerateInput, "constant polynomial");
}

}  // namespace detail

struct UnivariateFactorization {
    Residue unit = 1;
    std::vector<std::pair<Polynomial, unsigned>> factors;  ///< monic irreducible, ascending degree
};

/// Complete factorization of a univariate polynomial by trial division.
/// Requires Q^floor(deg/2) within the budget.
inline UnivariateFactorization factor_univariate(const Polynomial& f, std::uint64_t budget = default_budget()) {
    if (f.arity() != 1) throw Error(ErrorCode::ArityMismatch, "factor_univariate expects arity 1");
    if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "cannot factor the zero polynomial");
    const auto& F = f.field();
    const auto deg = f.total_degree().value();
    std::uint64_t space = 1;
    for (std::uint64_t i = 0; i < deg / 2; ++i) {
        if (space > budget / F.order()) throw Error(ErrorCode::Scope, "trial-division space exceeds the oracle budget");
        space *= F.order();
    }
    detail::Upoly g(deg + 1, 0);
    for (const auto& [m, c] : f.terms()) g[m[0]] = c;
    Budget b(budget);
    auto raw = detail::factor_dense_univariate(F, std::move(g), b);
    UnivariateFactorization out;
    out.unit = raw.unit;
    for (auto& [h, m] : raw.factors) out.factors.emplace_back(detail::from_upoly(F, h), m);
    return out;
}

/// Irreducible factors over the coefficient field, normalized to grevlex
/// leading coefficient 1, with multiplicities, in discovery order.
inline std::vector<std::pair<Polynomial, unsigned>> factor_bivariate(const Polynomial& f,
                                                                      std::uint64_t budget = default_budget()) {
    detail::require_nonconstant(f);
    Budget b(budget);
    std::vector<detail::Dense> parts;
    detail::factor_dense(f.field(), detail::to_dense(f), b, parts);
    std::vector<std::pair<Polynomial, unsigned>> out;
    for (const auto& part : parts) {
        Polynomial p = detail::from_dense(f.field(), part, f.arity()).normalized();
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == p; });
        if (it != out.end())
            ++it->second;
        else
            out.emplace_back(std::move(p), 1);
    }
    return out;
}

inline bool is_irreducible_bivariate(const Polynomial& f, std::uint64_t budget = default_budget()) {
    detail::require_nonconstant(f);
    Budget b(budget);
    return !detail::find_split(f.field(), detail::to_dense(f), b).has_value();
}

struct OracleReport {
    FieldSpec base_field;
    std::vector<unsigned> tested_extensions;
    std::map<unsigned, bool> irreducible_over;
    std::uint64_t max_factor_count = 1;
    /// Field of sample_factorization; GF(q^k) for the k attaining the count.
    std::optional<FieldSpec> sample_field;
    std::optional<std::vector<Polynomial>> sample_factorization;

    bool absolutely_irreducible() const {
        for (const auto& [k, irr] : irreducible_over)
            if (!irr) return false;
        return true;
    }
};

namespace detail {

inline OracleReport sweep(const Polynomial& f, std::uint64_t budget, bool stop_when_reducible) {
    require_nonconstant(f);
    const Dense base = to_dense(f);
    const std::size_t d = base.degree();
    OracleReport report{f.field(), {}, {}, 1, std::nullopt, std::nullopt};
    Budget b(budget);
    for (unsigned k = 1; k <= d; ++k) {
        const Embedding emb = extension_of(f.field(), k);
        const FieldSpec& ext = emb.target();
        const Dense lifted = lift(base, emb);
        report.tested_extensions.push_back(k);
        std::vector<Dense> parts;
        if (stop_when_reducible) {
            if (!find_split(ext, lifted, b)) {
                report.irreducible_over[k] = true;
                continue;
            }
        }
        factor_dense(ext, lifted, b, parts);
        report.irreducible_over[k] = parts.size() == 1;
        if (parts.size() > report.max_factor_count || (k == 1 && parts.size() == 1)) {
            report.max_factor_count = parts.size();
            report.sample_field = ext;
            std::vector<Polynomial> polys;
            for (const auto& part : parts) polys.push_back(from_dense(ext, part, f.arity()));
            report.sample_factorization = std::move(polys);
        }
        if (stop_when_reducible && parts.size() > 1) break;
    }
    if (!report.sample_factorization) {
        report.sample_field = f.field();
        report.sample_factorization = std::vector<Polynomial>{f};
    }
    return report;
}

}  // namespace detail

/// Irreducibility over GF(q^k) for k = 1, 2, ... deg f, stopping at the first
/// extension where f splits. Arity at most 2.
inline OracleReport is_absolutely_irreducible(const Polynomial& f, std::uint64_t budget = default_budget()) {
    return detail::sweep(f, budget, true);
}

/// Largest complete factor count (with multiplicity) over GF(q^k), k = 1..deg f,
/// with the factorization that attains it.
inline OracleReport count_absolute_factors(const Polynomial& f, std::uint64_t budget = default_budget()) {
    return detail::sweep(f, budget, false);
}

/// No repeated factor over the base field and no p-th power structure.
inline bool is_squarefree_bruteforce(const Polynomial& f, std::uint64_t budget = default_budget()) {
    if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "square-free test of the zero polynomial");
    if (f.is_constant()) return true;
    const auto p = f.field().characteristic();
    bool pth_power = true;
    for (const auto& [m, c] : f.terms())
        for (std::size_t i = 0; i < m.arity(); ++i)
            if (m[i] % p != 0) pth_power = false;
    if (pth_power) return false;
    if (f.arity() == 1) {
        for (const auto& [h, mult] : factor_univariate(f, budget).factors)
            if (mult > 1) return false;
        return true;
    }
    for (const auto& [h, mult] : factor_bivariate(f, budget))
        if (mult > 1) return false;
    return true;
}

}  // namespace absirr::oracle
