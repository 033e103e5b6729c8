#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials over a finite field.
 *
 * Terms are kept in a map keyed by exponent vector and ordered graded
 * reverse-lexicographically, descending (x_1 > x_2 > ...). Iteration order is
 * therefore the canonical output order, and `leading_term()` is the grevlex
 * maximum. Stored coefficients are never zero.
 */

#include "absirr/error.hpp"
#include "absirr/gf.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace absirr {

/// Upper bound on the number of variables (the text format names x1..x9).
inline constexpr std::size_t kMaxArity = 9;

class Monomial {
public:
    explicit Monomial(std::size_t arity = 0) : e_(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}
    Monomial(std::initializer_list<std::uint32_t> exponents) : e_(exponents) {}

    std::size_t arity() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t degree() const { return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0}); }
    bool is_constant() const {
        for (auto x : e_)
            if (x) return false;
        return true;
    }

    /// True when this monomial divides `other`.
    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out(a.arity());
        for (std::size_t i = 0; i < a.arity(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
        return out;
    }

    /// a / b; requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial out(a.arity());
        for (std::size_t i = 0; i < a.arity(); ++i) out.e_[i] = a.e_[i] - b.e_[i];
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> e_;
};

/// Graded reverse lexicographic comparison: total degree first, then the
/// monomial with the smaller exponent in the last differing variable wins.
inline std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    for (std::size_t i = a.arity(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

/// Strict weak order placing grevlex-larger monomials first.
struct GrevlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

/// Total degree with a distinct marker for the zero polynomial.
class Degree {
public:
    explicit Degree(std::uint64_t v) : v_(v) {}
    static Degree neg_infinity() { return Degree(); }

    bool is_neg_infinity() const { return !v_.has_value(); }
    std::uint64_t value() const {
        if (!v_) throw Error(ErrorCode::DegenerateInput, "degree of the zero polynomial");
        return *v_;
    }

    friend bool operator==(const Degree&, const Degree&) = default;
    friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
        if (!a.v_ || !b.v_) return a.v_.has_value() <=> b.v_.has_value();
        return *a.v_ <=> *b.v_;
    }

private:
    Degree() = default;
    std::optional<std::uint64_t> v_;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Residue, GrevlexDescending>;

    Polynomial(FieldSpec field, std::size_t arity) : field_(std::move(field)), arity_(arity) {
        if (arity_ == 0 || arity_ > kMaxArity)
            throw Error(ErrorCode::ArityMismatch, "arity must be between 1 and " + std::to_string(kMaxArity));
    }

    static Polynomial constant(const FieldSpec& field, std::size_t arity, Residue c) {
        Polynomial out(field, arity);
        out.add_term(Monomial(arity), c);
        return out;
    }
    static Polynomial one(const FieldSpec& field, std::size_t arity) { return constant(field, arity, 1); }

    static Polynomial variable(const FieldSpec& field, std::size_t arity, std::size_t i) {
        if (i >= arity) throw Error(ErrorCode::BadIndex, "variable index out of range");
        Monomial m(arity);
        m[i] = 1;
        Polynomial out(field, arity);
        out.add_term(m, 1);
        return out;
    }

    static Polynomial term(const FieldSpec& field, const Monomial& m, Residue c) {
        Polynomial out(field, m.arity());
        out.add_term(m, c);
        return out;
    }

    const FieldSpec& field() const { return field_; }
    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant()); }

    /// Adds c * m to the polynomial, pruning a resulting zero coefficient.
    void add_term(const Monomial& m, Residue c) {
        if (m.arity() != arity_) throw Error(ErrorCode::ArityMismatch, "monomial arity differs from polynomial arity");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    Residue coefficient_residue(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }
    FieldElement coefficient(const Monomial& m) const { return {field_, coefficient_residue(m)}; }

    const Monomial& leading_monomial() const {
        if (is_zero()) throw Error(ErrorCode::DegenerateInput, "zero polynomial has no leading term");
        return terms_.begin()->first;
    }
    Residue leading_coefficient() const {
        if (is_zero()) throw Error(ErrorCode::DegenerateInput, "zero polynomial has no leading term");
        return terms_.begin()->second;
    }

    Degree total_degree() const {
        if (is_zero()) return Degree::neg_infinity();
        // grevlex is degree-compatible
        return Degree(terms_.begin()->first.degree());
    }

    std::uint32_t degree_in(std::size_t i) const {
        if (i >= arity_) throw Error(ErrorCode::BadIndex, "variable index out of range");
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
        return d;
    }

    bool is_homogeneous() const {
        if (is_zero()) return true;
        const auto d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    /// c * this.
    Polynomial scaled(Residue c) const {
        Polynomial out(field_, arity_);
        if (c == 0) return out;
        for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_.mul(v, c));
        return out;
    }

    /// this * m.
    Polynomial shifted(const Monomial& mono) const {
        Polynomial out(field_, arity_);
        for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m * mono, v);
        return out;
    }

    /// Scaled so that the grevlex leading coefficient is 1 (zero stays zero).
    Polynomial normalized() const {
        if (is_zero() || leading_coefficient() == 1) return *this;
        return scaled(field_.inv(leading_coefficient()));
    }

    Polynomial& operator+=(const Polynomial& g) {
        check_compatible(g);
        for (const auto& [m, c] : g.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& g) {
        check_compatible(g);
        for (const auto& [m, c] : g.terms_) add_term(m, field_.neg(c));
        return *this;
    }

    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator-(const Polynomial& f) { return f.scaled(f.field_.neg(1)); }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        f.check_compatible(g);
        Polynomial out(f.field_, f.arity_);
        for (const auto& [mf, cf] : f.terms_)
            for (const auto& [mg, cg] : g.terms_) out.add_term(mf * mg, f.field_.mul(cf, cg));
        return out;
    }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

    friend bool operator==(const Polynomial& f, const Polynomial& g) {
        return f.arity_ == g.arity_ && f.field_ == g.field_ && f.terms_ == g.terms_;
    }

    void check_compatible(const Polynomial& g) const {
        if (!(field_ == g.field_)) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
        if (arity_ != g.arity_) throw Error(ErrorCode::ArityMismatch, "polynomials of different arity");
    }

private:
    FieldSpec field_;
    std::size_t arity_;
    TermMap terms_;
};

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial poly_sub(const Polynomial& f, const Polynomial& g) { return f - g; }
inline Polynomial poly_neg(const Polynomial& f) { return -f; }
inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }
inline Degree total_degree(const Polynomial& f) { return f.total_degree(); }

inline Polynomial pow(const Polynomial& f, std::uint64_t e) {
    Polynomial result = Polynomial::one(f.field(), f.arity());
    Polynomial base = f;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Multivariate division by a single divisor along grevlex: f = q*g + r where
/// no term of r is divisible by the leading monomial of g.
inline DivisionResult divide(const Polynomial& f, const Polynomial& g) {
    f.check_compatible(g);
    if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    const auto& field = f.field();
    const Monomial& lm = g.leading_monomial();
    const Residue lc_inv = field.inv(g.leading_coefficient());
    Polynomial q(field, f.arity()), r(field, f.arity()), work = f;
    while (!work.is_zero()) {
        const Monomial m = work.leading_monomial();
        const Residue c = work.leading_coefficient();
        if (lm.divides(m)) {
            const Monomial qm = m / lm;
            const Residue qc = field.mul(c, lc_inv);
            q.add_term(qm, qc);
            work -= g.shifted(qm).scaled(qc);
        } else {
            r.add_term(m, c);
            work.add_term(m, field.neg(c));
        }
    }
    return {std::move(q), std::move(r)};
}

/// f / g when g divides f exactly, otherwise nullopt.
inline std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    f.check_compatible(g);
    if (g.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    const auto& field = f.field();
    const Monomial& lm = g.leading_monomial();
    const Residue lc_inv = field.inv(g.leading_coefficient());
    Polynomial q(field, f.arity()), work = f;
    while (!work.is_zero()) {
        const Monomial m = work.leading_monomial();
        if (!lm.divides(m)) return std::nullopt;
        const Monomial qm = m / lm;
        const Residue qc = field.mul(work.leading_coefficient(), lc_inv);
        q.add_term(qm, qc);
        work -= g.shifted(qm).scaled(qc);
    }
    return q;
}

inline bool divides(const Polynomial& g, const Polynomial& f) { return divide_exact(f, g).has_value(); }

/// Formal partial derivative; exponents multiply as elements of GF(p).
inline Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
    if (i >= f.arity()) throw Error(ErrorCode::BadIndex, "variable index out of range");
    const auto& field = f.field();
    Polynomial out(field, f.arity());
    for (const auto& [m, c] : f.terms()) {
        if (m[i] == 0) continue;
        const Residue k = field.from_integer(static_cast<std::int64_t>(m[i] % field.characteristic()));
        if (k == 0) continue;
        Monomial d = m;
        d[i] -= 1;
        out.add_term(d, field.mul(c, k));
    }
    return out;
}

inline FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point) {
    if (point.size() != f.arity()) throw Error(ErrorCode::ArityMismatch, "point length differs from arity");
    const auto& field = f.field();
    for (const auto& x : point)
        if (!(x.field() == field)) throw Error(ErrorCode::FieldMismatch, "point coordinate in a different field");
    Residue acc = 0;
    for (const auto& [m, c] : f.terms()) {
        Residue t = c;
        for (std::size_t i = 0; i < m.arity(); ++i)
            if (m[i]) t = field.mul(t, field.pow(point[i].residue(), m[i]));
        acc = field.add(acc, t);
    }
    return {field, acc};
}

/// f with x_i replaced by the polynomial `value` (same field and arity).
inline Polynomial substitute_variable(const Polynomial& f, std::size_t i, const Polynomial& value) {
    if (i >= f.arity()) throw Error(ErrorCode::BadIndex, "variable index out of range");
    f.check_compatible(value);
    Polynomial out(f.field(), f.arity());
    std::map<std::uint32_t, Polynomial> powers;
    for (const auto& [m, c] : f.terms()) {
        Monomial rest = m;
        rest[i] = 0;
        auto it = powers.find(m[i]);
        if (it == powers.end()) it = powers.emplace(m[i], pow(value, m[i])).first;
        out += it->second.shifted(rest).scaled(c);
    }
    return out;
}

/// f with x_i replaced by a field constant.
inline Polynomial substitute_variable(const Polynomial& f, std::size_t i, const FieldElement& value) {
    if (!(value.field() == f.field())) throw Error(ErrorCode::FieldMismatch, "substituted value in a different field");
    return substitute_variable(f, i, Polynomial::constant(f.field(), f.arity(), value.residue()));
}

/// Coefficientwise image of f under the embedding into a larger field.
inline Polynomial lift_to_extension(const Polynomial& f, const Embedding& emb) {
    if (!(f.field() == emb.source())) throw Error(ErrorCode::FieldMismatch, "polynomial is not over the embedding source");
    Polynomial out(emb.target(), f.arity());
    for (const auto& [m, c] : f.terms()) out.add_term(m, emb(c));
    return out;
}

inline Polynomial lift_to_extension(const Polynomial& f, const FieldSpec& target) {
    return lift_to_extension(f, Embedding(f.field(), target));
}

/// Same polynomial viewed with a larger number of variables.
inline Polynomial with_arity(const Polynomial& f, std::size_t arity) {
    if (arity < f.arity()) {
        for (const auto& [m, c] : f.terms())
            for (std::size_t i = arity; i < f.arity(); ++i)
                if (m[i]) throw Error(ErrorCode::ArityMismatch, "cannot drop a variable that occurs");
    }
    Polynomial out(f.field(), arity);
    for (const auto& [m, c] : f.terms()) {
        Monomial w(arity);
        for (std::size_t i = 0; i < std::min(arity, f.arity()); ++i) w[i] = m[i];
        out.add_term(w, c);
    }
    return out;
}

}  // namespace absirr
