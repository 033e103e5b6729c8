#pragma once

/**
 * @file gf.hpp
 * @brief Finite fields GF(p) and GF(p^n) with exact arithmetic.
 *
 * An element of GF(p^n) = GF(p)[t]/(m(t)) is the residue polynomial
 * c_0 + c_1 t + ... + c_{n-1} t^{n-1}. Internally it is packed into a single
 * integer (a `Residue`) as sum c_i p^i, so the packed value order is exactly
 * the canonical enumeration order (base-p counter, low digit fastest).
 *
 * Fields are immutable and shared: `field_build` caches one instance per
 * (p, modulus), and fields of order <= kTableLimit carry full operation tables.
 */

#include "absirr/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace absirr {

/// Packed field element: sum of c_i * p^i over the residue coefficients.
using Residue = std::uint64_t;

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

namespace detail {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), low degree first, used for modulus selection
// and for inversion in extension fields.
namespace zp {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (r != 1) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

/// Remainder of a modulo a nonzero b.
inline Poly rem(Poly a, const Poly& b, std::uint64_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
        trim(a);
    }
    return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    trim(out);
    return out;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
    return rem(mul(a, b, p), m, p);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly result{1};
    result = rem(result, m, p);
    base = rem(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, m, p);
        e >>= 1;
        if (e) base = mulmod(base, base, m, p);
    }
    return result;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline std::uint64_t eval(const Poly& f, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    return acc;
}

/// Inverse of a modulo the irreducible m (extended Euclid on polynomials).
inline Poly inverse_mod(const Poly& a, const Poly& m, std::uint64_t p) {
    Poly r0 = m, r1 = rem(a, m, p);
    Poly s0{}, s1{1};
    if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    while (r1.size() > 1) {
        // one long-division step sequence: r0 = q*r1 + r
        Poly q(r0.size() - r1.size() + 1, 0);
        Poly r = r0;
        const std::uint64_t lead_inv = inv_mod(r1.back(), p);
        while (r.size() >= r1.size()) {
            const std::uint64_t c = r.back() * lead_inv % p;
            const std::size_t shift = r.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                r[shift + i] = (r[shift + i] + (p - c) * r1[i]) % p;
            trim(r);
        }
        Poly qs = mul(q, s1, p);
        Poly s2(std::max(s0.size(), qs.size()), 0);
        for (std::size_t i = 0; i < s2.size(); ++i) {
            const std::uint64_t x = i < s0.size() ? s0[i] : 0;
            const std::uint64_t y = i < qs.size() ? qs[i] : 0;
            s2[i] = (x + p - y) % p;
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant c; a * s1 = c (mod m)
    const std::uint64_t c_inv = inv_mod(r1[0], p);
    for (auto& c : s1) c = c * c_inv % p;
    return s1;
}

/// Irreducibility of a monic polynomial over GF(p). Degree <= 3 uses a root
/// search (small p); otherwise gcd(f, t^{p^i} - t) = 1 for all i <= deg/2.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    if (n <= 3 && p <= (std::uint64_t{1} << 16)) {
        for (std::uint64_t x = 0; x < p; ++x)
            if (eval(f, x, p) == 0) return false;
        return true;
    }
    Poly h{0, 1};  // t
    for (std::size_t i = 1; i <= n / 2; ++i) {
        h = powmod(h, p, f, p);
        Poly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (zp::gcd(f, diff, p).size() != 1) return false;
    }
    return true;
}

}  // namespace zp

inline constexpr std::uint64_t kTableLimit = 1024;

struct FieldData {
    std::uint64_t p = 2;
    unsigned n = 1;
    std::vector<std::uint64_t> modulus;  // n + 1 entries, monic; {0, 1} for prime fields
    std::uint64_t order = 2;
    std::vector<std::uint64_t> pow_p;    // p^0 .. p^{n-1}
    std::vector<std::uint16_t> add_table, mul_table, inv_table, neg_table;

    bool tables() const { return !mul_table.empty(); }

    std::vector<std::uint64_t> digits(Residue v) const {
        std::vector<std::uint64_t> out(n);
        for (unsigned i = 0; i < n; ++i) {
            out[i] = v % p;
            v /= p;
        }
        return out;
    }

    Residue pack(std::span<const std::uint64_t> c) const {
        Residue v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
        return v;
    }

    Residue raw_add(Residue a, Residue b) const {
        if (n == 1) {
            Residue s = a + b;
            return s >= p ? s - p : s;
        }
        if (p == 2) return a ^ b;
        Residue out = 0;
        for (unsigned i = 0; i < n; ++i) {
            out += ((a % p + b % p) % p) * pow_p[i];
            a /= p;
            b /= p;
        }
        return out;
    }

    Residue raw_neg(Residue a) const {
        if (n == 1) return a == 0 ? 0 : p - a;
        if (p == 2) return a;
        Residue out = 0;
        for (unsigned i = 0; i < n; ++i) {
            out += ((p - a % p) % p) * pow_p[i];
            a /= p;
        }
        return out;
    }

    Residue raw_mul(Residue a, Residue b) const {
        if (n == 1) return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % p);
        auto x = digits(a);
        auto y = digits(b);
        zp::trim(x);
        zp::trim(y);
        return pack(zp::rem(zp::mul(x, y, p), modulus, p));
    }

    Residue raw_inv(Residue a) const {
        if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        if (n == 1) return zp::inv_mod(a, p);
        auto x = digits(a);
        zp::trim(x);
        return pack(zp::inverse_mod(x, modulus, p));
    }

    void build_tables() {
        if (order > kTableLimit) return;
        const std::size_t q = order;
        add_table.resize(q * q);
        mul_table.resize(q * q);
        inv_table.assign(q, 0);
        neg_table.resize(q);
        for (Residue a = 0; a < q; ++a) {
            for (Residue b = 0; b < q; ++b) {
                add_table[a * q + b] = static_cast<std::uint16_t>(raw_add(a, b));
                mul_table[a * q + b] = static_cast<std::uint16_t>(raw_mul(a, b));
            }
        }
        for (Residue a = 1; a < q; ++a) inv_table[a] = static_cast<std::uint16_t>(raw_inv(a));
        for (Residue a = 0; a < q; ++a) neg_table[a] = static_cast<std::uint16_t>(raw_neg(a));
    }
};

inline std::vector<std::uint64_t> prime_field_modulus() { return {0, 1}; }

inline void check_field_size(std::uint64_t p, unsigned n) {
    if (p >= (std::uint64_t{1} << 32)) throw Error(ErrorCode::InvalidField, "characteristic must be below 2^32");
    std::uint64_t order = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (order > (std::uint64_t{1} << 62) / p) throw Error(ErrorCode::InvalidField, "field order exceeds 2^62");
        order *= p;
    }
}

inline std::shared_ptr<const FieldData> make_field_data(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (!is_prime(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of degree >= 1");
    for (auto c : modulus)
        if (c >= p) throw Error(ErrorCode::ReducibleModulus, "modulus residues must lie in [0, p)");
    check_field_size(p, static_cast<unsigned>(modulus.size() - 1));
    auto d = std::make_shared<FieldData>();
    d->p = p;
    d->n = static_cast<unsigned>(modulus.size() - 1);
    if (d->n > 1 && !zp::is_irreducible(modulus, p))
        throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
    if (d->n == 1) modulus = prime_field_modulus();
    d->modulus = std::move(modulus);
    d->pow_p.resize(d->n);
    std::uint64_t order = 1;
    for (unsigned i = 0; i < d->n; ++i) {
        d->pow_p[i] = order;
        if (order > (std::uint64_t{1} << 62) / p) throw Error(ErrorCode::InvalidField, "field order exceeds 2^62");
        order *= p;
    }
    d->order = order;
    d->build_tables();
    return d;
}

class FieldRegistry {
public:
    static FieldRegistry& instance() {
        static FieldRegistry r;
        return r;
    }

    std::shared_ptr<const FieldData> get(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(p, modulus);
        auto it = by_modulus_.find(key);
        if (it != by_modulus_.end()) return it->second;
        auto d = make_field_data(p, modulus);
        by_modulus_.emplace(std::make_pair(p, d->modulus), d);
        return d;
    }

    std::shared_ptr<const FieldData> canonical(std::uint64_t p, unsigned n) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = canonical_.find({p, n});
            if (it != canonical_.end()) return it->second;
        }
        if (!is_prime(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
        if (n == 0) throw Error(ErrorCode::InvalidField, "extension degree must be positive");
        check_field_size(p, n);
        std::vector<std::uint64_t> modulus = n == 1 ? prime_field_modulus() : smallest_irreducible(p, n);
        auto d = get(p, modulus);
        std::lock_guard<std::mutex> lock(mu_);
        canonical_.emplace(std::make_pair(p, n), d);
        return d;
    }

private:
    // Lexicographically smallest monic irreducible of degree n, coefficients
    // compared low degree first: c_0 is the most significant digit.
    static std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned n) {
        std::vector<std::uint64_t> f(n + 1, 0);
        f[n] = 1;
        f[0] = 1;  // c_0 = 0 gives a factor t
        while (true) {
            if (f[0] != 0 && zp::is_irreducible(f, p)) return f;
            unsigned i = n;
            while (i-- > 0) {
                if (++f[i] < p) break;
                f[i] = 0;
            }
            if (i == static_cast<unsigned>(-1))
                throw Error(ErrorCode::InvalidField, "no irreducible polynomial found");
        }
    }

    std::mutex mu_;
    std::map<std::pair<std::uint64_t, std::vector<std::uint64_t>>, std::shared_ptr<const FieldData>> by_modulus_;
    std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const FieldData>> canonical_;
};

}  // namespace detail

class FieldElement;

/// Handle to an immutable finite field. Cheap to copy.
class FieldSpec {
public:
    explicit FieldSpec(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

    std::uint64_t characteristic() const { return d_->p; }
    unsigned degree() const { return d_->n; }
    std::uint64_t order() const { return d_->order; }
    const std::vector<std::uint64_t>& modulus() const { return d_->modulus; }
    bool is_prime_field() const { return d_->n == 1; }

    Residue add(Residue a, Residue b) const {
        if (d_->tables()) return d_->add_table[a * d_->order + b];
        return d_->raw_add(a, b);
    }
    Residue neg(Residue a) const {
        if (d_->tables()) return d_->neg_table[a];
        return d_->raw_neg(a);
    }
    Residue sub(Residue a, Residue b) const { return add(a, neg(b)); }
    Residue mul(Residue a, Residue b) const {
        if (d_->tables()) return d_->mul_table[a * d_->order + b];
        return d_->raw_mul(a, b);
    }
    Residue inv(Residue a) const {
        if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        if (d_->tables()) return d_->inv_table[a];
        return d_->raw_inv(a);
    }
    Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

    /// Square-and-multiply; pow(x, 0) = 1 for every x, including 0.
    Residue pow(Residue a, std::uint64_t e) const {
        Residue result = 1;
        while (e > 0) {
            if (e & 1) result = mul(result, a);
            e >>= 1;
            if (e) a = mul(a, a);
        }
        return result;
    }

    Residue frobenius(Residue a) const { return pow(a, d_->p); }

    /// Image of an integer in the prime subfield.
    Residue from_integer(std::int64_t v) const {
        const auto p = static_cast<std::int64_t>(d_->p);
        std::int64_t r = v % p;
        if (r < 0) r += p;
        return static_cast<Residue>(r);
    }

    /// The class of t in GF(p)[t]/(m). Prime fields have no generator.
    Residue generator() const {
        if (d_->n == 1) throw Error(ErrorCode::GeneratorOverPrimeField, "prime fields have no generator");
        return d_->p;
    }

    std::vector<std::uint64_t> digits(Residue v) const { return d_->digits(v); }
    Residue pack(std::span<const std::uint64_t> coeffs) const;

    bool in_prime_subfield(Residue v) const { return v < d_->p; }

    FieldElement element(Residue v) const;
    FieldElement zero() const;
    FieldElement one() const;

    const detail::FieldData& data() const { return *d_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        if (a.d_ == b.d_) return true;
        return a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus;
    }

private:
    std::shared_ptr<const detail::FieldData> d_;
};

/// GF(p^n) with the lexicographically smallest monic irreducible modulus.
inline FieldSpec field_build(std::uint64_t p, unsigned n = 1) {
    return FieldSpec(detail::FieldRegistry::instance().canonical(p, n));
}

/// GF(p)[t]/(modulus) for an explicit monic irreducible modulus (low degree first).
inline FieldSpec field_with_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (modulus.size() == 2) {
        if (modulus[1] != 1) throw Error(ErrorCode::ReducibleModulus, "modulus must be monic");
        return field_build(p, 1);
    }
    return FieldSpec(detail::FieldRegistry::instance().get(p, modulus));
}

/// "GF(p)", "GF(p^n)" when the modulus is the default one, "GF(p^n; m0,...,mn)" otherwise.
inline std::string to_string(const FieldSpec& f) {
    std::string out = "GF(" + std::to_string(f.characteristic());
    if (f.degree() == 1) return out + ")";
    out += "^" + std::to_string(f.degree());
    if (field_build(f.characteristic(), f.degree()) == f) return out + ")";
    out += ";";
    for (std::size_t i = 0; i < f.modulus().size(); ++i) {
        if (i) out += ",";
        out += " " + std::to_string(f.modulus()[i]);
    }
    return out + ")";
}

class FieldElement {
public:
    FieldElement(FieldSpec field, Residue value) : field_(std::move(field)), value_(value) {
        if (value_ >= field_.order()) throw Error(ErrorCode::InvalidField, "residue out of range");
    }

    const FieldSpec& field() const { return field_; }
    Residue residue() const { return value_; }
    /// Residue-polynomial coefficients, lowest degree first (length n).
    std::vector<std::uint64_t> coeffs() const { return field_.digits(value_); }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

private:
    FieldSpec field_;
    Residue value_;
};

inline Residue FieldSpec::pack(std::span<const std::uint64_t> coeffs) const {
    if (coeffs.size() != d_->n) throw Error(ErrorCode::InvalidField, "coefficient count must equal n");
    for (auto c : coeffs)
        if (c >= d_->p) throw Error(ErrorCode::InvalidField, "coefficient out of range");
    return d_->pack(coeffs);
}
inline FieldElement FieldSpec::element(Residue v) const { return FieldElement(*this, v); }
inline FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
inline FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

namespace detail {
inline void require_same(const FieldElement& x, const FieldElement& y) {
    if (!(x.field() == y.field())) throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
}
}  // namespace detail

inline FieldElement add(const FieldElement& x, const FieldElement& y) {
    detail::require_same(x, y);
    return {x.field(), x.field().add(x.residue(), y.residue())};
}
inline FieldElement sub(const FieldElement& x, const FieldElement& y) {
    detail::require_same(x, y);
    return {x.field(), x.field().sub(x.residue(), y.residue())};
}
inline FieldElement neg(const FieldElement& x) { return {x.field(), x.field().neg(x.residue())}; }
inline FieldElement mul(const FieldElement& x, const FieldElement& y) {
    detail::require_same(x, y);
    return {x.field(), x.field().mul(x.residue(), y.residue())};
}
inline FieldElement inv(const FieldElement& x) { return {x.field(), x.field().inv(x.residue())}; }
inline FieldElement pow(const FieldElement& x, std::uint64_t e) { return {x.field(), x.field().pow(x.residue(), e)}; }
inline FieldElement frobenius(const FieldElement& x) { return {x.field(), x.field().frobenius(x.residue())}; }

inline FieldElement operator+(const FieldElement& x, const FieldElement& y) { return add(x, y); }
inline FieldElement operator-(const FieldElement& x, const FieldElement& y) { return sub(x, y); }
inline FieldElement operator-(const FieldElement& x) { return neg(x); }
inline FieldElement operator*(const FieldElement& x, const FieldElement& y) { return mul(x, y); }

/// All p^n elements in canonical order (base-p counter, low digit fastest).
inline std::vector<FieldElement> enumerate(const FieldSpec& f, std::uint64_t budget = kDefaultEnumerationBudget) {
    if (f.order() > budget)
        throw Error(ErrorCode::Scope, "field of order " + std::to_string(f.order()) + " exceeds enumeration budget");
    std::vector<FieldElement> out;
    out.reserve(f.order());
    for (Residue v = 0; v < f.order(); ++v) out.emplace_back(f, v);
    return out;
}

/// Ring embedding GF(p^n) -> GF(p^{nk}). The generator maps to the smallest
/// root (canonical order) of the source modulus inside the target.
class Embedding {
public:
    Embedding(FieldSpec source, FieldSpec target, std::uint64_t budget = kDefaultEnumerationBudget)
        : source_(std::move(source)), target_(std::move(target)) {
        if (source_.characteristic() != target_.characteristic() || target_.degree() % source_.degree() != 0)
            throw Error(ErrorCode::Embedding, "target field does not extend the source field");
        basis_image_.push_back(1);
        if (source_.degree() == 1) return;
        if (target_.order() > budget)
            throw Error(ErrorCode::Scope, "embedding root search exceeds enumeration budget");
        const auto& m = source_.modulus();
        std::optional<Residue> root;
        for (Residue r = 0; r < target_.order() && !root; ++r) {
            Residue acc = 0;
            for (std::size_t i = m.size(); i-- > 0;) acc = target_.add(target_.mul(acc, r), m[i]);
            if (acc == 0) root = r;
        }
        if (!root) throw Error(ErrorCode::Embedding, "source modulus has no root in target");
        for (unsigned i = 1; i < source_.degree(); ++i) basis_image_.push_back(target_.mul(basis_image_.back(), *root));
        if (source_.order() <= detail::kTableLimit) {
            table_.resize(source_.order());
            for (Residue v = 0; v < source_.order(); ++v) table_[v] = compute(v);
        }
    }

    const FieldSpec& source() const { return source_; }
    const FieldSpec& target() const { return target_; }

    Residue operator()(Residue v) const {
        if (!table_.empty()) return table_[v];
        return compute(v);
    }

    FieldElement apply(const FieldElement& x) const {
        if (!(x.field() == source_)) throw Error(ErrorCode::FieldMismatch, "element is not in the source field");
        return {target_, (*this)(x.residue())};
    }

private:
    Residue compute(Residue v) const {
        if (source_.degree() == 1) return v;
        Residue out = 0;
        const auto c = source_.digits(v);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i]) out = target_.add(out, target_.mul(c[i], basis_image_[i]));
        return out;
    }

    FieldSpec source_, target_;
    std::vector<Residue> basis_image_;
    std::vector<Residue> table_;
};

inline FieldElement embed(const FieldElement& x, const FieldSpec& target) {
    return Embedding(x.field(), target).apply(x);
}

/// GF(q^k) for q = |base|, built with the canonical modulus, plus the embedding of base.
inline Embedding extension_of(const FieldSpec& base, unsigned k) {
    return Embedding(base, field_build(base.characteristic(), base.degree() * k));
}

}  // namespace absirr
