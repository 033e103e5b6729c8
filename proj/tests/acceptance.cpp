// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <absirr.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace absirr;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const Polynomial& f) { return to_string(f.field()) + " " + format_polynomial(f); }

// Graded component of degree j, zero when j < 0 or absent.
Polynomial component(const Polynomial& f, std::int64_t j) {
    if (j < 0) return Polynomial(f.field(), f.arity());
    return homogeneous_component(f, static_cast<std::uint64_t>(j));
}

// Nonzero leading form of degree `deg`; each lower form present with probability 1/2.
Polynomial random_sparse_forms(const FieldSpec& f, std::uint32_t deg, Rng& rng) {
    Polynomial out(f, 2);
    while (out.is_zero()) out = random_homogeneous(f, 2, deg, rng);
    for (std::uint32_t j = 0; j < deg; ++j)
        if (uniform_below(rng, 2)) out += random_homogeneous(f, 2, j, rng);
    return out;
}

struct Product {
    Polynomial p, q, f;
};

// F = P*Q with deg P, deg Q in [1, max_deg] and square-free leading form of F.
Product random_product(const FieldSpec& field, std::uint32_t max_deg, Rng& rng) {
    while (true) {
        const auto s = static_cast<std::uint32_t>(1 + uniform_below(rng, max_deg));
        const auto t = static_cast<std::uint32_t>(1 + uniform_below(rng, max_deg));
        Polynomial p = random_sparse_forms(field, s, rng), q = random_sparse_forms(field, t, rng);
        Polynomial f = p * q;
        if (is_squarefree(leading_form(f)).squarefree) return {std::move(p), std::move(q), std::move(f)};
    }
}

bool forms_coprime(const Polynomial& f) {
    std::vector<Polynomial> forms;
    for (const auto& h : graded_decomposition(f).forms) forms.push_back(h.form);
    return gcd_many(forms).is_constant();
}

std::string tally_summary(const SoundnessTally& t) {
    std::ostringstream out;
    out << t.inputs << " inputs, " << t.oracle_checked << " oracle checks, " << t.scope_errors << " scope errors, "
        << t.violations.size() << " violations";
    if (!t.violations.empty()) out << "; first: " << t.violations.front();
    return out.str();
}

// ---- criteria ------------------------------------------------------------

SoundnessTally g_exhaustive;
SoundnessTally g_random;

Outcome exhaustive_soundness() {
    g_exhaustive = exhaustive_sweep(field_build(2), 2, 4);
    return {g_exhaustive.violations.empty() && g_exhaustive.inputs == 32767, tally_summary(g_exhaustive)};
}

Outcome random_soundness() {
    std::ostringstream out;
    bool ok = true;
    for (const char* spec : {"GF(3)", "GF(2^2)", "GF(5)"}) {
        const FieldSpec f = parse_field_spec(spec);
        const SoundnessTally t = random_sweep(f, 2, 4, 1000, kDefaultSeed, {});
        ok = ok && t.violations.empty() && t.inputs >= 990;
        out << spec << ": " << tally_summary(t) << "; ";
        g_random.merge(t);
    }
    return {ok, out.str()};
}

Outcome subsumption() {
    auto is_subsumption = [](const std::string& v) { return v.find("fires but analyze") != std::string::npos; };
    std::size_t bad = 0;
    for (const auto& v : g_exhaustive.violations) bad += is_subsumption(v);
    for (const auto& v : g_random.violations) bad += is_subsumption(v);
    // Shape rules only fire on few-form inputs, so add structured ones.
    SoundnessTally structured;
    Rng rng(kDefaultSeed + 3);
    for (const char* spec : {"GF(2)", "GF(3)", "GF(2^2)", "GF(5)"}) {
        const FieldSpec f = parse_field_spec(spec);
        for (int i = 0; i < 1000; ++i) {
            const auto d = static_cast<std::uint32_t>(2 + uniform_below(rng, 5));
            const auto forms = 2 + uniform_below(rng, 3);
            Polynomial p(f, 2);
            while (p.is_zero()) p = random_homogeneous(f, 2, d, rng);
            for (std::uint64_t k = 1; k < forms; ++k) p += random_homogeneous(f, 2, static_cast<std::uint32_t>(uniform_below(rng, d)), rng);
            const Verdict v = analyze(p);
            for (auto check : {check_binomial, check_trinomial, check_quadrinomial}) {
                if (!check(p)) continue;
                ++structured.subsumption_checked;
                if (v.kind != VerdictKind::AbsolutelyIrreducible) {
                    ++bad;
                    if (structured.violations.empty()) structured.violations.push_back(fmt(p));
                }
            }
        }
    }
    const auto fired = g_exhaustive.subsumption_checked + g_random.subsumption_checked + structured.subsumption_checked;
    std::ostringstream out;
    out << fired << " shape-rule firings cross-checked, " << bad << " not certified by analyze";
    if (!structured.violations.empty()) out << "; first: " << structured.violations.front();
    return {bad == 0 && fired > 0, out.str()};
}

Outcome gap_inheritance() {
    Rng rng(kDefaultSeed + 4);
    std::size_t bad = 0, finite = 0;
    std::string first;
    for (int i = 0; i < 500; ++i) {
        const FieldSpec f = field_build(i % 2 ? 3 : 2);
        const Product pr = random_product(f, 4, rng);
        const Gap g = degree_gap(pr.f);
        if (!g.is_infinite()) ++finite;
        if (degree_gap(pr.p) < g || degree_gap(pr.q) < g) {
            if (!bad++) first = fmt(pr.p) + " * " + format_polynomial(pr.q);
        }
    }
    std::ostringstream out;
    out << "500 products (" << finite << " with finite gap), " << bad << " factors with a smaller gap";
    if (bad) out << "; first: " << first;
    return {bad == 0, out.str()};
}

Outcome kth_gap_factor_degree() {
    Rng rng(kDefaultSeed + 5);
    std::size_t products = 0, deep_products = 0, checks = 0, bad = 0, attempts = 0;
    std::string first;
    // Keep going until indices k >= 2 are well represented, not only k = 1.
    while ((products < 200 || deep_products < 50) && attempts < 200000) {
        ++attempts;
        const FieldSpec f = field_build(attempts % 2 ? 3 : 2);
        const Product pr = random_product(f, 4, rng);
        const GradedDecomposition g = graded_decomposition(pr.f);
        const GapProfile prof = gap_profile(g);
        const auto status = span_status(prof.gaps);
        const Polynomial& lead = g.leading().form;
        bool used = false, deep = false;
        for (std::size_t k = 1; k <= prof.m(); ++k) {
            if (status[k - 1]) continue;
            const std::uint64_t gk = prof.gaps[k - 1];
            if (!gcd_multivariate(lead, g.forms[k].form).is_constant()) continue;
            used = true;
            ++checks;
            if (k >= 2) deep = true;
            for (const Polynomial* fac : {&pr.p, &pr.q}) {
                const auto s = static_cast<std::int64_t>(fac->total_degree().value());
                const bool ok = s >= static_cast<std::int64_t>(gk) &&
                                !component(*fac, s - static_cast<std::int64_t>(gk)).is_zero();
                if (!ok && !bad++) first = fmt(pr.p) + " * " + format_polynomial(pr.q) + " at k=" + std::to_string(k);
            }
        }
        if (used) ++products;
        if (deep) ++deep_products;
    }
    std::ostringstream out;
    out << products << " products (" << deep_products << " qualifying at some k >= 2), " << checks
        << " qualifying indices, " << bad
        << " exceptions";
    if (bad) out << "; first: " << first;
    return {bad == 0 && products >= 200 && deep_products >= 50, out.str()};
}

Outcome two_term_identities() {
    Rng rng(kDefaultSeed + 6);
    std::size_t products = 0, gap_checks = 0, k_checks = 0, bad = 0, attempts = 0;
    std::string first;
    while (products < 500 && attempts < 500000) {
        ++attempts;
        const FieldSpec f = field_build(attempts % 2 ? 3 : 2);
        const Product pr = random_product(f, 4, rng);
        if (!forms_coprime(pr.f)) continue;
        ++products;
        const GapProfile prof = gap_profile(pr.f);
        const auto status = span_status(prof.gaps);
        const auto d = static_cast<std::int64_t>(prof.degree);
        const auto s = static_cast<std::int64_t>(pr.p.total_degree().value());
        const auto t = static_cast<std::int64_t>(pr.q.total_degree().value());
        const Polynomial ps = leading_form(pr.p), qt = leading_form(pr.q);
        auto identity = [&](std::int64_t j) {
            return component(pr.f, d - j) == ps * component(pr.q, t - j) + component(pr.p, s - j) * qt;
        };
        auto note = [&](const std::string& where) {
            if (!bad++) first = fmt(pr.p) + " * " + format_polynomial(pr.q) + " at " + where;
        };
        for (std::size_t i = 1; i <= prof.m(); ++i) {
            if (status[i - 1]) continue;
            ++gap_checks;
            if (!identity(static_cast<std::int64_t>(prof.gaps[i - 1]))) note("gap index " + std::to_string(i));
        }
        if (prof.m() == 0) continue;
        const GeneratorSet earlier(std::vector<std::uint64_t>(prof.gaps.begin(), prof.gaps.end() - 1));
        for (auto k : gaps_below(prof.gaps.back(), earlier)) {
            ++k_checks;
            if (!identity(static_cast<std::int64_t>(k))) note("k=" + std::to_string(k));
        }
    }
    std::ostringstream out;
    out << products << " factorizations, " << gap_checks << " gap-index identities, " << k_checks
        << " non-representable-k identities, " << bad << " exceptions";
    if (bad) out << "; first: " << first;
    return {bad == 0 && products >= 500, out.str()};
}

std::string run_cli(const std::string& args) {
    const std::string cmd = std::string(ABSIRR_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    ::pclose(pipe);
    return out;
}

Outcome squarefree_equivalence() {
    std::size_t checked = 0, bad = 0;
    std::string first;
    auto compare = [&](const Polynomial& p) {
        if (p.is_constant()) return;
        ++checked;
        if (is_squarefree(p).squarefree != oracle::is_squarefree_bruteforce(p))
            if (!bad++) first = fmt(p);
    };
    for (std::uint64_t p : {2, 3})
        for (std::uint32_t d = 1; d <= 5; ++d) for_each_monic(field_build(p), d, compare);
    for_each_polynomial(field_build(2), monomials_up_to(2, 3), compare);
    const std::string sample = run_cli("sample --field 'GF(2)' --degree 3 --arity 1 --count all");
    const bool fraction = sample.find("square-free fraction: 0.5000\n") != std::string::npos;
    std::ostringstream out;
    out << checked << " inputs, " << bad << " disagreements; monic cubic square-free fraction "
        << (fraction ? "0.5000" : "wrong");
    if (bad) out << "; first: " << first;
    return {bad == 0 && fraction, out.str()};
}

bool brute_member(std::uint64_t t, const std::vector<std::uint64_t>& gens, std::size_t from = 0) {
    if (t == 0) return true;
    for (std::size_t i = from; i < gens.size(); ++i)
        for (std::uint64_t m = gens[i]; m <= t; m += gens[i])
            if (brute_member(t - m, gens, i + 1)) return true;
    return false;
}

Outcome semigroup_dp() {
    std::size_t sets = 0, bad = 0;
    std::vector<std::vector<std::uint64_t>> all{{}};
    for (std::uint64_t a = 1; a <= 12; ++a) {
        all.push_back({a});
        for (std::uint64_t b = a + 1; b <= 12; ++b) {
            all.push_back({a, b});
            for (std::uint64_t c = b + 1; c <= 12; ++c) all.push_back({a, b, c});
        }
    }
    for (const auto& gens : all) {
        ++sets;
        const auto table = span_table(100, GeneratorSet(gens));
        for (std::uint64_t t = 0; t <= 100; ++t) bad += table[t] != brute_member(t, gens);
    }
    const bool example = gaps_below(8, {3, 5}) == std::vector<std::uint64_t>{1, 2, 4, 7};
    std::ostringstream out;
    out << sets << " generator sets x 101 targets, " << bad << " disagreements; gaps_below(8,{3,5}) "
        << (example ? "= 1,2,4,7" : "wrong");
    return {bad == 0 && example, out.str()};
}

Outcome parser_round_trip() {
    Rng rng(kDefaultSeed + 9);
    const std::vector<FieldSpec> fields = {field_build(2), field_build(7), field_build(2, 2), field_build(3, 2),
                                           field_build(2, 5)};
    std::size_t bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const FieldSpec& f = fields[i % fields.size()];
        const std::size_t arity = 1 + uniform_below(rng, 5);
        Polynomial p(f, arity);
        const auto terms = uniform_below(rng, 7);
        for (std::uint64_t t = 0; t < terms; ++t) {
            Monomial m(arity);
            for (std::size_t v = 0; v < arity; ++v) m[v] = static_cast<std::uint32_t>(uniform_below(rng, 5));
            p.add_term(m, random_element(f, rng));
        }
        try {
            bad += !(parse_polynomial(format_polynomial(p), f, arity) == p);
        } catch (const Error&) {
            ++bad;
        }
    }
    const std::string alphabet = "xyzwa0123456789^*+-();, \tGF";
    const std::vector<std::string> seeds = {"(a+1)x^2 + a", "x^10 + x^9y + y^10 + x^7", "x1^2*x3 - 4", "GF(2^2; 1,1,1)"};
    std::size_t structured = 0, accepted = 0, unstructured = 0;
    const FieldSpec f4 = field_build(2, 2);
    for (int i = 0; i < 100000; ++i) {
        std::string s = seeds[uniform_below(rng, seeds.size())];
        const auto edits = 1 + uniform_below(rng, 4);
        for (std::uint64_t e = 0; e < edits; ++e) {
            const auto pos = s.empty() ? 0 : uniform_below(rng, s.size());
            switch (s.empty() ? 1 : uniform_below(rng, 3)) {
            case 0: s.erase(pos, 1); break;
            case 1: s.insert(pos, 1, alphabet[uniform_below(rng, alphabet.size())]); break;
            default: s[pos] = static_cast<char>(uniform_below(rng, 256)); break;
            }
        }
        for (int which = 0; which < 2; ++which) {
            try {
                if (which == 0)
                    (void)parse_polynomial(s, f4);
                else
                    (void)parse_field_spec(s);
                ++accepted;
            } catch (const ParseError& e) {
                if (e.offset() <= s.size()) ++structured; else ++unstructured;
            } catch (const Error&) {
                ++structured;
            } catch (...) {
                ++unstructured;
            }
        }
    }
    std::ostringstream out;
    out << "10000 round trips, " << bad << " mismatches; 100000 mutated inputs: " << accepted << " accepted, "
        << structured << " structured errors, " << unstructured << " other failures";
    return {bad == 0 && unstructured == 0, out.str()};
}

Outcome worked_example() {
    const FieldSpec f = field_build(2);
    const Polynomial p = parse_polynomial("x^10 + x^9y + y^10 + x^7 + y^5 + x + y", f);
    const Verdict v = analyze(p);
    const Json j = certificate_json(p, v);
    const bool ok = v.kind == VerdictKind::AbsolutelyIrreducible && v.rule == Rule::KthGapDoubling &&
                    v.gap_index == 2u && j["gaps"] == Json::array({3, 5, 9}) &&
                    j["span_status"] == Json::array({false, false, true}) && j["leading_squarefree"] == true &&
                    j["forms_gcd"] == "1" && j["pairwise_gcd_trivial"]["2"] == true;
    return {ok, j.dump()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"exhaustive GF(2) soundness sweep", exhaustive_soundness},
        {"randomized soundness over GF(3), GF(4), GF(5)", random_soundness},
        {"shape rules are subsumed by analyze", subsumption},
        {"factors inherit the degree-gap", gap_inheritance},
        {"k-th gap bounds factor degrees", kth_gap_factor_degree},
        {"two-term identities for products", two_term_identities},
        {"square-free test matches brute force", squarefree_equivalence},
        {"semigroup DP matches brute force", semigroup_dp},
        {"parser round trip and fuzzing", parser_round_trip},
        {"worked multi-gap certificate", worked_example},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
                  << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
