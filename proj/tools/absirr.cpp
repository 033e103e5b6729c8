// Command-line front end: check, decompose, span, oracle, sample, selftest.

#include <absirr.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace absirr;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;
constexpr int kExitScope = 3;

int exit_code_for(ErrorCode c) {
    switch (c) {
    case ErrorCode::Syntax:
    case ErrorCode::InvalidField:
    case ErrorCode::ReducibleModulus:
    case ErrorCode::GeneratorOverPrimeField:
    case ErrorCode::ArityMismatch:
    case ErrorCode::BadIndex:
    case ErrorCode::EmptyInput:
        return kExitConfig;
    default:
        return kExitScope;
    }
}

Json error_json(const Error& e) {
    Json j;
    j["error"] = to_string(e.code());
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
        j["offset"] = pe->offset();
        j["message"] = pe->message();
        if (!pe->expected().empty()) j["expected"] = pe->expected();
    } else {
        j["message"] = e.what();
    }
    return j;
}

int report_error(const Error& e, bool json) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    if (json) std::cout << error_json(e).dump() << '\n';
    return exit_code_for(e.code());
}

std::string ratio(std::uint64_t num, std::uint64_t den) {
    if (den == 0) return "n/a";
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << static_cast<double>(num) / static_cast<double>(den);
    return out.str();
}

struct Common {
    std::string field = "GF(2)";
    std::string poly;
    std::string output = "text";
    bool json() const { return output == "json"; }
};

// ---- check ---------------------------------------------------------------

int run_check_one(const std::string& field_text, const std::string& poly_text, bool json) {
    const FieldSpec field = parse_field_spec(field_text);
    const Polynomial f = parse_polynomial(poly_text, field);
    const Verdict v = analyze(f);
    if (json)
        std::cout << certificate_json(f, v).dump() << '\n';
    else
        std::cout << certificate_text(f, v);
    return kExitOk;
}

int run_check_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << '\n';
        return kExitConfig;
    }
    int status = kExitOk;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        Json out;
        out["line"] = lineno;
        try {
            if (tab == std::string::npos) throw Error(ErrorCode::Syntax, "expected field<TAB>polynomial");
            const FieldSpec field = parse_field_spec(line.substr(0, tab));
            const Polynomial f = parse_polynomial(line.substr(tab + 1), field);
            out["certificate"] = certificate_json(f, analyze(f));
        } catch (const Error& e) {
            out.update(error_json(e));
            if (status == kExitOk) status = exit_code_for(e.code());
        }
        std::cout << out.dump() << '\n';
    }
    return status;
}

// ---- decompose -----------------------------------------------------------

int run_decompose(const Common& c) {
    const FieldSpec field = parse_field_spec(c.field);
    const Polynomial f = parse_polynomial(c.poly, field);
    if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "zero polynomial has no graded decomposition");
    const GradedDecomposition g = graded_decomposition(f);
    const GapProfile prof = gap_profile(g);
    const auto flags = span_status(prof.gaps);
    const auto sq = is_squarefree(g.leading().form);
    std::vector<Polynomial> forms;
    for (const auto& h : g.forms) forms.push_back(h.form);
    const Polynomial fg = gcd_many(forms);
    const Gap gamma = prof.gap(1);

    if (c.json()) {
        Json j;
        j["field"] = to_string(field);
        j["polynomial"] = format_polynomial(f);
        Json jf = Json::array();
        for (const auto& h : g.forms) jf.push_back({{"degree", h.degree}, {"form", format_polynomial(h.form)}});
        j["forms"] = jf;
        j["gaps"] = prof.gaps;
        Json js = Json::array();
        for (bool b : flags) js.push_back(b);
        j["span_status"] = js;
        j["degree_gap"] = gamma.is_infinite() ? Json("infinity") : Json(gamma.value());
        j["tangent_cone_degree"] = prof.tangent_cone_degree;
        j["leading_squarefree"] = sq.squarefree;
        j["forms_gcd"] = format_polynomial(fg);
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    std::cout << "field: " << to_string(field) << '\n';
    std::cout << "polynomial: " << format_polynomial(f) << '\n';
    std::cout << "forms:\n";
    for (const auto& h : g.forms) std::cout << "  degree " << h.degree << ": " << format_polynomial(h.form) << '\n';
    std::cout << "gaps: " << (prof.gaps.empty() ? "none" : detail::gaps_text(prof.gaps)) << '\n';
    if (!flags.empty()) std::cout << "span flags: " << detail::span_flags_text(flags) << '\n';
    std::cout << "degree-gap: " << gamma.to_string() << '\n';
    std::cout << "tangent cone degree: " << prof.tangent_cone_degree << '\n';
    std::cout << "leading form square-free: " << (sq.squarefree ? "yes" : "no");
    if (sq.obstruction) std::cout << " (repeated factor of " << format_polynomial(*sq.obstruction) << ")";
    std::cout << '\n';
    std::cout << "forms gcd: " << format_polynomial(fg) << '\n';
    return kExitOk;
}

// ---- span ----------------------------------------------------------------

int run_span(std::uint64_t target, const std::vector<std::uint64_t>& gens, bool json) {
    const GeneratorSet set(gens);
    const bool member = span_membership(target, set);
    const auto holes = gaps_below(target, set);
    if (json) {
        Json j;
        j["target"] = target;
        j["generators"] = set.generators();
        j["representable"] = member;
        j["gaps_below"] = holes;
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    std::cout << (member ? "representable" : "not representable") << "; gaps below " << target << ": "
              << (holes.empty() ? "none" : detail::gaps_text(holes)) << '\n';
    return kExitOk;
}

// ---- oracle --------------------------------------------------------------

int run_oracle(const Common& c, std::uint64_t budget) {
    const FieldSpec field = parse_field_spec(c.field);
    const Polynomial f = parse_polynomial(c.poly, field);
    const auto rep = oracle::count_absolute_factors(f, budget);
    std::vector<std::string> factors;
    for (const auto& p : *rep.sample_factorization) factors.push_back(format_polynomial(p));
    if (c.json()) {
        Json j;
        j["base_field"] = to_string(rep.base_field);
        j["tested_extensions"] = rep.tested_extensions;
        Json irr = Json::object();
        for (const auto& [k, b] : rep.irreducible_over) irr[std::to_string(k)] = b;
        j["irreducible_over"] = irr;
        j["absolutely_irreducible"] = rep.absolutely_irreducible();
        j["max_factor_count"] = rep.max_factor_count;
        j["sample_field"] = to_string(*rep.sample_field);
        j["sample_factorization"] = factors;
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    std::cout << "base field: " << to_string(rep.base_field) << '\n';
    for (const auto& [k, b] : rep.irreducible_over)
        std::cout << "k=" << k << " " << to_string(field_build(field.characteristic(), field.degree() * k)) << ": "
                  << (b ? "irreducible" : "reducible") << '\n';
    std::cout << "absolutely irreducible: " << (rep.absolutely_irreducible() ? "yes" : "no") << '\n';
    std::cout << "max factor count: " << rep.max_factor_count << '\n';
    std::cout << "factorization over " << to_string(*rep.sample_field) << ":";
    for (const auto& s : factors) std::cout << " (" << s << ")";
    std::cout << '\n';
    return kExitOk;
}

// ---- sample --------------------------------------------------------------

struct SampleStats {
    std::uint64_t total = 0;
    std::uint64_t squarefree = 0;
    std::uint64_t leading_squarefree = 0;
    std::uint64_t squarefree_disagreements = 0;
    SoundnessTally tally;
};

void sample_one(const Polynomial& f, SampleStats& s, const SoundnessOptions& opt) {
    ++s.total;
    const bool sf = is_squarefree(f).squarefree;
    if (sf) ++s.squarefree;
    if (is_squarefree(leading_form(f)).squarefree) ++s.leading_squarefree;
    check_soundness(f, s.tally, opt);
    if (f.arity() <= 2) {
        try {
            if (oracle::is_squarefree_bruteforce(f, opt.budget) != sf) ++s.squarefree_disagreements;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Scope) throw;
        }
    }
}

int run_sample(const Common& c, std::uint32_t degree, std::size_t arity, const std::string& count, std::uint64_t seed,
               std::uint64_t budget) {
    const FieldSpec field = parse_field_spec(c.field);
    if (degree == 0) throw Error(ErrorCode::DegenerateInput, "sample degree must be positive");
    SampleStats s;
    SoundnessOptions opt;
    opt.budget = budget;
    if (count == "all") {
        // every polynomial of exact degree with grevlex leading coefficient 1
        const auto monos = monomials_up_to(arity, degree);
        std::uint64_t space = 1;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            if (space > budget / field.order()) throw Error(ErrorCode::Scope, "exhaustive sample space exceeds the budget");
            space *= field.order();
        }
        for_each_polynomial(field, monos, [&](const Polynomial& f) {
            if (f.is_zero() || f.total_degree().value() != degree || f.leading_coefficient() != 1) return;
            sample_one(f, s, opt);
        });
    } else {
        std::uint64_t n = 0;
        try {
            std::size_t used = 0;
            n = std::stoull(count, &used);
            if (used != count.size()) throw std::invalid_argument(count);
        } catch (const std::exception&) {
            throw Error(ErrorCode::Syntax, "--count must be a positive integer or 'all'");
        }
        Rng rng(seed);
        for (std::uint64_t i = 0; i < n; ++i) sample_one(random_polynomial_exact_degree(field, arity, degree, rng), s, opt);
    }
    const auto& t = s.tally;
    const std::uint64_t disagreements = t.violations.size() + s.squarefree_disagreements;
    if (c.json()) {
        Json j;
        j["field"] = to_string(field);
        j["degree"] = degree;
        j["arity"] = arity;
        j["samples"] = s.total;
        j["squarefree_fraction"] = s.total ? static_cast<double>(s.squarefree) / s.total : 0.0;
        j["leading_squarefree_fraction"] = s.total ? static_cast<double>(s.leading_squarefree) / s.total : 0.0;
        Json rules = Json::object();
        for (const auto& [k, v] : t.by_rule) rules[k] = static_cast<double>(v) / s.total;
        j["rule_fractions"] = rules;
        j["oracle_checked"] = t.oracle_checked;
        j["oracle_scope_errors"] = t.scope_errors;
        j["oracle_disagreements"] = disagreements;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "field: " << to_string(field) << ", degree " << degree << ", arity " << arity << '\n';
        std::cout << "samples: " << s.total << '\n';
        std::cout << "square-free fraction: " << ratio(s.squarefree, s.total) << '\n';
        std::cout << "leading form square-free fraction: " << ratio(s.leading_squarefree, s.total) << '\n';
        for (const auto& [k, v] : t.by_rule) std::cout << "rule " << k << ": " << ratio(v, s.total) << '\n';
        std::cout << "oracle checked: " << t.oracle_checked << ", out of scope: " << t.scope_errors << '\n';
        std::cout << "oracle disagreements: " << disagreements << '\n';
        for (const auto& v : t.violations) std::cout << "  " << v << '\n';
    }
    return disagreements == 0 ? kExitOk : kExitViolation;
}

// ---- selftest ------------------------------------------------------------

int run_selftest(std::uint64_t budget, bool json) {
    SoundnessOptions opt;
    opt.budget = budget;
    opt.check_near_misses = true;
    const SoundnessTally t = exhaustive_sweep(field_build(2), 2, 4, opt);
    if (json) {
        Json j;
        j["inputs"] = t.inputs;
        j["verdicts"] = t.by_rule;
        j["oracle_checked"] = t.oracle_checked;
        j["oracle_scope_errors"] = t.scope_errors;
        j["subsumption_checked"] = t.subsumption_checked;
        j["near_misses"] = t.near_misses;
        j["violations"] = t.violations;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "exhaustive sweep: GF(2), 2 variables, degree <= 4\n";
        std::cout << "inputs: " << t.inputs << '\n';
        for (const auto& [k, v] : t.by_rule) std::cout << "  " << k << ": " << v << '\n';
        std::cout << "oracle checked: " << t.oracle_checked << ", out of scope: " << t.scope_errors << '\n';
        std::cout << "shape rules cross-checked: " << t.subsumption_checked << '\n';
        std::cout << "near misses (inconclusive, not absolutely irreducible): " << t.near_misses << '\n';
        for (const auto& s : t.near_miss_samples) std::cout << "  e.g. " << s << '\n';
        std::cout << "violations: " << t.violations.size() << '\n';
        for (const auto& v : t.violations) std::cout << "  " << v << '\n';
    }
    return t.violations.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Absolute irreducibility checks for polynomials over finite fields"};
    app.require_subcommand(1);

    Common common;
    std::uint64_t budget = 0;
    std::string in_file;

    auto add_common = [&](CLI::App* sub, bool needs_poly) {
        sub->add_option("--field", common.field, "Field spec: GF(p), GF(p^n) or GF(p^n; c0,...,cn)")->capture_default_str();
        if (needs_poly) sub->add_option("--poly", common.poly, "Polynomial text");
        sub->add_option("--output", common.output, "Output mode")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", budget, "Oracle candidate budget (default: $ABSIRR_ORACLE_BUDGET or 2^22)")
            ->check(CLI::PositiveNumber);
    };

    auto* check = app.add_subcommand("check", "Certify absolute irreducibility");
    add_common(check, true);
    check->add_option("--in", in_file, "Batch file of field<TAB>polynomial lines (JSON-lines output)");

    auto* decompose = app.add_subcommand("decompose", "Graded forms, gap profile and hypotheses");
    add_common(decompose, true);

    std::uint64_t span_target = 0;
    std::vector<std::uint64_t> span_gens;
    auto* span = app.add_subcommand("span", "Numerical-semigroup membership");
    span->add_option("target", span_target, "Target value")->required();
    span->add_option("--gens", span_gens, "Comma-separated positive generators")->delimiter(',')->required();
    span->add_option("--output", common.output, "Output mode")->check(CLI::IsMember({"text", "json"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force absolute factorization (at most two variables)");
    add_common(oracle_cmd, true);
    add_budget(oracle_cmd);

    std::uint32_t degree = 3;
    std::size_t arity = 2;
    std::string count = "1000";
    std::uint64_t seed = kDefaultSeed;
    auto* sample = app.add_subcommand("sample", "Rule and square-free rates over random or exhaustive inputs");
    add_common(sample, false);
    sample->add_option("--degree", degree, "Exact total degree")->capture_default_str();
    sample->add_option("--arity", arity, "Number of variables")->check(CLI::Range(std::size_t{1}, kMaxArity))->capture_default_str();
    sample->add_option("--count", count, "Sample size, or 'all' for every monic input")->capture_default_str();
    sample->add_option("--seed", seed, "Random seed")->capture_default_str();
    add_budget(sample);

    auto* selftest = app.add_subcommand("selftest", "Exhaustive GF(2) soundness sweep, degree <= 4");
    selftest->add_option("--output", common.output, "Output mode")->check(CLI::IsMember({"text", "json"}));
    add_budget(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (budget == 0) budget = oracle::default_budget();
        if (*check) {
            if (!in_file.empty()) return run_check_batch(in_file);
            if (common.poly.empty()) throw Error(ErrorCode::Syntax, "--poly or --in is required");
            return run_check_one(common.field, common.poly, common.json());
        }
        if (*decompose) return run_decompose(common);
        if (*span) return run_span(span_target, span_gens, common.json());
        if (*oracle_cmd) return run_oracle(common, budget);
        if (*sample) return run_sample(common, degree, arity, count, seed, budget);
        if (*selftest) return run_selftest(budget, common.json());
    } catch (const Error& e) {
        return report_error(e, common.json());
    }
    return kExitOk;
}
