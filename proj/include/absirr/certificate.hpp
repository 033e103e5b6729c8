#pragma once

/**
 * @file certificate.hpp
 * @brief JSON and text renderings of a Verdict.
 *
 * Key order is fixed, so equal verdicts render to identical bytes.
 */

#include "absirr/criteria.hpp"
#include "absirr/parser.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace absirr {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string gaps_text(const std::vector<std::uint64_t>& gaps) {
    std::string out;
    for (std::size_t i = 0; i < gaps.size(); ++i) out += (i ? "," : "") + std::to_string(gaps[i]);
    return out;
}

inline std::string span_flags_text(const std::vector<bool>& status) {
    std::string out;
    for (std::size_t i = 0; i < status.size(); ++i) {
        if (i) out += ", ";
        out += i == 0 ? "-" : (status[i] ? "inside" : "outside");
    }
    return out;
}

}  // namespace detail

/// Certificate for `v`, computed on input `f`.
inline Json certificate_json(const Polynomial& f, const Verdict& v) {
    Json j;
    j["verdict"] = to_string(v.kind);
    j["rule"] = rule_id(v.rule);
    if (v.hypotheses) {
        const Hypotheses& h = *v.hypotheses;
        j["degree"] = h.gap_profile.degree;
        j["gaps"] = h.gap_profile.gaps;
        Json flags = Json::array();
        for (bool b : h.span_status) flags.push_back(b);
        j["span_status"] = flags;
        j["leading_squarefree"] = h.leading_squarefree.squarefree;
        j["forms_gcd"] = format_polynomial(h.forms_gcd);
    } else {
        j["degree"] = f.total_degree().value();
        j["gaps"] = Json::array();
        j["span_status"] = Json::array();
        j["leading_squarefree"] = true;
        j["forms_gcd"] = format_polynomial(f.normalized());
    }
    if (v.max_factors) j["max_factors"] = *v.max_factors;
    if (v.min_factor_degree) j["min_factor_degree"] = *v.min_factor_degree;
    if (v.gap_index) j["gap_index"] = *v.gap_index;
    if (v.hypotheses) {
        const auto& pw = v.hypotheses->pairwise_gcd_trivial;
        Json checked = Json::object();
        for (std::size_t k = 0; k < pw.size(); ++k)
            if (pw[k]) checked[std::to_string(k + 1)] = *pw[k];
        if (!checked.empty()) j["pairwise_gcd_trivial"] = checked;
        if (v.hypotheses->tail_gcd_trivial) j["tail_gcd_trivial"] = *v.hypotheses->tail_gcd_trivial;
    }
    if (v.witness) {
        j["witness"] = format_polynomial(*v.witness);
        if (!(v.witness->field() == f.field())) j["witness_field"] = to_string(v.witness->field());
    }
    if (!v.failed_hypotheses.empty()) j["failed_hypotheses"] = v.failed_hypotheses;
    return j;
}

inline std::string certificate_text(const Polynomial& f, const Verdict& v) {
    const Json j = certificate_json(f, v);
    std::ostringstream out;
    out << "verdict: " << j["verdict"].get<std::string>() << '\n';
    out << "rule: " << j["rule"].get<std::string>() << '\n';
    out << "degree: " << j["degree"].get<std::uint64_t>() << '\n';
    const auto gaps = j["gaps"].get<std::vector<std::uint64_t>>();
    out << "gaps: " << (gaps.empty() ? "none" : detail::gaps_text(gaps)) << '\n';
    if (!gaps.empty()) out << "span status: " << detail::span_flags_text(j["span_status"].get<std::vector<bool>>()) << '\n';
    out << "leading form square-free: " << (j["leading_squarefree"].get<bool>() ? "yes" : "no") << '\n';
    out << "forms gcd: " << j["forms_gcd"].get<std::string>() << '\n';
    if (j.contains("gap_index")) out << "gap index: " << j["gap_index"].get<std::size_t>() << '\n';
    if (j.contains("max_factors")) out << "max factors: " << j["max_factors"].get<std::uint64_t>() << '\n';
    if (j.contains("min_factor_degree"))
        out << "min factor degree: " << j["min_factor_degree"].get<std::uint64_t>() << '\n';
    if (j.contains("witness")) {
        out << "witness: " << j["witness"].get<std::string>();
        if (j.contains("witness_field")) out << " over " << j["witness_field"].get<std::string>();
        out << '\n';
    }
    if (j.contains("failed_hypotheses")) {
        out << "failed hypotheses:";
        for (const auto& s : j["failed_hypotheses"]) out << ' ' << s.get<std::string>();
        out << '\n';
    }
    return out.str();
}

}  // namespace absirr
