#pragma once

#include <absirr.hpp>

#include <string>

namespace testing_support {

inline absirr::FieldSpec gf(const std::string& text) { return absirr::parse_field_spec(text); }

inline absirr::Polynomial P(const std::string& text, const absirr::FieldSpec& field, std::size_t arity = 2) {
    return absirr::parse_polynomial(text, field, arity);
}

inline std::string S(const absirr::Polynomial& f) { return absirr::format_polynomial(f); }

}  // namespace testing_support
