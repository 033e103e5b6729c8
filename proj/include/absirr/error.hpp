#pragma once

/**
 * @file error.hpp
 * @brief Error codes and exception types shared by every absirr module.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace absirr {

enum class ErrorCode {
    InvalidField,             ///< non-prime characteristic, bad degree, or field too large
    ReducibleModulus,         ///< explicit modulus is not monic irreducible
    FieldMismatch,            ///< operands live in different fields
    DivisionByZero,
    Embedding,                ///< target field does not extend the source
    Scope,                    ///< enumeration or oracle budget exceeded
    DegenerateInput,          ///< zero / constant polynomial where a proper one is required
    ArityMismatch,
    BadIndex,
    NotPthPower,
    EmptyInput,
    Syntax,
    GeneratorOverPrimeField,  ///< the generator `a` was used over GF(p)
};

inline const char* to_string(ErrorCode c) {
    switch (c) {
    case ErrorCode::InvalidField: return "invalid-field";
    case ErrorCode::ReducibleModulus: return "reducible-modulus";
    case ErrorCode::FieldMismatch: return "field-mismatch";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::Embedding: return "embedding";
    case ErrorCode::Scope: return "scope";
    case ErrorCode::DegenerateInput: return "degenerate-input";
    case ErrorCode::ArityMismatch: return "arity-mismatch";
    case ErrorCode::BadIndex: return "bad-index";
    case ErrorCode::NotPthPower: return "not-a-pth-power";
    case ErrorCode::EmptyInput: return "empty-input";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::GeneratorOverPrimeField: return "generator-over-prime-field";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Structured parse failure. `offset` is the byte position of the first
/// offending character (input length when the input ended too early).
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t offset, const std::string& message, std::string expected = {})
        : Error(code, "at offset " + std::to_string(offset) + ": " + message), offset_(offset),
          message_(message), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& message() const noexcept { return message_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string message_;
    std::string expected_;
};

}  // namespace absirr
