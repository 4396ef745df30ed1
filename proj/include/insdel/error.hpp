#pragma once

#include <stdexcept>
#include <string>

namespace insdel {

enum class ErrorKind {
    alphabet_mismatch,
    invalid_symbol,
    invalid_radius,
    domain,
    out_of_regime,
    capacity,
    infeasible,
    unsupported_field,
    script,
    budget,
    encoding,
    length,
    parse,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base error for the library. The kind drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace insdel
