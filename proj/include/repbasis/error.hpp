#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace repbasis {

enum class ErrorKind {
    ZeroCoefficient,
    NonCoprime,
    ExcludedProduct,
    InvalidArgument,
    Range,
    WorkCapExceeded,
    HypothesisViolated,
    SearchExhausted,
    Parse,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` distinguishes the cause so
/// callers (the CLI, the Python module) can map it to exit codes or
/// exception types without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error(ErrorKind::Range, what) {}
};

}  // namespace repbasis
