#ifndef NRAD_ERRORS_HPP
#define NRAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nrad {

/// Base class for every error raised by the toolkit.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Empty, non-square or mismatched operands.
class dimension_error : public error {
public:
    using error::error;
};

/// Input failed the hermiticity gate.
class not_hermitian : public error {
public:
    using error::error;
};

/// Operand expected to be positive semidefinite has a clearly negative eigenvalue.
class not_positive : public error {
public:
    using error::error;
};

/// Eigensolver or SVD did not meet its residual certificate.
class convergence_failure : public error {
public:
    using error::error;
};

/// A scalar function produced NaN/Inf on the spectrum it was applied to.
class domain_error : public error {
public:
    using error::error;
};

class invalid_parameter : public error {
public:
    using error::error;
};

/// Finite-grid necessary check on a function pair failed.
class hypothesis_failed : public error {
public:
    using error::error;
};

/// Non-finite entries.
class non_finite : public error {
public:
    using error::error;
};

/// Malformed matrix file; carries the 1-based line number (0 when not line-specific).
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line)
        : error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace nrad

#endif // NRAD_ERRORS_HPP
