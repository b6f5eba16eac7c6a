#pragma once

#include <stdexcept>
#include <string>

namespace qrep {

/// Base class for all qrep errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed quiver file or polynomial text.
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

/// Vector length does not match the quiver, or two series disagree on
/// quiver / truncation degree.
class dimension_mismatch : public error {
public:
    explicit dimension_mismatch(const std::string& what) : error(what) {}
};

/// Evaluation at a pole, or 0 raised to a negative exponent.
class pole_error : public error {
public:
    explicit pole_error(const std::string& what) : error(what) {}
};

/// Too few points, duplicate abscissae, or points inconsistent with the
/// stated degree bound.
class interpolation_error : public error {
public:
    explicit interpolation_error(const std::string& what) : error(what) {}
};

/// Enumeration would exceed the configured budget.
class budget_error : public error {
public:
    explicit budget_error(const std::string& what) : error(what) {}
};

/// A stated precondition was violated by the caller.
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

} // namespace qrep
