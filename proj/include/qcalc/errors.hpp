#ifndef QCALC_ERRORS_HPP
#define QCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcalc {

// Argument outside an operation's stated domain (x = 0 for the q-derivative,
// a series argument outside its convergence radius, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A truncated sum or product failed to meet the tolerance within max_terms.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation at a zero of a denominator.
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Enumeration request whose size formula exceeds the supported range.
class SizeGuardError : public std::length_error {
public:
    explicit SizeGuardError(const std::string& what) : std::length_error(what) {}
};

// A division that the underlying identity guarantees to be exact left a
// remainder. Always an internal bug, never a user error.
class ExactnessError : public std::logic_error {
public:
    explicit ExactnessError(const std::string& what) : std::logic_error(what) {}
};

} // namespace qcalc

#endif // QCALC_ERRORS_HPP
