#ifndef STABENV_ERRORS_HPP
#define STABENV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stabenv {

struct DenominatorVanishes : std::runtime_error {
    explicit DenominatorVanishes(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a t = z_J restriction leaves an uncancelled denominator factor.
// In a correctly built weight function this cannot happen, so reaching it
// signals a bug in the caller, not bad input.
struct NonCancellingDenominator : std::logic_error {
    explicit NonCancellingDenominator(const std::string& what) : std::logic_error(what) {}
};

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct NonExactDivision : std::logic_error {
    explicit NonExactDivision(const std::string& what) : std::logic_error(what) {}
};

struct GuardViolation : std::domain_error {
    explicit GuardViolation(const std::string& what) : std::domain_error(what) {}
};

struct ExponentOverflow : std::overflow_error {
    explicit ExponentOverflow(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace stabenv

#endif
