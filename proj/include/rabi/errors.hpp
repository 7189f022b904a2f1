// errors.hpp: exception types raised by the spectrum library.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rabi {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Requested truncation or index beyond what the library supports.
class ResourceError : public std::length_error {
public:
    using std::length_error::length_error;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::vector<double> previous, std::vector<double> last)
        : std::runtime_error(what), previous_(std::move(previous)), last_(std::move(last)) {}

    // The last two iterates seen before giving up (empty for eigensolver failures).
    const std::vector<double>& previous() const noexcept { return previous_; }
    const std::vector<double>& last() const noexcept { return last_; }

private:
    std::vector<double> previous_;
    std::vector<double> last_;
};

// Cubic without three distinct real roots (gamma = B^2 - 4AC >= 0, or A <= 0).
class DiscriminantError : public std::domain_error {
public:
    DiscriminantError(const std::string& what, double gamma, double a)
        : std::domain_error(what), gamma_(gamma), a_(a) {}
    double gamma() const noexcept { return gamma_; }
    double a() const noexcept { return a_; }

private:
    double gamma_;
    double a_;
};

// A square root of a negative number (or division by a vanishing z) in the quartic construction.
class ComplexRadicalError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A perturbative denominator hit a resonance.
class SingularDenominatorError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace rabi
