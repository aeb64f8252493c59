#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace pvalent {

// Invalid input that violates a structural precondition (bad truncation order,
// non-positive beta, B outside [-1,1), ...).  CLI maps this to exit code 2.
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Inputs are structurally valid but lie outside the hypotheses under which a
// bound/radius is proven.  Callers may elect to compute anyway (force flag);
// CLI maps an unforced violation to exit code 3.
class hypothesis_error : public std::domain_error {
public:
    explicit hypothesis_error(const std::string& what) : std::domain_error(what) {}
};

// Bracketing root search found no sign change on the requested interval.
class no_root_error : public std::runtime_error {
public:
    explicit no_root_error(const std::string& what) : std::runtime_error(what) {}
};

// A sampled denominator dropped below the pole guard during verification.
class pole_error : public std::runtime_error {
public:
    pole_error(const std::string& what, std::complex<double> where)
        : std::runtime_error(what), witness(where) {}
    std::complex<double> witness;
};

// Series/quadrature failed to converge within its evaluation budget.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pvalent
