#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace emap {

// Result of f_a would exceed the double exponent range.  Callers catch this
// and switch to eval_f_logpolar.
class eval_overflow : public std::runtime_error {
public:
    explicit eval_overflow(double logmag)
        : std::runtime_error("eval_f overflow, logmag=" + std::to_string(logmag)),
          logmag_(logmag) {}
    double logmag() const { return logmag_; }

private:
    double logmag_;
};

// Requested preimage sits on a forbidden slit of the inverse branch.
class cut_line_error : public std::runtime_error {
public:
    explicit cut_line_error(const std::string& what) : std::runtime_error(what) {}
};

// Inverse solver exhausted its budget.  Must not happen for valid inputs;
// treated as a bug signal.
class no_convergence_error : public std::runtime_error {
public:
    no_convergence_error(const std::string& what, std::complex<double> target)
        : std::runtime_error(what), target_(target) {}
    std::complex<double> target() const { return target_; }

private:
    std::complex<double> target_;
};

class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// boundary_point pullback failed to go Cauchy within its depth budget.
class non_contraction_error : public std::runtime_error {
public:
    explicit non_contraction_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace emap
