#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tapkit {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

// Invalid knot parameters, malformed words, bad CLI input.
struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Root finder failed to certify, Laurent division left a residual, etc.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A proved statement failed to verify; indicates a bug in this code.
struct TheoremViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct Tolerances {
    double phi_tol = 1e-8;     // |phi(root)| <= phi_tol * max|coeff|
    double matrix_tol = 1e-8;  // max entry of W^n A - B W^n
    double monic_tol = 1e-8;   // |lead - 1| and |trail - 1|
};

inline constexpr double kLaurentZeroThreshold = 1e-9;  // relative to max |coeff|
inline constexpr double kRootClusterDistance = 1e-7;
inline constexpr double kRealRootImagTol = 1e-8;
inline constexpr double kGcdMinRootDistance = 1e-6;

}  // namespace tapkit
