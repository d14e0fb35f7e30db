#pragma once

#include <stdexcept>

namespace comptonlab {

// Precondition violation: angle out of range, non-finite or non-positive input.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The configuration is valid but outside what this routine supports.
class unsupported_error : public domain_error {
public:
    using domain_error::domain_error;
};

// A well-posed query with no answer: no equiprobable partner on the far
// branch, contour does not reach the requested angle, target above the
// attainable maximum.
class no_solution_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical invariant failed: solver did not converge, probability out of
// bounds by more than rounding allows.
class tolerance_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace comptonlab
