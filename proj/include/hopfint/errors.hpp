#pragma once

#include <stdexcept>
#include <string>

namespace hopfint {

/// Base class for every error raised by the library.
class hopf_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, mixed fields, bad parameters.
class invalid_input : public hopf_error {
public:
    using hopf_error::hopf_error;
};

/// An H*-module whose candidate coaction fails the comodule axioms.
class not_rational : public hopf_error {
public:
    using hopf_error::hopf_error;
};

/// ev/db failed a zig-zag identity.
class snake_failure : public hopf_error {
public:
    using hopf_error::hopf_error;
};

class non_invertible_antipode : public hopf_error {
public:
    using hopf_error::hopf_error;
};

class zero_integral : public hopf_error {
public:
    using hopf_error::hopf_error;
};

} // namespace hopfint
