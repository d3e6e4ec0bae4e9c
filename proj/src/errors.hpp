#pragma once

#include <stdexcept>
#include <string>

namespace gicodes {

enum class Errc {
    InvalidArgument,      // bad lengths, ring mismatch, parse failures, division by zero
    InvalidPrime,         // p not prime, p = 2, or p == 3 (mod 4)
    NotAUnit,             // inverse/order requested for a zero divisor or zero
    NoGenerator,          // unit group is not cyclic (multi-prime modulus)
    WrongModulusShape,    // operation needs the other modulus shape
    NonUnitLeadingCoeff,  // polynomial division by a non-invertible leading coefficient
    SyndromeCollision,    // two weight-<=1 errors share a syndrome
    TooLarge,             // exhaustive oracle over its enumeration bound
    BadDescriptor,        // malformed or inconsistent JSON descriptor
    Internal,             // broken invariant; should be unreachable
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace gicodes
