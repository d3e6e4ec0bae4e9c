#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace gicodes {

/// A Gaussian integer a + bi with exact 64-bit integer components.
///
/// Everything in this library is closed over Z[i]; no floating point is used
/// anywhere. Components stay small because ring elements are reduced to their
/// canonical residue after every operation.
struct Gaussian {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr Gaussian() = default;
    constexpr Gaussian(std::int64_t re, std::int64_t im = 0) : re(re), im(im) {}

    constexpr Gaussian operator+(Gaussian w) const { return {re + w.re, im + w.im}; }
    constexpr Gaussian operator-(Gaussian w) const { return {re - w.re, im - w.im}; }
    constexpr Gaussian operator-() const { return {-re, -im}; }

    constexpr Gaussian operator*(Gaussian w) const {
        return {re * w.re - im * w.im, re * w.im + im * w.re};
    }

    constexpr Gaussian conj() const { return {re, -im}; }

    /// N(a+bi) = a^2 + b^2. Multiplicative; zero iff the element is zero.
    constexpr std::int64_t norm() const { return re * re + im * im; }

    constexpr bool is_zero() const { return re == 0 && im == 0; }
    constexpr bool is_unit() const { return norm() == 1; }

    friend constexpr bool operator==(Gaussian, Gaussian) = default;
    friend constexpr auto operator<=>(Gaussian, Gaussian) = default;

    friend std::ostream& operator<<(std::ostream& os, Gaussian z);
};

/// The four units of Z[i], in this fixed order.
constexpr std::array<Gaussian, 4> units() {
    return {Gaussian(1, 0), Gaussian(0, 1), Gaussian(-1, 0), Gaussian(0, -1)};
}

/// Rounded quotient q with both components of z/w rounded to the nearest
/// integer, halves toward +inf. The remainder z - q*w then satisfies
/// norm(z - q*w) <= norm(w)/2, which is what makes Z[i] Euclidean under this
/// division. Throws InvalidArgument when w = 0.
Gaussian round_div(Gaussian z, Gaussian w);

/// Mannheim weight |Re| + |Im|. Meaningful on canonical residues; callers are
/// responsible for reducing first.
constexpr std::int64_t mannheim_weight(Gaussian z) {
    return (z.re < 0 ? -z.re : z.re) + (z.im < 0 ? -z.im : z.im);
}

/// Compact display form "a+bi" with explicit signs, e.g. "-2+1i", "0+0i".
std::string to_string(Gaussian z);

/// Parses the compact form accepted on the command line: "3+1i", "-2-2i",
/// "5", "4i", "-i". Throws InvalidArgument on anything else.
Gaussian parse_gaussian(std::string_view text);

} // namespace gicodes
