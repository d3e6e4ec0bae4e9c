#include "gaussian.hpp"

#include <cctype>
#include <cstdlib>

namespace gicodes {

namespace {

// floor(a / b) for b > 0, both exact.
__int128 floor_div(__int128 a, __int128 b) {
    __int128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// round(a / b) for b > 0, halves toward +inf: floor((2a + b) / (2b)).
std::int64_t round_half_up(__int128 a, __int128 b) {
    return static_cast<std::int64_t>(floor_div(2 * a + b, 2 * b));
}

} // namespace

Gaussian round_div(Gaussian z, Gaussian w) {
    if (w.is_zero()) raise(Errc::InvalidArgument, "round_div: division by zero");
    // z/w = z * conj(w) / norm(w); 128-bit intermediates keep this exact for
    // any 64-bit inputs.
    const __int128 zr = z.re, zi = z.im, wr = w.re, wi = w.im;
    const __int128 num_re = zr * wr + zi * wi;
    const __int128 num_im = zi * wr - zr * wi;
    const __int128 den = wr * wr + wi * wi;
    return {round_half_up(num_re, den), round_half_up(num_im, den)};
}

std::string to_string(Gaussian z) {
    std::string out = std::to_string(z.re);
    out += z.im < 0 ? '-' : '+';
    out += std::to_string(z.im < 0 ? -z.im : z.im);
    out += 'i';
    return out;
}

std::ostream& operator<<(std::ostream& os, Gaussian z) { return os << to_string(z); }

Gaussian parse_gaussian(std::string_view text) {
    const auto fail = [&] {
        raise(Errc::InvalidArgument, "cannot parse Gaussian integer '" + std::string(text) + "'");
    };

    std::size_t pos = 0;
    const auto peek = [&]() -> int { return pos < text.size() ? text[pos] : -1; };

    // Reads [+-]?digits, or a bare sign when followed by 'i' (so "i"/"-i" work).
    const auto read_signed = [&](bool allow_bare_i) -> std::int64_t {
        std::int64_t sign = 1;
        if (peek() == '+' || peek() == '-') {
            if (text[pos] == '-') sign = -1;
            ++pos;
        }
        if (allow_bare_i && peek() == 'i') return sign;
        if (!std::isdigit(peek())) fail();
        std::int64_t value = 0;
        while (std::isdigit(peek())) {
            value = value * 10 + (text[pos] - '0');
            ++pos;
        }
        return sign * value;
    };

    if (text.empty()) fail();
    std::int64_t first = read_signed(true);
    if (peek() == 'i') {
        ++pos;
        if (pos != text.size()) fail();
        return {0, first}; // purely imaginary: "4i", "-i"
    }
    if (pos == text.size()) return {first, 0}; // purely real: "5", "-3"
    if (peek() != '+' && peek() != '-') fail();
    std::int64_t second = read_signed(true);
    if (peek() != 'i') fail();
    ++pos;
    if (pos != text.size()) fail();
    return {first, second};
}

} // namespace gicodes
