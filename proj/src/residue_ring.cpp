#include "residue_ring.hpp"

#include <algorithm>

namespace gicodes {

namespace {

constexpr std::int64_t kMaxRingSize = std::int64_t(1) << 31;

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t isqrt(std::int64_t v) {
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::int64_t mod_positive(__int128 a, std::int64_t n) {
    __int128 r = a % n;
    if (r < 0) r += n;
    return static_cast<std::int64_t>(r);
}

// u*a + v*b = gcd(a, b) over the rational integers.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_u = 1, cu = 0;
    std::int64_t old_v = 0, cv = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_u - q * cu; old_u = cu; cu = t;
        t = old_v - q * cv; old_v = cv; cv = t;
    }
    u = old_u;
    v = old_v;
    return old_r;
}

std::vector<std::int64_t> prime_factors(std::int64_t v) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

} // namespace

PrimeSpec PrimeSpec::from_p(std::int64_t p) {
    if (p < 5 || !is_prime(p) || p % 4 != 1)
        raise(Errc::InvalidPrime,
              "p = " + std::to_string(p) + " is not a prime with p == 1 (mod 4)");
    // p = a^2 + b^2 has a unique decomposition with a > b > 0.
    for (std::int64_t a = isqrt(p); a * a > p / 2; --a) {
        std::int64_t b2 = p - a * a;
        std::int64_t b = isqrt(b2);
        if (b >= 1 && b * b == b2) return {Gaussian(a, b), p, (p - 1) / 4};
    }
    raise(Errc::Internal, "no two-square decomposition found for p = " + std::to_string(p));
}

PrimeSpec PrimeSpec::from_pi(Gaussian pi) {
    std::int64_t p = pi.norm();
    if (p < 5 || !is_prime(p) || p % 4 != 1)
        raise(Errc::InvalidPrime,
              to_string(pi) + " is not a Gaussian prime with norm == 1 (mod 4)");
    return {pi, p, (p - 1) / 4};
}

Gaussian canonical_mod(Gaussian z, Gaussian delta) {
    return z - round_div(z, delta) * delta;
}

ResidueRing::ResidueRing(std::vector<Factor> factors) : factors_(std::move(factors)) {
    delta_ = Gaussian(1, 0);
    size_ = 1;
    phi_ = 1;
    for (const Factor& f : factors_) {
        for (int e = 0; e < f.exponent; ++e) {
            if (size_ > kMaxRingSize / f.prime.p)
                raise(Errc::TooLarge, "ring size norm(delta) exceeds 2^31");
            delta_ = delta_ * f.prime.pi;
            size_ *= f.prime.p;
            phi_ *= (e == 0) ? (f.prime.p - 1) : f.prime.p;
        }
    }
    // Integer image of i: with delta = A + Bi and uA + vB = 1, the element
    // s = uB - vA satisfies delta | s - i. gcd(A, B) = 1 holds for every
    // supported modulus shape.
    std::int64_t u, v;
    std::int64_t g = ext_gcd(delta_.re < 0 ? -delta_.re : delta_.re,
                             delta_.im < 0 ? -delta_.im : delta_.im, u, v);
    if (delta_.re < 0) u = -u;
    if (delta_.im < 0) v = -v;
    if (g != 1) raise(Errc::Internal, "modulus with non-coprime components: " + to_string(delta_));
    i_image_ = mod_positive(static_cast<__int128>(u) * delta_.im -
                                static_cast<__int128>(v) * delta_.re,
                            size_);
}

ResidueRing ResidueRing::prime_power(const PrimeSpec& spec, int exponent) {
    if (exponent < 1) raise(Errc::InvalidArgument, "prime-power exponent must be >= 1");
    return ResidueRing({Factor{spec, exponent}});
}

ResidueRing ResidueRing::multi_prime(std::vector<PrimeSpec> specs) {
    std::vector<Factor> factors;
    factors.reserve(specs.size());
    for (const PrimeSpec& s : specs) factors.push_back({s, 1});
    return from_factors(factors);
}

ResidueRing ResidueRing::from_factors(const std::vector<Factor>& factors) {
    if (factors.empty()) raise(Errc::InvalidArgument, "modulus needs at least one prime factor");
    if (factors.size() == 1) return prime_power(factors[0].prime, factors[0].exponent);
    for (std::size_t a = 0; a < factors.size(); ++a) {
        if (factors[a].exponent != 1)
            raise(Errc::WrongModulusShape,
                  "multi-prime moduli must be squarefree (all exponents 1)");
        for (std::size_t b = a + 1; b < factors.size(); ++b)
            if (factors[a].prime.p == factors[b].prime.p)
                raise(Errc::WrongModulusShape,
                      "multi-prime moduli need pairwise distinct prime norms");
    }
    return ResidueRing(factors);
}

Gaussian ResidueRing::inverse(Gaussian x) const {
    // Extended Euclid over Z[i]; rounded division shrinks norms by at least
    // half per step. Invariant: old_s * x == old_r (mod delta).
    Gaussian old_r = canonicalize(x), r = delta_;
    Gaussian old_s(1, 0), s(0, 0);
    while (!r.is_zero()) {
        Gaussian q = round_div(old_r, r);
        Gaussian t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (!old_r.is_unit())
        raise(Errc::NotAUnit, to_string(x) + " is not invertible modulo " + to_string(delta_));
    return canonicalize(old_s * old_r.conj());
}

bool ResidueRing::is_unit(Gaussian x) const {
    std::int64_t m = to_int(canonicalize(x));
    std::int64_t a = m, b = size_;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a == 1;
}

Gaussian ResidueRing::from_int(std::int64_t m) const { return canonicalize(Gaussian(m, 0)); }

std::int64_t ResidueRing::to_int(Gaussian x) const {
    std::int64_t m = mod_positive(static_cast<__int128>(x.re) +
                                      static_cast<__int128>(x.im) * i_image_,
                                  size_);
    if (from_int(m) != x)
        raise(Errc::Internal,
              "to_int: " + to_string(x) + " is not canonical modulo " + to_string(delta_));
    return m;
}

Gaussian ResidueRing::pow(Gaussian x, std::uint64_t k) const {
    Gaussian base = canonicalize(x);
    Gaussian acc = one();
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

std::int64_t ResidueRing::multiplicative_order(Gaussian x) const {
    if (!is_unit(x))
        raise(Errc::NotAUnit, "multiplicative_order of non-unit " + to_string(x));
    std::int64_t t = phi_;
    for (std::int64_t q : prime_factors(phi_)) {
        while (t % q == 0 && pow(x, static_cast<std::uint64_t>(t / q)) == one()) t /= q;
    }
    return t;
}

Gaussian ResidueRing::find_generator() const {
    if (!is_prime_power())
        raise(Errc::NoGenerator,
              "unit group of " + to_string(delta_) + " is not cyclic (multi-prime modulus)");
    const auto qs = prime_factors(phi_);
    for (std::int64_t m = 2; m < size_; ++m) {
        Gaussian x = from_int(m);
        if (!is_unit(x)) continue;
        bool full_order = true;
        for (std::int64_t q : qs) {
            if (pow(x, static_cast<std::uint64_t>(phi_ / q)) == one()) {
                full_order = false;
                break;
            }
        }
        if (full_order) return x;
    }
    raise(Errc::Internal, "no generator found in a cyclic unit group");
}

Gaussian ResidueRing::scan_generator_with_fourth_root(Gaussian target) const {
    const auto qs = prime_factors(phi_);
    for (std::int64_t m = 2; m < size_; ++m) {
        Gaussian x = from_int(m);
        if (!is_unit(x)) continue;
        bool full_order = true;
        for (std::int64_t q : qs) {
            if (pow(x, static_cast<std::uint64_t>(phi_ / q)) == one()) {
                full_order = false;
                break;
            }
        }
        if (full_order && pow(x, static_cast<std::uint64_t>(phi_ / 4)) == target) return x;
    }
    raise(Errc::Internal,
          "no generator with fourth root " + to_string(target) + " modulo " + to_string(delta_));
}

std::pair<Gaussian, Gaussian> ResidueRing::fourth_root_pair() const {
    const Gaussian i_unit(0, 1);
    const std::uint64_t quarter = static_cast<std::uint64_t>(phi_ / 4);
    Gaussian g = find_generator();
    Gaussian root = pow(g, quarter);
    if (root != i_unit && root != -i_unit)
        raise(Errc::Internal, "generator fourth power is not +/-i: " + to_string(root));

    Gaussian g_plus, g_minus;
    if (root == i_unit) {
        g_plus = g;
        // -g is always a generator, but (-1)^(phi/4) = (-1)^n only flips the
        // sign when n is odd.
        Gaussian neg = negate(g);
        g_minus = (pow(neg, quarter) == -i_unit) ? neg : scan_generator_with_fourth_root(-i_unit);
    } else {
        g_minus = g;
        Gaussian neg = negate(g);
        g_plus = (pow(neg, quarter) == i_unit) ? neg : scan_generator_with_fourth_root(i_unit);
    }
    return {g_plus, g_minus};
}

Gaussian ResidueRing::find_subgroup_generator(std::size_t which) const {
    if (is_prime_power())
        raise(Errc::WrongModulusShape,
              "subgroup generators need a multi-prime modulus, got " + to_string(delta_));
    if (which >= factors_.size())
        raise(Errc::InvalidArgument, "factor index out of range");

    const std::int64_t target_order = factors_[which].prime.p - 1;
    for (std::int64_t m = 2; m < size_; ++m) {
        Gaussian x = from_int(m);
        if (!is_unit(x)) continue;
        bool in_subgroup = true;
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            if (j == which) continue;
            if (canonical_mod(x, factors_[j].prime.pi) != Gaussian(1, 0)) {
                in_subgroup = false;
                break;
            }
        }
        if (in_subgroup && multiplicative_order(x) == target_order) return x;
    }
    raise(Errc::Internal, "no subgroup generator found modulo " + to_string(delta_));
}

} // namespace gicodes
