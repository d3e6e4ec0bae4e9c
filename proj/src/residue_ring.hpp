#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gaussian.hpp"

namespace gicodes {

/// A Gaussian prime pi = a+bi together with its rational prime p = a^2 + b^2.
/// Only splitting primes are admitted: p must be prime with p = 4n + 1, so
/// p = 2 and p == 3 (mod 4) are rejected up front.
struct PrimeSpec {
    Gaussian pi;
    std::int64_t p = 0;
    std::int64_t n = 0; // p = 4n + 1

    /// Canonical pi for a rational prime: the unique a + bi with a > b > 0.
    static PrimeSpec from_p(std::int64_t p);

    /// Validates a caller-supplied pi (descriptor files store pi explicitly).
    static PrimeSpec from_pi(Gaussian pi);

    friend bool operator==(const PrimeSpec&, const PrimeSpec&) = default;
};

/// Reduction of z modulo delta without a full ring: z - round_div(z, delta)*delta.
Gaussian canonical_mod(Gaussian z, Gaussian delta);

/// The residue class ring G_delta = Z[i]/<delta>.
///
/// Two modulus shapes are supported: a prime power pi^k, and a squarefree
/// product of m >= 2 Gaussian primes with pairwise distinct norms. Elements
/// are represented by the canonical residue picked by the rounded-division
/// reduction map, and every operation returns canonical output.
class ResidueRing {
public:
    struct Factor {
        PrimeSpec prime;
        int exponent = 1;

        friend bool operator==(const Factor&, const Factor&) = default;
    };

    static ResidueRing prime_power(const PrimeSpec& spec, int exponent);
    static ResidueRing multi_prime(std::vector<PrimeSpec> specs);
    static ResidueRing from_factors(const std::vector<Factor>& factors);

    Gaussian modulus() const { return delta_; }
    std::int64_t size() const { return size_; }       // N = norm(delta)
    std::int64_t euler_phi() const { return phi_; }   // order of the unit group
    const std::vector<Factor>& factors() const { return factors_; }
    bool is_prime_power() const { return factors_.size() == 1; }

    /// The unique representative of z's coset selected by rounded division.
    Gaussian canonicalize(Gaussian z) const { return canonical_mod(z, delta_); }

    Gaussian zero() const { return {}; }
    Gaussian one() const { return {1, 0}; }

    Gaussian add(Gaussian x, Gaussian y) const { return canonicalize(x + y); }
    Gaussian sub(Gaussian x, Gaussian y) const { return canonicalize(x - y); }
    Gaussian mul(Gaussian x, Gaussian y) const { return canonicalize(x * y); }
    Gaussian negate(Gaussian x) const { return canonicalize(-x); }

    /// Multiplicative inverse by the extended Euclidean algorithm over Z[i].
    /// Throws NotAUnit when gcd(x, delta) is not a unit.
    Gaussian inverse(Gaussian x) const;

    bool is_unit(Gaussian x) const;

    /// The ring isomorphism Z_N -> G_delta and its inverse. from_int accepts
    /// any integer; to_int requires a canonical element and returns the unique
    /// preimage in [0, N).
    Gaussian from_int(std::int64_t m) const;
    std::int64_t to_int(Gaussian x) const;

    /// x^k by square-and-multiply with per-step reduction, so components never
    /// grow beyond one unreduced product.
    Gaussian pow(Gaussian x, std::uint64_t k) const;

    /// Least t >= 1 with x^t = 1, found through the divisor lattice of phi.
    std::int64_t multiplicative_order(Gaussian x) const;

    /// First generator of the cyclic unit group under the deterministic scan
    /// m = 2, 3, ... through from_int. Throws NoGenerator for multi-prime
    /// moduli (the unit group is not cyclic there).
    Gaussian find_generator() const;

    /// Generators (g_plus, g_minus) of G_{pi^k}* with g_plus^(phi/4) = i and
    /// g_minus^(phi/4) = -i. Negating a generator flips the sign only when n
    /// is odd, so for p == 1 (mod 8) the second slot falls back to a scan.
    std::pair<Gaussian, Gaussian> fourth_root_pair() const;

    /// Generator of the subgroup {x : x == 1 mod pi_j for all j != which}
    /// of a multi-prime ring; it is cyclic of order phi(p_which). Deterministic
    /// scan order as in find_generator. `which` is a 0-based factor index.
    /// Throws WrongModulusShape for prime-power moduli.
    Gaussian find_subgroup_generator(std::size_t which) const;

    friend bool operator==(const ResidueRing& a, const ResidueRing& b) {
        return a.delta_ == b.delta_ && a.factors_ == b.factors_;
    }

private:
    ResidueRing(std::vector<Factor> factors);

    Gaussian scan_generator_with_fourth_root(Gaussian target) const;

    std::vector<Factor> factors_;
    Gaussian delta_;
    std::int64_t size_ = 0;
    std::int64_t phi_ = 0;
    std::int64_t i_image_ = 0; // integer s with s == i (mod delta), in [0, N)
};

} // namespace gicodes
