#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace gicodes {

using Matrix = std::vector<std::vector<Gaussian>>;

/// A length-n constacyclic code over a residue ring, given by a monic
/// generator g(x) and check polynomial h(x) with g*h = x^n - lambda.
/// Codewords are the multiples of g(x) below degree n; the twist constant
/// lambda is the wrap factor of the shift that preserves the code.
struct ConstacyclicCode {
    ResidueRing ring;
    std::int64_t n = 0;
    Gaussian lambda;
    Poly gen;
    Poly check;
    std::int64_t dim = 0; // message length k = n - deg g

    friend bool operator==(const ConstacyclicCode& a, const ConstacyclicCode& b) {
        return a.ring == b.ring && a.n == b.n && a.lambda == b.lambda && a.gen == b.gen &&
               a.check == b.check;
    }
};

/// Assembles a code from already-validated parts, checking g*h = x^n - lambda,
/// monicity of g and k >= 1. All three builders and the descriptor loader
/// funnel through here.
ConstacyclicCode make_code(ResidueRing ring, std::int64_t n, Gaussian lambda, Poly gen);

/// Quarter-length code over G_{pi^k}: n = phi(p^k)/4, generated by x - g where
/// g^n = i (plus sign, lambda = i) or g^n = -i (minus sign, lambda = -i).
/// An explicit root overrides the deterministic fourth_root_pair choice.
ConstacyclicCode build_quarter_code(std::int64_t p, int k_exp, bool plus_sign,
                                    std::optional<Gaussian> root = std::nullopt);

/// Half-length code over G_{pi^k}: n = phi(p^k)/2, lambda = -1, generated by
/// the degree-2 product (x - g_plus)(x - g_minus). Explicit roots override the
/// scan; they may arrive in either order and are validated by their fourth
/// roots.
ConstacyclicCode build_half_code(std::int64_t p, int k_exp,
                                 std::optional<std::pair<Gaussian, Gaussian>> roots = std::nullopt);

/// Cyclic code over G_{pi_1 ... pi_m}: n = phi(p_which), lambda = 1, generated
/// by x - e with e^n = 1. Default e comes from find_subgroup_generator; an
/// override only needs e^n = 1 (the paper-style choices are not subgroup
/// generators in general).
ConstacyclicCode build_multiprime_code(const std::vector<std::int64_t>& primes,
                                       std::size_t length_from,
                                       std::optional<Gaussian> root = std::nullopt);

/// k x n matrix whose row i holds the coefficients of x^i * g(x).
Matrix generator_matrix(const ConstacyclicCode& code);

/// (n-k) x n matrix whose row i holds reciprocal(h) shifted right by i
/// columns; G * H^T = 0 follows from g*h = x^n - lambda.
Matrix parity_check_matrix(const ConstacyclicCode& code);

/// Non-systematic encoding c(x) = m(x) * g(x); equals message * G.
std::vector<Gaussian> encode(const ConstacyclicCode& code, std::span<const Gaussian> message);

/// True iff g(x) divides v(x) exactly.
bool is_codeword(const ConstacyclicCode& code, std::span<const Gaussian> v);

/// Remainder of r(x) modulo g(x); zero exactly on codewords.
Poly syndrome(const ConstacyclicCode& code, std::span<const Gaussian> received);

/// Poly of degree < n from a received/codeword vector, canonicalizing entries.
Poly vector_to_poly(const ConstacyclicCode& code, std::span<const Gaussian> v);

} // namespace gicodes
