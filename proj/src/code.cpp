#include "code.hpp"

#include <tuple>

namespace gicodes {

namespace {

// x - root as a monic linear polynomial.
Poly linear_factor(const ResidueRing& ring, Gaussian root) {
    return Poly(ring, {ring.negate(root), Gaussian(1, 0)});
}

void require_unit_root(const ResidueRing& ring, Gaussian root) {
    if (!ring.is_unit(root))
        raise(Errc::InvalidArgument, "root " + to_string(root) + " is not a unit of the ring");
}

} // namespace

ConstacyclicCode make_code(ResidueRing ring, std::int64_t n, Gaussian lambda, Poly gen) {
    if (n < 1) raise(Errc::InvalidArgument, "code length must be >= 1");
    if (!gen.is_monic())
        raise(Errc::InvalidArgument, "generator polynomial must be monic, got leading " +
                                         to_string(gen.leading()));
    lambda = ring.canonicalize(lambda);
    if (!lambda.is_unit())
        raise(Errc::InvalidArgument, "twist constant must be one of 1, i, -1, -i");

    Poly modulus = Poly::power_minus(ring, static_cast<std::size_t>(n), lambda);
    auto [check, rem] = modulus.divmod(gen);
    if (!rem.is_zero())
        raise(Errc::InvalidArgument,
              "generator does not divide x^" + std::to_string(n) + " - " + to_string(lambda));

    std::int64_t dim = n - gen.degree();
    if (dim < 1) raise(Errc::InvalidArgument, "message length k = n - deg(g) must be >= 1");
    return {std::move(ring), n, lambda, std::move(gen), std::move(check), dim};
}

ConstacyclicCode build_quarter_code(std::int64_t p, int k_exp, bool plus_sign,
                                    std::optional<Gaussian> root) {
    ResidueRing ring = ResidueRing::prime_power(PrimeSpec::from_p(p), k_exp);
    const std::int64_t n = ring.euler_phi() / 4;
    const Gaussian lambda = plus_sign ? Gaussian(0, 1) : Gaussian(0, -1);

    Gaussian g;
    if (root) {
        g = ring.canonicalize(*root);
        require_unit_root(ring, g);
        if (ring.pow(g, static_cast<std::uint64_t>(n)) != lambda)
            raise(Errc::InvalidArgument,
                  "root " + to_string(*root) + "^" + std::to_string(n) + " != " +
                      to_string(lambda));
    } else {
        auto [g_plus, g_minus] = ring.fourth_root_pair();
        g = plus_sign ? g_plus : g_minus;
    }
    return make_code(ring, n, lambda, linear_factor(ring, g));
}

ConstacyclicCode build_half_code(std::int64_t p, int k_exp,
                                 std::optional<std::pair<Gaussian, Gaussian>> roots) {
    ResidueRing ring = ResidueRing::prime_power(PrimeSpec::from_p(p), k_exp);
    const std::int64_t n = ring.euler_phi() / 2;
    const std::uint64_t quarter = static_cast<std::uint64_t>(ring.euler_phi() / 4);
    const Gaussian i_unit(0, 1);

    Gaussian r_plus, r_minus;
    if (roots) {
        Gaussian a = ring.canonicalize(roots->first);
        Gaussian b = ring.canonicalize(roots->second);
        require_unit_root(ring, a);
        require_unit_root(ring, b);
        // Accept the pair in either order; each root is classified by its
        // phi/4 power, which must land on i for one and -i for the other.
        Gaussian fa = ring.pow(a, quarter);
        Gaussian fb = ring.pow(b, quarter);
        if (fa == i_unit && fb == -i_unit) {
            r_plus = a;
            r_minus = b;
        } else if (fa == -i_unit && fb == i_unit) {
            r_plus = b;
            r_minus = a;
        } else {
            raise(Errc::InvalidArgument,
                  "roots must have fourth-root values {i, -i}, got " + to_string(fa) + ", " +
                      to_string(fb));
        }
    } else {
        std::tie(r_plus, r_minus) = ring.fourth_root_pair();
    }

    Poly gen = linear_factor(ring, r_plus) * linear_factor(ring, r_minus);
    return make_code(ring, n, Gaussian(-1, 0), std::move(gen));
}

ConstacyclicCode build_multiprime_code(const std::vector<std::int64_t>& primes,
                                       std::size_t length_from, std::optional<Gaussian> root) {
    if (primes.size() < 2)
        raise(Errc::WrongModulusShape, "multi-prime codes need at least two primes");
    if (length_from >= primes.size())
        raise(Errc::InvalidArgument, "length_from index out of range");

    std::vector<PrimeSpec> specs;
    specs.reserve(primes.size());
    for (std::int64_t p : primes) specs.push_back(PrimeSpec::from_p(p));
    ResidueRing ring = ResidueRing::multi_prime(std::move(specs));

    const std::int64_t n = primes[length_from] - 1; // phi(p), p prime
    Gaussian e;
    if (root) {
        e = ring.canonicalize(*root);
        require_unit_root(ring, e);
        if (ring.pow(e, static_cast<std::uint64_t>(n)) != ring.one())
            raise(Errc::InvalidArgument,
                  "root " + to_string(*root) + "^" + std::to_string(n) + " != 1");
    } else {
        e = ring.find_subgroup_generator(length_from);
    }
    return make_code(ring, n, Gaussian(1, 0), linear_factor(ring, e));
}

Matrix generator_matrix(const ConstacyclicCode& code) {
    const auto n = static_cast<std::size_t>(code.n);
    Matrix g(static_cast<std::size_t>(code.dim), std::vector<Gaussian>(n));
    const auto coeffs = code.gen.coeffs();
    for (std::size_t row = 0; row < g.size(); ++row)
        for (std::size_t j = 0; j < coeffs.size(); ++j) g[row][row + j] = coeffs[j];
    return g;
}

Matrix parity_check_matrix(const ConstacyclicCode& code) {
    const auto n = static_cast<std::size_t>(code.n);
    const auto rows = static_cast<std::size_t>(code.n - code.dim);
    Matrix h(rows, std::vector<Gaussian>(n));
    const Poly rev = code.check.reciprocal();
    const auto coeffs = rev.coeffs();
    for (std::size_t row = 0; row < rows; ++row)
        for (std::size_t j = 0; j < coeffs.size(); ++j) h[row][row + j] = coeffs[j];
    return h;
}

std::vector<Gaussian> encode(const ConstacyclicCode& code, std::span<const Gaussian> message) {
    if (message.size() != static_cast<std::size_t>(code.dim))
        raise(Errc::InvalidArgument, "message length " + std::to_string(message.size()) +
                                         " != k = " + std::to_string(code.dim));
    Poly m(code.ring, std::vector<Gaussian>(message.begin(), message.end()));
    Poly c = m * code.gen;
    std::vector<Gaussian> out(static_cast<std::size_t>(code.n));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = c.coeff(j);
    return out;
}

Poly vector_to_poly(const ConstacyclicCode& code, std::span<const Gaussian> v) {
    if (v.size() != static_cast<std::size_t>(code.n))
        raise(Errc::InvalidArgument,
              "vector length " + std::to_string(v.size()) + " != n = " + std::to_string(code.n));
    return Poly(code.ring, std::vector<Gaussian>(v.begin(), v.end()));
}

bool is_codeword(const ConstacyclicCode& code, std::span<const Gaussian> v) {
    return syndrome(code, v).is_zero();
}

Poly syndrome(const ConstacyclicCode& code, std::span<const Gaussian> received) {
    return vector_to_poly(code, received).divmod(code.gen).second;
}

} // namespace gicodes
