#include "poly.hpp"

#include <algorithm>

namespace gicodes {

Poly::Poly(ResidueRing ring, std::vector<Gaussian> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (Gaussian& c : coeffs_) c = ring_.canonicalize(c);
    normalize();
}

Poly Poly::monomial(const ResidueRing& ring, Gaussian coeff, std::size_t degree) {
    std::vector<Gaussian> c(degree + 1);
    c[degree] = coeff;
    return Poly(ring, std::move(c));
}

Poly Poly::power_minus(const ResidueRing& ring, std::size_t n, Gaussian lambda) {
    std::vector<Gaussian> c(n + 1);
    c[0] = ring.negate(lambda);
    c[n] = Gaussian(1, 0);
    return Poly(ring, std::move(c));
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_same_ring(const Poly& g) const {
    if (!(ring_ == g.ring_))
        raise(Errc::InvalidArgument, "polynomial operands live in different rings");
}

Poly Poly::operator+(const Poly& g) const {
    require_same_ring(g);
    std::vector<Gaussian> out(std::max(coeffs_.size(), g.coeffs_.size()));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = ring_.add(coeff(j), g.coeff(j));
    return Poly(ring_, std::move(out));
}

Poly Poly::operator-(const Poly& g) const {
    require_same_ring(g);
    std::vector<Gaussian> out(std::max(coeffs_.size(), g.coeffs_.size()));
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = ring_.sub(coeff(j), g.coeff(j));
    return Poly(ring_, std::move(out));
}

Poly Poly::operator*(const Poly& g) const {
    require_same_ring(g);
    if (is_zero() || g.is_zero()) return Poly(ring_);
    std::vector<Gaussian> out(coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        for (std::size_t b = 0; b < g.coeffs_.size(); ++b)
            out[a + b] = ring_.add(out[a + b], ring_.mul(coeffs_[a], g.coeffs_[b]));
    return Poly(ring_, std::move(out));
}

Poly Poly::operator-() const {
    std::vector<Gaussian> out(coeffs_.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = ring_.negate(coeffs_[j]);
    return Poly(ring_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    require_same_ring(d);
    if (d.is_zero()) raise(Errc::InvalidArgument, "polynomial division by zero");
    const Gaussian lead_inv = [&] {
        try {
            return ring_.inverse(d.leading());
        } catch (const Error& e) {
            if (e.code() == Errc::NotAUnit)
                raise(Errc::NonUnitLeadingCoeff,
                      "divisor leading coefficient " + to_string(d.leading()) +
                          " is not a unit");
            throw;
        }
    }();

    std::vector<Gaussian> rem(coeffs_.begin(), coeffs_.end());
    const int dd = d.degree();
    std::vector<Gaussian> quot;
    if (degree() >= dd) quot.resize(static_cast<std::size_t>(degree() - dd) + 1);

    for (int j = degree(); j >= dd; --j) {
        Gaussian q = ring_.mul(rem[static_cast<std::size_t>(j)], lead_inv);
        quot[static_cast<std::size_t>(j - dd)] = q;
        if (q.is_zero()) continue;
        for (int t = 0; t <= dd; ++t) {
            auto idx = static_cast<std::size_t>(j - dd + t);
            rem[idx] = ring_.sub(rem[idx], ring_.mul(q, d.coeff(static_cast<std::size_t>(t))));
        }
    }
    if (!rem.empty()) rem.resize(std::min(rem.size(), static_cast<std::size_t>(dd)));
    return {Poly(ring_, std::move(quot)), Poly(ring_, std::move(rem))};
}

Gaussian Poly::eval(Gaussian x0) const {
    Gaussian acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = ring_.add(ring_.mul(acc, x0), *it);
    return acc;
}

Poly Poly::reciprocal() const {
    std::vector<Gaussian> out(coeffs_.rbegin(), coeffs_.rend());
    return Poly(ring_, std::move(out));
}

} // namespace gicodes
