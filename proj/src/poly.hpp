#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "residue_ring.hpp"

namespace gicodes {

/// Dense univariate polynomial with coefficients in a ResidueRing, stored in
/// ascending degree. The zero polynomial has no stored coefficients; any other
/// polynomial keeps a nonzero leading coefficient. All coefficients are
/// canonical residues.
class Poly {
public:
    explicit Poly(ResidueRing ring) : ring_(std::move(ring)) {}
    Poly(ResidueRing ring, std::vector<Gaussian> coeffs);

    static Poly monomial(const ResidueRing& ring, Gaussian coeff, std::size_t degree);
    static Poly constant(const ResidueRing& ring, Gaussian value) { return monomial(ring, value, 0); }
    /// x^n - lambda, the modulus polynomial of a twist-lambda constacyclic code.
    static Poly power_minus(const ResidueRing& ring, std::size_t n, Gaussian lambda);

    const ResidueRing& ring() const { return ring_; }
    std::span<const Gaussian> coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, with deg 0 = -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Gaussian coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Gaussian(); }
    Gaussian leading() const { return coeffs_.empty() ? Gaussian() : coeffs_.back(); }
    bool is_monic() const { return leading() == Gaussian(1, 0); }

    Poly operator+(const Poly& g) const;
    Poly operator-(const Poly& g) const;
    Poly operator*(const Poly& g) const;
    Poly operator-() const;

    friend bool operator==(const Poly& f, const Poly& g) {
        return f.ring_ == g.ring_ && f.coeffs_ == g.coeffs_;
    }

    /// Euclidean division f = d*q + r with deg r < deg d. The leading
    /// coefficient of d must be a unit; throws NonUnitLeadingCoeff otherwise.
    std::pair<Poly, Poly> divmod(const Poly& d) const;

    /// Horner evaluation at x0.
    Gaussian eval(Gaussian x0) const;

    /// Coefficients reversed about the degree: result[j] = coeff(deg - j).
    Poly reciprocal() const;

private:
    void normalize();
    void require_same_ring(const Poly& g) const;

    ResidueRing ring_;
    std::vector<Gaussian> coeffs_;
};

} // namespace gicodes
