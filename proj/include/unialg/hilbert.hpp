#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "unialg/monomial_ideal.hpp"

namespace unialg {

/// Integer polynomial in z, dense by degree, trailing zeros trimmed.
using ZPoly = std::vector<mpz_class>;

std::string zpoly_to_string(const ZPoly &p);

/// H_{S/I}(z) = numerator(z) / (1 - z)^n.
struct HilbertSeries {
    Ring ring;
    ZPoly numerator;

    /// Sparse (degree, coefficient) view of the numerator.
    std::vector<std::pair<std::uint64_t, mpz_class>> terms() const;
    /// Coefficient of z^d in the expansion.
    mpz_class coefficient(std::uint64_t d) const;
    std::string to_string() const;
};

/// Number of degree-d monomials outside I, by direct enumeration.
mpz_class hilbert_function(const MonomialIdeal &I, std::uint64_t d);

/// Numerator by pivot recursion N(I) = N(I + (p)) + z^deg(p) N(I : p), with the
/// pivot p = x^e for the variable appearing in the most generators and e its
/// least positive exponent. Base cases: zero ideal, pairwise coprime generators.
/// The result is checked against hilbert_function up to deg(numerator) + 2.
HilbertSeries hilbert_series(const MonomialIdeal &I);

/// p(d) = sum_j c_j C(d - j + n - 1, n - 1), equal to the Hilbert function for d >= d0.
class HilbertPolynomial {
public:
    HilbertPolynomial(ZPoly binomial_coefficients, std::size_t n);

    /// c_j of the binomial basis (the series numerator).
    const ZPoly &binomial_coefficients() const noexcept { return coef_; }
    std::size_t variables() const noexcept { return n_; }
    /// deg(numerator) - n + 1, clamped at 0.
    std::uint64_t stability_threshold() const noexcept;

    /// Value of the polynomial at d (any integer d).
    mpz_class operator()(long long d) const;
    /// Coefficients in the monomial basis 1, d, d^2, ...; empty for the zero polynomial.
    std::vector<mpq_class> power_coefficients() const;
    /// -1 for the zero polynomial.
    int degree() const;
    std::string to_string() const;

private:
    ZPoly coef_;
    std::size_t n_;
};

HilbertPolynomial hilbert_polynomial(const MonomialIdeal &I);

struct DimensionMultiplicity {
    std::size_t dim = 0;
    /// Multiplicity; for dim 0 this is the length of S/I.
    mpz_class multiplicity;
};

/// dim = n - (order of vanishing of the numerator at z = 1). Throws DomainError for the unit ideal.
DimensionMultiplicity dimension_multiplicity(const MonomialIdeal &I);

} // namespace unialg
