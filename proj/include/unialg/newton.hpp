#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "unialg/monomial_ideal.hpp"

namespace unialg {

/// Inequality <normal, a> >= rhs with normal >= 0 componentwise, in lowest integer terms.
struct Facet {
    std::vector<mpz_class> normal;
    mpz_class rhs;

    bool satisfied_by(std::span<const Exponent> a) const;
    std::string to_string(const Ring &ring) const;

    friend bool operator==(const Facet &, const Facet &) = default;
};

/// conv(generator exponents) + nonnegative orthant, with an exact facet description.
///
/// Facets come from Fourier-Motzkin elimination of the convex multipliers
/// (Chernikov's rule prunes redundant combinations), followed by an exact
/// rank test that keeps only inequalities whose tight set spans a hyperplane.
class NewtonPolyhedron {
public:
    /// Throws DomainError for the zero ideal, CapExceeded when elimination blows up.
    explicit NewtonPolyhedron(const MonomialIdeal &I);

    const Ring &ring() const noexcept { return ring_; }
    const std::vector<Monomial> &points() const noexcept { return points_; }
    /// Sorted lexicographically by (normal, rhs).
    const std::vector<Facet> &facets() const noexcept { return facets_; }

    bool contains(std::span<const Exponent> a) const;

private:
    Ring ring_;
    std::vector<Monomial> points_;
    std::vector<Facet> facets_;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal &I);

/// m is integral over I iff its exponent vector lies in the Newton polyhedron.
bool is_integral(const Monomial &m, const MonomialIdeal &I);
bool is_integral(const Monomial &m, const NewtonPolyhedron &P);

/// Integral closure of a nonzero monomial ideal.
///
/// Minimal generators are the divisibility-minimal lattice points of the
/// Newton polyhedron. They all lie in the box [0, M_j] where M_j is the largest
/// j-th exponent among the generators: a point with a_j > M_j stays inside the
/// polyhedron after lowering a_j by one (every generator point is already below
/// it in that coordinate, so the orthant part absorbs the difference), hence it
/// is not minimal.
MonomialIdeal integral_closure(const MonomialIdeal &I);

struct BsFailure {
    std::uint64_t n = 0;
    Monomial monomial;
};

struct BsReport {
    std::uint64_t ell = 1;
    std::uint64_t n_max = 1;
    bool ok = true;
    std::optional<BsFailure> failure;
};

/// Checks closure(I^n) ⊆ I^(n - ell + 1) for every n in [ell, n_max].
BsReport briancon_skoda_check(const MonomialIdeal &I, std::uint64_t ell, std::uint64_t n_max);

struct UniformBsReport {
    /// Smallest k with closure(I^n) ⊆ I^(n-k) for all k <= n <= n_max. Evidence for
    /// the tested range only.
    std::uint64_t k = 0;
    std::uint64_t n_max = 1;
};

UniformBsReport uniform_bs_number(const MonomialIdeal &I, std::uint64_t n_max);

} // namespace unialg
