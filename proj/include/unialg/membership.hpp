#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "unialg/groebner.hpp"
#include "unialg/poly.hpp"

namespace unialg {

/// f lies in the radical of (gens) iff 1 lies in (gens, 1 - t*f) over the ring
/// extended by a fresh variable t.
bool radical_member(const Polynomial &f, const std::vector<Polynomial> &gens,
                    const GroebnerCaps &caps = {});

/// Least N in [1, n_max] with f^N in (gens), or nullopt when exhausted. Works with
/// NF(f^N) = NF(NF(f^(N-1)) * f), one multiplication per step.
std::optional<std::uint64_t> power_membership_index(const Polynomial &f, const GroebnerBasis &gb,
                                                    std::uint64_t n_max);
std::optional<std::uint64_t> power_membership_index(const Polynomial &f,
                                                    const std::vector<Polynomial> &gens,
                                                    std::uint64_t n_max,
                                                    const GroebnerCaps &caps = {});

/// The formal partials f_1, ..., f_n (zeros included).
std::vector<Polynomial> jacobian_ideal(const Polynomial &f);

struct MatherReport {
    /// Least N with f^N in J(f) localized at the origin (the germ question), when found within n_max.
    std::optional<std::uint64_t> index;
    /// Least N with f^N in J(f) in the polynomial ring itself. Can be absent even when
    /// `index` is present: the partials may have common zeros away from the origin.
    std::optional<std::uint64_t> polynomial_index;
    std::uint64_t n_max = 1;
    std::size_t variables = 0;
    /// index <= number of variables.
    bool within_partials_bound = false;
    /// Positive characteristic: partials may vanish identically (f = g^p).
    bool characteristic_warning = false;
};

/// f must have zero constant term.
MatherReport mather_index(const Polynomial &f, std::uint64_t n_max, const GroebnerCaps &caps = {});

/// f_1 = x1^d, f_i = x_{i-1} * x_n^(d-1) - x_i^d for i = 2..n-1, over x1..xn.
std::vector<Polynomial> kollar_family(std::size_t n, std::uint64_t d, const Field &field = Field::rationals());

struct KollarSharpness {
    std::size_t n = 3;
    std::uint64_t d = 2;
    std::uint64_t d_max = 1;
    /// Least D with x_{n-1}^D in the family's ideal; nullopt when exhausted.
    std::optional<std::uint64_t> least;
    /// d^(n-1).
    mpz_class expected;
    bool sharp = false;
    bool radical = false;
};

/// Requires n >= 3 and d >= 2.
KollarSharpness kollar_sharpness(std::size_t n, std::uint64_t d, std::uint64_t d_max,
                                 const Field &field = Field::rationals(), const GroebnerCaps &caps = {});

struct KollarBound {
    /// Product of the q = min(m, n) largest degrees.
    mpz_class bound;
    std::size_t q = 0;
    /// Some degree is below 3.
    bool outside_hypothesis = false;
};

KollarBound kollar_bound(std::vector<std::uint64_t> degrees, std::size_t n);

/// g_i^(p^e) for each generator, over F_p with p matching the field.
std::vector<Polynomial> frobenius_power(const std::vector<Polynomial> &gens, std::uint64_t p, std::uint64_t e);

struct FrobeniusReport {
    bool contained = true;
    /// Number of power products tested.
    std::size_t checked = 0;
    std::optional<Polynomial> witness;
};

constexpr std::size_t kFrobeniusProductCap = 200'000;

/// Checks (gens)^(t * p^e) inside the Frobenius power (gens)^[p^e] generator by
/// generator. Throws CapExceeded (with the product count) past kFrobeniusProductCap.
FrobeniusReport frobenius_containment_check(const std::vector<Polynomial> &gens, std::uint64_t t,
                                            std::uint64_t p, std::uint64_t e,
                                            const GroebnerCaps &caps = {});

} // namespace unialg
