#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "unialg/poly.hpp"

namespace unialg {

struct GroebnerCaps {
    std::size_t max_polynomials = 5000;
    std::uint64_t max_degree = 60;
};

/// Reduced Groebner basis: monic, pairwise fully reduced, sorted by leading monomial (ascending).
class GroebnerBasis {
public:
    GroebnerBasis(PolyRingPtr ring, std::vector<Polynomial> basis);

    const PolyRingPtr &ring_ptr() const noexcept { return ring_; }
    const std::vector<Polynomial> &polynomials() const noexcept { return basis_; }
    std::size_t size() const noexcept { return basis_.size(); }
    bool is_unit() const;

    /// True iff every S-polynomial of the basis reduces to zero.
    bool certify() const;

private:
    PolyRingPtr ring_;
    std::vector<Polynomial> basis_;
};

/// Buchberger's algorithm with the normal selection strategy (least lcm degree,
/// then pair index) and the product and chain criteria. Throws RingMismatch on
/// mixed inputs, CapExceeded past the caps, DomainError on an empty list.
GroebnerBasis buchberger(const std::vector<Polynomial> &gens, const GroebnerCaps &caps = {});

/// Remainder of multivariate division by the given polynomials (leading term first).
Polynomial reduce(const Polynomial &f, const std::vector<Polynomial> &divisors);
Polynomial normal_form(const Polynomial &f, const GroebnerBasis &gb);
bool ideal_member(const Polynomial &f, const GroebnerBasis &gb);

/// Exact quotient f / g; throws DomainError when g does not divide f.
Polynomial divide_exact(const Polynomial &f, const Polynomial &g);

/// (gens) ∩ (g), by eliminating t from (t * gens, (1 - t) * g) in a lex order with t first.
std::vector<Polynomial> intersect_principal(const std::vector<Polynomial> &gens, const Polynomial &g,
                                            const GroebnerCaps &caps = {});

/// (gens) : g = ((gens) ∩ (g)) / g. Requires g nonzero.
std::vector<Polynomial> ideal_quotient(const std::vector<Polynomial> &gens, const Polynomial &g,
                                       const GroebnerCaps &caps = {});

/// Membership in the localization at the origin: g lies in (gens) S_m iff the
/// quotient (gens) : g has a generator with nonzero constant term.
bool local_member_at_origin(const Polynomial &g, const std::vector<Polynomial> &gens,
                            const GroebnerCaps &caps = {});

} // namespace unialg
