#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unialg/graph.hpp"
#include "unialg/monomial_ideal.hpp"

namespace unialg {

/// The prime ideal generated by a nonempty subset of the variables, stored as a bitmask.
struct PrimeComponent {
    std::uint64_t variables = 0;

    std::size_t codim() const noexcept;
    MonomialIdeal ideal(const Ring &ring) const;
    std::string to_string(const Ring &ring) const;

    friend bool operator==(const PrimeComponent &, const PrimeComponent &) = default;
};

/// Minimal primes of a square-free monomial ideal: the minimal vertex covers of
/// the hypergraph of generator supports. Ordered by codimension, then by mask.
/// Throws DomainError for non-square-free, zero or unit input, or more than 64 variables.
std::vector<PrimeComponent> minimal_primes(const MonomialIdeal &I);

/// Codimension, computed on the radical. The zero ideal has codim 0; the unit ideal is rejected.
std::size_t codim(const MonomialIdeal &I);
/// Krull dimension of S/I, i.e. n - codim(I).
std::size_t dim_quotient(const MonomialIdeal &I);

/// I^(k) as the intersection of p^k over the minimal primes p of a square-free I.
MonomialIdeal symbolic_power(const MonomialIdeal &I, std::uint64_t k);

/// m lies in I^(k) iff it has degree >= k in the variables of every minimal prime.
bool in_symbolic_power(const std::vector<PrimeComponent> &primes, const Monomial &m, std::uint64_t k);

struct PowerComparison {
    bool equal = true;
    /// First generator of I^(k) (canonical order) missing from I^k.
    std::optional<Monomial> witness;
};

PowerComparison symbolic_equals_ordinary(const MonomialIdeal &I, std::uint64_t k);

struct DisjointGenerators {
    std::size_t count = 0;
    std::vector<Monomial> witness;
};

/// Largest set of generators with pairwise disjoint supports (a monomial regular sequence).
DisjointGenerators max_disjoint_monomials(const MonomialIdeal &I);

struct FailingMinor {
    MinorSpec spec;
    MonomialIdeal minor;
    std::size_t codim = 0;
    std::size_t disjoint = 0;
};

struct PackedResult {
    bool packed = true;
    std::optional<FailingMinor> failure;
    /// Number of distinct reduced ideals actually evaluated.
    std::size_t distinct_minors = 0;
};

/// Checks max_disjoint_monomials(J) >= codim(J) for every minor J. Minors are
/// visited in order of (|zeros| + |ones|, zeros mask, ones mask); unit minors
/// are vacuous. Throws DomainError on non-square-free input or n > 20.
PackedResult is_packed(const MonomialIdeal &I);

/// Ring x1..xn for a graph's vertices.
Ring vertex_ring(std::size_t n);

/// Throws DomainError when the ring size differs from the vertex count.
MonomialIdeal edge_ideal(const Graph &g, const Ring &ring);
MonomialIdeal edge_ideal(const Graph &g);

struct EdgeTheoremReport {
    bool bipartite = false;
    bool packed = false;
    /// Largest k <= k_max with I^(j) = I^j for all j <= k.
    std::uint64_t equal_up_to = 1;
    std::uint64_t k_max = 2;
    bool equal_all = false;
    std::optional<Monomial> witness;
    std::optional<FailingMinor> failing_minor;
    std::vector<std::size_t> odd_cycle;
    bool agree = false;
};

/// Compares bipartiteness, packedness, and I^(k) = I^k for k = 2..k_max on the edge ideal.
EdgeTheoremReport verify_edge_theorem(const Graph &g, std::uint64_t k_max);

} // namespace unialg
