#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "unialg/hilbert.hpp"
#include "unialg/linalg.hpp"
#include "unialg/monomial_ideal.hpp"

namespace unialg {

constexpr std::size_t kDefaultBettiGeneratorCap = 20;

/// Graded Betti numbers beta_{i,j}(S/I), stored sparsely (zeros omitted).
struct BettiTable {
    Field field = Field::rationals();
    std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t> entries;

    std::uint64_t at(std::size_t i, std::uint64_t j) const;
    /// Sum over j of beta_{i,j}.
    std::uint64_t total(std::size_t i) const;

    /// Macaulay2 layout: columns are homological degrees, row r holds beta_{i,i+r}.
    std::string render() const;

    friend bool operator==(const BettiTable &, const BettiTable &) = default;
};

/// Betti numbers of S/I from the upper Koszul complexes
///   K^a = { F subset of supp(a) : x^(a - F) in I }
/// over the lcm lattice of the generators:
///   beta_{0,0} = 1,   beta_{i,a}(S/I) = dim H~_{i-2}(K^a; field) for i >= 1,
/// where the empty face sits in dimension -1. Throws CapExceeded above
/// `generator_cap` generators and DomainError for the unit ideal.
BettiTable graded_betti(const MonomialIdeal &I, const Field &field = Field::rationals(),
                        std::size_t generator_cap = kDefaultBettiGeneratorCap);

/// beta_{i,i} = C(n, i).
BettiTable koszul_table(std::size_t n);

std::size_t proj_dim(const BettiTable &t);
/// max (j - i) over the nonzero entries.
std::uint64_t regularity(const BettiTable &t);

/// codim(I) == pd(S/I). Throws DomainError for the unit ideal.
bool is_cohen_macaulay(const MonomialIdeal &I, const Field &field = Field::rationals());

/// prod d_i / c! when row i = 1..c has a single degree d_i and pd = c; nullopt when not pure.
std::optional<mpq_class> pure_resolution_multiplicity(const BettiTable &t, std::size_t c);

/// sum_j (sum_i (-1)^i beta_{i,j}) z^j.
ZPoly betti_numerator(const BettiTable &t);

bool verify_betti_hilbert_identity(const MonomialIdeal &I, const Field &field = Field::rationals());

/// pd(S/I) <= min(number of minimal generators, n).
bool stillman_monomial_check(const MonomialIdeal &I, const Field &field = Field::rationals());

} // namespace unialg
