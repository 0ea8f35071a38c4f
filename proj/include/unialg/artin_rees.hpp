#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unialg/monomial_ideal.hpp"

namespace unialg {

/// Artin-Rees data for an ideal N ⊆ R = k[x]: for each n the least k_n with
/// I^n ∩ N ⊆ I^(n-k_n) N. The AR number is the maximum over the tested range.
struct ArReport {
    MonomialIdeal ideal;
    MonomialIdeal sub;
    std::uint64_t n_max = 1;
    /// least_k[n-1] is k_n.
    std::vector<std::uint64_t> least_k;
    std::uint64_t ar_number = 0;
};

/// Throws DomainError when N is zero or n_max is 0; RingMismatch on different rings.
ArReport artin_rees_number(const MonomialIdeal &I, const MonomialIdeal &N, std::uint64_t n_max);

struct ArMismatch {
    std::uint64_t ell = 0;
    /// A minimal generator of one side missing from the other.
    Monomial witness;
    /// True when the witness lies in I^ell but not in J^(ell-k) I^k.
    bool witness_in_power = true;
};

/// First ell in k+1..ell_max with I^ell != J^(ell-k) I^k. Requires J ⊆ I.
std::optional<ArMismatch> ar_counterexample_search(const MonomialIdeal &I, const MonomialIdeal &J,
                                                   std::uint64_t k, std::uint64_t ell_max);

/// The pair I = (x^n, y^n, x^(n-1) y), J = (x^n, y^n) over k[x,y].
std::pair<MonomialIdeal, MonomialIdeal> exercise_pair(std::uint64_t n);

} // namespace unialg
