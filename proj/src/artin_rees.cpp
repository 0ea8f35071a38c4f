#include "unialg/artin_rees.hpp"

#include "unialg/error.hpp"

namespace unialg {

ArReport artin_rees_number(const MonomialIdeal &I, const MonomialIdeal &N, std::uint64_t n_max)
{
    require_same_ring(I.ring(), N.ring(), "artin_rees_number");
    if (N.is_zero())
        throw DomainError("artin_rees_number: submodule ideal N must be nonzero");
    if (n_max == 0)
        throw DomainError("artin_rees_number: n_max must be positive");

    // powers[j] = I^j, products[j] = I^j N
    std::vector<MonomialIdeal> powers{MonomialIdeal::unit(I.ring())};
    std::vector<MonomialIdeal> products{N};
    for (std::uint64_t j = 1; j <= n_max; ++j) {
        powers.push_back(ideal_product(powers.back(), I));
        products.push_back(ideal_product(products.back(), I));
    }

    ArReport r{I, N, n_max, {}, 0};
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        auto meet = ideal_intersect(powers[n], N);
        // k = n always works (I^0 N = N); descend while the containment survives.
        std::uint64_t k = n;
        while (k > 0 && products[n - (k - 1)].contains(meet))
            --k;
        r.least_k.push_back(k);
        r.ar_number = std::max(r.ar_number, k);
    }
    return r;
}

std::optional<ArMismatch> ar_counterexample_search(const MonomialIdeal &I, const MonomialIdeal &J,
                                                   std::uint64_t k, std::uint64_t ell_max)
{
    require_same_ring(I.ring(), J.ring(), "ar_counterexample_search");
    if (!I.contains(J))
        throw DomainError("ar_counterexample_search: J is not contained in I");
    if (ell_max < k + 1)
        throw DomainError("ar_counterexample_search: ell_max must be at least k + 1");
    auto Ik = ideal_power(I, k);
    auto lhs = ideal_power(I, k + 1);
    auto Jpow = J;
    for (std::uint64_t ell = k + 1; ell <= ell_max; ++ell) {
        if (ell > k + 1) {
            lhs = ideal_product(lhs, I);
            Jpow = ideal_product(Jpow, J);
        }
        auto rhs = ideal_product(Jpow, Ik);
        if (lhs == rhs)
            continue;
        for (const auto &g : lhs.generators())
            if (!rhs.contains(g))
                return ArMismatch{ell, g, true};
        for (const auto &g : rhs.generators())
            if (!lhs.contains(g))
                return ArMismatch{ell, g, false};
    }
    return std::nullopt;
}

std::pair<MonomialIdeal, MonomialIdeal> exercise_pair(std::uint64_t n)
{
    if (n < 1 || n > exponent_cap())
        throw DomainError("exercise_pair: n must be positive");
    auto e = static_cast<Exponent>(n);
    Ring r({"x", "y"});
    MonomialIdeal I(r, {Monomial{e, 0}, Monomial{0, e}, Monomial{e - 1, 1}});
    MonomialIdeal J(r, {Monomial{e, 0}, Monomial{0, e}});
    return {I, J};
}

} // namespace unialg
