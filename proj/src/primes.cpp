#include "unialg/primes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "unialg/error.hpp"

namespace unialg {

namespace {

using Mask = std::uint64_t;

void require_square_free(const MonomialIdeal &I, const char *op)
{
    if (!I.is_square_free())
        throw DomainError(std::string(op) + ": ideal is not square-free");
    if (I.ring().size() > 64)
        throw DomainError(std::string(op) + ": at most 64 variables supported");
}

void require_proper_nonzero(const MonomialIdeal &I, const char *op)
{
    if (I.is_zero())
        throw DomainError(std::string(op) + ": zero ideal");
    if (I.is_unit())
        throw DomainError(std::string(op) + ": unit ideal");
}

std::vector<Mask> support_masks(const MonomialIdeal &I)
{
    std::vector<Mask> out;
    out.reserve(I.size());
    for (const auto &g : I.generators())
        out.push_back(g.support_mask());
    return out;
}

/// Drops duplicates and supersets, sorted ascending.
std::vector<Mask> minimal_masks(std::vector<Mask> edges)
{
    std::sort(edges.begin(), edges.end(), [](Mask a, Mask b) {
        auto pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<Mask> kept;
    for (auto e : edges)
        if (std::none_of(kept.begin(), kept.end(), [&](Mask k) { return (k & e) == k; }))
            kept.push_back(e);
    std::sort(kept.begin(), kept.end());
    return kept;
}

bool is_minimal_cover(const std::vector<Mask> &edges, Mask cover)
{
    for (Mask rest = cover; rest; rest &= rest - 1) {
        Mask v = rest & -rest;
        bool needed = std::any_of(edges.begin(), edges.end(),
                                  [&](Mask e) { return (e & cover) == v; });
        if (!needed)
            return false;
    }
    return true;
}

// Branch on the vertices of the first uncovered edge; vertices skipped in
// earlier branches are forbidden so each cover is produced once.
void enumerate_covers(const std::vector<Mask> &edges, Mask chosen, Mask forbidden,
                      std::vector<Mask> &out)
{
    for (auto c : out)
        if ((c & chosen) == c)
            return;
    auto it = std::find_if(edges.begin(), edges.end(), [&](Mask e) { return !(e & chosen); });
    if (it == edges.end()) {
        if (is_minimal_cover(edges, chosen))
            out.push_back(chosen);
        return;
    }
    for (Mask avail = *it & ~forbidden; avail; avail &= avail - 1) {
        Mask v = avail & -avail;
        enumerate_covers(edges, chosen | v, forbidden, out);
        forbidden |= v;
    }
}

std::vector<Mask> minimal_covers(const std::vector<Mask> &edges)
{
    std::vector<Mask> out;
    enumerate_covers(edges, 0, 0, out);
    std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
        auto pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return out;
}

void min_cover_search(const std::vector<Mask> &edges, Mask chosen, int size, int &best)
{
    if (size >= best)
        return;
    auto it = std::find_if(edges.begin(), edges.end(), [&](Mask e) { return !(e & chosen); });
    if (it == edges.end()) {
        best = size;
        return;
    }
    for (Mask avail = *it; avail; avail &= avail - 1)
        min_cover_search(edges, chosen | (avail & -avail), size + 1, best);
}

std::size_t min_cover_size(const std::vector<Mask> &edges)
{
    if (edges.empty())
        return 0;
    int best = 65;
    min_cover_search(edges, 0, 0, best);
    return static_cast<std::size_t>(best);
}

void packing_search(const std::vector<Mask> &edges, std::size_t i, Mask used,
                    std::vector<std::size_t> &current, std::vector<std::size_t> &best)
{
    if (current.size() + (edges.size() - i) <= best.size())
        return;
    if (i == edges.size()) {
        best = current;
        return;
    }
    if (!(edges[i] & used)) {
        current.push_back(i);
        packing_search(edges, i + 1, used | edges[i], current, best);
        current.pop_back();
    }
    packing_search(edges, i + 1, used, current, best);
}

std::vector<std::size_t> max_packing(const std::vector<Mask> &edges)
{
    std::vector<std::size_t> current, best;
    packing_search(edges, 0, 0, current, best);
    return best;
}

std::vector<std::size_t> mask_indices(Mask m)
{
    std::vector<std::size_t> out;
    for (; m; m &= m - 1)
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
}

} // namespace

std::size_t PrimeComponent::codim() const noexcept
{
    return static_cast<std::size_t>(std::popcount(variables));
}

MonomialIdeal PrimeComponent::ideal(const Ring &ring) const
{
    std::vector<Monomial> gens;
    for (auto i : mask_indices(variables))
        gens.push_back(Monomial::variable(ring.size(), i));
    return MonomialIdeal(ring, std::move(gens));
}

std::string PrimeComponent::to_string(const Ring &ring) const
{
    return "(" + ideal(ring).to_string() + ")";
}

std::vector<PrimeComponent> minimal_primes(const MonomialIdeal &I)
{
    require_square_free(I, "minimal_primes");
    require_proper_nonzero(I, "minimal_primes");
    std::vector<PrimeComponent> out;
    for (auto c : minimal_covers(support_masks(I)))
        out.push_back(PrimeComponent{c});
    return out;
}

std::size_t codim(const MonomialIdeal &I)
{
    if (I.is_unit())
        throw DomainError("codim: unit ideal");
    if (I.is_zero())
        return 0;
    if (I.ring().size() > 64)
        throw DomainError("codim: at most 64 variables supported");
    return min_cover_size(minimal_masks(support_masks(ideal_radical(I))));
}

std::size_t dim_quotient(const MonomialIdeal &I) { return I.ring().size() - codim(I); }

bool in_symbolic_power(const std::vector<PrimeComponent> &primes, const Monomial &m, std::uint64_t k)
{
    for (const auto &p : primes) {
        std::uint64_t d = 0;
        for (auto i : mask_indices(p.variables))
            d += m[i];
        if (d < k)
            return false;
    }
    return true;
}

MonomialIdeal symbolic_power(const MonomialIdeal &I, std::uint64_t k)
{
    if (k == 0)
        throw DomainError("symbolic_power: k must be positive");
    auto primes = minimal_primes(I);
    const auto n = I.ring().size();
    std::optional<MonomialIdeal> acc;
    for (const auto &p : primes) {
        auto vars = mask_indices(p.variables);
        std::vector<Monomial> gens;
        for (const auto &small : monomials_of_degree(vars.size(), k)) {
            std::vector<Exponent> e(n, 0);
            for (std::size_t j = 0; j < vars.size(); ++j)
                e[vars[j]] = small[j];
            gens.emplace_back(std::move(e));
        }
        MonomialIdeal pk(I.ring(), std::move(gens));
        acc = acc ? ideal_intersect(*acc, pk) : pk;
    }
    return *acc;
}

PowerComparison symbolic_equals_ordinary(const MonomialIdeal &I, std::uint64_t k)
{
    auto sym = symbolic_power(I, k);
    auto ord = ideal_power(I, k);
    PowerComparison r;
    for (const auto &g : sym.generators())
        if (!ord.contains(g)) {
            r.equal = false;
            r.witness = g;
            return r;
        }
    return r;
}

DisjointGenerators max_disjoint_monomials(const MonomialIdeal &I)
{
    if (I.ring().size() > 64)
        throw DomainError("max_disjoint_monomials: at most 64 variables supported");
    DisjointGenerators r;
    if (I.is_zero() || I.is_unit())
        return r;
    // Smaller supports first finds large packings early.
    std::vector<std::size_t> order(I.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    auto masks = support_masks(I);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::popcount(masks[a]) < std::popcount(masks[b]);
    });
    std::vector<Mask> sorted;
    for (auto i : order)
        sorted.push_back(masks[i]);
    auto best = max_packing(sorted);
    std::vector<std::size_t> picked;
    for (auto j : best)
        picked.push_back(order[j]);
    std::sort(picked.begin(), picked.end());
    r.count = picked.size();
    for (auto i : picked)
        r.witness.push_back(I.generators()[i]);
    return r;
}

PackedResult is_packed(const MonomialIdeal &I)
{
    require_square_free(I, "is_packed");
    require_proper_nonzero(I, "is_packed");
    const auto n = I.ring().size();
    if (n > 20)
        throw CapExceeded("is_packed: minor enumeration is limited to 20 variables");
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    const auto gens = support_masks(I);

    PackedResult result;
    std::map<std::vector<Mask>, bool> memo;

    // Returns false on the first failing minor.
    auto check = [&](Mask zeros, Mask ones) -> bool {
        std::vector<Mask> reduced;
        for (auto g : gens) {
            if (g & zeros)
                continue;
            Mask h = g & ~ones;
            if (!h)
                return true; // unit minor: vacuous
            reduced.push_back(h);
        }
        reduced = minimal_masks(std::move(reduced));
        auto [it, fresh] = memo.try_emplace(reduced, true);
        if (!fresh)
            return it->second;
        ++result.distinct_minors;
        std::size_t c = min_cover_size(reduced);
        std::size_t d = max_packing(reduced).size();
        it->second = d >= c;
        if (!it->second) {
            FailingMinor f{MinorSpec{mask_indices(zeros), mask_indices(ones)},
                           MonomialIdeal::zero(I.ring()), c, d};
            f.minor = ideal_minor(I, f.spec);
            result.packed = false;
            result.failure = std::move(f);
        }
        return it->second;
    };

    for (std::size_t t = 0; t <= n; ++t) {
        for (Mask zeros = 0; zeros <= all; ++zeros) {
            auto zc = static_cast<std::size_t>(std::popcount(zeros));
            if (zc <= t) {
                const Mask free = all & ~zeros;
                const auto want = static_cast<int>(t - zc);
                // Submasks of `free` in ascending order.
                Mask ones = 0;
                while (true) {
                    if (std::popcount(ones) == want && !check(zeros, ones))
                        return result;
                    if (ones == free)
                        break;
                    ones = (ones - free) & free;
                }
            }
            if (zeros == all)
                break;
        }
    }
    return result;
}

Ring vertex_ring(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    return Ring(std::move(names));
}

MonomialIdeal edge_ideal(const Graph &g, const Ring &ring)
{
    if (ring.size() != g.vertex_count())
        throw DomainError("edge_ideal: ring has " + std::to_string(ring.size())
                          + " variables, graph has " + std::to_string(g.vertex_count())
                          + " vertices");
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edges()) {
        gens.push_back(Monomial::variable(ring.size(), u) * Monomial::variable(ring.size(), v));
    }
    return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal edge_ideal(const Graph &g) { return edge_ideal(g, vertex_ring(g.vertex_count())); }

EdgeTheoremReport verify_edge_theorem(const Graph &g, std::uint64_t k_max)
{
    if (k_max < 2)
        throw DomainError("verify_edge_theorem: k_max must be at least 2");
    EdgeTheoremReport r;
    r.k_max = k_max;
    auto bip = is_bipartite(g);
    r.bipartite = bip.bipartite;
    r.odd_cycle = bip.odd_cycle;
    if (g.edges().empty()) {
        // Zero ideal: every power coincides and no minor can fail.
        r.packed = true;
        r.equal_up_to = k_max;
        r.equal_all = true;
        r.agree = r.bipartite;
        return r;
    }
    auto I = edge_ideal(g);
    auto packed = is_packed(I);
    r.packed = packed.packed;
    r.failing_minor = packed.failure;
    r.equal_up_to = 1;
    for (std::uint64_t k = 2; k <= k_max; ++k) {
        auto cmp = symbolic_equals_ordinary(I, k);
        if (!cmp.equal) {
            r.witness = cmp.witness;
            break;
        }
        r.equal_up_to = k;
    }
    r.equal_all = r.equal_up_to == k_max;
    r.agree = r.bipartite == r.packed && r.packed == r.equal_all;
    return r;
}

} // namespace unialg
