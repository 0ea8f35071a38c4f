#include "unialg/betti.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <vector>

#include "unialg/error.hpp"
#include "unialg/primes.hpp"

namespace unialg {

namespace {

// Reduced homology dimensions H~_q for q = -1 .. size(support)-1 of the complex
// whose faces are the given masks, indexed by q + 1.
std::vector<std::size_t> reduced_homology(const std::vector<std::vector<std::uint64_t>> &faces_by_size,
                                          const Field &field)
{
    const auto levels = faces_by_size.size();
    // boundary_rank[k]: rank of the map from faces of size k to faces of size k-1.
    std::vector<std::size_t> boundary_rank(levels + 1, 0);
    for (std::size_t k = 1; k < levels; ++k) {
        const auto &hi = faces_by_size[k];
        const auto &lo = faces_by_size[k - 1];
        if (hi.empty() || lo.empty())
            continue;
        std::map<std::uint64_t, std::size_t> row_of;
        for (std::size_t r = 0; r < lo.size(); ++r)
            row_of[lo[r]] = r;
        IntMatrix m(lo.size(), std::vector<mpz_class>(hi.size(), 0));
        for (std::size_t c = 0; c < hi.size(); ++c) {
            int sign = 1;
            for (auto rest = hi[c]; rest; rest &= rest - 1) {
                auto bit = rest & (~rest + 1);
                m[row_of.at(hi[c] & ~bit)][c] = sign;
                sign = -sign;
            }
        }
        boundary_rank[k] = rank(m, field);
    }
    std::vector<std::size_t> h(levels, 0);
    for (std::size_t k = 0; k < levels; ++k)
        h[k] = faces_by_size[k].size() - boundary_rank[k] - boundary_rank[k + 1];
    return h;
}

} // namespace

std::uint64_t BettiTable::at(std::size_t i, std::uint64_t j) const
{
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

std::uint64_t BettiTable::total(std::size_t i) const
{
    std::uint64_t s = 0;
    for (const auto &[key, v] : entries)
        if (key.first == i)
            s += v;
    return s;
}

std::string BettiTable::render() const
{
    const auto pd = proj_dim(*this);
    const auto reg = regularity(*this);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> labels;
    std::vector<std::string> header, totals;
    for (std::size_t i = 0; i <= pd; ++i) {
        header.push_back(std::to_string(i));
        totals.push_back(std::to_string(total(i)));
    }
    labels.push_back("");
    cells.push_back(header);
    labels.push_back("total:");
    cells.push_back(totals);
    for (std::uint64_t r = 0; r <= reg; ++r) {
        std::vector<std::string> row;
        for (std::size_t i = 0; i <= pd; ++i) {
            auto v = at(i, i + r);
            row.push_back(v ? std::to_string(v) : ".");
        }
        labels.push_back(std::to_string(r) + ":");
        cells.push_back(std::move(row));
    }
    std::size_t label_w = 0;
    for (const auto &l : labels)
        label_w = std::max(label_w, l.size());
    std::vector<std::size_t> col_w(pd + 1, 0);
    for (const auto &row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            col_w[c] = std::max(col_w[c], row[c].size());
    std::ostringstream os;
    for (std::size_t r = 0; r < cells.size(); ++r) {
        std::string line(label_w - labels[r].size(), ' ');
        line += labels[r];
        for (std::size_t c = 0; c < cells[r].size(); ++c) {
            line += ' ';
            line += std::string(col_w[c] - cells[r][c].size(), ' ');
            line += cells[r][c];
        }
        os << line << '\n';
    }
    return os.str();
}

BettiTable graded_betti(const MonomialIdeal &I, const Field &field, std::size_t generator_cap)
{
    if (I.is_unit())
        throw DomainError("graded_betti: unit ideal (S/I = 0)");
    const auto &gens = I.generators();
    if (gens.size() > generator_cap)
        throw CapExceeded("graded_betti: " + std::to_string(gens.size())
                          + " generators exceed the cap of " + std::to_string(generator_cap));
    const auto n = I.ring().size();
    if (n > 64)
        throw DomainError("graded_betti: more than 64 variables");

    BettiTable t;
    t.field = field;
    t.entries[{0, 0}] = 1;

    std::set<Monomial, CanonicalLess> lattice;
    for (const auto &g : gens) {
        std::vector<Monomial> fresh{g};
        for (const auto &l : lattice)
            fresh.push_back(lcm(l, g));
        lattice.insert(fresh.begin(), fresh.end());
    }

    for (const auto &a : lattice) {
        const auto supp = a.support_mask();
        const auto s = static_cast<std::size_t>(std::popcount(supp));
        std::vector<std::vector<std::uint64_t>> faces(s + 1);
        // Walk the submasks of supp in increasing order.
        for (std::uint64_t f = 0;; f = (f - supp) & supp) {
            auto e = a.exponents();
            std::vector<Exponent> lowered(e.begin(), e.end());
            for (auto rest = f; rest; rest &= rest - 1)
                --lowered[static_cast<std::size_t>(std::countr_zero(rest))];
            if (I.contains(Monomial(std::move(lowered))))
                faces[static_cast<std::size_t>(std::popcount(f))].push_back(f);
            if (f == supp)
                break;
        }
        auto h = reduced_homology(faces, field);
        // h[k] is H~_{k-1}; it contributes to beta_{k+1}.
        for (std::size_t k = 0; k < h.size(); ++k)
            if (h[k])
                t.entries[{k + 1, a.degree()}] += h[k];
    }
    return t;
}

BettiTable koszul_table(std::size_t n)
{
    BettiTable t;
    for (std::size_t i = 0; i <= n; ++i) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), n, i);
        t.entries[{i, i}] = c.get_ui();
    }
    return t;
}

std::size_t proj_dim(const BettiTable &t)
{
    std::size_t pd = 0;
    for (const auto &[key, v] : t.entries)
        if (v)
            pd = std::max(pd, key.first);
    return pd;
}

std::uint64_t regularity(const BettiTable &t)
{
    std::uint64_t reg = 0;
    for (const auto &[key, v] : t.entries)
        if (v)
            reg = std::max(reg, key.second - key.first);
    return reg;
}

bool is_cohen_macaulay(const MonomialIdeal &I, const Field &field)
{
    return codim(I) == proj_dim(graded_betti(I, field));
}

std::optional<mpq_class> pure_resolution_multiplicity(const BettiTable &t, std::size_t c)
{
    if (proj_dim(t) != c)
        return std::nullopt;
    mpz_class prod = 1;
    for (std::size_t i = 1; i <= c; ++i) {
        std::optional<std::uint64_t> degree;
        for (const auto &[key, v] : t.entries) {
            if (key.first != i || !v)
                continue;
            if (degree)
                return std::nullopt;
            degree = key.second;
        }
        if (!degree)
            return std::nullopt;
        prod *= mpz_class(static_cast<unsigned long>(*degree));
    }
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), c);
    mpq_class r(prod, fact);
    r.canonicalize();
    return r;
}

ZPoly betti_numerator(const BettiTable &t)
{
    ZPoly p;
    for (const auto &[key, v] : t.entries) {
        if (p.size() <= key.second)
            p.resize(key.second + 1, 0);
        mpz_class term(static_cast<unsigned long>(v));
        if (key.first % 2)
            p[key.second] -= term;
        else
            p[key.second] += term;
    }
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

bool verify_betti_hilbert_identity(const MonomialIdeal &I, const Field &field)
{
    return betti_numerator(graded_betti(I, field)) == hilbert_series(I).numerator;
}

bool stillman_monomial_check(const MonomialIdeal &I, const Field &field)
{
    auto bound = std::min(min_generator_count(I), I.ring().size());
    return proj_dim(graded_betti(I, field)) <= bound;
}

} // namespace unialg
