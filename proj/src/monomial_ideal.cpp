#include "unialg/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "unialg/error.hpp"

namespace unialg {

std::vector<Monomial> minimalize(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end(), CanonicalLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    // A divisor has degree <= its multiple, so it was already considered.
    for (auto &g : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial &k) { return divides(k, g); });
        if (!redundant)
            kept.push_back(std::move(g));
    }
    return kept;
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens) : ring_(std::move(ring))
{
    for (const auto &g : gens)
        if (g.size() != ring_.size())
            throw RingMismatch("generator has " + std::to_string(g.size())
                               + " exponents, ring " + ring_.to_string() + " has "
                               + std::to_string(ring_.size()));
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(Ring ring)
{
    auto n = ring.size();
    return MonomialIdeal(std::move(ring), {Monomial(n)});
}

MonomialIdeal MonomialIdeal::maximal(Ring ring)
{
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < ring.size(); ++i)
        gens.push_back(Monomial::variable(ring.size(), i));
    return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_square_free() const noexcept
{
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Monomial &g) { return g.is_square_free(); });
}

bool MonomialIdeal::contains(const Monomial &m) const
{
    if (m.size() != ring_.size())
        throw RingMismatch("monomial length does not match ring " + ring_.to_string());
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial &g) { return divides(g, m); });
}

bool MonomialIdeal::contains(const MonomialIdeal &other) const
{
    require_same_ring(ring_, other.ring_, "ideal containment");
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const Monomial &g) { return contains(g); });
}

std::string MonomialIdeal::to_string() const
{
    if (gens_.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        os << (i ? ", " : "") << gens_[i].to_string(ring_);
    return os.str();
}

bool mono_divides(const Monomial &a, const Monomial &b) { return divides(a, b); }

MonomialIdeal ideal_from_generators(const Ring &ring, std::vector<Monomial> gens)
{
    return MonomialIdeal(ring, std::move(gens));
}

bool ideal_contains(const MonomialIdeal &I, const Monomial &m) { return I.contains(m); }

MonomialIdeal ideal_sum(const MonomialIdeal &I, const MonomialIdeal &J)
{
    require_same_ring(I.ring(), J.ring(), "ideal_sum");
    auto gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal ideal_product(const MonomialIdeal &I, const MonomialIdeal &J)
{
    require_same_ring(I.ring(), J.ring(), "ideal_product");
    std::vector<Monomial> gens;
    gens.reserve(I.size() * J.size());
    for (const auto &g : I.generators())
        for (const auto &h : J.generators())
            gens.push_back(g * h);
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal &I, std::uint64_t k)
{
    auto result = MonomialIdeal::unit(I.ring());
    auto base = I;
    while (k) {
        if (k & 1)
            result = ideal_product(result, base);
        k >>= 1;
        if (k)
            base = ideal_product(base, base);
    }
    return result;
}

MonomialIdeal ideal_intersect(const MonomialIdeal &I, const MonomialIdeal &J)
{
    require_same_ring(I.ring(), J.ring(), "ideal_intersect");
    std::vector<Monomial> gens;
    gens.reserve(I.size() * J.size());
    for (const auto &g : I.generators())
        for (const auto &h : J.generators())
            gens.push_back(lcm(g, h));
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal ideal_colon(const MonomialIdeal &I, const Monomial &m)
{
    if (m.size() != I.ring().size())
        throw RingMismatch("ideal_colon: monomial length does not match ring " + I.ring().to_string());
    std::vector<Monomial> gens;
    gens.reserve(I.size());
    for (const auto &g : I.generators())
        gens.push_back(g / gcd(g, m));
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal ideal_radical(const MonomialIdeal &I)
{
    std::vector<Monomial> gens;
    gens.reserve(I.size());
    for (const auto &g : I.generators())
        gens.push_back(g.support());
    return MonomialIdeal(I.ring(), std::move(gens));
}

MonomialIdeal ideal_minor(const MonomialIdeal &I, const MinorSpec &spec)
{
    const auto n = I.ring().size();
    std::vector<bool> zero(n, false), one(n, false);
    for (auto i : spec.zeros) {
        if (i >= n)
            throw DomainError("ideal_minor: variable index out of range");
        zero[i] = true;
    }
    for (auto i : spec.ones) {
        if (i >= n)
            throw DomainError("ideal_minor: variable index out of range");
        if (zero[i])
            throw DomainError("ideal_minor: variable " + I.ring().name(i)
                              + " is set to both 0 and 1");
        one[i] = true;
    }
    std::vector<bool> drop(n);
    for (std::size_t i = 0; i < n; ++i)
        drop[i] = zero[i] || one[i];
    Ring reduced = I.ring().without(drop);

    std::vector<Monomial> gens;
    for (const auto &g : I.generators()) {
        bool killed = false;
        std::vector<Exponent> e;
        for (std::size_t i = 0; i < n && !killed; ++i) {
            if (zero[i] && g[i])
                killed = true;
            else if (!drop[i])
                e.push_back(g[i]);
        }
        if (!killed)
            gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(std::move(reduced), std::move(gens));
}

std::size_t min_generator_count(const MonomialIdeal &I) { return I.size(); }

} // namespace unialg
