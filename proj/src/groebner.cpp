#include "unialg/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "unialg/error.hpp"

namespace unialg {

namespace {

Polynomial s_polynomial(const Polynomial &f, const Polynomial &g)
{
    const auto &R = f.ring();
    auto l = lcm(f.leading_monomial(), g.leading_monomial());
    auto a = f.times_term(l / f.leading_monomial(), R.inverse(f.leading_coefficient()));
    auto b = g.times_term(l / g.leading_monomial(), R.inverse(g.leading_coefficient()));
    return a - b;
}

void check_caps(const Polynomial &p, std::size_t count, const GroebnerCaps &caps)
{
    if (count > caps.max_polynomials)
        throw CapExceeded("Groebner basis exceeded " + std::to_string(caps.max_polynomials)
                          + " polynomials");
    if (p.total_degree() > caps.max_degree)
        throw CapExceeded("Groebner basis element of degree " + std::to_string(p.total_degree())
                          + " exceeds the degree cap " + std::to_string(caps.max_degree));
}

} // namespace

Polynomial reduce(const Polynomial &f, const std::vector<Polynomial> &divisors)
{
    const auto &R = f.ring_ptr();
    for (const auto &g : divisors)
        require_same_poly_ring(*R, g.ring(), "reduce");
    std::vector<Polynomial::Term> remainder;
    Polynomial p = f;
    while (!p.is_zero()) {
        const auto &[m, c] = p.terms().front();
        const Polynomial *hit = nullptr;
        for (const auto &g : divisors)
            if (!g.is_zero() && divides(g.leading_monomial(), m)) {
                hit = &g;
                break;
            }
        if (hit) {
            auto q = R->reduce(c * R->inverse(hit->leading_coefficient()));
            p = p - hit->times_term(m / hit->leading_monomial(), q);
        } else {
            remainder.emplace_back(m, c);
            p = p - Polynomial::monomial(R, m, c);
        }
    }
    return Polynomial(R, std::move(remainder));
}

GroebnerBasis::GroebnerBasis(PolyRingPtr ring, std::vector<Polynomial> basis)
    : ring_(std::move(ring)), basis_(std::move(basis))
{
}

bool GroebnerBasis::is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

bool GroebnerBasis::certify() const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (!reduce(s_polynomial(basis_[i], basis_[j]), basis_).is_zero())
                return false;
    return true;
}

GroebnerBasis buchberger(const std::vector<Polynomial> &gens, const GroebnerCaps &caps)
{
    if (gens.empty())
        throw DomainError("buchberger: empty generator list");
    const auto R = gens.front().ring_ptr();
    for (const auto &g : gens)
        require_same_poly_ring(*R, g.ring(), "buchberger");

    std::vector<Polynomial> G;
    // (lcm degree, i, j) with i < j.
    std::set<std::tuple<std::uint64_t, std::size_t, std::size_t>> queue;
    std::set<std::pair<std::size_t, std::size_t>> pending;

    auto add = [&](Polynomial p) {
        p = p.monic();
        check_caps(p, G.size() + 1, caps);
        const auto k = G.size();
        G.push_back(std::move(p));
        for (std::size_t i = 0; i < k; ++i) {
            auto d = lcm(G[i].leading_monomial(), G[k].leading_monomial()).degree();
            queue.emplace(d, i, k);
            pending.emplace(i, k);
        }
    };
    auto is_pending = [&](std::size_t a, std::size_t b) {
        return pending.count({std::min(a, b), std::max(a, b)}) > 0;
    };

    for (const auto &g : gens) {
        auto r = reduce(g, G);
        if (!r.is_zero())
            add(std::move(r));
    }

    while (!queue.empty()) {
        auto [d, i, j] = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({i, j});
        const auto &li = G[i].leading_monomial();
        const auto &lj = G[j].leading_monomial();
        if (coprime(li, lj))
            continue;
        auto l = lcm(li, lj);
        bool chain = false;
        for (std::size_t k = 0; k < G.size() && !chain; ++k)
            chain = k != i && k != j && divides(G[k].leading_monomial(), l) && !is_pending(i, k)
                    && !is_pending(j, k);
        if (chain)
            continue;
        auto r = reduce(s_polynomial(G[i], G[j]), G);
        if (!r.is_zero())
            add(std::move(r));
    }

    // Keep one element per minimal leading monomial, then reduce the tails.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
            if (k == i)
                continue;
            const auto &lk = G[k].leading_monomial();
            const auto &li = G[i].leading_monomial();
            redundant = divides(lk, li) && (lk != li || k < i);
        }
        if (!redundant)
            minimal.push_back(G[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t k = 0; k < minimal.size(); ++k)
            if (k != i)
                others.push_back(minimal[k]);
        reduced.push_back(reduce(minimal[i], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial &a, const Polynomial &b) {
        return R->order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    GroebnerBasis gb(R, std::move(reduced));
    if (!gb.certify())
        throw std::logic_error("buchberger: basis failed its S-polynomial certificate");
    return gb;
}

Polynomial normal_form(const Polynomial &f, const GroebnerBasis &gb)
{
    require_same_poly_ring(f.ring(), *gb.ring_ptr(), "normal_form");
    return reduce(f, gb.polynomials());
}

bool ideal_member(const Polynomial &f, const GroebnerBasis &gb) { return normal_form(f, gb).is_zero(); }

Polynomial divide_exact(const Polynomial &f, const Polynomial &g)
{
    require_same_poly_ring(f.ring(), g.ring(), "divide_exact");
    if (g.is_zero())
        throw DomainError("divide_exact: division by zero");
    const auto &R = f.ring_ptr();
    const auto inv = R->inverse(g.leading_coefficient());
    std::vector<Polynomial::Term> quotient;
    Polynomial p = f;
    while (!p.is_zero()) {
        const auto &[m, c] = p.terms().front();
        if (!divides(g.leading_monomial(), m))
            throw DomainError("divide_exact: " + g.to_string() + " does not divide " + f.to_string());
        auto q = m / g.leading_monomial();
        auto k = R->reduce(c * inv);
        p = p - g.times_term(q, k);
        quotient.emplace_back(std::move(q), k);
    }
    return Polynomial(R, std::move(quotient));
}

std::vector<Polynomial> intersect_principal(const std::vector<Polynomial> &gens, const Polynomial &g,
                                            const GroebnerCaps &caps)
{
    const auto &R = g.ring();
    for (const auto &h : gens)
        require_same_poly_ring(R, h.ring(), "intersect_principal");
    if (g.is_zero())
        return {};
    const auto n = R.ring.size();
    auto ring = R.ring.with_variable(R.ring.fresh_name("t"));
    std::vector<std::size_t> sig{n};
    for (std::size_t i = 0; i < n; ++i)
        sig.push_back(i);
    auto E = make_poly_ring(ring, R.field, MonomialOrder(MonomialOrder::Kind::Lex, sig));
    auto lift = [&](const Polynomial &p) {
        std::vector<Polynomial::Term> terms;
        for (const auto &[m, c] : p.terms()) {
            std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
            e.push_back(0);
            terms.emplace_back(Monomial(std::move(e)), c);
        }
        return Polynomial(E, std::move(terms));
    };
    auto t = Polynomial::variable(E, n);
    std::vector<Polynomial> lifted;
    for (const auto &h : gens)
        lifted.push_back(t * lift(h));
    lifted.push_back((Polynomial::constant(E, 1) - t) * lift(g));
    auto gb = buchberger(lifted, caps);
    std::vector<Polynomial> out;
    for (const auto &p : gb.polynomials()) {
        if (p.leading_monomial()[n] != 0)
            continue;
        std::vector<Polynomial::Term> terms;
        for (const auto &[m, c] : p.terms()) {
            auto e = m.exponents();
            terms.emplace_back(Monomial(std::vector<Exponent>(e.begin(), e.end() - 1)), c);
        }
        out.emplace_back(g.ring_ptr(), std::move(terms));
    }
    return out;
}

std::vector<Polynomial> ideal_quotient(const std::vector<Polynomial> &gens, const Polynomial &g,
                                       const GroebnerCaps &caps)
{
    if (g.is_zero())
        throw DomainError("ideal_quotient: quotient by zero");
    std::vector<Polynomial> out;
    for (const auto &p : intersect_principal(gens, g, caps))
        out.push_back(divide_exact(p, g));
    return out;
}

bool local_member_at_origin(const Polynomial &g, const std::vector<Polynomial> &gens, const GroebnerCaps &caps)
{
    if (g.is_zero())
        return true;
    for (const auto &q : ideal_quotient(gens, g, caps))
        for (const auto &[m, c] : q.terms())
            if (m.is_one())
                return true;
    return false;
}

} // namespace unialg
