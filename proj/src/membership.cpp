#include "unialg/membership.hpp"

#include <algorithm>
#include <functional>

#include "unialg/error.hpp"
#include "unialg/primes.hpp"

namespace unialg {

namespace {

Polynomial extend(const Polynomial &f, const PolyRingPtr &target)
{
    std::vector<Polynomial::Term> terms;
    for (const auto &[m, c] : f.terms()) {
        std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
        e.push_back(0);
        terms.emplace_back(Monomial(std::move(e)), c);
    }
    return Polynomial(target, std::move(terms));
}

mpz_class binomial(std::uint64_t top, std::uint64_t bottom)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), top, bottom);
    return r;
}

} // namespace

bool radical_member(const Polynomial &f, const std::vector<Polynomial> &gens, const GroebnerCaps &caps)
{
    const auto &R = f.ring();
    for (const auto &g : gens)
        require_same_poly_ring(R, g.ring(), "radical_member");
    auto ring = R.ring.with_variable(R.ring.fresh_name("t"));
    auto E = make_poly_ring(ring, R.field, MonomialOrder::grevlex());
    std::vector<Polynomial> lifted;
    for (const auto &g : gens)
        lifted.push_back(extend(g, E));
    auto t = Polynomial::variable(E, ring.size() - 1);
    lifted.push_back(Polynomial::constant(E, 1) - t * extend(f, E));
    return buchberger(lifted, caps).is_unit();
}

std::optional<std::uint64_t> power_membership_index(const Polynomial &f, const GroebnerBasis &gb,
                                                    std::uint64_t n_max)
{
    if (n_max == 0)
        throw DomainError("power_membership_index: N_max must be positive");
    auto r = normal_form(f, gb);
    for (std::uint64_t N = 1;; ++N) {
        if (r.is_zero())
            return N;
        if (N == n_max)
            return std::nullopt;
        r = normal_form(r * f, gb);
    }
}

std::optional<std::uint64_t> power_membership_index(const Polynomial &f,
                                                    const std::vector<Polynomial> &gens,
                                                    std::uint64_t n_max, const GroebnerCaps &caps)
{
    if (gens.empty())
        return f.is_zero() ? std::optional<std::uint64_t>(1) : std::nullopt;
    for (const auto &g : gens)
        require_same_poly_ring(f.ring(), g.ring(), "power_membership_index");
    return power_membership_index(f, buchberger(gens, caps), n_max);
}

std::vector<Polynomial> jacobian_ideal(const Polynomial &f)
{
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < f.ring().ring.size(); ++i)
        out.push_back(f.derivative(i));
    return out;
}

MatherReport mather_index(const Polynomial &f, std::uint64_t n_max, const GroebnerCaps &caps)
{
    if (n_max == 0)
        throw DomainError("mather_index: N_max must be positive");
    for (const auto &[m, c] : f.terms())
        if (m.is_one())
            throw DomainError("mather_index: f must vanish at the origin");
    MatherReport r;
    r.n_max = n_max;
    r.variables = f.ring().ring.size();
    r.characteristic_warning = !f.ring().field.is_rational();
    auto J = jacobian_ideal(f);
    r.polynomial_index = power_membership_index(f, J, n_max, caps);
    auto power = f;
    for (std::uint64_t N = 1; N <= n_max; ++N, power = power * f) {
        // Membership in the polynomial ring implies membership in the local ring.
        if ((r.polynomial_index && N >= *r.polynomial_index) || local_member_at_origin(power, J, caps)) {
            r.index = N;
            break;
        }
    }
    r.within_partials_bound = r.index && *r.index <= r.variables;
    return r;
}

std::vector<Polynomial> kollar_family(std::size_t n, std::uint64_t d, const Field &field)
{
    if (n < 3 || d < 2)
        throw DomainError("kollar_family: requires n >= 3 and d >= 2");
    auto R = make_poly_ring(vertex_ring(n), field);
    auto x = [&](std::size_t i) { return Polynomial::variable(R, i - 1); };
    std::vector<Polynomial> out{x(1).pow(d)};
    for (std::size_t i = 2; i + 1 <= n; ++i)
        out.push_back(x(i - 1) * x(n).pow(d - 1) - x(i).pow(d));
    return out;
}

KollarSharpness kollar_sharpness(std::size_t n, std::uint64_t d, std::uint64_t d_max, const Field &field,
                                 const GroebnerCaps &caps)
{
    auto family = kollar_family(n, d, field);
    const auto &R = family.front().ring_ptr();
    KollarSharpness r;
    r.n = n;
    r.d = d;
    r.d_max = d_max;
    mpz_pow_ui(r.expected.get_mpz_t(), mpz_class(static_cast<unsigned long>(d)).get_mpz_t(),
               static_cast<unsigned long>(n - 1));
    auto target = Polynomial::variable(R, n - 2);
    r.least = power_membership_index(target, family, d_max, caps);
    r.sharp = r.least && mpz_class(static_cast<unsigned long>(*r.least)) == r.expected;
    r.radical = radical_member(target, family, caps);
    return r;
}

KollarBound kollar_bound(std::vector<std::uint64_t> degrees, std::size_t n)
{
    if (degrees.empty())
        throw DomainError("kollar_bound: empty degree list");
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    KollarBound b;
    b.q = std::min(degrees.size(), n);
    b.bound = 1;
    for (std::size_t i = 0; i < b.q; ++i)
        b.bound *= mpz_class(static_cast<unsigned long>(degrees[i]));
    b.outside_hypothesis = std::any_of(degrees.begin(), degrees.end(), [](auto d) { return d < 3; });
    return b;
}

std::vector<Polynomial> frobenius_power(const std::vector<Polynomial> &gens, std::uint64_t p, std::uint64_t e)
{
    if (gens.empty())
        return {};
    const auto &R = gens.front().ring_ptr();
    if (R->field.is_rational() || R->field.characteristic() != p)
        throw DomainError("frobenius_power: coefficients must lie in F_" + std::to_string(p));
    std::uint64_t q = 1;
    for (std::uint64_t k = 0; k < e; ++k) {
        if (q > exponent_cap() / p)
            throw CapExceeded("frobenius_power: p^e exceeds the exponent cap");
        q *= p;
    }
    std::vector<Polynomial> out;
    for (const auto &g : gens) {
        require_same_poly_ring(*R, g.ring(), "frobenius_power");
        // In characteristic p, (sum c m)^q = sum c^q m^q and c^q = c on F_p.
        std::vector<Polynomial::Term> terms;
        for (const auto &[m, c] : g.terms())
            terms.emplace_back(m.pow(q), c);
        out.emplace_back(R, std::move(terms));
    }
    return out;
}

FrobeniusReport frobenius_containment_check(const std::vector<Polynomial> &gens, std::uint64_t t,
                                            std::uint64_t p, std::uint64_t e, const GroebnerCaps &caps)
{
    if (gens.empty())
        throw DomainError("frobenius_containment_check: empty generator list");
    if (t == 0)
        throw DomainError("frobenius_containment_check: t must be positive");
    auto bracket = frobenius_power(gens, p, e);
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, e);
    mpz_class k = q * static_cast<unsigned long>(t);
    const auto m = gens.size();
    mpz_class count = binomial(m - 1 + k.get_ui(), k.get_ui());
    if (count > static_cast<unsigned long>(kFrobeniusProductCap))
        throw CapExceeded("frobenius_containment_check: " + count.get_str() + " power products exceed the cap of "
                          + std::to_string(kFrobeniusProductCap));
    auto gb = buchberger(bracket, caps);
    FrobeniusReport r;
    const auto power = k.get_ui();
    // Depth-first over multisets of generator indices (nondecreasing).
    std::function<bool(std::size_t, std::uint64_t, const Polynomial &)> walk =
        [&](std::size_t from, std::uint64_t left, const Polynomial &acc) {
            if (left == 0) {
                ++r.checked;
                if (!ideal_member(acc, gb)) {
                    r.contained = false;
                    r.witness = acc;
                    return false;
                }
                return true;
            }
            for (std::size_t i = from; i < m; ++i)
                if (!walk(i, left - 1, acc * gens[i]))
                    return false;
            return true;
        };
    walk(0, power, Polynomial::constant(gens.front().ring_ptr(), 1));
    return r;
}

} // namespace unialg
