#include "unialg/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "unialg/error.hpp"
#include "unialg/primes.hpp"

namespace unialg {

namespace {

void trim(ZPoly &p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

ZPoly add(ZPoly a, const ZPoly &b)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] += b[i];
    trim(a);
    return a;
}

ZPoly shift(const ZPoly &a, std::uint64_t k)
{
    if (a.empty())
        return a;
    ZPoly r(k, 0);
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

// a * (1 - z^d)
ZPoly times_one_minus(const ZPoly &a, std::uint64_t d)
{
    ZPoly r = a;
    r.resize(a.size() + d, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i + d] -= a[i];
    trim(r);
    return r;
}

bool pairwise_coprime(const std::vector<Monomial> &g)
{
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!coprime(g[i], g[j]))
                return false;
    return true;
}

ZPoly numerator(const MonomialIdeal &I)
{
    const auto &gens = I.generators();
    if (gens.empty())
        return ZPoly{1};
    if (pairwise_coprime(gens)) {
        ZPoly p{1};
        for (const auto &g : gens)
            p = times_one_minus(p, g.degree());
        return p;
    }
    const auto n = I.ring().size();
    std::vector<std::size_t> freq(n, 0);
    std::vector<Exponent> least(n, 0);
    for (const auto &g : gens)
        for (std::size_t i = 0; i < n; ++i)
            if (g[i]) {
                ++freq[i];
                least[i] = least[i] ? std::min(least[i], g[i]) : g[i];
            }
    auto var = static_cast<std::size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());
    std::vector<Exponent> e(n, 0);
    e[var] = least[var];
    Monomial pivot(std::move(e));
    // Some variable is shared (freq >= 2), so x^e is not a generator and I + (p) grows.
    auto with_pivot = ideal_sum(I, MonomialIdeal(I.ring(), {pivot}));
    auto colon = ideal_colon(I, pivot);
    return add(numerator(with_pivot), shift(numerator(colon), pivot.degree()));
}

mpz_class binomial(long long top, unsigned long bottom)
{
    if (top < 0 || static_cast<unsigned long long>(top) < bottom)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), bottom);
    return r;
}

} // namespace

std::string zpoly_to_string(const ZPoly &p)
{
    if (p.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0)
            continue;
        mpz_class c = abs(p[i]);
        if (first)
            os << (p[i] < 0 ? "-" : "");
        else
            os << (p[i] < 0 ? " - " : " + ");
        first = false;
        if (i == 0)
            os << c;
        else {
            if (c != 1)
                os << c << '*';
            os << 'z';
            if (i > 1)
                os << '^' << i;
        }
    }
    return os.str();
}

std::vector<std::pair<std::uint64_t, mpz_class>> HilbertSeries::terms() const
{
    std::vector<std::pair<std::uint64_t, mpz_class>> out;
    for (std::size_t i = 0; i < numerator.size(); ++i)
        if (numerator[i] != 0)
            out.emplace_back(i, numerator[i]);
    return out;
}

mpz_class HilbertSeries::coefficient(std::uint64_t d) const
{
    const auto n = ring.size();
    mpz_class total = 0;
    for (std::size_t j = 0; j < numerator.size() && j <= d; ++j)
        total += numerator[j] * binomial(static_cast<long long>(d - j + n - 1), n - 1);
    return total;
}

std::string HilbertSeries::to_string() const
{
    return "(" + zpoly_to_string(numerator) + ") / (1 - z)^" + std::to_string(ring.size());
}

mpz_class hilbert_function(const MonomialIdeal &I, std::uint64_t d)
{
    mpz_class count = 0;
    for (const auto &m : monomials_of_degree(I.ring().size(), d))
        if (!I.contains(m))
            ++count;
    return count;
}

HilbertSeries hilbert_series(const MonomialIdeal &I)
{
    HilbertSeries s{I.ring(), numerator(I)};
    const std::uint64_t top = s.numerator.size() + 2;
    for (std::uint64_t d = 0; d <= top; ++d)
        if (s.coefficient(d) != hilbert_function(I, d))
            throw std::logic_error("hilbert_series: expansion disagrees with direct count at degree "
                                   + std::to_string(d));
    return s;
}

HilbertPolynomial::HilbertPolynomial(ZPoly binomial_coefficients, std::size_t n)
    : coef_(std::move(binomial_coefficients)), n_(n)
{
    trim(coef_);
}

std::uint64_t HilbertPolynomial::stability_threshold() const noexcept
{
    if (coef_.empty())
        return 0;
    long long deg = static_cast<long long>(coef_.size()) - 1;
    long long d0 = deg - static_cast<long long>(n_) + 1;
    return d0 > 0 ? static_cast<std::uint64_t>(d0) : 0;
}

mpz_class HilbertPolynomial::operator()(long long d) const
{
    // C(d - j + n - 1, n - 1) as the polynomial prod_{i=1}^{n-1} (d - j + i) / (n-1)!.
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n_ - 1));
    mpz_class total = 0;
    for (std::size_t j = 0; j < coef_.size(); ++j) {
        if (coef_[j] == 0)
            continue;
        mpz_class prod = 1;
        for (std::size_t i = 1; i < n_; ++i)
            prod *= mpz_class(static_cast<long>(d)) - static_cast<long>(j) + static_cast<long>(i);
        total += coef_[j] * prod;
    }
    mpz_divexact(total.get_mpz_t(), total.get_mpz_t(), fact.get_mpz_t());
    return total;
}

std::vector<mpq_class> HilbertPolynomial::power_coefficients() const
{
    std::vector<mpq_class> out(n_, 0);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n_ - 1));
    for (std::size_t j = 0; j < coef_.size(); ++j) {
        if (coef_[j] == 0)
            continue;
        // Expand prod_{i=1}^{n-1} (d + (i - j)).
        std::vector<mpz_class> poly{1};
        for (std::size_t i = 1; i < n_; ++i) {
            mpz_class c = static_cast<long>(i) - static_cast<long>(j);
            std::vector<mpz_class> next(poly.size() + 1, 0);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k] += poly[k] * c;
                next[k + 1] += poly[k];
            }
            poly = std::move(next);
        }
        for (std::size_t k = 0; k < poly.size(); ++k)
            out[k] += mpq_class(coef_[j] * poly[k], fact);
    }
    for (auto &q : out)
        q.canonicalize();
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

int HilbertPolynomial::degree() const { return static_cast<int>(power_coefficients().size()) - 1; }

std::string HilbertPolynomial::to_string() const
{
    auto c = power_coefficients();
    if (c.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0)
            continue;
        mpq_class a = abs(c[k]);
        if (first)
            os << (c[k] < 0 ? "-" : "");
        else
            os << (c[k] < 0 ? " - " : " + ");
        first = false;
        bool unit = a == 1;
        if (k == 0 || !unit)
            os << a;
        if (k > 0) {
            if (!unit)
                os << '*';
            os << 'd';
            if (k > 1)
                os << '^' << k;
        }
    }
    return os.str();
}

HilbertPolynomial hilbert_polynomial(const MonomialIdeal &I)
{
    HilbertPolynomial p(hilbert_series(I).numerator, I.ring().size());
    const auto d0 = p.stability_threshold();
    for (auto d = d0; d <= d0 + 2; ++d)
        if (p(static_cast<long long>(d)) != hilbert_function(I, d))
            throw std::logic_error("hilbert_polynomial: disagrees with the Hilbert function at degree "
                                   + std::to_string(d));
    return p;
}

DimensionMultiplicity dimension_multiplicity(const MonomialIdeal &I)
{
    if (I.is_unit())
        throw DomainError("dimension_multiplicity: unit ideal (S/I = 0)");
    auto num = hilbert_series(I).numerator;
    const auto n = I.ring().size();
    std::size_t order = 0;
    // Synthetic division by (1 - z) while z = 1 is a root.
    while (true) {
        mpz_class at_one = 0;
        for (const auto &c : num)
            at_one += c;
        if (at_one != 0) {
            DimensionMultiplicity r{n - order, at_one};
            if (I.is_square_free() && !I.is_zero()) {
                auto primes = minimal_primes(I);
                auto top = primes.front().codim();
                auto count = std::count_if(primes.begin(), primes.end(),
                                           [&](const PrimeComponent &p) { return p.codim() == top; });
                if (r.multiplicity != static_cast<long>(count) || r.dim != n - top)
                    throw std::logic_error("dimension_multiplicity: disagrees with the minimal primes");
            }
            return r;
        }
        // num = (1 - z) q: q_0 = num_0, q_k = num_k + q_{k-1}.
        ZPoly q(num.size() - 1);
        mpz_class run = 0;
        for (std::size_t k = 0; k + 1 < num.size(); ++k) {
            run += num[k];
            q[k] = run;
        }
        num = std::move(q);
        trim(num);
        ++order;
    }
}

} // namespace unialg
