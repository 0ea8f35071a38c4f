#include "unialg/newton.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "unialg/error.hpp"
#include "unialg/linalg.hpp"

namespace unialg {

namespace {

constexpr std::size_t kMaxRows = 200'000;

struct Row {
    std::vector<mpz_class> coef; // a_1..a_n, then the convex multipliers
    mpz_class constant;          // row reads  <coef, v> + constant >= 0
    std::vector<std::uint64_t> ancestors;

    std::size_t ancestor_count() const
    {
        std::size_t c = 0;
        for (auto w : ancestors)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
};

void normalize(Row &r)
{
    mpz_class g = abs(r.constant);
    for (const auto &c : r.coef)
        g = gcd(g, c);
    if (g > 1) {
        for (auto &c : r.coef)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(r.constant.get_mpz_t(), r.constant.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<Row> eliminate(std::vector<Row> rows, std::size_t var, std::size_t eliminated)
{
    std::vector<Row> pos, neg, out;
    for (auto &r : rows) {
        int s = sgn(r.coef[var]);
        (s > 0 ? pos : s < 0 ? neg : out).push_back(std::move(r));
    }
    std::map<std::pair<std::vector<mpz_class>, mpz_class>, bool> seen;
    for (const auto &r : out)
        seen.emplace(std::make_pair(r.coef, r.constant), true);
    for (const auto &p : pos)
        for (const auto &q : neg) {
            Row r;
            r.ancestors.resize(p.ancestors.size());
            for (std::size_t w = 0; w < p.ancestors.size(); ++w)
                r.ancestors[w] = p.ancestors[w] | q.ancestors[w];
            // Chernikov: combinations of more than eliminated+1 originals are redundant.
            if (r.ancestor_count() > eliminated + 1)
                continue;
            mpz_class fp = -q.coef[var], fq = p.coef[var];
            r.coef.resize(p.coef.size());
            for (std::size_t j = 0; j < p.coef.size(); ++j)
                r.coef[j] = fp * p.coef[j] + fq * q.coef[j];
            r.constant = fp * p.constant + fq * q.constant;
            normalize(r);
            if (!seen.emplace(std::make_pair(r.coef, r.constant), true).second)
                continue;
            out.push_back(std::move(r));
            if (out.size() > kMaxRows)
                throw CapExceeded("Newton polyhedron elimination exceeded "
                                  + std::to_string(kMaxRows) + " inequalities");
        }
    return out;
}

// A valid inequality is a facet iff its tight generator points and tight
// orthant rays span an (n-1)-dimensional face.
bool is_facet(const Facet &f, const std::vector<Monomial> &points)
{
    const auto n = f.normal.size();
    std::vector<const Monomial *> tight;
    for (const auto &p : points) {
        mpz_class v = 0;
        for (std::size_t j = 0; j < n; ++j)
            v += f.normal[j] * p[j];
        if (v == f.rhs)
            tight.push_back(&p);
    }
    if (tight.empty())
        return false;
    IntMatrix m;
    for (std::size_t k = 1; k < tight.size(); ++k) {
        std::vector<mpz_class> row(n);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = mpz_class(static_cast<long>((*tight[k])[j])) - static_cast<long>((*tight[0])[j]);
        m.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < n; ++j)
        if (f.normal[j] == 0) {
            std::vector<mpz_class> row(n, 0);
            row[j] = 1;
            m.push_back(std::move(row));
        }
    return rank_rational(std::move(m)) == n - 1;
}

} // namespace

bool Facet::satisfied_by(std::span<const Exponent> a) const
{
    mpz_class v = 0;
    for (std::size_t j = 0; j < normal.size(); ++j)
        v += normal[j] * static_cast<unsigned long>(a[j]);
    return v >= rhs;
}

std::string Facet::to_string(const Ring &ring) const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < normal.size(); ++j) {
        if (normal[j] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (normal[j] != 1)
            os << normal[j] << '*';
        os << "e(" << ring.name(j) << ')';
    }
    os << " >= " << rhs;
    return os.str();
}

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal &I) : ring_(I.ring()), points_(I.generators())
{
    if (I.is_zero())
        throw DomainError("newton_polyhedron: zero ideal");
    const std::size_t n = ring_.size();
    const std::size_t m = points_.size();
    const std::size_t lambdas = m - 1;
    const std::size_t width = n + lambdas;
    const std::size_t originals = n + lambdas + 1;
    const std::size_t words = (originals + 63) / 64;

    auto fresh = [&](std::size_t id) {
        Row r;
        r.coef.assign(width, 0);
        r.constant = 0;
        r.ancestors.assign(words, 0);
        r.ancestors[id / 64] |= std::uint64_t{1} << (id % 64);
        return r;
    };

    // The last multiplier is 1 - (sum of the others).
    const auto &last = points_.back();
    std::vector<Row> rows;
    for (std::size_t j = 0; j < n; ++j) {
        auto r = fresh(j);
        r.coef[j] = 1;
        for (std::size_t i = 0; i < lambdas; ++i)
            r.coef[n + i] = static_cast<long>(last[j]) - static_cast<long>(points_[i][j]);
        r.constant = -static_cast<long>(last[j]);
        rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < lambdas; ++i) {
        auto r = fresh(n + i);
        r.coef[n + i] = 1;
        rows.push_back(std::move(r));
    }
    if (lambdas) {
        auto r = fresh(n + lambdas);
        for (std::size_t i = 0; i < lambdas; ++i)
            r.coef[n + i] = -1;
        r.constant = 1;
        rows.push_back(std::move(r));
    }

    std::vector<bool> done(lambdas, false);
    for (std::size_t step = 0; step < lambdas; ++step) {
        // Cheapest variable first: fewest new rows.
        std::size_t best = lambdas;
        long long best_cost = 0;
        for (std::size_t i = 0; i < lambdas; ++i) {
            if (done[i])
                continue;
            long long p = 0, q = 0;
            for (const auto &r : rows) {
                int s = sgn(r.coef[n + i]);
                p += s > 0;
                q += s < 0;
            }
            long long cost = p * q - p - q;
            if (best == lambdas || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        done[best] = true;
        rows = eliminate(std::move(rows), n + best, step + 1);
    }

    std::vector<Facet> candidates;
    for (const auto &r : rows) {
        Facet f{std::vector<mpz_class>(r.coef.begin(), r.coef.begin() + static_cast<long>(n)),
                -r.constant};
        candidates.push_back(std::move(f));
    }
    for (std::size_t j = 0; j < n; ++j) {
        Facet f{std::vector<mpz_class>(n, 0), 0};
        f.normal[j] = 1;
        candidates.push_back(std::move(f));
    }
    for (auto &f : candidates) {
        if (std::all_of(f.normal.begin(), f.normal.end(), [](const mpz_class &c) { return c == 0; }))
            continue;
        if (std::any_of(f.normal.begin(), f.normal.end(), [](const mpz_class &c) { return c < 0; }))
            continue; // cannot be valid for an upward-closed region
        if (is_facet(f, points_))
            facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end(), [](const Facet &a, const Facet &b) {
        return a.normal != b.normal ? a.normal < b.normal : a.rhs < b.rhs;
    });
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
}

bool NewtonPolyhedron::contains(std::span<const Exponent> a) const
{
    if (a.size() != ring_.size())
        throw RingMismatch("point dimension does not match ring " + ring_.to_string());
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet &f) { return f.satisfied_by(a); });
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal &I) { return NewtonPolyhedron(I); }

bool is_integral(const Monomial &m, const NewtonPolyhedron &P) { return P.contains(m.exponents()); }

bool is_integral(const Monomial &m, const MonomialIdeal &I)
{
    if (m.size() != I.ring().size())
        throw RingMismatch("is_integral: monomial length does not match ring " + I.ring().to_string());
    if (I.is_zero())
        return false;
    if (I.contains(m))
        return true;
    return NewtonPolyhedron(I).contains(m.exponents());
}

MonomialIdeal integral_closure(const MonomialIdeal &I)
{
    NewtonPolyhedron P(I);
    const auto n = I.ring().size();
    std::vector<Exponent> box(n, 0);
    for (const auto &g : I.generators())
        for (std::size_t j = 0; j < n; ++j)
            box[j] = std::max(box[j], g[j]);

    std::vector<Monomial> gens;
    std::vector<Exponent> a(n, 0);
    while (true) {
        if (P.contains(a)) {
            // Minimal iff no unit step down stays inside (the region is upward closed).
            bool minimal = true;
            for (std::size_t j = 0; j < n && minimal; ++j)
                if (a[j]) {
                    --a[j];
                    minimal = !P.contains(a);
                    ++a[j];
                }
            if (minimal)
                gens.emplace_back(a);
        }
        std::size_t j = 0;
        while (j < n && a[j] == box[j])
            a[j++] = 0;
        if (j == n)
            break;
        ++a[j];
    }
    return MonomialIdeal(I.ring(), std::move(gens));
}

BsReport briancon_skoda_check(const MonomialIdeal &I, std::uint64_t ell, std::uint64_t n_max)
{
    if (ell == 0)
        throw DomainError("briancon_skoda_check: ell must be positive");
    if (n_max < ell)
        throw DomainError("briancon_skoda_check: n_max must be at least ell");
    BsReport r{ell, n_max, true, std::nullopt};
    auto power = ideal_power(I, ell);
    for (std::uint64_t n = ell; n <= n_max; ++n) {
        if (n > ell)
            power = ideal_product(power, I);
        auto target = ideal_power(I, n - ell + 1);
        auto closure = integral_closure(power);
        for (const auto &g : closure.generators())
            if (!target.contains(g)) {
                r.ok = false;
                r.failure = BsFailure{n, g};
                return r;
            }
    }
    return r;
}

UniformBsReport uniform_bs_number(const MonomialIdeal &I, std::uint64_t n_max)
{
    if (n_max == 0)
        throw DomainError("uniform_bs_number: n_max must be positive");
    std::vector<MonomialIdeal> powers{MonomialIdeal::unit(I.ring())};
    std::vector<MonomialIdeal> closures{MonomialIdeal::unit(I.ring())};
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        powers.push_back(ideal_product(powers.back(), I));
        closures.push_back(integral_closure(powers.back()));
    }
    for (std::uint64_t k = 0;; ++k) {
        bool ok = true;
        for (std::uint64_t n = std::max<std::uint64_t>(k, 1); n <= n_max && ok; ++n)
            ok = powers[n - k].contains(closures[n]);
        if (ok)
            return UniformBsReport{k, n_max};
    }
}

} // namespace unialg
