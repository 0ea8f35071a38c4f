#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "unialg/error.hpp"
#include "unialg/newton.hpp"

using namespace unialg;
using test::ideal;
using test::mono;

namespace {

// Oracle: is k*a >= (sum of k generator exponents) for some k <= k_max, i.e. m^k ∈ I^k.
// Bounded search over sums of generators, keeping only componentwise-minimal partial sums.
bool power_dependence(const MonomialIdeal &I, const Monomial &m, std::uint64_t k_max)
{
    const auto n = m.size();
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        std::vector<std::vector<std::uint64_t>> frontier{std::vector<std::uint64_t>(n, 0)};
        for (std::uint64_t step = 0; step < k && !frontier.empty(); ++step) {
            std::vector<std::vector<std::uint64_t>> next;
            for (const auto &s : frontier)
                for (const auto &g : I.generators()) {
                    std::vector<std::uint64_t> t(n);
                    bool fits = true;
                    for (std::size_t j = 0; j < n; ++j) {
                        t[j] = s[j] + g[j];
                        fits = fits && t[j] <= k * m[j];
                    }
                    if (!fits)
                        continue;
                    bool dominated = false;
                    for (const auto &u : next) {
                        bool le = true;
                        for (std::size_t j = 0; j < n; ++j)
                            le = le && u[j] <= t[j];
                        dominated = dominated || le;
                    }
                    if (!dominated) {
                        std::erase_if(next, [&](const auto &u) {
                            for (std::size_t j = 0; j < n; ++j)
                                if (t[j] > u[j])
                                    return false;
                            return true;
                        });
                        next.push_back(std::move(t));
                    }
                }
            frontier = std::move(next);
        }
        if (!frontier.empty())
            return true;
    }
    return false;
}

std::vector<std::string> facet_strings(const NewtonPolyhedron &P)
{
    std::vector<std::string> out;
    for (const auto &f : P.facets())
        out.push_back(f.to_string(P.ring()));
    return out;
}

} // namespace

TEST_CASE("newton_polyhedron facets")
{
    auto P = newton_polyhedron(ideal("x,y", "x^3,y^3"));
    CHECK(facet_strings(P) == std::vector<std::string>{"e(y) >= 0", "e(x) >= 0", "e(x) + e(y) >= 3"});
    auto Q = newton_polyhedron(ideal("x,y", "x"));
    CHECK(facet_strings(Q) == std::vector<std::string>{"e(y) >= 0", "e(x) >= 1"});
    auto R = newton_polyhedron(ideal("x,y", "x^2,x*y,y^2"));
    CHECK(facet_strings(R) == std::vector<std::string>{"e(y) >= 0", "e(x) >= 0", "e(x) + e(y) >= 2"});
    auto S = newton_polyhedron(ideal("x,y", "x^4,x^2*y,y^3"));
    CHECK(facet_strings(S)
          == std::vector<std::string>{"e(y) >= 0", "e(x) >= 0", "e(x) + e(y) >= 3", "e(x) + 2*e(y) >= 4"});
    CHECK_THROWS_AS(newton_polyhedron(MonomialIdeal::zero(test::ring("x"))), DomainError);

    // Every generator point satisfies every facet.
    for (const auto &g : S.points())
        CHECK(S.contains(g.exponents()));
}

TEST_CASE("is_integral")
{
    auto I = ideal("x,y", "x^2,y^2");
    CHECK(is_integral(mono("x,y", "x*y"), I));
    CHECK_FALSE(is_integral(mono("x,y", "x"), I));
    CHECK(is_integral(mono("x,y", "x^2*y"), I));
    CHECK_THROWS_AS(is_integral(mono("x", "x"), I), RingMismatch);
}

TEST_CASE("integral_closure")
{
    CHECK(integral_closure(ideal("x,y", "x^3,y^3")) == ideal("x,y", "x^3,x^2*y,x*y^2,y^3"));
    CHECK(integral_closure(ideal("x,y", "x,y")) == ideal("x,y", "x,y"));
    // (x^4, x^2 y, y^3): the hull edge x + y >= 3 adds x*y^2. Expected set from a
    // degree <= 8 scan with the power-dependence oracle.
    auto I = ideal("x,y", "x^4,x^2*y,y^3");
    std::vector<Monomial> scanned;
    for (const auto &m : test::monomials_up_to(2, 8))
        if (power_dependence(I, m, 24))
            scanned.push_back(m);
    auto C = integral_closure(I);
    CHECK(C == MonomialIdeal(I.ring(), scanned));
    CHECK(C == ideal("x,y", "x^4,x^2*y,x*y^2,y^3"));
}

TEST_CASE("integral closure properties against the power-dependence oracle")
{
    std::mt19937_64 rng(5);
    const char *rings[] = {"x,y", "x,y,z"};
    std::vector<MonomialIdeal> corpus;
    for (int i = 0; i < 16; ++i)
        corpus.push_back(test::random_ideal(rng, test::ring(rings[i % 2]), 3, 3));
    for (const auto &I : corpus) {
        auto P = newton_polyhedron(I);
        auto C = integral_closure(I);
        auto n = I.ring().size();
        for (const auto &m : test::monomials_up_to(n, n == 2 ? 8 : 6))
            CHECK(is_integral(m, P) == power_dependence(I, m, 24));

        CHECK(C.contains(I));
        CHECK(integral_closure(C) == C);

        // Box bound: scanning one box-width further finds no extra minimal points.
        std::vector<Exponent> box(n, 0);
        for (const auto &g : I.generators())
            for (std::size_t j = 0; j < n; ++j)
                box[j] = std::max(box[j], g[j]);
        std::vector<Monomial> wide;
        std::vector<Exponent> a(n, 0);
        while (true) {
            if (P.contains(a))
                wide.emplace_back(a);
            std::size_t j = 0;
            while (j < n && a[j] == 2 * box[j] + 1)
                a[j++] = 0;
            if (j == n)
                break;
            ++a[j];
        }
        CHECK(MonomialIdeal(I.ring(), wide) == C);

        // Monotonicity: I ⊆ I + J implies closure(I) ⊆ closure(I + J).
        auto J = test::random_ideal(rng, I.ring(), 2, 3);
        CHECK(integral_closure(ideal_sum(I, J)).contains(C));
    }
}

TEST_CASE("briancon_skoda_check")
{
    auto r = briancon_skoda_check(ideal("x,y", "x^3,y^3"), 2, 5);
    CHECK(r.ok);
    CHECK(briancon_skoda_check(ideal("x,y", "x,y"), 1, 4).ok);
    // ell = 1 fails for (x^3, y^3): x^2*y is integral over I but not in I.
    auto bad = briancon_skoda_check(ideal("x,y", "x^3,y^3"), 1, 3);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.failure);
    CHECK(bad.failure->n == 1);
    CHECK_THROWS_AS(briancon_skoda_check(ideal("x,y", "x"), 3, 2), DomainError);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        auto I = test::random_ideal(rng, test::ring(i % 2 ? "x,y" : "x,y,z"), 3, 3);
        auto ell = std::max<std::uint64_t>(1, I.size());
        CHECK(briancon_skoda_check(I, ell, ell + 2).ok);
    }
}

TEST_CASE("uniform_bs_number")
{
    CHECK(uniform_bs_number(ideal("x,y", "x,y"), 5).k == 0);
    CHECK(uniform_bs_number(ideal("x,y", "x^3,y^3"), 5).k == 1);
    CHECK(uniform_bs_number(ideal("x,y", "x^2,x*y,y^2"), 5).k == 0);
}
