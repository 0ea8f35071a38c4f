#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "unialg/error.hpp"
#include "unialg/groebner.hpp"
#include "unialg/membership.hpp"
#include "unialg/poly.hpp"

using namespace unialg;

namespace {

PolyRingPtr qring(const char *names, MonomialOrder order = MonomialOrder::grevlex())
{
    return make_poly_ring(test::ring(names), Field::rationals(), std::move(order));
}

Polynomial poly(const PolyRingPtr &R, const char *text) { return parse_polynomial(text, R); }

std::vector<Polynomial> polys(const PolyRingPtr &R, const char *text) { return parse_polynomial_list(text, R); }

std::vector<std::string> strings(const GroebnerBasis &gb)
{
    std::vector<std::string> out;
    for (const auto &p : gb.polynomials())
        out.push_back(p.to_string());
    return out;
}

// Homogeneous membership by linear algebra: f of degree d lies in (gens) iff it
// is in the span of m * g over monomials m with deg(m * g) = d.
bool oracle_homogeneous_member(const Polynomial &f, const std::vector<Polynomial> &gens)
{
    const auto n = f.ring().ring.size();
    const auto d = f.total_degree();
    auto basis = monomials_of_degree(n, d);
    auto column = [&](const Monomial &m) {
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (basis[k] == m)
                return k;
        return basis.size();
    };
    auto row_of = [&](const Polynomial &p) {
        std::vector<mpq_class> row(basis.size(), 0);
        for (const auto &[m, c] : p.terms())
            row[column(m)] = c;
        return row;
    };
    std::vector<std::vector<mpq_class>> span;
    for (const auto &g : gens) {
        auto dg = g.total_degree();
        if (dg > d)
            continue;
        for (const auto &m : monomials_of_degree(n, d - dg))
            span.push_back(row_of(g.times_term(m, 1)));
    }
    auto p = f.ring().field.characteristic();
    auto before = test::rank_q(span, p);
    span.push_back(row_of(f));
    return test::rank_q(span, p) == before;
}

Polynomial random_homogeneous(std::mt19937_64 &rng, const PolyRingPtr &R, std::uint64_t d,
                              const std::vector<std::uint64_t> &weights)
{
    const auto n = R->ring.size();
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Polynomial::Term> terms;
    std::uint64_t top = d;
    for (const auto &m : test::monomials_up_to(n, top)) {
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < n; ++i)
            w += weights[i] * m[i];
        if (w == d)
            terms.emplace_back(m, coef(rng));
    }
    return Polynomial(R, std::move(terms));
}

} // namespace

TEST_CASE("polynomial parsing and printing")
{
    auto R = qring("x,y,z");
    auto f = poly(R, "3*x^2*y - 1/2*z + 1");
    CHECK(f.to_string() == "3*x^2*y - 1/2*z + 1");
    CHECK(f.terms().size() == 3);
    CHECK(poly(R, "-x + x").is_zero());
    CHECK(poly(R, "0").to_string() == "0");
    CHECK(poly(R, "x*y - y^2").to_string() == "x*y - y^2");
    CHECK(poly(R, "2/4*x").to_string() == "1/2*x");
    CHECK(poly(R, "y + x").to_string() == "x + y");
    CHECK(poly(R, "x^2 + 2*x*y + y^2") == poly(R, "x^2 + 2*x*y + y^2"));
    CHECK(polys(R, "x, y - 1, z").size() == 3);

    auto F5 = make_poly_ring(test::ring("x,y"), Field::prime(5));
    CHECK(poly(F5, "7*x - 1/2").to_string() == "2*x + 2");
    CHECK(poly(F5, "5*x").is_zero());

    CHECK_THROWS_AS(poly(R, "x^"), ParseError);
    CHECK_THROWS_AS(poly(R, ""), ParseError);
    CHECK_THROWS_AS(poly(R, "x + w"), ParseError);
    CHECK_THROWS_AS(poly(R, "1/0"), ParseError);
    CHECK_THROWS_AS(poly(R, "x +"), ParseError);
    try {
        poly(R, "x + w");
    } catch (const ParseError &e) {
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(poly(F5, "1/5"), DomainError);
}

TEST_CASE("monomial orders")
{
    auto lex = MonomialOrder::lex();
    auto grevlex = MonomialOrder::grevlex();
    Monomial x2{2, 0, 0}, xy{1, 1, 0}, y3{0, 3, 0}, xz{1, 0, 1}, y2{0, 2, 0};
    CHECK(lex.compare(x2, y3) > 0);
    CHECK(grevlex.compare(x2, y3) < 0);
    CHECK(grevlex.compare(xy, xz) > 0);
    CHECK(grevlex.compare(y2, xz) > 0);
    CHECK(lex.compare(xz, y2) > 0);
    MonomialOrder rev(MonomialOrder::Kind::Lex, {2, 1, 0});
    CHECK(rev.compare(Monomial{0, 0, 1}, Monomial{5, 0, 0}) > 0);
    CHECK_THROWS_AS(MonomialOrder(MonomialOrder::Kind::Lex, {0, 0, 1}), DomainError);
    CHECK(MonomialOrder::parse("lex") == lex);
    CHECK_THROWS_AS(MonomialOrder::parse("deglex"), DomainError);
}

TEST_CASE("buchberger examples")
{
    auto R = qring("x,y", MonomialOrder::lex());
    auto gb = buchberger(polys(R, "x^2 - y, y^2 - 1"));
    CHECK(strings(gb) == std::vector<std::string>{"y^2 - 1", "x^2 - y"});
    CHECK(gb.certify());
    CHECK(normal_form(poly(R, "x^3"), gb).to_string() == "x*y");
    CHECK(normal_form(poly(R, "x^4"), gb).to_string() == "1");

    auto lin = buchberger(polys(R, "x"));
    CHECK(strings(lin) == std::vector<std::string>{"x"});
    CHECK(buchberger(polys(R, "0")).size() == 0);
    CHECK(buchberger(polys(R, "0, 0")).polynomials().empty());
    CHECK(buchberger(polys(R, "x - 1, x")).is_unit());

    auto G = qring("x,y,z");
    auto cyclic = buchberger(polys(G, "x + y + z, x*y + y*z + z*x, x*y*z - 1"));
    CHECK(cyclic.certify());
    CHECK(strings(cyclic) == std::vector<std::string>{"x + y + z", "y^2 + y*z + z^2", "z^3 - 1"});

    auto other = make_poly_ring(test::ring("x,y"), Field::prime(3), MonomialOrder::lex());
    CHECK_THROWS_AS(buchberger({poly(R, "x"), parse_polynomial("y", other)}), RingMismatch);
    CHECK_THROWS_AS(buchberger({}), DomainError);

    GroebnerCaps tight;
    tight.max_degree = 3;
    CHECK_THROWS_AS(buchberger(polys(R, "x^4 - y"), tight), CapExceeded);
    tight = {};
    tight.max_polynomials = 1;
    CHECK_THROWS_AS(buchberger(polys(R, "x, y"), tight), CapExceeded);
}

TEST_CASE("membership examples")
{
    auto R = qring("x,y");
    auto I = buchberger(polys(R, "x^2, y^2"));
    CHECK(normal_form(poly(R, "x^2 + 2*x*y + y^2"), I).to_string() == "2*x*y");
    CHECK_FALSE(ideal_member(poly(R, "x^2 + 2*x*y + y^2"), I));
    CHECK(ideal_member(poly(R, "x^2"), I));
    CHECK_FALSE(ideal_member(poly(R, "1"), I));

    auto F2 = make_poly_ring(test::ring("x,y"), Field::prime(2));
    auto I2 = buchberger(parse_polynomial_list("x^2, y^2", F2));
    CHECK(ideal_member(parse_polynomial("x^2 + 2*x*y + y^2", F2), I2));

    auto lexR = qring("x,y", MonomialOrder::lex());
    CHECK_THROWS_AS(normal_form(poly(lexR, "x"), I), RingMismatch);
}

TEST_CASE("radical membership and power indices")
{
    auto R = qring("x,y");
    CHECK(radical_member(poly(R, "x"), polys(R, "x^2")));
    CHECK_FALSE(radical_member(poly(R, "y"), polys(R, "x")));
    CHECK(radical_member(poly(R, "x + y"), polys(R, "x^2, y^3")));
    CHECK(radical_member(poly(R, "1"), polys(R, "x, x - 1")));

    CHECK(power_membership_index(poly(R, "x + y"), polys(R, "x^2, y^2"), 10) == 3u);
    CHECK(power_membership_index(poly(R, "x^2"), polys(R, "x^2, y^2"), 10) == 1u);
    for (std::uint64_t d = 1; d <= 6; ++d) {
        auto gens = std::vector<Polynomial>{Polynomial::monomial(R, Monomial{static_cast<Exponent>(d), 0})};
        CHECK(power_membership_index(poly(R, "x"), gens, 10) == d);
    }
    CHECK_FALSE(power_membership_index(poly(R, "y"), polys(R, "x"), 5).has_value());
    CHECK_FALSE(power_membership_index(poly(R, "x + y"), polys(R, "x^2, y^2"), 2).has_value());
    CHECK_THROWS_AS(power_membership_index(poly(R, "x"), polys(R, "x"), 0), DomainError);
}

TEST_CASE("jacobian ideals and mather indices")
{
    auto R = qring("x1,x2");
    auto J = jacobian_ideal(poly(R, "x1^2 + x2^2"));
    REQUIRE(J.size() == 2);
    CHECK(J[0].to_string() == "2*x1");
    CHECK(J[1].to_string() == "2*x2");
    for (const auto &p : jacobian_ideal(poly(R, "7")))
        CHECK(p.is_zero());
    auto S = qring("x,y");
    auto Jm = jacobian_ideal(poly(S, "x^3*y"));
    CHECK(Jm[0].to_string() == "3*x^2*y");
    CHECK(Jm[1].to_string() == "x^3");

    auto m1 = mather_index(poly(R, "x1^2 + x2^2"), 5);
    CHECK(m1.index == 1u);
    CHECK(m1.within_partials_bound);
    auto m2 = mather_index(poly(S, "x^5 + y^5 + x^3*y^3"), 5);
    CHECK(m2.index == 2u);
    CHECK(m2.within_partials_bound);
    CHECK_FALSE(m2.polynomial_index.has_value());
    CHECK(m1.polynomial_index == 1u);
    CHECK_FALSE(m2.characteristic_warning);
    CHECK(mather_index(poly(S, "x^3*y + x*y^3"), 5).index == 1u);
    CHECK_THROWS_AS(mather_index(poly(S, "x + 1"), 3), DomainError);

    auto F3 = make_poly_ring(test::ring("x,y"), Field::prime(3));
    auto frob = mather_index(parse_polynomial("x^3 + y^3", F3), 4);
    CHECK(frob.characteristic_warning);
    CHECK_FALSE(frob.index.has_value());
}

TEST_CASE("kollar family")
{
    auto fam = kollar_family(3, 2);
    REQUIRE(fam.size() == 2);
    CHECK(fam[0].to_string() == "x1^2");
    CHECK(fam[1].to_string() == "-x2^2 + x1*x3");
    auto fam4 = kollar_family(4, 3);
    REQUIRE(fam4.size() == 3);
    CHECK(fam4[2].to_string() == "-x3^3 + x2*x4^2");

    auto s = kollar_sharpness(3, 2, 8);
    CHECK(s.least == 4u);
    CHECK(s.expected == 4);
    CHECK(s.sharp);
    CHECK(s.radical);
    CHECK_FALSE(kollar_sharpness(3, 2, 3).least.has_value());

    auto s3 = kollar_sharpness(3, 3, 12);
    CHECK(s3.least == 9u);
    CHECK(s3.sharp);
    CHECK(s3.radical);

    auto s4 = kollar_sharpness(4, 2, 10);
    CHECK(s4.least == 8u);
    CHECK(s4.sharp);
    CHECK(s4.radical);

    CHECK_THROWS_AS(kollar_family(2, 3), DomainError);
    CHECK_THROWS_AS(kollar_family(3, 1), DomainError);
}

TEST_CASE("kollar bound")
{
    auto b = kollar_bound({3, 3, 3}, 3);
    CHECK(b.bound == 27);
    CHECK(b.q == 3);
    CHECK_FALSE(b.outside_hypothesis);
    auto c = kollar_bound({4, 5}, 3);
    CHECK(c.bound == 20);
    CHECK(c.q == 2);
    CHECK(kollar_bound({7}, 5).bound == 7);
    CHECK(kollar_bound({3, 9, 4, 5}, 2).bound == 45);
    CHECK(kollar_bound({2, 3}, 2).outside_hypothesis);
    CHECK_THROWS_AS(kollar_bound({}, 3), DomainError);
}

TEST_CASE("frobenius powers and containment")
{
    auto F2 = make_poly_ring(test::ring("x,y,z"), Field::prime(2));
    auto gens = parse_polynomial_list("x, y", F2);
    auto fp = frobenius_power(gens, 2, 1);
    CHECK(fp[0].to_string() == "x^2");
    CHECK(fp[1].to_string() == "y^2");
    CHECK(frobenius_power(gens, 2, 0) == gens);
    auto sum = frobenius_power(parse_polynomial_list("x + y", F2), 2, 1);
    CHECK(sum[0] == parse_polynomial("x + y", F2).pow(2));
    CHECK(sum[0].to_string() == "x^2 + y^2");

    auto F3 = make_poly_ring(test::ring("x,y"), Field::prime(3));
    auto g3 = parse_polynomial("x + 2*y", F3);
    CHECK(frobenius_power({g3}, 3, 2)[0] == g3.pow(9));

    auto r = frobenius_containment_check(gens, 2, 2, 1);
    CHECK(r.contained);
    CHECK(r.checked == 5);
    CHECK(frobenius_containment_check(parse_polynomial_list("x + y", F2), 1, 2, 1).contained);
    CHECK(frobenius_containment_check(parse_polynomial_list("x, y, z", F2), 3, 2, 1).contained);
    // One below the pigeonhole exponent: x*y lies in (x, y)^2 but not in (x^2, y^2).
    auto miss = frobenius_containment_check(gens, 1, 2, 1);
    CHECK_FALSE(miss.contained);
    REQUIRE(miss.witness);
    CHECK(miss.witness->to_string() == "x*y");

    auto Q = qring("x,y");
    CHECK_THROWS_AS(frobenius_power(polys(Q, "x"), 2, 1), DomainError);
    CHECK_THROWS_AS(frobenius_power(gens, 3, 1), DomainError);
    CHECK_THROWS_AS(frobenius_containment_check(parse_polynomial_list("x, y, z", F2), 3, 2, 9), CapExceeded);
}

TEST_CASE("random: division remainder, idempotence and certificate")
{
    std::mt19937_64 rng(0x51);
    std::uniform_int_distribution<int> coef(-2, 2), expo(0, 2), count(1, 3), terms(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        auto R = trial % 2 ? qring("x,y,z") : make_poly_ring(test::ring("x,y,z"), Field::prime(7));
        auto random_poly = [&] {
            std::vector<Polynomial::Term> t;
            int k = terms(rng);
            for (int i = 0; i < k; ++i)
                t.emplace_back(Monomial{static_cast<Exponent>(expo(rng)), static_cast<Exponent>(expo(rng)),
                                        static_cast<Exponent>(expo(rng))},
                               coef(rng));
            return Polynomial(R, std::move(t));
        };
        std::vector<Polynomial> gens;
        int k = count(rng);
        for (int i = 0; i < k; ++i)
            gens.push_back(random_poly());
        auto gb = buchberger(gens);
        CHECK(gb.certify());
        for (const auto &g : gens)
            CHECK(ideal_member(g, gb));
        for (const auto &p : gb.polynomials())
            CHECK(p.leading_coefficient() == 1);
        auto f = random_poly() * random_poly();
        auto r = normal_form(f, gb);
        CHECK(ideal_member(f - r, gb));
        CHECK(normal_form(r, gb) == r);
        // Remainder terms are standard.
        for (const auto &[m, c] : r.terms())
            for (const auto &p : gb.polynomials())
                CHECK_FALSE(divides(p.leading_monomial(), m));
    }
}

TEST_CASE("random: homogeneous membership agrees with linear algebra")
{
    std::mt19937_64 rng(0x62);
    std::vector<std::uint64_t> ones{1, 1, 1};
    for (int trial = 0; trial < 40; ++trial) {
        auto R = trial % 2 ? qring("x,y,z") : make_poly_ring(test::ring("x,y,z"), Field::prime(5));
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) {
            auto g = random_homogeneous(rng, R, 2, ones);
            if (!g.is_zero())
                gens.push_back(g);
        }
        if (gens.empty())
            continue;
        auto gb = buchberger(gens);
        for (std::uint64_t d = 2; d <= 4; ++d) {
            auto f = random_homogeneous(rng, R, d, ones);
            if (f.is_zero())
                continue;
            CHECK(ideal_member(f, gb) == oracle_homogeneous_member(f, gens));
            // A combination of generators is always a member.
            auto combo = Polynomial(R);
            for (const auto &g : gens)
                combo = combo + g * random_homogeneous(rng, R, d - 2, ones);
            if (!combo.is_zero())
                CHECK(oracle_homogeneous_member(combo, gens));
            CHECK(ideal_member(combo, gb));
        }
    }
}

TEST_CASE("random: monomial generators agree with monomial membership")
{
    std::mt19937_64 rng(0x73);
    auto r = test::ring("x,y,z");
    auto R = make_poly_ring(r);
    std::uniform_int_distribution<Exponent> expo(0, 4);
    int queries = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto I = test::random_ideal(rng, r, 4, 3);
        std::vector<Polynomial> gens;
        for (const auto &g : I.generators())
            gens.push_back(Polynomial::monomial(R, g));
        auto gb = buchberger(gens);
        for (int q = 0; q < 20; ++q, ++queries) {
            Monomial m{expo(rng), expo(rng), expo(rng)};
            CHECK(ideal_member(Polynomial::monomial(R, m, 3), gb) == I.contains(m));
        }
    }
    CHECK(queries == 1000);
}

TEST_CASE("random: euler identity and mather index one for weighted homogeneous forms")
{
    std::mt19937_64 rng(0x84);
    std::uniform_int_distribution<std::uint64_t> weight(1, 3), degree(2, 7);
    int tested = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto R = trial % 2 ? qring("x,y") : qring("x,y,z");
        const auto n = R->ring.size();
        std::vector<std::uint64_t> w(n);
        for (auto &v : w)
            v = weight(rng);
        auto d = degree(rng);
        auto f = random_homogeneous(rng, R, d, w);
        if (f.is_zero())
            continue;
        ++tested;
        auto partials = jacobian_ideal(f);
        Polynomial lhs(R);
        for (std::size_t i = 0; i < n; ++i)
            lhs = lhs + Polynomial::variable(R, i) * partials[i].scaled(static_cast<long>(w[i]));
        CHECK(lhs == f.scaled(static_cast<long>(d)));
        CHECK(mather_index(f, 3).index == 1u);
    }
    CHECK(tested > 30);
}

TEST_CASE("intersections, quotients and local membership")
{
    auto R = qring("x,y");
    auto strs = [](const std::vector<Polynomial> &ps) {
        auto gb = buchberger(ps);
        return strings(gb);
    };
    CHECK(strs(intersect_principal(polys(R, "x"), poly(R, "y"))) == std::vector<std::string>{"x*y"});
    CHECK(strs(ideal_quotient(polys(R, "x^2, x*y"), poly(R, "x"))) == std::vector<std::string>{"y", "x"});
    CHECK(strs(ideal_quotient(polys(R, "x^2 + x"), poly(R, "x"))) == std::vector<std::string>{"x + 1"});
    CHECK(divide_exact(poly(R, "x^2 - y^2"), poly(R, "x + y")).to_string() == "x - y");
    CHECK_THROWS_AS(divide_exact(poly(R, "x^2 + 1"), poly(R, "x")), DomainError);
    CHECK_THROWS_AS(ideal_quotient(polys(R, "x"), poly(R, "0")), DomainError);

    // x(1 + x) generates (x) near the origin but not globally.
    auto gens = polys(R, "x + x^2");
    CHECK(local_member_at_origin(poly(R, "x"), gens));
    CHECK_FALSE(ideal_member(poly(R, "x"), buchberger(gens)));
    CHECK_FALSE(local_member_at_origin(poly(R, "y"), gens));
    CHECK(local_member_at_origin(poly(R, "1"), polys(R, "1 + x")));
    CHECK_FALSE(local_member_at_origin(poly(R, "1"), polys(R, "x")));
}

TEST_CASE("random: local mather index never exceeds the number of variables")
{
    std::mt19937_64 rng(0x95);
    std::uniform_int_distribution<int> coef(-2, 2), expo(0, 4), terms(2, 4);
    int found = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto R = qring("x,y");
        std::vector<Polynomial::Term> t;
        int k = terms(rng);
        for (int i = 0; i < k; ++i) {
            Monomial m{static_cast<Exponent>(expo(rng)), static_cast<Exponent>(expo(rng))};
            if (m.degree() >= 2)
                t.emplace_back(std::move(m), coef(rng));
        }
        Polynomial f(R, std::move(t));
        if (f.is_zero())
            continue;
        auto r = mather_index(f, 3);
        REQUIRE(r.index.has_value());
        CHECK(*r.index <= 2);
        if (r.polynomial_index)
            CHECK(*r.polynomial_index >= *r.index);
        ++found;
    }
    CHECK(found > 25);
}
