#include "acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "unialg/artin_rees.hpp"
#include "unialg/betti.hpp"
#include "unialg/error.hpp"
#include "unialg/groebner.hpp"
#include "unialg/hilbert.hpp"
#include "unialg/membership.hpp"
#include "unialg/newton.hpp"
#include "unialg/parse.hpp"
#include "unialg/primes.hpp"

namespace unialg::cli {

namespace {

using Rng = std::mt19937_64;

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string &what)
    {
        if (!cond) {
            ok = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string &what) { notes.push_back(what); }
};

struct CommandResult {
    int status = 0;
    std::string out;
};

CommandResult command(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    int status = run(args, out, err);
    return {status, out.str() + err.str()};
}

Ring ring_of(std::size_t n)
{
    static const char *letters[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.emplace_back(letters[i]);
    return Ring(std::move(names));
}

/// Random monomial with total degree in [1, max_deg].
Monomial random_monomial(Rng &rng, std::size_t n, std::uint64_t max_deg)
{
    std::uniform_int_distribution<std::uint64_t> deg(1, max_deg);
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    std::vector<Exponent> e(n, 0);
    for (auto d = deg(rng); d > 0; --d)
        ++e[var(rng)];
    return Monomial(std::move(e));
}

MonomialIdeal random_ideal(Rng &rng, std::size_t n, std::size_t max_gens, std::uint64_t max_deg)
{
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    std::vector<Monomial> gens;
    for (auto k = count(rng); k > 0; --k)
        gens.push_back(random_monomial(rng, n, max_deg));
    return MonomialIdeal(ring_of(n), std::move(gens));
}

MonomialIdeal random_square_free(Rng &rng, std::size_t n, std::size_t max_gens)
{
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << n) - 1);
    std::vector<Monomial> gens;
    for (auto k = count(rng); k > 0; --k) {
        auto m = mask(rng);
        std::vector<Exponent> e(n);
        for (std::size_t i = 0; i < n; ++i)
            e[i] = (m >> i) & 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(ring_of(n), std::move(gens));
}

// ---- criteria ----

void koszul(Check &c, std::uint64_t)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        auto r = vertex_ring(n);
        auto t = graded_betti(MonomialIdeal::maximal(r));
        c.expect(t == koszul_table(n), "Koszul table for n = " + std::to_string(n));
        std::string gens;
        for (std::size_t i = 0; i < n; ++i)
            gens += (i ? "," : "") + r.name(i);
        auto res = command({"invariants", "betti", "--ring", r.to_string(), "--ideal", gens});
        std::string total = "total:";
        for (std::size_t i = 0; i <= n; ++i) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), n, i);
            total += " " + b.get_str();
        }
        c.expect(res.status == 0 && res.out.find(total) != std::string::npos,
                 "invariants betti row '" + total + "' for n = " + std::to_string(n));
    }
}

void hilbert_identity(Check &c, std::uint64_t seed)
{
    Rng rng(seed ^ 0x2);
    std::size_t mismatches = 0;
    for (int i = 0; i < 200; ++i) {
        auto n = static_cast<std::size_t>(1 + i % 4);
        auto I = random_ideal(rng, n, 8, 5);
        if (betti_numerator(graded_betti(I)) != hilbert_series(I).numerator) {
            ++mismatches;
            c.expect(false, "identity for " + I.to_string() + " over " + I.ring().to_string());
        }
    }
    c.note("200 ideals, " + std::to_string(mismatches) + " mismatches");
}

void symbolic_witness(Check &c, std::uint64_t)
{
    auto res = command({"symbolic", "compare", "--ring", "x,y,z", "--ideal", "x*y,x*z,y*z", "--k", "2"});
    c.expect(res.status == 0 && res.out.rfind("NOT EQUAL, witness x*y*z\n", 0) == 0,
             "symbolic compare prints NOT EQUAL, witness x*y*z");
    auto r = Ring::parse("x,y,z");
    auto sp = symbolic_power(parse_monomial_ideal("x*y, x*z, y*z", r), 2);
    c.expect(sp == parse_monomial_ideal("x^2*y^2, x^2*z^2, y^2*z^2, x*y*z", r),
             "second symbolic power is (x^2y^2, x^2z^2, y^2z^2, xyz), got " + sp.to_string());
}

void edge_sweep(Check &c, std::uint64_t)
{
    std::size_t graphs = 0;
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto &g : connected_graphs_up_to_isomorphism(n)) {
            ++graphs;
            auto t = verify_edge_theorem(g, 3);
            c.expect(t.agree, "verdicts agree on " + g.to_string());
        }
    c.expect(graphs == 1 + 1 + 2 + 6 + 21 + 112, "connected graph count " + std::to_string(graphs));
    c.note(std::to_string(graphs) + " connected graphs checked");
}

void closure_exercise(Check &c, std::uint64_t seed)
{
    auto r = Ring::parse("x,y");
    for (Exponent d = 2; d <= 6; ++d) {
        MonomialIdeal I(r, {Monomial{d, 0}, Monomial{0, d}});
        auto m = ideal_power(MonomialIdeal::maximal(r), d);
        c.expect(integral_closure(I) == m, "closure of (x^d, y^d) is m^d for d = " + std::to_string(d));
    }
    Rng rng(seed ^ 0x5);
    for (int i = 0; i < 50; ++i) {
        MonomialIdeal I(r, {random_monomial(rng, 2, 4), random_monomial(rng, 2, 4)});
        auto res = briancon_skoda_check(I, 2, 5);
        c.expect(res.ok, "closure(I^n) in I^(n-1) for " + I.to_string());
    }
}

void artin_rees_exercise(Check &c, std::uint64_t)
{
    for (std::uint64_t n : {3, 4}) {
        auto lmax = std::to_string(2 * n);
        auto below = command({"artinrees", "exercise4", "--n", std::to_string(n), "--k", std::to_string(n - 1),
                              "--lmax", lmax});
        c.expect(below.status == 0 && below.out.rfind("MISMATCH", 0) == 0,
                 "n = " + std::to_string(n) + ", k = n-1: mismatch with ell <= " + lmax + " (got: "
                     + below.out.substr(0, below.out.find('\n')) + ")");
        auto at = command({"artinrees", "exercise4", "--n", std::to_string(n), "--k", std::to_string(n),
                           "--lmax", lmax});
        c.expect(at.status == 0 && at.out.rfind("no mismatch", 0) == 0,
                 "n = " + std::to_string(n) + ", k = n: no mismatch up to ell = " + lmax);
        // Context for the record: the largest k that still produces a mismatch.
        auto [I, J] = exercise_pair(n);
        std::uint64_t last = 0;
        bool any = false;
        for (std::uint64_t k = 0; k <= n; ++k)
            if (ar_counterexample_search(I, J, k, 2 * n)) {
                last = k;
                any = true;
            }
        if (any)
            c.note("n = " + std::to_string(n) + ": largest k with a mismatch is " + std::to_string(last));
    }
}

void kollar(Check &c, std::uint64_t)
{
    auto s = kollar_sharpness(3, 2, 4);
    c.expect(s.least && *s.least == 4, "kollar_sharpness(3, 2) = 4");
    c.expect(!kollar_sharpness(3, 2, 3).least, "x2^D not in I for D = 1..3");
    c.expect(s.radical, "x2 in the radical of the family");
    auto s3 = kollar_sharpness(3, 3, 9);
    c.expect(s3.least && *s3.least == 9, "kollar_sharpness(3, 3) = 9");
    c.expect(s3.radical, "x2 in the radical of the d = 3 family");
}

void mather(Check &c, std::uint64_t seed)
{
    Rng rng(seed ^ 0x8);
    std::uniform_int_distribution<int> coef(-4, 4), vars(2, 3);
    std::uniform_int_distribution<std::uint64_t> degree(2, 6);
    int tested = 0;
    while (tested < 50) {
        auto n = static_cast<std::size_t>(vars(rng));
        auto R = make_poly_ring(ring_of(n));
        auto d = degree(rng);
        std::vector<Polynomial::Term> terms;
        for (const auto &m : monomials_of_degree(n, d))
            terms.emplace_back(m, coef(rng));
        Polynomial f(R, std::move(terms));
        if (f.is_zero())
            continue;
        ++tested;
        auto m = mather_index(f, 2);
        c.expect(m.index && *m.index == 1, "mather index 1 for " + f.to_string());
    }
    auto R = make_poly_ring(Ring::parse("x,y"));
    auto m = mather_index(parse_polynomial("x^5 + y^5 + x^3*y^3", R), 4);
    c.expect(m.index && *m.index == 2, "mather index 2 for x^5 + y^5 + x^3*y^3");
    c.expect(m.within_partials_bound, "index within the bound t = 2");
}

void frobenius(Check &c, std::uint64_t)
{
    for (const char *vars : {"x,y", "x,y,z"})
        for (std::uint64_t p : {2, 3})
            for (std::uint64_t e : {1, 2}) {
                auto R = make_poly_ring(Ring::parse(vars), Field::prime(p));
                auto gens = parse_polynomial_list(vars, R);
                auto res = frobenius_containment_check(gens, gens.size(), p, e);
                c.expect(res.contained, std::string("(") + vars + ")^(t p^e) in the Frobenius power, p = "
                                            + std::to_string(p) + ", e = " + std::to_string(e));
            }
}

void structural(Check &c, std::uint64_t seed)
{
    Rng rng(seed ^ 0xa);
    std::size_t violations = 0;
    auto expect = [&](bool cond, const std::string &what) {
        if (!cond) {
            ++violations;
            c.expect(false, what);
        }
    };
    for (int i = 0; i < 150; ++i) {
        auto n = static_cast<std::size_t>(1 + i % 4);
        auto I = random_ideal(rng, n, 8, 5);
        auto t = graded_betti(I);
        auto pd = proj_dim(t);
        auto cd = codim(I);
        expect(min_generator_count(I) >= cd, "Krull bound for " + I.to_string());
        expect(cd <= pd && pd <= n, "codim <= pd <= n for " + I.to_string());
        expect(pd <= std::min(min_generator_count(I), n), "pd <= s for " + I.to_string());
    }
    for (int i = 0; i < 100; ++i) {
        auto n = static_cast<std::size_t>(2 + i % 3);
        auto I = random_square_free(rng, n, 6);
        if (I.is_unit())
            continue;
        auto primes = minimal_primes(I);
        auto least = primes.front().codim();
        long count = 0;
        for (const auto &p : primes)
            count += p.codim() == least;
        expect(dimension_multiplicity(I).multiplicity == count, "multiplicity of " + I.to_string());
        for (std::uint64_t a = 1; a <= 2; ++a)
            for (std::uint64_t b = a; b <= 2; ++b)
                expect(symbolic_power(I, a + b).contains(ideal_product(symbolic_power(I, a), symbolic_power(I, b))),
                       "I^(a) I^(b) in I^(a+b) for " + I.to_string());
    }
    c.note(std::to_string(violations) + " violations");
}

struct Criterion {
    int id;
    const char *title;
    double budget;
    std::function<void(Check &, std::uint64_t)> body;
};

const std::vector<Criterion> &criteria()
{
    static const std::vector<Criterion> all = {
        {1, "koszul golden table", 5, koszul},
        {2, "betti and hilbert identities", 60, hilbert_identity},
        {3, "symbolic witness", 1, symbolic_witness},
        {4, "edge theorem sweep", 600, edge_sweep},
        {5, "closure exercise and briancon-skoda", 120, closure_exercise},
        {6, "artin-rees exercise", 30, artin_rees_exercise},
        {7, "kollar sharpness", 120, kollar},
        {8, "mather evidence", 60, mather},
        {9, "frobenius containment", 60, frobenius},
        {10, "structural property suites", 300, structural},
    };
    return all;
}

} // namespace

std::string CriterionOutcome::line() const
{
    std::ostringstream os;
    os << "criterion " << std::setw(2) << id << ' ' << (passed() ? "PASS" : "FAIL") << "  " << title << "  ("
       << std::fixed << std::setprecision(2) << seconds << " s, budget " << std::setprecision(0) << budget_seconds
       << " s)";
    if (checks_passed && !passed())
        os << "  over budget";
    return os.str();
}

std::vector<CriterionOutcome> run_acceptance(std::uint64_t seed, const std::set<int> &only)
{
    std::vector<CriterionOutcome> out;
    for (const auto &cr : criteria()) {
        if (!only.empty() && !only.count(cr.id))
            continue;
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.body(check, seed);
        } catch (const std::exception &ex) {
            check.expect(false, std::string("exception: ") + ex.what());
        }
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        out.push_back(CriterionOutcome{cr.id, cr.title, check.ok, elapsed.count(), cr.budget, check.notes});
    }
    return out;
}

} // namespace unialg::cli
