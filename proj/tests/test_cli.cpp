#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "test_util.hpp"
#include "unialg/poly.hpp"

using unialg::cli::run;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string write_temp(const std::string &name, const std::string &content)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_CASE("cli: documented examples")
{
    auto cmp = call({"symbolic", "compare", "--ring", "x,y,z", "--ideal", "x*y,x*z,y*z", "--k", "2"});
    CHECK(cmp.status == 0);
    CHECK(cmp.out.rfind("NOT EQUAL, witness x*y*z\n", 0) == 0);

    auto betti = call({"invariants", "betti", "--ring", "x,y,z", "--ideal", "x,y,z"});
    CHECK(betti.status == 0);
    CHECK(betti.out == "       0 1 2 3\n"
                       "total: 1 3 3 1\n"
                       "    0: 1 3 3 1\n");

    auto verify = call({"verify", "--only", "1", "--only", "3"});
    CHECK(verify.status == 0);
    CHECK(verify.out.find("criterion  1 PASS") != std::string::npos);
    CHECK(verify.out.find("criterion  3 PASS") != std::string::npos);
    CHECK(verify.out.rfind("seed ", 0) == 0);
}

TEST_CASE("cli: ideal operations")
{
    CHECK(call({"ideal", "show", "--ring", "x,y,z", "--ideal", "x^2*y, z, x^2*y*z"}).out == "z, x^2*y\n");
    CHECK(call({"ideal", "contains", "--ring", "x,y,z", "--ideal", "x*y,x*z,y*z", "--mono", "x^2*y"}).out
          == "true\n");
    CHECK(call({"ideal", "power", "--ring", "x,y", "--ideal", "x,y", "--k", "2"}).out == "x^2, x*y, y^2\n");
    CHECK(call({"ideal", "intersect", "--ring", "x,y", "--ideal", "x^2,y", "--other", "x"}).out == "x^2, x*y\n");
    CHECK(call({"ideal", "colon", "--ring", "x,y,z", "--ideal", "x*y,x*z,y*z", "--mono", "x"}).out == "y, z\n");
    CHECK(call({"ideal", "radical", "--ring", "x,y", "--ideal", "x^2*y"}).out == "x*y\n");
    CHECK(call({"ideal", "minor", "--ring", "x,y,z", "--ideal", "x*y,x*z,y*z", "--ones", "z"}).out == "x, y\n");
    CHECK(call({"ideal", "mingens", "--ring", "x,y", "--ideal", "x^2, x^2*y, y"}).out == "2\n");
    CHECK(call({"ideal", "product", "--ring", "x,y", "--ideal", "x", "--other", "y"}).out == "x*y\n");
}

TEST_CASE("cli: other subcommands")
{
    CHECK(call({"symbolic", "packed", "--ring", "x,y,z", "--ideal", "x*y,x*z,y*z"}).out.rfind("NOT PACKED", 0) == 0);
    auto edge = call({"symbolic", "edge", "--vertices", "3", "--edges", "1-2,2-3,3-1"});
    CHECK(edge.out.find("not bipartite, odd cycle") != std::string::npos);
    auto file = write_temp("unialg_c4.txt", "graph 4\n1 2\n2 3\n3 4\n4 1\n");
    auto thm = call({"symbolic", "theorem", "--graph", file});
    CHECK(thm.status == 0);
    CHECK(thm.out.find("verdicts agree") != std::string::npos);
    auto sweep = call({"symbolic", "theorem", "--all", "4"});
    CHECK(sweep.status == 0);
    CHECK(sweep.out == "10 connected graphs on <= 4 vertices, 0 disagreements\n");

    auto cl = call({"closure", "closure", "--ring", "x,y", "--ideal", "x^3,y^3"});
    CHECK(cl.out.rfind("closure: x^3, x^2*y, x*y^2, y^3\n", 0) == 0);
    CHECK(call({"closure", "bs", "--ring", "x,y", "--ideal", "x^2,y^2", "--nmax", "4"}).status == 0);
    CHECK(call({"closure", "uniform-bs", "--ring", "x,y", "--ideal", "x^2,y^2", "--nmax", "4"}).out.rfind(
              "uniform number 1", 0)
          == 0);

    auto ar = call({"artinrees", "--ring", "x,y", "--ideal", "x,y", "--sub", "x", "--nmax", "5"});
    CHECK(ar.status == 0);
    CHECK(ar.out.find("Artin-Rees number 1") != std::string::npos);
    auto ar2 = call({"artinrees", "number", "--ring", "x,y", "--ideal", "x^2", "--sub", "y", "--nmax", "4"});
    CHECK(ar2.out.find("Artin-Rees number 0") != std::string::npos);
    auto ex = call({"artinrees", "exercise4", "--n", "3", "--k", "1", "--lmax", "8"});
    CHECK(ex.out.rfind("MISMATCH at ell = 2", 0) == 0);

    CHECK(call({"invariants", "hilbert", "--ring", "x,y,z", "--ideal", "x*y,x*z,y*z"}).out.rfind(
              "series: (1 - 3*z^2 + 2*z^3) / (1 - z)^3\n", 0)
          == 0);
    CHECK(call({"invariants", "pd-reg", "--ring", "x,y,z", "--ideal", "x*y,x*z,y*z"}).out == "pd 2, reg 1\n");
    CHECK(call({"invariants", "mult", "--ring", "x,y", "--ideal", "x^3,x^2*y,x*y^2,y^3"}).out
          == "dim 0, multiplicity 6\n");
    CHECK(call({"invariants", "cm", "--ring", "x,y,z", "--ideal", "x*y,x*z"}).out.rfind("not Cohen-Macaulay", 0) == 0);
    auto f2 = call({"invariants", "betti", "--ring", "x,y", "--ideal", "x^2,y^2", "--field", "fp:2"});
    CHECK(f2.status == 0);

    CHECK(call({"groebner", "gb", "--ring", "x,y", "--order", "lex", "--gens", "x^2 - y, y^2 - 1"}).out
          == "y^2 - 1\nx^2 - y\n");
    CHECK(call({"groebner", "member", "--ring", "x,y", "--gens", "x^2, y^2", "--f", "x^2 + 2*x*y + y^2"}).out
          == "not a member, remainder 2*x*y\n");
    CHECK(call({"groebner", "radical", "--ring", "x", "--gens", "x^2", "--f", "x"}).out == "in the radical\n");
    auto mather = call({"groebner", "mather", "--ring", "x,y", "--f", "x^5 + y^5 + x^3*y^3", "--nmax", "3"});
    CHECK(mather.out.find("at the origin: 2") != std::string::npos);
    auto kol = call({"groebner", "kollar", "--n", "3", "--d", "2"});
    CHECK(kol.status == 0);
    CHECK(kol.out.find("least D with x2^D in I: 4") != std::string::npos);
    CHECK(call({"groebner", "kollar", "--degrees", "4,5", "--n", "3"}).out == "D = 20 (q = 2)\n");
    auto frob = call({"groebner", "frobenius", "--ring", "x,y", "--field", "fp:2", "--gens", "x, y", "--p", "2"});
    CHECK(frob.status == 0);
    CHECK(frob.out.rfind("contained", 0) == 0);
}

TEST_CASE("cli: exit codes")
{
    CHECK(call({}).status == 2);
    CHECK(call({"frobnicate"}).status == 2);
    CHECK(call({"ideal"}).status == 2);
    auto bad = call({"ideal", "show", "--ring", "x,y", "--ideal", "x^"});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("column 3") != std::string::npos);
    CHECK(call({"ideal", "show", "--ring", "x,y", "--ideal", "q"}).status == 2);
    CHECK(call({"ideal", "show", "--ideal", "x"}).status == 2);
    CHECK(call({"ideal", "show", "--ring", "x", "--ideal", ""}).status == 2);
    CHECK(call({"groebner", "gb", "--ring", "x", "--gens", "x", "--field", "fp:4"}).status == 2);
    CHECK(call({"symbolic", "compare", "--ring", "x", "--ideal", "x", "--k", "0"}).status == 2);
    CHECK(call({"--help"}).status == 0);

    // Mathematical verification failures.
    CHECK(call({"closure", "bs", "--ring", "x,y", "--ideal", "x^2,y^2", "--ell", "1", "--nmax", "2"}).status == 1);
    CHECK(call({"groebner", "frobenius", "--ring", "x,y", "--field", "fp:2", "--gens", "x, y", "--p", "2", "--t", "1"})
              .status
          == 1);
    CHECK(call({"verify", "--only", "6"}).status == 1);

    // Resource caps.
    auto caps = write_temp("unialg_caps.json", R"({"betti_generator_cap": 2})");
    CHECK(call({"--caps", caps, "invariants", "betti", "--ring", "x,y,z", "--ideal", "x,y,z"}).status == 3);
    auto gcaps = write_temp("unialg_gcaps.json", R"({"groebner_max_degree": 3})");
    CHECK(call({"--caps", gcaps, "groebner", "gb", "--ring", "x,y", "--gens", "x^5 - y"}).status == 3);
    auto ecaps = write_temp("unialg_ecaps.json", R"({"exponent_cap": 20})");
    CHECK(call({"--caps", ecaps, "ideal", "power", "--ring", "x", "--ideal", "x^5", "--k", "10"}).status == 3);
    unialg::set_exponent_cap(unialg::kDefaultExponentCap);
    auto junk = write_temp("unialg_junk.json", R"({"bogus": 1})");
    CHECK(call({"--caps", junk, "ideal", "show", "--ring", "x", "--ideal", "x"}).status == 2);
}

TEST_CASE("cli: json reports are versioned and deterministic")
{
    std::vector<std::string> args{"--json", "--seed", "7", "invariants", "betti", "--ring", "x,y,z", "--ideal",
                                  "x*y,x*z,y*z"};
    auto a = call(args);
    auto b = call(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema"] == 1);
    CHECK(j["seed"] == 7);
    CHECK(j["command"] == "invariants betti");
    CHECK(j["betti"]["field"] == "QQ");
    CHECK(j["betti"]["entries"].size() == 3);
    CHECK(j["betti"]["entries"][1]["i"] == 1);
    CHECK(j["betti"]["entries"][1]["j"] == 2);
    CHECK(j["betti"]["entries"][1]["value"] == 3);

    auto m = nlohmann::json::parse(
        call({"groebner", "member", "--json", "--ring", "x,y", "--gens", "x^2, y^2", "--f", "x^2 + 2*x*y + y^2"}).out);
    CHECK(m["member"] == false);
    CHECK(m["remainder"] == "2*x*y");

    auto v1 = call({"--json", "verify", "--only", "2", "--only", "10"});
    auto v2 = call({"--json", "verify", "--only", "2", "--only", "10"});
    CHECK(v1.out == v2.out);
    CHECK(nlohmann::json::parse(v1.out)["seed"] == unialg::cli::kDefaultSeed);
}

TEST_CASE("cli: printed ideals and polynomials parse back to the same object")
{
    std::mt19937_64 rng(0xa6);
    auto r = test::ring("x,y,z");
    for (int trial = 0; trial < 100; ++trial) {
        auto I = test::random_ideal(rng, r, 5, 4);
        CHECK(unialg::parse_monomial_ideal(I.to_string(), r) == I);
        auto shown = call({"ideal", "show", "--ring", "x,y,z", "--ideal", I.to_string()}).out;
        CHECK(shown == I.to_string() + "\n");
    }
    CHECK(unialg::parse_monomial_ideal(unialg::MonomialIdeal::zero(r).to_string(), r).is_zero());
    auto R = unialg::make_poly_ring(r, unialg::Field::rationals());
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4), expo(0, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<unialg::Polynomial::Term> terms;
        for (int k = 0; k < 4; ++k) {
            mpq_class c(num(rng), den(rng));
            c.canonicalize();
            terms.emplace_back(unialg::Monomial{static_cast<unialg::Exponent>(expo(rng)),
                                                static_cast<unialg::Exponent>(expo(rng)),
                                                static_cast<unialg::Exponent>(expo(rng))},
                               c);
        }
        unialg::Polynomial f(R, std::move(terms));
        CHECK(unialg::parse_polynomial(f.to_string(), R) == f);
    }
}
