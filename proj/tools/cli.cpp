#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "unialg/artin_rees.hpp"
#include "unialg/betti.hpp"
#include "unialg/error.hpp"
#include "unialg/groebner.hpp"
#include "unialg/hilbert.hpp"
#include "unialg/membership.hpp"
#include "unialg/newton.hpp"
#include "unialg/parse.hpp"
#include "unialg/poly.hpp"
#include "unialg/primes.hpp"

namespace unialg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    bool json = false;
    unsigned long long seed = kDefaultSeed;
    std::string caps_file;

    std::string ring;
    std::string ideal;
    std::string other;
    std::string sub;
    std::string mono;
    std::string zeros;
    std::string ones;
    std::string graph_file;
    std::string edges;
    std::size_t vertices = 0;
    std::size_t all_up_to = 0;
    std::uint64_t k = 2;
    std::uint64_t k_max = 3;
    std::uint64_t n_max = 5;
    std::uint64_t ell = 0;
    std::uint64_t l_max = 8;
    std::uint64_t n = 3;
    std::uint64_t d = 2;
    std::uint64_t d_max = 0;
    std::uint64_t p = 2;
    std::uint64_t e = 1;
    std::uint64_t t = 0;
    std::string field = "q";
    std::string order = "grevlex";
    std::string gens;
    std::string poly;
    std::string degrees;
    std::vector<int> only;

    GroebnerCaps groebner_caps;
    std::size_t betti_cap = kDefaultBettiGeneratorCap;
};

struct Report {
    int status = kOk;
    Json data = Json::object();
    std::vector<std::string> text;
};

Json ideal_json(const MonomialIdeal &I)
{
    Json a = Json::array();
    for (const auto &g : I.generators())
        a.push_back(g.to_string(I.ring()));
    return a;
}

Json polys_json(const std::vector<Polynomial> &ps)
{
    Json a = Json::array();
    for (const auto &p : ps)
        a.push_back(p.to_string());
    return a;
}

std::string polys_text(const std::vector<Polynomial> &ps)
{
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i)
        s += (i ? ", " : "") + ps[i].to_string();
    return s.empty() ? "0" : s;
}

Json betti_json(const BettiTable &t)
{
    Json entries = Json::array();
    for (const auto &[key, v] : t.entries)
        entries.push_back(Json{{"i", key.first}, {"j", key.second}, {"value", v}});
    return Json{{"field", t.field.to_string()}, {"entries", entries}};
}

void load_caps(Options &o)
{
    if (o.caps_file.empty())
        return;
    std::ifstream in(o.caps_file);
    if (!in)
        throw DomainError("cannot read caps file '" + o.caps_file + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &ex) {
        throw DomainError("caps file: " + std::string(ex.what()));
    }
    if (!j.is_object())
        throw DomainError("caps file: expected a JSON object");
    for (const auto &[key, value] : j.items()) {
        if (!value.is_number_unsigned() || value.get<std::uint64_t>() == 0)
            throw DomainError("caps file: '" + key + "' must be a positive integer");
        auto v = value.get<std::uint64_t>();
        if (key == "exponent_cap")
            set_exponent_cap(static_cast<Exponent>(std::min<std::uint64_t>(v, 0xffffffffULL)));
        else if (key == "groebner_max_polynomials")
            o.groebner_caps.max_polynomials = v;
        else if (key == "groebner_max_degree")
            o.groebner_caps.max_degree = v;
        else if (key == "betti_generator_cap")
            o.betti_cap = v;
        else
            throw DomainError("caps file: unknown key '" + key + "'");
    }
}

Ring need_ring(const Options &o)
{
    if (o.ring.empty())
        throw DomainError("--ring is required");
    return Ring::parse(o.ring);
}

MonomialIdeal need_ideal(const Ring &r, const std::string &text, const char *flag)
{
    if (text.empty())
        throw DomainError(std::string(flag) + " is required");
    return parse_monomial_ideal(text, r);
}

std::vector<std::size_t> variable_set(const Ring &r, const std::string &text)
{
    std::vector<std::size_t> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto b = name.find_first_not_of(' ');
        auto e = name.find_last_not_of(' ');
        name = b == std::string::npos ? "" : name.substr(b, e - b + 1);
        auto idx = r.index_of(name);
        if (!idx)
            throw DomainError("unknown variable '" + name + "'");
        out.push_back(*idx);
    }
    return out;
}

Graph need_graph(const Options &o)
{
    if (!o.graph_file.empty()) {
        std::ifstream in(o.graph_file);
        if (!in)
            throw DomainError("cannot read graph file '" + o.graph_file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return Graph::parse(ss.str());
    }
    if (o.vertices == 0)
        throw DomainError("a graph needs --graph <file> or --vertices with --edges");
    std::vector<Graph::Edge> edges;
    std::stringstream ss(o.edges);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw DomainError("edge '" + item + "' is not of the form u-v");
        auto u = std::stoull(item.substr(0, dash));
        auto v = std::stoull(item.substr(dash + 1));
        if (u == 0 || v == 0)
            throw DomainError("vertices are numbered from 1");
        edges.emplace_back(u - 1, v - 1);
    }
    return Graph(o.vertices, std::move(edges));
}

PolyRingPtr need_poly_ring(const Options &o)
{
    return make_poly_ring(need_ring(o), Field::parse(o.field), MonomialOrder::parse(o.order));
}

std::vector<Polynomial> need_gens(const Options &o, const PolyRingPtr &R)
{
    if (o.gens.empty())
        throw DomainError("--gens is required");
    return parse_polynomial_list(o.gens, R);
}

Polynomial need_poly(const Options &o, const PolyRingPtr &R)
{
    if (o.poly.empty())
        throw DomainError("--f is required");
    return parse_polynomial(o.poly, R);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- ideal ----

Report ideal_op(const Options &o, const std::string &op)
{
    auto r = need_ring(o);
    auto I = need_ideal(r, o.ideal, "--ideal");
    Report rep;
    rep.data["ideal"] = ideal_json(I);
    MonomialIdeal result = I;
    if (op == "show") {
    } else if (op == "contains") {
        if (o.mono.empty())
            throw DomainError("--mono is required");
        auto m = parse_monomial(o.mono, r);
        bool c = I.contains(m);
        rep.data["monomial"] = m.to_string(r);
        rep.data["contains"] = c;
        rep.text.push_back(c ? "true" : "false");
        return rep;
    } else if (op == "product") {
        result = ideal_product(I, need_ideal(r, o.other, "--other"));
    } else if (op == "power") {
        result = ideal_power(I, o.k);
    } else if (op == "intersect") {
        result = ideal_intersect(I, need_ideal(r, o.other, "--other"));
    } else if (op == "colon") {
        if (o.mono.empty())
            throw DomainError("--mono is required");
        result = ideal_colon(I, parse_monomial(o.mono, r));
    } else if (op == "radical") {
        result = ideal_radical(I);
    } else if (op == "minor") {
        result = ideal_minor(I, MinorSpec{variable_set(r, o.zeros), variable_set(r, o.ones)});
    } else if (op == "mingens") {
        auto c = min_generator_count(I);
        rep.data["count"] = c;
        rep.text.push_back(std::to_string(c));
        return rep;
    }
    rep.data["ring"] = result.ring().to_string();
    rep.data["result"] = ideal_json(result);
    rep.text.push_back(result.to_string());
    return rep;
}

// ---- symbolic ----

Json minor_json(const FailingMinor &f, const Ring &r)
{
    Json z = Json::array(), one = Json::array();
    for (auto v : f.spec.zeros)
        z.push_back(r.name(v));
    for (auto v : f.spec.ones)
        one.push_back(r.name(v));
    return Json{{"zeros", z}, {"ones", one}, {"minor", ideal_json(f.minor)},
                {"codim", f.codim}, {"disjoint", f.disjoint}};
}

std::string minor_text(const FailingMinor &f, const Ring &r)
{
    std::string z, one;
    for (auto v : f.spec.zeros)
        z += (z.empty() ? "" : ",") + r.name(v);
    for (auto v : f.spec.ones)
        one += (one.empty() ? "" : ",") + r.name(v);
    return "zeros {" + z + "} ones {" + one + "}: " + f.minor.to_string() + " has codim "
           + std::to_string(f.codim) + " but only " + std::to_string(f.disjoint) + " disjoint generators";
}

Json report_json(const EdgeTheoremReport &t, const Ring &r)
{
    Json j{{"bipartite", t.bipartite}, {"packed", t.packed}, {"k_max", t.k_max},
           {"equal_up_to", t.equal_up_to}, {"equal_all", t.equal_all}, {"agree", t.agree}};
    if (t.witness)
        j["witness"] = t.witness->to_string(r);
    if (!t.odd_cycle.empty()) {
        Json c = Json::array();
        for (auto v : t.odd_cycle)
            c.push_back(v + 1);
        j["odd_cycle"] = c;
    }
    if (t.failing_minor)
        j["failing_minor"] = minor_json(*t.failing_minor, r);
    return j;
}

Report symbolic_op(const Options &o, const std::string &op)
{
    Report rep;
    if (op == "compare") {
        auto r = need_ring(o);
        auto I = need_ideal(r, o.ideal, "--ideal");
        auto res = symbolic_equals_ordinary(I, o.k);
        auto sp = symbolic_power(I, o.k);
        rep.data["k"] = o.k;
        rep.data["symbolic_power"] = ideal_json(sp);
        rep.data["ordinary_power"] = ideal_json(ideal_power(I, o.k));
        rep.data["equal"] = res.equal;
        if (res.witness)
            rep.data["witness"] = res.witness->to_string(r);
        rep.text.push_back(res.equal ? "EQUAL" : "NOT EQUAL, witness " + res.witness->to_string(r));
        rep.text.push_back("symbolic power: " + sp.to_string());
        return rep;
    }
    if (op == "packed") {
        auto r = need_ring(o);
        auto I = need_ideal(r, o.ideal, "--ideal");
        auto res = is_packed(I);
        rep.data["packed"] = res.packed;
        rep.data["minors_evaluated"] = res.distinct_minors;
        if (res.failure)
            rep.data["failing_minor"] = minor_json(*res.failure, r);
        rep.text.push_back(res.packed ? "PACKED" : "NOT PACKED, " + minor_text(*res.failure, r));
        return rep;
    }
    if (op == "edge") {
        auto g = need_graph(o);
        auto r = vertex_ring(g.vertex_count());
        auto I = edge_ideal(g, r);
        auto b = is_bipartite(g);
        rep.data["ring"] = r.to_string();
        rep.data["edge_ideal"] = ideal_json(I);
        rep.data["bipartite"] = b.bipartite;
        rep.text.push_back("edge ideal: " + I.to_string());
        if (b.bipartite) {
            Json c = Json::array();
            std::string s;
            for (std::size_t v = 0; v < b.coloring.size(); ++v) {
                c.push_back(b.coloring[v]);
                s += (v ? " " : "") + std::to_string(b.coloring[v]);
            }
            rep.data["coloring"] = c;
            rep.text.push_back("bipartite, coloring " + s);
        } else {
            Json c = Json::array();
            std::string s;
            for (auto v : b.odd_cycle) {
                c.push_back(v + 1);
                s += (s.empty() ? "" : " ") + std::to_string(v + 1);
            }
            rep.data["odd_cycle"] = c;
            rep.text.push_back("not bipartite, odd cycle " + s);
        }
        return rep;
    }
    // theorem
    if (o.all_up_to) {
        std::size_t graphs = 0, disagreements = 0;
        Json items = Json::array();
        for (std::size_t n = 1; n <= o.all_up_to; ++n)
            for (const auto &g : connected_graphs_up_to_isomorphism(n)) {
                ++graphs;
                auto t = verify_edge_theorem(g, o.k_max);
                if (!t.agree) {
                    ++disagreements;
                    items.push_back(Json{{"graph", g.to_string()}, {"report", report_json(t, vertex_ring(n))}});
                }
            }
        rep.data["max_vertices"] = o.all_up_to;
        rep.data["k_max"] = o.k_max;
        rep.data["graphs"] = graphs;
        rep.data["disagreements"] = items;
        rep.text.push_back(std::to_string(graphs) + " connected graphs on <= " + std::to_string(o.all_up_to)
                           + " vertices, " + std::to_string(disagreements) + " disagreements");
        if (disagreements)
            rep.status = kVerificationFailed;
        return rep;
    }
    auto g = need_graph(o);
    auto r = vertex_ring(g.vertex_count());
    auto t = verify_edge_theorem(g, o.k_max);
    rep.data["report"] = report_json(t, r);
    rep.text.push_back("bipartite: " + yes_no(t.bipartite));
    rep.text.push_back("packed: " + yes_no(t.packed));
    rep.text.push_back("symbolic = ordinary for k <= " + std::to_string(t.k_max) + ": " + yes_no(t.equal_all)
                       + " (equal up to " + std::to_string(t.equal_up_to) + ")");
    if (t.witness)
        rep.text.push_back("witness: " + t.witness->to_string(r));
    rep.text.push_back(t.agree ? "verdicts agree" : "VERDICTS DISAGREE");
    if (!t.agree)
        rep.status = kVerificationFailed;
    return rep;
}

// ---- closure ----

Report closure_op(const Options &o, const std::string &op)
{
    auto r = need_ring(o);
    auto I = need_ideal(r, o.ideal, "--ideal");
    Report rep;
    if (op == "closure") {
        NewtonPolyhedron P(I);
        auto c = integral_closure(I);
        Json facets = Json::array();
        for (const auto &f : P.facets())
            facets.push_back(f.to_string(r));
        rep.data["facets"] = facets;
        rep.data["closure"] = ideal_json(c);
        rep.data["integrally_closed"] = c == I;
        rep.text.push_back("closure: " + c.to_string());
        for (const auto &f : P.facets())
            rep.text.push_back("facet: " + f.to_string(r));
        return rep;
    }
    if (op == "bs") {
        auto ell = o.ell ? o.ell : min_generator_count(I);
        auto res = briancon_skoda_check(I, ell, std::max(o.n_max, ell));
        rep.data["ell"] = res.ell;
        rep.data["n_max"] = res.n_max;
        rep.data["ok"] = res.ok;
        if (res.failure)
            rep.data["failure"] = Json{{"n", res.failure->n}, {"monomial", res.failure->monomial.to_string(r)}};
        rep.text.push_back(res.ok ? "closure(I^n) in I^(n-" + std::to_string(ell - 1) + ") for n <= "
                                        + std::to_string(res.n_max)
                                  : "FAILS at n = " + std::to_string(res.failure->n) + ", monomial "
                                        + res.failure->monomial.to_string(r));
        if (!res.ok)
            rep.status = kVerificationFailed;
        return rep;
    }
    auto res = uniform_bs_number(I, o.n_max);
    rep.data["k"] = res.k;
    rep.data["n_max"] = res.n_max;
    rep.text.push_back("uniform number " + std::to_string(res.k) + " (evidence for n <= "
                       + std::to_string(res.n_max) + ")");
    return rep;
}

// ---- artinrees ----

Report artinrees_op(const Options &o, const std::string &op)
{
    Report rep;
    if (op == "exercise4") {
        auto [I, J] = exercise_pair(o.n);
        auto res = ar_counterexample_search(I, J, o.k, std::max(o.l_max, o.k + 1));
        rep.data["n"] = o.n;
        rep.data["k"] = o.k;
        rep.data["l_max"] = o.l_max;
        rep.data["ideal"] = ideal_json(I);
        rep.data["reduction"] = ideal_json(J);
        rep.data["mismatch"] = res.has_value();
        if (res) {
            rep.data["ell"] = res->ell;
            rep.data["witness"] = res->witness.to_string(I.ring());
            rep.data["witness_in_power"] = res->witness_in_power;
            rep.text.push_back("MISMATCH at ell = " + std::to_string(res->ell) + ", witness "
                               + res->witness.to_string(I.ring()));
        } else {
            rep.text.push_back("no mismatch for ell <= " + std::to_string(o.l_max));
        }
        return rep;
    }
    auto r = need_ring(o);
    auto I = need_ideal(r, o.ideal, "--ideal");
    auto N = need_ideal(r, o.sub, "--sub");
    auto res = artin_rees_number(I, N, o.n_max);
    Json ks = Json::array();
    std::string s;
    for (auto k : res.least_k) {
        ks.push_back(k);
        s += (s.empty() ? "" : " ") + std::to_string(k);
    }
    rep.data["ideal"] = ideal_json(I);
    rep.data["sub"] = ideal_json(N);
    rep.data["n_max"] = res.n_max;
    rep.data["least_k"] = ks;
    rep.data["ar_number"] = res.ar_number;
    rep.text.push_back("k_n for n = 1.." + std::to_string(res.n_max) + ": " + s);
    rep.text.push_back("Artin-Rees number " + std::to_string(res.ar_number));
    return rep;
}

// ---- invariants ----

Report invariants_op(const Options &o, const std::string &op)
{
    auto r = need_ring(o);
    auto I = need_ideal(r, o.ideal, "--ideal");
    auto field = Field::parse(o.field);
    Report rep;
    if (op == "hilbert") {
        auto s = hilbert_series(I);
        auto p = hilbert_polynomial(I);
        Json terms = Json::array();
        for (const auto &[deg, c] : s.terms())
            terms.push_back(Json{{"degree", deg}, {"coefficient", c.get_str()}});
        Json h = Json::array();
        std::string hs;
        for (std::uint64_t d = 0; d <= p.stability_threshold() + 4; ++d) {
            auto v = hilbert_function(I, d).get_str();
            h.push_back(v);
            hs += (hs.empty() ? "" : " ") + v;
        }
        rep.data["numerator"] = terms;
        rep.data["series"] = s.to_string();
        rep.data["hilbert_function"] = h;
        rep.data["hilbert_polynomial"] = p.to_string();
        rep.data["stability_threshold"] = p.stability_threshold();
        rep.text.push_back("series: " + s.to_string());
        rep.text.push_back("h(0..): " + hs);
        rep.text.push_back("polynomial: " + p.to_string() + " for d >= " + std::to_string(p.stability_threshold()));
        return rep;
    }
    if (op == "mult") {
        auto dm = dimension_multiplicity(I);
        rep.data["dim"] = dm.dim;
        rep.data["multiplicity"] = dm.multiplicity.get_str();
        rep.text.push_back("dim " + std::to_string(dm.dim) + ", multiplicity " + dm.multiplicity.get_str());
        return rep;
    }
    auto t = graded_betti(I, field, o.betti_cap);
    if (op == "betti") {
        rep.data["betti"] = betti_json(t);
        rep.data["numerator_identity"] = betti_numerator(t) == hilbert_series(I).numerator;
        std::istringstream lines(t.render());
        for (std::string line; std::getline(lines, line);)
            rep.text.push_back(line);
        return rep;
    }
    if (op == "pd-reg") {
        rep.data["pd"] = proj_dim(t);
        rep.data["reg"] = regularity(t);
        rep.text.push_back("pd " + std::to_string(proj_dim(t)) + ", reg " + std::to_string(regularity(t)));
        return rep;
    }
    // cm
    auto c = codim(I);
    auto pd = proj_dim(t);
    rep.data["codim"] = c;
    rep.data["pd"] = pd;
    rep.data["cohen_macaulay"] = c == pd;
    rep.text.push_back(std::string(c == pd ? "Cohen-Macaulay" : "not Cohen-Macaulay") + " (codim "
                       + std::to_string(c) + ", pd " + std::to_string(pd) + ")");
    if (auto e = pure_resolution_multiplicity(t, c)) {
        rep.data["pure_multiplicity"] = e->get_str();
        rep.text.push_back("pure resolution, multiplicity " + e->get_str());
    }
    return rep;
}

// ---- groebner ----

std::string optional_text(const std::optional<std::uint64_t> &v)
{
    return v ? std::to_string(*v) : std::string("none");
}

Json optional_json(const std::optional<std::uint64_t> &v) { return v ? Json(*v) : Json(nullptr); }

Report groebner_op(const Options &o, const std::string &op)
{
    Report rep;
    const auto &caps = o.groebner_caps;
    if (op == "kollar") {
        if (!o.degrees.empty()) {
            std::vector<std::uint64_t> degs;
            std::stringstream ss(o.degrees);
            for (std::string item; std::getline(ss, item, ',');)
                degs.push_back(std::stoull(item));
            auto b = kollar_bound(degs, o.n);
            rep.data["bound"] = b.bound.get_str();
            rep.data["q"] = b.q;
            rep.data["outside_hypothesis"] = b.outside_hypothesis;
            rep.text.push_back("D = " + b.bound.get_str() + " (q = " + std::to_string(b.q) + ")"
                               + (b.outside_hypothesis ? ", outside theorem hypothesis (degree < 3)" : ""));
            return rep;
        }
        auto field = Field::parse(o.field);
        auto fam = kollar_family(o.n, o.d, field);
        mpz_class expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), o.d, o.n - 1);
        auto d_max = o.d_max ? o.d_max : expected.get_ui();
        auto s = kollar_sharpness(o.n, o.d, d_max, field, caps);
        rep.data["family"] = polys_json(fam);
        rep.data["least"] = optional_json(s.least);
        rep.data["expected"] = s.expected.get_str();
        rep.data["sharp"] = s.sharp;
        rep.data["radical_member"] = s.radical;
        rep.text.push_back("family: " + polys_text(fam));
        rep.text.push_back("least D with x" + std::to_string(o.n - 1) + "^D in I: "
                           + (s.least ? std::to_string(*s.least) : "exhausted at " + std::to_string(d_max)));
        rep.text.push_back("d^(n-1) = " + s.expected.get_str() + (s.sharp ? ", sharp" : ", NOT sharp"));
        rep.text.push_back("x" + std::to_string(o.n - 1) + " in radical: " + yes_no(s.radical));
        if (!s.sharp || !s.radical)
            rep.status = kVerificationFailed;
        return rep;
    }
    auto R = need_poly_ring(o);
    rep.data["field"] = R->field.to_string();
    rep.data["order"] = R->order.to_string();
    if (op == "gb") {
        auto gb = buchberger(need_gens(o, R), caps);
        rep.data["basis"] = polys_json(gb.polynomials());
        for (const auto &p : gb.polynomials())
            rep.text.push_back(p.to_string());
        if (gb.polynomials().empty())
            rep.text.push_back("0");
        return rep;
    }
    if (op == "member") {
        auto f = need_poly(o, R);
        auto gb = buchberger(need_gens(o, R), caps);
        auto rem = normal_form(f, gb);
        rep.data["member"] = rem.is_zero();
        rep.data["remainder"] = rem.to_string();
        rep.text.push_back(rem.is_zero() ? "member" : "not a member, remainder " + rem.to_string());
        return rep;
    }
    if (op == "radical") {
        auto f = need_poly(o, R);
        bool in = radical_member(f, need_gens(o, R), caps);
        rep.data["radical_member"] = in;
        rep.text.push_back(in ? "in the radical" : "not in the radical");
        return rep;
    }
    if (op == "mather") {
        auto f = need_poly(o, R);
        auto m = mather_index(f, o.n_max, caps);
        rep.data["jacobian"] = polys_json(jacobian_ideal(f));
        rep.data["index"] = optional_json(m.index);
        rep.data["polynomial_index"] = optional_json(m.polynomial_index);
        rep.data["n_max"] = m.n_max;
        rep.data["within_partials_bound"] = m.within_partials_bound;
        rep.data["characteristic_warning"] = m.characteristic_warning;
        rep.text.push_back("J(f) = (" + polys_text(jacobian_ideal(f)) + ")");
        rep.text.push_back("least N with f^N in J(f) at the origin: " + optional_text(m.index));
        rep.text.push_back("least N in the polynomial ring: " + optional_text(m.polynomial_index));
        if (m.characteristic_warning)
            rep.text.push_back("warning: positive characteristic, partials may vanish identically");
        return rep;
    }
    // frobenius
    auto gens = need_gens(o, R);
    auto t = o.t ? o.t : gens.size();
    auto res = frobenius_containment_check(gens, t, o.p, o.e, caps);
    rep.data["frobenius_power"] = polys_json(frobenius_power(gens, o.p, o.e));
    rep.data["t"] = t;
    rep.data["contained"] = res.contained;
    rep.data["checked"] = res.checked;
    if (res.witness)
        rep.data["witness"] = res.witness->to_string();
    rep.text.push_back(std::string(res.contained ? "contained" : "NOT contained") + " (" + std::to_string(res.checked)
                       + " power products checked)");
    if (res.witness)
        rep.text.push_back("witness: " + res.witness->to_string());
    if (!res.contained)
        rep.status = kVerificationFailed;
    return rep;
}

// ---- verify ----

Report verify_op(const Options &o)
{
    std::set<int> only(o.only.begin(), o.only.end());
    auto outcomes = run_acceptance(o.seed, only);
    Report rep;
    rep.text.push_back("seed " + std::to_string(o.seed));
    Json items = Json::array();
    for (const auto &c : outcomes) {
        items.push_back(Json{{"id", c.id},
                             {"title", c.title},
                             {"passed", c.passed()},
                             {"checks_passed", c.checks_passed},
                             {"budget_seconds", c.budget_seconds},
                             {"notes", c.notes}});
        rep.text.push_back(c.line());
        for (const auto &n : c.notes)
            rep.text.push_back("    " + n);
        if (!c.passed())
            rep.status = kVerificationFailed;
    }
    rep.data["criteria"] = items;
    rep.text.push_back(rep.status == kOk ? "all checks passed" : "SOME CHECKS FAILED");
    return rep;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Exact experiments with monomial and polynomial ideals", "unialg"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Emit a JSON report");
    app.add_option("--seed", o.seed, "Seed for randomized corpora");
    app.add_option("--caps", o.caps_file, "JSON file of resource caps");

    std::function<Report()> action;
    std::string command;

    auto ring_opt = [&](CLI::App *c) { c->add_option("--ring", o.ring, "Variables, e.g. x,y,z"); };
    auto ideal_opt = [&](CLI::App *c) { c->add_option("--ideal", o.ideal, "Monomial generators"); };
    auto leaf = [&](CLI::App *parent, const std::string &name, const std::string &help,
                    std::function<Report(const std::string &)> handler) {
        auto *c = parent->add_subcommand(name, help);
        c->callback([&, handler, name, parent] {
            command = parent->get_name() + " " + name;
            action = [handler, name] { return handler(name); };
        });
        return c;
    };

    auto *ideal = app.add_subcommand("ideal", "Monomial ideal arithmetic");
    ideal->require_subcommand(1);
    for (const auto *name : {"show", "contains", "product", "power", "intersect", "colon", "radical", "minor",
                             "mingens"}) {
        auto *c = leaf(ideal, name, "", [&](const std::string &op) { return ideal_op(o, op); });
        ring_opt(c);
        ideal_opt(c);
        c->add_option("--other", o.other, "Second ideal");
        c->add_option("--mono", o.mono, "Monomial");
        c->add_option("--k", o.k, "Exponent")->check(CLI::PositiveNumber);
        c->add_option("--zeros", o.zeros, "Variables set to 0");
        c->add_option("--ones", o.ones, "Variables set to 1");
    }

    auto *symbolic = app.add_subcommand("symbolic", "Symbolic powers, packing, edge ideals");
    symbolic->require_subcommand(1);
    for (const auto *name : {"compare", "packed", "edge", "theorem"}) {
        auto *c = leaf(symbolic, name, "", [&](const std::string &op) { return symbolic_op(o, op); });
        ring_opt(c);
        ideal_opt(c);
        c->add_option("--k", o.k, "Power")->check(CLI::PositiveNumber);
        c->add_option("--kmax", o.k_max, "Largest power compared")->check(CLI::Range(2, 64));
        c->add_option("--graph", o.graph_file, "Graph file");
        c->add_option("--vertices", o.vertices, "Vertex count for --edges");
        c->add_option("--edges", o.edges, "Edges as u-v,u-v (1-indexed)");
        c->add_option("--all", o.all_up_to, "Sweep all connected graphs up to this many vertices")
            ->check(CLI::Range(1, 7));
    }

    auto *closure = app.add_subcommand("closure", "Integral closure and Briancon-Skoda checks");
    closure->require_subcommand(1);
    for (const auto *name : {"closure", "bs", "uniform-bs"}) {
        auto *c = leaf(closure, name, "", [&](const std::string &op) { return closure_op(o, op); });
        ring_opt(c);
        ideal_opt(c);
        c->add_option("--ell", o.ell, "Number of generators used in the exponent shift");
        c->add_option("--nmax", o.n_max, "Largest power tested")->check(CLI::PositiveNumber);
    }

    auto *artinrees = app.add_subcommand("artinrees", "Artin-Rees numbers");
    artinrees->require_subcommand(0, 1);
    ring_opt(artinrees);
    ideal_opt(artinrees);
    artinrees->add_option("--sub", o.sub, "Submodule ideal N");
    artinrees->add_option("--nmax", o.n_max, "Largest n")->check(CLI::PositiveNumber);
    artinrees->callback([&] {
        if (!action) {
            command = "artinrees number";
            action = [&] { return artinrees_op(o, "number"); };
        }
    });
    {
        auto *c = leaf(artinrees, "number", "", [&](const std::string &op) { return artinrees_op(o, op); });
        ring_opt(c);
        ideal_opt(c);
        c->add_option("--sub", o.sub, "Submodule ideal N");
        c->add_option("--nmax", o.n_max, "Largest n")->check(CLI::PositiveNumber);
        auto *x = leaf(artinrees, "exercise4", "", [&](const std::string &op) { return artinrees_op(o, op); });
        x->add_option("--n", o.n, "Family parameter")->check(CLI::Range(1, 64));
        x->add_option("--k", o.k, "Shift k");
        x->add_option("--lmax", o.l_max, "Largest ell scanned")->check(CLI::PositiveNumber);
    }

    auto *invariants = app.add_subcommand("invariants", "Hilbert series and Betti tables");
    invariants->require_subcommand(1);
    for (const auto *name : {"hilbert", "betti", "pd-reg", "mult", "cm"}) {
        auto *c = leaf(invariants, name, "", [&](const std::string &op) { return invariants_op(o, op); });
        ring_opt(c);
        ideal_opt(c);
        c->add_option("--field", o.field, "q or fp:<p>");
    }

    auto *groebner = app.add_subcommand("groebner", "Groebner bases and membership experiments");
    groebner->require_subcommand(1);
    for (const auto *name : {"gb", "member", "radical", "mather", "kollar", "frobenius"}) {
        auto *c = leaf(groebner, name, "", [&](const std::string &op) { return groebner_op(o, op); });
        ring_opt(c);
        c->add_option("--field", o.field, "q or fp:<p>");
        c->add_option("--order", o.order, "lex or grevlex");
        c->add_option("--gens", o.gens, "Comma-separated polynomials");
        c->add_option("--f", o.poly, "Polynomial");
        c->add_option("--nmax", o.n_max, "Largest power tested")->check(CLI::PositiveNumber);
        c->add_option("--n", o.n, "Number of variables");
        c->add_option("--d", o.d, "Degree");
        c->add_option("--dmax", o.d_max, "Largest D tested");
        c->add_option("--degrees", o.degrees, "Generator degrees for the bound, e.g. 3,3,3");
        c->add_option("--p", o.p, "Characteristic")->check(CLI::PositiveNumber);
        c->add_option("--e", o.e, "Frobenius exponent");
        c->add_option("--t", o.t, "Power multiplier (default: number of generators)");
    }

    auto *verify = app.add_subcommand("verify", "Run the acceptance checks");
    verify->add_option("--only", o.only, "Criterion numbers to run")->check(CLI::Range(1, kCriterionCount));
    verify->callback([&] {
        command = "verify";
        action = [&] { return verify_op(o); };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &ex) {
        err << "usage error: " << ex.what() << '\n';
        return kUsage;
    }

    try {
        load_caps(o);
        if (!action)
            throw DomainError("no subcommand given");
        auto rep = action();
        if (o.json) {
            Json j;
            j["schema"] = 1;
            j["command"] = command;
            j["seed"] = o.seed;
            j["status"] = rep.status;
            for (auto &[key, value] : rep.data.items())
                j[key] = value;
            out << j.dump(2) << '\n';
        } else {
            for (const auto &line : rep.text)
                out << line << '\n';
        }
        return rep.status;
    } catch (const CapExceeded &ex) {
        err << "cap exceeded: " << ex.what() << '\n';
        return kCapExceeded;
    } catch (const ParseError &ex) {
        err << "parse error: " << ex.what() << '\n';
        return kUsage;
    } catch (const Error &ex) {
        err << "error: " << ex.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument &ex) {
        err << "error: malformed number (" << ex.what() << ")\n";
        return kUsage;
    } catch (const std::out_of_range &ex) {
        err << "error: number out of range (" << ex.what() << ")\n";
        return kUsage;
    }
}

} // namespace unialg::cli
