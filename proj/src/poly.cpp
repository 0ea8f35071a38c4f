#include "unialg/poly.hpp"

#include <algorithm>
#include <sstream>

#include "text_cursor.hpp"
#include "unialg/error.hpp"

namespace unialg {

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> significance)
    : kind_(kind), sig_(std::move(significance))
{
    auto sorted = sig_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i)
            throw DomainError("monomial order: significance list is not a permutation");
}

MonomialOrder MonomialOrder::parse(std::string_view text)
{
    if (text == "lex")
        return lex();
    if (text == "grevlex")
        return grevlex();
    throw DomainError("unknown monomial order '" + std::string(text) + "' (expected lex or grevlex)");
}

int MonomialOrder::compare(const Monomial &a, const Monomial &b) const
{
    const auto n = a.size();
    if (!sig_.empty() && sig_.size() != n)
        throw RingMismatch("monomial order: permutation length does not match ring");
    if (kind_ == Kind::Grevlex) {
        auto da = a.degree(), db = b.degree();
        if (da != db)
            return da < db ? -1 : 1;
        for (std::size_t k = n; k-- > 0;) {
            auto v = var(k);
            if (a[v] != b[v])
                return a[v] > b[v] ? -1 : 1;
        }
        return 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
        auto v = var(k);
        if (a[v] != b[v])
            return a[v] < b[v] ? -1 : 1;
    }
    return 0;
}

std::string MonomialOrder::to_string() const
{
    std::string s = kind_ == Kind::Lex ? "lex" : "grevlex";
    if (!sig_.empty()) {
        s += '[';
        for (std::size_t k = 0; k < sig_.size(); ++k)
            s += (k ? "," : "") + std::to_string(sig_[k]);
        s += ']';
    }
    return s;
}

mpq_class PolyRing::reduce(const mpq_class &c) const
{
    if (field.is_rational())
        return c;
    mpz_class p = static_cast<unsigned long>(field.characteristic());
    mpz_class num = c.get_num() % p;
    mpz_class den = c.get_den() % p;
    if (den == 0)
        throw DomainError("denominator divisible by the characteristic " + field.to_string());
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = num * inv % p;
    if (r < 0)
        r += p;
    return mpq_class(r);
}

mpq_class PolyRing::inverse(const mpq_class &c) const
{
    if (c == 0)
        throw DomainError("inverse of zero");
    if (field.is_rational())
        return 1 / c;
    return reduce(mpq_class(1, 1) / c);
}

PolyRingPtr make_poly_ring(Ring ring, Field field, MonomialOrder order)
{
    if (!order.significance().empty() && order.significance().size() != ring.size())
        throw RingMismatch("monomial order permutation length does not match ring " + ring.to_string());
    return std::make_shared<const PolyRing>(PolyRing{std::move(ring), field, std::move(order)});
}

void require_same_poly_ring(const PolyRing &a, const PolyRing &b, const char *op)
{
    if (!(a == b))
        throw RingMismatch(std::string(op) + ": polynomials over different rings, fields or orders");
}

Polynomial::Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms) : ring_(std::move(ring))
{
    const auto &R = *ring_;
    for (auto &t : terms) {
        if (t.first.size() != R.ring.size())
            throw RingMismatch("term length does not match ring " + R.ring.to_string());
        t.second = R.reduce(t.second);
    }
    std::sort(terms.begin(), terms.end(),
              [&](const Term &a, const Term &b) { return R.order.compare(a.first, b.first) > 0; });
    for (auto &t : terms) {
        if (!terms_.empty() && terms_.back().first == t.first) {
            terms_.back().second = R.reduce(terms_.back().second + t.second);
            if (terms_.back().second == 0)
                terms_.pop_back();
        } else if (t.second != 0) {
            terms_.push_back(std::move(t));
        }
    }
}

Polynomial Polynomial::constant(PolyRingPtr ring, const mpq_class &c)
{
    auto n = ring->ring.size();
    return Polynomial(std::move(ring), {{Monomial(n), c}});
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t i)
{
    auto n = ring->ring.size();
    return Polynomial(std::move(ring), {{Monomial::variable(n, i), 1}});
}

Polynomial Polynomial::monomial(PolyRingPtr ring, Monomial m, const mpq_class &c)
{
    return Polynomial(std::move(ring), {{std::move(m), c}});
}

bool Polynomial::is_constant() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

const Monomial &Polynomial::leading_monomial() const
{
    if (terms_.empty())
        throw DomainError("leading monomial of the zero polynomial");
    return terms_[0].first;
}

const mpq_class &Polynomial::leading_coefficient() const
{
    if (terms_.empty())
        throw DomainError("leading coefficient of the zero polynomial");
    return terms_[0].second;
}

std::uint64_t Polynomial::total_degree() const
{
    std::uint64_t d = 0;
    for (const auto &t : terms_)
        d = std::max(d, t.first.degree());
    return d;
}

Polynomial Polynomial::operator+(const Polynomial &o) const
{
    require_same_poly_ring(*ring_, *o.ring_, "add");
    const auto &R = *ring_;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c = i == terms_.size()     ? -1
                : j == o.terms_.size() ? 1
                                       : R.order.compare(terms_[i].first, o.terms_[j].first);
        if (c > 0)
            r.terms_.push_back(terms_[i++]);
        else if (c < 0)
            r.terms_.push_back(o.terms_[j++]);
        else {
            auto s = R.reduce(terms_[i].second + o.terms_[j].second);
            if (s != 0)
                r.terms_.emplace_back(terms_[i].first, s);
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator-(const Polynomial &o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const mpq_class &c) const
{
    auto k = ring_->reduce(c);
    Polynomial r(ring_);
    if (k == 0)
        return r;
    r.terms_.reserve(terms_.size());
    for (const auto &t : terms_)
        r.terms_.emplace_back(t.first, ring_->reduce(t.second * k));
    return r;
}

Polynomial Polynomial::times_term(const Monomial &m, const mpq_class &c) const
{
    auto k = ring_->reduce(c);
    Polynomial r(ring_);
    if (k == 0)
        return r;
    r.terms_.reserve(terms_.size());
    // Multiplication by a monomial preserves the order of the terms.
    for (const auto &t : terms_)
        r.terms_.emplace_back(t.first * m, ring_->reduce(t.second * k));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial &o) const
{
    require_same_poly_ring(*ring_, *o.ring_, "multiply");
    Polynomial r(ring_);
    for (const auto &t : o.terms_)
        r = r + times_term(t.first, t.second);
    return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const
{
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const
{
    if (terms_.empty())
        return *this;
    return scaled(ring_->inverse(terms_[0].second));
}

Polynomial Polynomial::derivative(std::size_t i) const
{
    if (i >= ring_->ring.size())
        throw DomainError("derivative: variable index out of range");
    std::vector<Term> out;
    for (const auto &t : terms_) {
        if (!t.first[i])
            continue;
        std::vector<Exponent> e(t.first.exponents().begin(), t.first.exponents().end());
        auto k = e[i]--;
        out.emplace_back(Monomial(std::move(e)), t.second * mpq_class(static_cast<unsigned long>(k)));
    }
    return Polynomial(ring_, std::move(out));
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        mpq_class a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (m.is_one())
            os << a;
        else {
            if (a != 1)
                os << a << '*';
            os << m.to_string(ring_->ring);
        }
    }
    return os.str();
}

bool operator==(const Polynomial &a, const Polynomial &b)
{
    return *a.ring_ == *b.ring_ && a.terms_ == b.terms_;
}

namespace {

Polynomial parse_poly(detail::TextCursor &cur, const PolyRingPtr &ring)
{
    const auto n = ring->ring.size();
    std::vector<Polynomial::Term> terms;
    bool first = true;
    while (true) {
        mpq_class sign = 1;
        if (cur.accept('-'))
            sign = -1;
        else if (!cur.accept('+') && !first)
            break;
        first = false;
        mpq_class coef = 1;
        Monomial m(n);
        if (cur.at_digit()) {
            auto col = cur.column();
            mpz_class num(cur.digits());
            mpz_class den = 1;
            if (cur.accept('/')) {
                if (!cur.at_digit())
                    cur.fail("malformed coefficient");
                den = mpz_class(cur.digits());
                if (den == 0)
                    throw ParseError("zero denominator", col);
            }
            coef = mpq_class(num, den);
            coef.canonicalize();
            if (cur.accept('*')) {
                if (!cur.at_name())
                    cur.fail("expected a variable name");
                m = cur.monomial(ring->ring);
            }
        } else if (cur.at_name()) {
            m = cur.monomial(ring->ring);
        } else {
            cur.fail(cur.done() ? "unexpected end of input" : "expected a term");
        }
        terms.emplace_back(std::move(m), sign * coef);
    }
    return Polynomial(ring, std::move(terms));
}

} // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRingPtr &ring)
{
    detail::TextCursor cur(text);
    if (cur.done())
        cur.fail("empty input");
    auto p = parse_poly(cur, ring);
    if (!cur.done())
        cur.fail("unexpected character '" + std::string(1, cur.peek()) + "'");
    return p;
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRingPtr &ring)
{
    detail::TextCursor cur(text);
    if (cur.done())
        cur.fail("empty input");
    std::vector<Polynomial> out;
    do {
        out.push_back(parse_poly(cur, ring));
    } while (cur.accept(','));
    if (!cur.done())
        cur.fail("unexpected character '" + std::string(1, cur.peek()) + "'");
    return out;
}

} // namespace unialg
