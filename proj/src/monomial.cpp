#include "unialg/monomial.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include "unialg/error.hpp"

namespace unialg {

namespace {

std::atomic<Exponent> g_exponent_cap{kDefaultExponentCap};

void check_cap(std::uint64_t e)
{
    if (e > exponent_cap())
        throw CapExceeded("exponent " + std::to_string(e) + " exceeds cap "
                          + std::to_string(exponent_cap()));
}

void same_length(const Monomial &a, const Monomial &b)
{
    if (a.size() != b.size())
        throw RingMismatch("monomials over rings of different size (" + std::to_string(a.size())
                           + " vs " + std::to_string(b.size()) + ")");
}

} // namespace

Exponent exponent_cap() noexcept { return g_exponent_cap.load(std::memory_order_relaxed); }
void set_exponent_cap(Exponent cap) noexcept { g_exponent_cap.store(cap, std::memory_order_relaxed); }

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps))
{
    for (auto e : exps_)
        check_cap(e);
}

Monomial Monomial::variable(std::size_t n, std::size_t i)
{
    Monomial m(n);
    m.exps_.at(i) = 1;
    return m;
}

std::uint64_t Monomial::degree() const noexcept
{
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept
{
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_square_free() const noexcept
{
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::uint64_t Monomial::support_mask() const
{
    if (exps_.size() > 64)
        throw DomainError("support masks need at most 64 variables");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i])
            mask |= std::uint64_t{1} << i;
    return mask;
}

Monomial Monomial::support() const
{
    Monomial m(size());
    for (std::size_t i = 0; i < size(); ++i)
        m.exps_[i] = exps_[i] ? 1 : 0;
    return m;
}

Monomial Monomial::operator*(const Monomial &o) const
{
    same_length(*this, o);
    Monomial r(size());
    for (std::size_t i = 0; i < size(); ++i) {
        std::uint64_t e = std::uint64_t{exps_[i]} + o.exps_[i];
        check_cap(e);
        r.exps_[i] = static_cast<Exponent>(e);
    }
    return r;
}

Monomial Monomial::pow(std::uint64_t k) const
{
    Monomial r(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (exps_[i] == 0)
            continue;
        if (k > exponent_cap() / exps_[i])
            throw CapExceeded("power exceeds exponent cap " + std::to_string(exponent_cap()));
        r.exps_[i] = static_cast<Exponent>(exps_[i] * k);
    }
    return r;
}

Monomial Monomial::operator/(const Monomial &o) const
{
    same_length(*this, o);
    Monomial r(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (o.exps_[i] > exps_[i])
            throw DomainError("monomial division is not exact");
        r.exps_[i] = exps_[i] - o.exps_[i];
    }
    return r;
}

std::string Monomial::to_string(const Ring &ring) const
{
    if (ring.size() != size())
        throw RingMismatch("monomial length does not match ring " + ring.to_string());
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < size(); ++i) {
        if (!exps_[i])
            continue;
        if (!first)
            os << '*';
        first = false;
        os << ring.name(i);
        if (exps_[i] > 1)
            os << '^' << exps_[i];
    }
    if (first)
        os << '1';
    return os.str();
}

bool divides(const Monomial &a, const Monomial &b)
{
    same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Monomial lcm(const Monomial &a, const Monomial &b)
{
    same_length(a, b);
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial &a, const Monomial &b)
{
    same_length(a, b);
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

bool coprime(const Monomial &a, const Monomial &b)
{
    same_length(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i])
            return false;
    return true;
}

std::strong_ordering canonical_compare(const Monomial &a, const Monomial &b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        if (a[i] != b[i])
            return b[i] <=> a[i];
    return a.size() <=> b.size();
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint64_t d)
{
    std::vector<Monomial> out;
    std::vector<Exponent> e(n, 0);
    // Lex-descending walk over compositions of d into n parts.
    auto rec = [&](auto &&self, std::size_t i, std::uint64_t left) -> void {
        if (i + 1 == n) {
            e[i] = static_cast<Exponent>(left);
            out.emplace_back(e);
            return;
        }
        for (std::uint64_t k = left + 1; k-- > 0;) {
            e[i] = static_cast<Exponent>(k);
            self(self, i + 1, left - k);
        }
        e[i] = 0;
    };
    if (n > 0)
        rec(rec, 0, d);
    return out;
}

} // namespace unialg
