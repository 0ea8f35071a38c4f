#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "unialg/linalg.hpp"
#include "unialg/monomial.hpp"
#include "unialg/ring.hpp"

namespace unialg {

class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex };

    /// `significance[k]` is the variable compared k-th; identity when empty.
    MonomialOrder(Kind kind, std::vector<std::size_t> significance = {});
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
    /// `lex` or `grevlex`.
    static MonomialOrder parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    const std::vector<std::size_t> &significance() const noexcept { return sig_; }
    /// Negative, zero or positive as a < b, a == b, a > b.
    int compare(const Monomial &a, const Monomial &b) const;
    std::string to_string() const;

    friend bool operator==(const MonomialOrder &, const MonomialOrder &) = default;

private:
    std::size_t var(std::size_t k) const { return sig_.empty() ? k : sig_[k]; }
    Kind kind_;
    std::vector<std::size_t> sig_;
};

/// Variables, coefficient field and term order shared by a family of polynomials.
struct PolyRing {
    Ring ring;
    Field field;
    MonomialOrder order;

    /// Brings a rational into canonical form for the field (residue in [0, p) for F_p).
    mpq_class reduce(const mpq_class &c) const;
    /// Throws DomainError for zero.
    mpq_class inverse(const mpq_class &c) const;

    friend bool operator==(const PolyRing &, const PolyRing &) = default;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(Ring ring, Field field = Field::rationals(),
                           MonomialOrder order = MonomialOrder::grevlex());

class Polynomial {
public:
    using Term = std::pair<Monomial, mpq_class>;

    explicit Polynomial(PolyRingPtr ring);
    /// Terms in any order; like terms are combined and zeros dropped.
    Polynomial(PolyRingPtr ring, std::vector<Term> terms);

    static Polynomial constant(PolyRingPtr ring, const mpq_class &c);
    static Polynomial variable(PolyRingPtr ring, std::size_t i);
    static Polynomial monomial(PolyRingPtr ring, Monomial m, const mpq_class &c = 1);

    const PolyRingPtr &ring_ptr() const noexcept { return ring_; }
    const PolyRing &ring() const noexcept { return *ring_; }
    /// Sorted by the ring's order, leading term first.
    const std::vector<Term> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Require a nonzero polynomial.
    const Monomial &leading_monomial() const;
    const mpq_class &leading_coefficient() const;
    std::uint64_t total_degree() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    Polynomial operator+(const Polynomial &o) const;
    Polynomial operator-(const Polynomial &o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial &o) const;
    Polynomial scaled(const mpq_class &c) const;
    Polynomial times_term(const Monomial &m, const mpq_class &c) const;
    Polynomial pow(std::uint64_t k) const;
    /// Divides by the leading coefficient; zero stays zero.
    Polynomial monic() const;
    Polynomial derivative(std::size_t i) const;

    /// `3*x^2*y - 1/2*z + 1`; "0" for the zero polynomial.
    std::string to_string() const;

    friend bool operator==(const Polynomial &a, const Polynomial &b);

private:
    PolyRingPtr ring_;
    std::vector<Term> terms_;
};

void require_same_poly_ring(const PolyRing &a, const PolyRing &b, const char *op);

// Polynomial grammar:
//   poly := ['+'|'-'] term (('+'|'-') term)*
//   term := coeff ['*' monomial] | monomial
//   coeff := digits ['/' digits]
// Lists are comma-separated.
Polynomial parse_polynomial(std::string_view text, const PolyRingPtr &ring);
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRingPtr &ring);

} // namespace unialg
