#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "unialg/ring.hpp"

namespace unialg {

using Exponent = std::uint32_t;

/// Default per-coordinate exponent cap. Arithmetic that would exceed it throws CapExceeded.
inline constexpr Exponent kDefaultExponentCap = 1'000'000;

/// Current cap (process-wide, atomic). Configurable through the CLI caps file.
Exponent exponent_cap() noexcept;
void set_exponent_cap(Exponent cap) noexcept;

/// Exponent vector x_1^{a_1}...x_n^{a_n}. The ring is implied by the length;
/// binary operations on monomials of different length throw RingMismatch.
class Monomial {
public:
    Monomial() = default;

    /// The monomial 1 in n variables.
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<Exponent> exps);
    Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

    /// x_i in n variables.
    static Monomial variable(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept;
    bool is_one() const noexcept;
    bool is_square_free() const noexcept;

    /// Bitmask of variables with positive exponent (n <= 64).
    std::uint64_t support_mask() const;
    /// The square-free monomial with the same support.
    Monomial support() const;

    Monomial operator*(const Monomial &o) const;
    /// this^k, guarded by the exponent cap.
    Monomial pow(std::uint64_t k) const;
    /// Exact quotient; throws DomainError when `o` does not divide this.
    Monomial operator/(const Monomial &o) const;

    friend bool operator==(const Monomial &, const Monomial &) = default;

    std::string to_string(const Ring &ring) const;

private:
    std::vector<Exponent> exps_;
};

bool divides(const Monomial &a, const Monomial &b);
Monomial lcm(const Monomial &a, const Monomial &b);
Monomial gcd(const Monomial &a, const Monomial &b);
bool coprime(const Monomial &a, const Monomial &b);

/// Canonical generator order: degree ascending, then exponent vectors
/// lexicographically descending (x^2 < xy < y^2 with x first).
std::strong_ordering canonical_compare(const Monomial &a, const Monomial &b);

struct CanonicalLess {
    bool operator()(const Monomial &a, const Monomial &b) const
    {
        return canonical_compare(a, b) < 0;
    }
};

/// Every monomial of total degree `d` in `n` variables, in canonical order.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint64_t d);

} // namespace unialg
