#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace unialg {

/// Coefficient field for homology and Groebner computations: QQ (characteristic 0) or F_p.
class Field {
public:
    static Field rationals() { return Field(0); }
    /// Throws DomainError unless p is a prime below 2^31.
    static Field prime(std::uint64_t p);
    /// Parses `q`, `QQ`, or `fp:<p>`.
    static Field parse(const std::string &text);

    std::uint64_t characteristic() const noexcept { return p_; }
    bool is_rational() const noexcept { return p_ == 0; }
    std::string to_string() const;

    friend bool operator==(const Field &, const Field &) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

bool is_prime(std::uint64_t p);

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Rank over QQ by fraction-free (Bareiss) elimination. The argument is consumed.
std::size_t rank_rational(IntMatrix m);

/// Rank over F_p of an integer matrix (entries reduced mod p first).
std::size_t rank_mod_p(const IntMatrix &m, std::uint64_t p);

std::size_t rank(const IntMatrix &m, const Field &field);

} // namespace unialg
