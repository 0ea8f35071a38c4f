#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "unialg/monomial.hpp"
#include "unialg/ring.hpp"

namespace unialg {

/// A monomial ideal stored by its minimal generators in canonical order.
///
/// Construction always minimalizes, so two MonomialIdeal values over the same
/// ring are equal as ideals iff they compare equal. The zero ideal has no
/// generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    /// Minimalizes and sorts `gens`. Throws RingMismatch on a generator of the wrong length.
    MonomialIdeal(Ring ring, std::vector<Monomial> gens);

    static MonomialIdeal zero(Ring ring) { return MonomialIdeal(std::move(ring), {}); }
    static MonomialIdeal unit(Ring ring);
    /// The homogeneous maximal ideal (x_1, ..., x_n).
    static MonomialIdeal maximal(Ring ring);

    const Ring &ring() const noexcept { return ring_; }
    const std::vector<Monomial> &generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }
    bool is_square_free() const noexcept;

    /// True iff some generator divides m.
    bool contains(const Monomial &m) const;
    /// Ideal containment: every generator of `other` lies in this ideal.
    bool contains(const MonomialIdeal &other) const;

    std::string to_string() const;

    friend bool operator==(const MonomialIdeal &a, const MonomialIdeal &b)
    {
        return a.ring_ == b.ring_ && a.gens_ == b.gens_;
    }

private:
    Ring ring_;
    std::vector<Monomial> gens_;
};

/// Removes duplicates and generators divisible by another; returns canonical order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

bool mono_divides(const Monomial &a, const Monomial &b);
MonomialIdeal ideal_from_generators(const Ring &ring, std::vector<Monomial> gens);
bool ideal_contains(const MonomialIdeal &I, const Monomial &m);

MonomialIdeal ideal_sum(const MonomialIdeal &I, const MonomialIdeal &J);
MonomialIdeal ideal_product(const MonomialIdeal &I, const MonomialIdeal &J);
/// I^k by repeated squaring with minimalization after each multiply; I^0 is the unit ideal.
MonomialIdeal ideal_power(const MonomialIdeal &I, std::uint64_t k);
MonomialIdeal ideal_intersect(const MonomialIdeal &I, const MonomialIdeal &J);
/// (I : m). Throws RingMismatch on a monomial of the wrong length.
MonomialIdeal ideal_colon(const MonomialIdeal &I, const Monomial &m);
MonomialIdeal ideal_radical(const MonomialIdeal &I);

/// Variable index sets for ideal_minor.
struct MinorSpec {
    std::vector<std::size_t> zeros;
    std::vector<std::size_t> ones;
};

/// Sets the `zeros` variables to 0 and the `ones` variables to 1. The result
/// lives over the ring with both sets removed. Throws DomainError when the
/// sets overlap, an index is out of range, or nothing would be left.
MonomialIdeal ideal_minor(const MonomialIdeal &I, const MinorSpec &spec);

std::size_t min_generator_count(const MonomialIdeal &I);

} // namespace unialg
