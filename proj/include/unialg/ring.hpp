#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unialg {

/// Ordered list of variable names for a polynomial ring k[x_1..x_n].
///
/// Cheap to copy: the name list is shared and never mutated after construction.
class Ring {
public:
    /// Throws DomainError on an empty list, empty names, or duplicates.
    explicit Ring(std::vector<std::string> names);

    /// Parses `x,y,z` (whitespace tolerated).
    static Ring parse(std::string_view text);

    std::size_t size() const noexcept { return names_->size(); }
    const std::vector<std::string> &names() const noexcept { return *names_; }
    const std::string &name(std::size_t i) const { return (*names_)[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Ring obtained by deleting the variables whose indices have `drop[i] == true`.
    /// Throws DomainError when every variable would be deleted.
    Ring without(const std::vector<bool> &drop) const;

    /// Ring extended with one extra variable appended at the end.
    Ring with_variable(const std::string &name) const;

    /// A fresh name not already used by the ring, built from `stem`.
    std::string fresh_name(const std::string &stem) const;

    std::string to_string() const;

    friend bool operator==(const Ring &a, const Ring &b)
    {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

/// Throws RingMismatch when the two rings differ.
void require_same_ring(const Ring &a, const Ring &b, const char *op);

} // namespace unialg
