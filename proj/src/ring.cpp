#include "unialg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "unialg/error.hpp"

namespace unialg {

namespace {

bool valid_name(const std::string &s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

} // namespace

Ring::Ring(std::vector<std::string> names)
{
    if (names.empty())
        throw DomainError("ring must have at least one variable");
    std::set<std::string> seen;
    for (const auto &n : names) {
        if (!valid_name(n))
            throw DomainError("invalid variable name '" + n + "'");
        if (!seen.insert(n).second)
            throw DomainError("duplicate variable name '" + n + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Ring Ring::parse(std::string_view text)
{
    std::vector<std::string> names;
    std::string cur;
    auto flush = [&] {
        names.push_back(cur);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            cur.push_back(c);
    }
    flush();
    return Ring(std::move(names));
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == name)
            return i;
    return std::nullopt;
}

Ring Ring::without(const std::vector<bool> &drop) const
{
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < size(); ++i)
        if (i >= drop.size() || !drop[i])
            kept.push_back(name(i));
    if (kept.empty())
        throw DomainError("cannot delete every variable of the ring");
    return Ring(std::move(kept));
}

Ring Ring::with_variable(const std::string &name) const
{
    auto names = *names_;
    names.push_back(name);
    return Ring(std::move(names));
}

std::string Ring::fresh_name(const std::string &stem) const
{
    if (!index_of(stem))
        return stem;
    for (int i = 0;; ++i) {
        auto candidate = stem + "_" + std::to_string(i);
        if (!index_of(candidate))
            return candidate;
    }
}

std::string Ring::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i)
        os << (i ? "," : "") << name(i);
    return os.str();
}

void require_same_ring(const Ring &a, const Ring &b, const char *op)
{
    if (!(a == b))
        throw RingMismatch(std::string(op) + ": operands live over different rings (" + a.to_string()
                           + " vs " + b.to_string() + ")");
}

} // namespace unialg
