#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "unialg/error.hpp"
#include "unialg/monomial.hpp"
#include "unialg/ring.hpp"

namespace unialg::detail {

// Character cursor shared by the monomial and polynomial parsers.
class TextCursor {
public:
    TextCursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool done()
    {
        skip_space();
        return pos_ >= text_.size();
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    std::size_t column() const { return base_ + pos_ + 1; }

    [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, column()); }

    bool at_digit()
    {
        return std::isdigit(static_cast<unsigned char>(peek()));
    }

    bool at_name()
    {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string digits()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint64_t small_number()
    {
        auto s = digits();
        if (s.size() > 18)
            fail("number too large");
        return std::stoull(s);
    }

    std::string name()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_)
            fail("expected a variable name");
        return std::string(text_.substr(start, pos_ - start));
    }

    // factor ('*' factor)*, where a factor is `name` or `name^k`. Stops before a
    // '*' that is not followed by a variable name.
    Monomial monomial(const Ring &ring)
    {
        std::vector<Exponent> e(ring.size(), 0);
        do {
            auto col = column();
            auto v = name();
            auto idx = ring.index_of(v);
            if (!idx)
                throw ParseError("unknown variable '" + v + "'", col);
            std::uint64_t k = 1;
            if (accept('^')) {
                if (!at_digit())
                    fail("malformed exponent");
                k = small_number();
            }
            std::uint64_t total = e[*idx] + k;
            if (total > exponent_cap())
                throw ParseError("exponent exceeds cap " + std::to_string(exponent_cap()), col);
            e[*idx] = static_cast<Exponent>(total);
        } while (star_then_name());
        return Monomial(std::move(e));
    }

private:
    bool star_then_name()
    {
        auto save = pos_;
        if (accept('*') && at_name())
            return true;
        pos_ = save;
        return false;
    }

    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

} // namespace unialg::detail
