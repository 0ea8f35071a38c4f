#include "unialg/parse.hpp"

#include "text_cursor.hpp"

namespace unialg {

namespace {

Monomial monomial_at(detail::TextCursor &cur, const Ring &ring)
{
    if (cur.at_digit()) {
        auto col = cur.column();
        if (cur.digits() != "1")
            throw ParseError("monomials carry no coefficient", col);
        return Monomial(ring.size());
    }
    if (!cur.at_name())
        cur.fail(cur.done() ? "unexpected end of input" : "expected a monomial");
    return cur.monomial(ring);
}

} // namespace

Monomial parse_monomial(std::string_view text, const Ring &ring)
{
    detail::TextCursor cur(text);
    if (cur.done())
        throw ParseError("empty monomial", 1);
    auto m = monomial_at(cur, ring);
    if (!cur.done())
        cur.fail("unexpected trailing input");
    return m;
}

std::vector<Monomial> parse_monomial_list(std::string_view text, const Ring &ring)
{
    detail::TextCursor cur(text);
    if (cur.done())
        throw ParseError("empty input", 1);
    std::vector<Monomial> out;
    do {
        out.push_back(monomial_at(cur, ring));
    } while (cur.accept(','));
    if (!cur.done())
        cur.fail("expected ',' between generators");
    return out;
}

MonomialIdeal parse_monomial_ideal(std::string_view text, const Ring &ring)
{
    detail::TextCursor cur(text);
    if (!cur.done() && cur.peek() == '0') {
        cur.accept('0');
        if (cur.done())
            return MonomialIdeal::zero(ring);
        cur.fail("'0' must stand alone");
    }
    return MonomialIdeal(ring, parse_monomial_list(text, ring));
}

} // namespace unialg
