#include "unialg/linalg.hpp"

#include <utility>

#include "unialg/error.hpp"

namespace unialg {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw DomainError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    return Field(p);
}

Field Field::parse(const std::string &text)
{
    if (text == "q" || text == "QQ" || text == "Q")
        return rationals();
    if (text.rfind("fp:", 0) == 0) {
        auto digits = text.substr(3);
        if (digits.empty() || digits.size() > 10
            || digits.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("malformed field '" + text + "'");
        return prime(std::stoull(digits));
    }
    throw DomainError("unknown field '" + text + "' (expected q or fp:<p>)");
}

std::string Field::to_string() const
{
    return p_ == 0 ? "QQ" : "F_" + std::to_string(p_);
}

std::size_t rank_rational(IntMatrix m)
{
    const std::size_t rows = m.size();
    if (rows == 0)
        return 0;
    const std::size_t cols = m.front().size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::size_t rank_mod_p(const IntMatrix &src, std::uint64_t p)
{
    const std::size_t rows = src.size();
    if (rows == 0)
        return 0;
    const std::size_t cols = src.front().size();
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
    mpz_class pz(static_cast<unsigned long>(p)), t;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_fdiv_r(t.get_mpz_t(), src[i][j].get_mpz_t(), pz.get_mpz_t());
            m[i][j] = t.get_ui();
        }
    auto inverse = [p](std::uint64_t a) {
        std::uint64_t result = 1, e = p - 2;
        while (e) {
            if (e & 1)
                result = result * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return result;
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[r], m[piv]);
        auto inv = inverse(m[r][c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (!m[i][c])
                continue;
            auto f = m[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
        }
        ++r;
    }
    return r;
}

std::size_t rank(const IntMatrix &m, const Field &field)
{
    return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.characteristic());
}

} // namespace unialg
