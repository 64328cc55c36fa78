#include "bettikit/rational.hpp"

#include "bettikit/errors.hpp"

#include <cctype>

namespace bettikit {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw ParseError(0, "malformed rational '" + std::string(text) + "'");

    BigInt n(std::string(num), 10);
    BigInt d(1);
    if (slash != std::string_view::npos) {
        d = BigInt(std::string(den), 10);
        if (d == 0)
            throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
    }
    if (negative)
        n = -n;
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const BigInt& z) { return z.get_str(10); }

BigInt factorial(unsigned n)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace bettikit
