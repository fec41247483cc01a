#include "medgraph/rational.hpp"

#include "medgraph/error.hpp"

#include <cctype>

namespace medgraph {

namespace {

bool is_integer_text(std::string_view s)
{
    if (!s.empty() && s.front() == '-')
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-')
        throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0)
        throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational fraction(long num, long den)
{
    if (den == 0)
        throw Error(ErrorKind::ParseError, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

} // namespace medgraph
