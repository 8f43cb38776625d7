#include "plgb/rational.hpp"

#include "plgb/error.hpp"

#include <cctype>

namespace plgb {

Rational parse_rational(std::string_view text)
{
    std::size_t i = 0;
    auto digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            out += text[i++];
        if (i == start)
            throw ParseError("expected digits in rational '" + std::string(text) + "'", i);
    };
    std::string num;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        if (text[i] == '-')
            num += '-';
        ++i;
    }
    digits(num);
    std::string den = "1";
    if (i < text.size() && text[i] == '/') {
        ++i;
        den.clear();
        digits(den);
    }
    if (i != text.size())
        throw ParseError("trailing characters in rational '" + std::string(text) + "'", i);
    mpz_class d(den);
    if (d == 0)
        throw ParseError("zero denominator in rational '" + std::string(text) + "'", i);
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value)
{
    return value.get_str();
}

} // namespace plgb
