#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace plgb {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0 after normalisation). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

inline Rational make_rational(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace plgb
