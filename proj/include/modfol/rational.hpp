#pragma once

#include <gmpxx.h>

#include <string>
#include <type_traits>
#include <string_view>

namespace modfol {

// mpq_class keeps values canonical (lowest terms, positive denominator) after
// every arithmetic operation; construction from a string goes through
// parse_rational which canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& r);

Rational rational_pow(const Rational& base, long exponent);

template <class Real>
Real to_real(const Rational& r)
{
    if constexpr (std::is_same_v<Real, double>) {
        return r.get_d();
    } else {
        return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
    }
}

} // namespace modfol
