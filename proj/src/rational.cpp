#include "modfol/rational.hpp"

#include "modfol/error.hpp"

#include <cctype>

namespace modfol {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto valid = !s.empty();
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < s.size() && valid; ++i) {
        const char c = s[i];
        if (c == '/') {
            ++slashes;
            valid = slashes == 1 && i > 0 && i + 1 < s.size();
        } else if (c == '-' || c == '+') {
            valid = i == 0 || s[i - 1] == '/';
        } else {
            valid = std::isdigit(static_cast<unsigned char>(c)) != 0;
        }
    }
    if (!valid) {
        throw ParseError(0, "not a rational number: '" + s + "'");
    }
    if (!s.empty() && s[0] == '+') {
        s.erase(0, 1);
    }
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
        throw ParseError(0, "not a rational number: '" + s + "'");
    }
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw std::domain_error("zero to a negative power");
        }
        return rational_pow(Rational(1) / base, -exponent);
    }
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace modfol
