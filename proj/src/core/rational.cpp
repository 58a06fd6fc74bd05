#include "aixi/core/rational.hpp"

#include <stdexcept>

namespace aixi {

Rational ratio(long num, long den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational pow2_neg(unsigned bits)
{
    mpz_class den = 1;
    den <<= bits;
    return Rational(mpz_class(1), den);
}

Rational parse_rational(std::string_view text)
{
    if (text.empty()) throw std::invalid_argument("empty rational");
    std::string s(text);
    try {
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            Rational q(s, 10);
            if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
            q.canonicalize();
            return q;
        }
        // decimal: "[-]int.frac" taken exactly
        bool neg = s[0] == '-';
        std::string digits = s.substr(neg ? 1 : 0);
        dot = digits.find('.');
        std::string int_part = digits.substr(0, dot);
        std::string frac_part = digits.substr(dot + 1);
        if (int_part.empty()) int_part = "0";
        if (frac_part.empty() || frac_part.find_first_not_of("0123456789") != std::string::npos
            || int_part.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad decimal");
        mpz_class num(int_part + frac_part, 10);
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
        Rational q(num, den);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

std::string to_string(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

double to_double(const Rational& q)
{
    return q.get_d();
}

mpz_class floor(const Rational& q)
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpz_class ceil(const Rational& q)
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

}  // namespace aixi
