#include "futaki/exactnum.hpp"

#include <cmath>
#include <regex>

namespace futaki {

Rational parse_rational(std::string_view text)
{
    static const std::regex pattern(R"(^\s*([+-]?[0-9]+)(?:\s*/\s*([0-9]+))?\s*$)");
    std::cmatch m;
    if (!std::regex_match(text.begin(), text.end(), m, pattern))
        throw std::invalid_argument("not an exact rational (expected p/q or integer): '" +
                                    std::string(text) + "'");
    Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    Integer den(1);
    if (m[2].matched) {
        den = Integer(m[2].str());
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

std::string to_string(const Rational& q)
{
    return q.str();
}

double to_double(const Rational& q)
{
    return q.convert_to<double>();
}

Rational pow(const Rational& q, int e)
{
    if (e < 0) {
        if (q == 0)
            throw std::domain_error("zero raised to a negative power");
        return Rational(1) / pow(q, -e);
    }
    Rational result(1);
    Rational base = q;
    for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
        if (k & 1u)
            result *= base;
        if (k > 1)
            base *= base;
    }
    return result;
}

Integer factorial(unsigned k)
{
    Integer r(1);
    for (unsigned i = 2; i <= k; ++i)
        r *= i;
    return r;
}

Rational binomial(unsigned n, unsigned k)
{
    if (k > n)
        return Rational(0);
    return Rational(factorial(n), factorial(k) * factorial(n - k));
}

bool lex_less(const VectorQ& lhs, const VectorQ& rhs)
{
    for (Eigen::Index i = 0; i < lhs.size() && i < rhs.size(); ++i) {
        if (lhs[i] < rhs[i])
            return true;
        if (rhs[i] < lhs[i])
            return false;
    }
    return lhs.size() < rhs.size();
}

double LogLinear::approximate(const Rational& base) const
{
    double v = to_double(q0);
    if (q1 != 0)
        v += to_double(q1) * std::log(to_double(base));
    return v;
}

} // namespace futaki
