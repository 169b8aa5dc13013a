/**
 * Exact scalar layer: arbitrary-precision rationals, the log-linear value
 * type q0 + q1 log(b), and the Eigen aliases used by the rest of the library.
 */

#ifndef FUTAKI_EXACTNUM_HPP
#define FUTAKI_EXACTNUM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace futaki {

/// Reduced fraction with positive denominator. Expression templates are off
/// so that `auto` and Eigen coefficient expressions stay plain values.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorQ = Vector<Rational>;
using MatrixQ = Matrix<Rational>;
using IntVector = Vector<std::int64_t>;

/// Parses "p/q" or an integer literal. Decimal and exponent forms are
/// rejected so that class parameters cannot silently lose exactness.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// q^e for any integer e; throws std::domain_error on 0^e with e < 0.
Rational pow(const Rational& q, int e);

Integer factorial(unsigned k);

Rational binomial(unsigned n, unsigned k);

/// Lexicographic comparison of two rational points of equal length.
bool lex_less(const VectorQ& lhs, const VectorQ& rhs);

/// Value q0 + q1 * log(b) for a base b fixed by context. log(b) is treated
/// as transcendental, so equality is componentwise.
struct LogLinear
{
    Rational q0{0};
    Rational q1{0};

    bool is_rational() const { return q1 == 0; }

    LogLinear& operator+=(const LogLinear& o)
    {
        q0 += o.q0;
        q1 += o.q1;
        return *this;
    }
    LogLinear& operator*=(const Rational& s)
    {
        q0 *= s;
        q1 *= s;
        return *this;
    }
    friend LogLinear operator+(LogLinear a, const LogLinear& b) { return a += b; }
    friend LogLinear operator-(const LogLinear& a, const LogLinear& b)
    {
        return {a.q0 - b.q0, a.q1 - b.q1};
    }
    friend LogLinear operator*(LogLinear a, const Rational& s) { return a *= s; }
    friend LogLinear operator*(const Rational& s, LogLinear a) { return a *= s; }
    friend bool operator==(const LogLinear&, const LogLinear&) = default;

    /// Float value given the base; only used for display.
    double approximate(const Rational& base) const;
};

} // namespace futaki

#endif
