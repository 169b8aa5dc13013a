/**
 * Sparse multivariate polynomials over the rationals, and radial sums
 * sum_j p_j(x) * X^{k_j} with X = x_1 + ... + x_n and integer k_j.
 */

#ifndef FUTAKI_MULTIPOLY_HPP
#define FUTAKI_MULTIPOLY_HPP

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "futaki/exactnum.hpp"

namespace futaki {

namespace detail {
template <typename T>
T scalar_cast(const Rational& q)
{
    if constexpr (std::is_same_v<T, Rational>)
        return q;
    else
        return static_cast<T>(to_double(q));
}
} // namespace detail

class MultiPoly
{
    public:
        using Exponent = std::vector<unsigned>;
        // std::map keeps terms in lexicographic exponent order, which fixes
        // the serialization order.
        using Terms = std::map<Exponent, Rational>;

        static constexpr unsigned max_degree = 64;

        explicit MultiPoly(int n = 0);

        static MultiPoly constant(int n, const Rational& c);
        /// The coordinate function x_i, i in [0, n).
        static MultiPoly variable(int n, int i);
        static MultiPoly monomial(int n, Exponent alpha, const Rational& c);
        /// x_1 + ... + x_n
        static MultiPoly coordinate_sum(int n);

        int dimension() const { return n_; }
        const Terms& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }
        unsigned degree() const;
        Rational coefficient(const Exponent& alpha) const;

        /// Adds c * x^alpha; throws std::length_error past max_degree.
        void add_term(const Exponent& alpha, const Rational& c);

        MultiPoly& operator+=(const MultiPoly& o);
        MultiPoly& operator-=(const MultiPoly& o);
        MultiPoly& operator*=(const Rational& s);
        friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
        friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
        friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
        friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
        friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
        MultiPoly operator-() const { return *this * Rational(-1); }
        friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

        MultiPoly pow(unsigned e) const;

        /// Exact (Rational) or approximate (double) evaluation.
        template <typename Derived>
        typename Derived::Scalar operator()(const Eigen::MatrixBase<Derived>& x) const
        {
            using T = typename Derived::Scalar;
            check_point_size(x.size());
            T sum(0);
            for (const auto& [alpha, c] : terms_) {
                T term = detail::scalar_cast<T>(c);
                for (int i = 0; i < n_; ++i)
                    for (unsigned e = 0; e < alpha[i]; ++e)
                        term *= x[i];
                sum += term;
            }
            return sum;
        }

        /// Composition p(q_1, ..., q_n); all images share one dimension m.
        MultiPoly substitute(std::span<const MultiPoly> images) const;

        /// x -> p(x + t)
        MultiPoly shifted(const VectorQ& t) const;

        /// Human-readable form, e.g. "x1^2 - 3/2*x1*x2 + 1".
        std::string str() const;

    private:
        void check_point_size(Eigen::Index size) const;

        int n_;
        Terms terms_;
};

Rational poly_eval(const MultiPoly& p, const VectorQ& x);

/// sum_j p_j(x) X^{k_j}. Terms are keyed by k, so each k appears once.
class RadialSum
{
    public:
        using Terms = std::map<int, MultiPoly>;

        explicit RadialSum(int n = 0) : n_(n) {}
        explicit RadialSum(const MultiPoly& p, int k = 0);

        /// c * X^k
        static RadialSum power(int n, int k, const Rational& c = Rational(1));

        int dimension() const { return n_; }
        const Terms& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }
        int min_power() const;

        void add_term(const MultiPoly& p, int k);

        RadialSum& operator+=(const RadialSum& o);
        RadialSum& operator*=(const Rational& s);
        friend RadialSum operator+(RadialSum a, const RadialSum& b) { return a += b; }
        friend RadialSum operator-(RadialSum a, const RadialSum& b)
        {
            return a += b * Rational(-1);
        }
        friend RadialSum operator*(RadialSum a, const Rational& s) { return a *= s; }
        friend RadialSum operator*(const RadialSum& a, const RadialSum& b);
        friend RadialSum operator*(const MultiPoly& p, const RadialSum& r)
        {
            return RadialSum(p) * r;
        }
        friend bool operator==(const RadialSum&, const RadialSum&) = default;

        template <typename Derived>
        typename Derived::Scalar operator()(const Eigen::MatrixBase<Derived>& x) const
        {
            using T = typename Derived::Scalar;
            const T X = x.sum();
            T sum(0);
            for (const auto& [k, p] : terms_) {
                if (k < 0 && X == T(0))
                    throw std::domain_error("radial sum with negative power evaluated at X = 0");
                T radial(1);
                const T base = k < 0 ? T(1) / X : X;
                for (int e = 0; e < (k < 0 ? -k : k); ++e)
                    radial *= base;
                sum += p(x) * radial;
            }
            return sum;
        }

        /// Expands into a polynomial; requires every k >= 0.
        MultiPoly to_poly() const;

        std::string str() const;

    private:
        int n_;
        Terms terms_;
};

Rational radial_eval(const RadialSum& r, const VectorQ& x);

/// Parses expressions in x1..xn and X (the coordinate sum) with + - * ^,
/// parentheses and rational literals. Negative powers and division are
/// allowed only for monomials c * X^k, so the result stays a RadialSum.
RadialSum parse_radial(std::string_view text, int n);

/// As parse_radial, but the result must be a polynomial.
MultiPoly parse_poly(std::string_view text, int n);

} // namespace futaki

#endif
