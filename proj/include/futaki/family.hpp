/**
 * The blow-up of P^n at a point with Kahler class b[H]-[E] and bundle class
 * a[H]-[E]. The Calabi-symmetric J-equation solution gives the radial
 * profile f(X) = A X + B X^{1-n} and the transition map
 *     U(x) = (x / X) f(X) = A x + B x / X^n,   X = x^1 + ... + x^n,
 * carrying the slab P_n(b) onto P_n(a).
 */

#ifndef FUTAKI_FAMILY_HPP
#define FUTAKI_FAMILY_HPP

#include <stdexcept>

#include "futaki/linalg.hpp"
#include "futaki/multipoly.hpp"

namespace futaki {

/// A required hypothesis (ampleness, J-equation solvability) fails.
class HypothesisViolation : public std::domain_error
{
    public:
        using std::domain_error::domain_error;
};

struct FamilySpec
{
    int n = 2;
    Rational a;
    Rational b;
    Rational A;      ///< (a b^{n-1} - 1) / (b^n - 1)
    Rational B;      ///< (b^n - a b^{n-1}) / (b^n - 1)
    Rational lambda; ///< n A
    bool solvable = true;
    bool integral_class = true;
};

/// n (a b^{n-1} - 1) / (b^n - 1), the quantity compared against n - 1.
Rational solvability_value(int n, const Rational& a, const Rational& b);

/// Strict inequality solvability_value > n - 1. Throws HypothesisViolation
/// when a <= 1 or b <= 1.
bool solvable(int n, const Rational& a, const Rational& b);

/// Throws HypothesisViolation unless solvable(n, a, b).
FamilySpec make_spec(int n, const Rational& a, const Rational& b);

/// Same constants without the solvability requirement; `solvable` records
/// the outcome. a > 1 and b > 1 are still enforced.
FamilySpec make_spec_forced(int n, const Rational& a, const Rational& b);

/// Slope from intersection numbers: n [beta][omega]^{n-1} / [omega]^n with
/// [omega]^n = b^n - 1 and [beta][omega]^{n-1} = a b^{n-1} - 1.
Rational slope_lambda_intersection(int n, const Rational& a, const Rational& b);

template <typename Scalar>
Scalar profile(const FamilySpec& s, const Scalar& X)
{
    const Scalar A = detail::scalar_cast<Scalar>(s.A);
    const Scalar B = detail::scalar_cast<Scalar>(s.B);
    Scalar inv = Scalar(1);
    for (int k = 1; k < s.n; ++k)
        inv /= X;
    return A * X + B * inv;
}

/// f'(X) = A - (n-1) B X^{-n}
template <typename Scalar>
Scalar profile_derivative(const FamilySpec& s, const Scalar& X)
{
    const Scalar A = detail::scalar_cast<Scalar>(s.A);
    const Scalar B = detail::scalar_cast<Scalar>(s.B);
    Scalar inv = Scalar(1);
    for (int k = 0; k < s.n; ++k)
        inv /= X;
    return A - Scalar(s.n - 1) * B * inv;
}

namespace detail {
template <typename Derived>
typename Derived::Scalar checked_sum(const FamilySpec& s, const Eigen::MatrixBase<Derived>& x)
{
    using Scalar = typename Derived::Scalar;
    if (x.size() != s.n)
        throw std::invalid_argument("point dimension does not match the family dimension");
    const Scalar X = x.sum();
    if (X == Scalar(0))
        throw std::domain_error("transition map undefined at X = 0");
    return X;
}
} // namespace detail

template <typename Derived>
Vector<typename Derived::Scalar> transition_map(const FamilySpec& s,
                                                const Eigen::MatrixBase<Derived>& x)
{
    using Scalar = typename Derived::Scalar;
    const Scalar X = detail::checked_sum(s, x);
    const Scalar scale = profile<Scalar>(s, X) / X;
    return x * scale;
}

/// DU_ij = A d_ij + B (d_ij X^{-n} - n x^i X^{-n-1}), a rank-one update of
/// a multiple of the identity.
template <typename Derived>
Matrix<typename Derived::Scalar> jacobian(const FamilySpec& s, const Eigen::MatrixBase<Derived>& x)
{
    using Scalar = typename Derived::Scalar;
    const Scalar X = detail::checked_sum(s, x);
    const Scalar A = detail::scalar_cast<Scalar>(s.A);
    const Scalar B = detail::scalar_cast<Scalar>(s.B);
    Scalar inv_n = Scalar(1);
    for (int k = 0; k < s.n; ++k)
        inv_n /= X;
    const Scalar diag = A + B * inv_n;
    const Scalar rank_one = Scalar(s.n) * B * inv_n / X;
    Matrix<Scalar> du = Matrix<Scalar>::Zero(s.n, s.n);
    for (int i = 0; i < s.n; ++i) {
        for (int j = 0; j < s.n; ++j)
            du(i, j) = -rank_one * x[i];
        du(i, i) += diag;
    }
    return du;
}

/// Sum of the 2x2 principal minors of the Jacobian, from the matrix.
template <typename Derived>
typename Derived::Scalar minor_sum(const FamilySpec& s, const Eigen::MatrixBase<Derived>& x)
{
    return principal_minor_sum(jacobian(s, x));
}

/// Closed form C(n,2) (A^2 - B^2 X^{-2n}). The eigenvalues of the Jacobian
/// are A + B X^{-n} (n-1 times) and A - (n-1) B X^{-n}; the cross terms
/// cancel in e_2.
RadialSum minor_sum_radial(const FamilySpec& s);

/// det DU = (A + B X^{-n})^{n-1} (A - (n-1) B X^{-n})
template <typename Derived>
typename Derived::Scalar jacobian_determinant_factored(const FamilySpec& s,
                                                       const Eigen::MatrixBase<Derived>& x)
{
    using Scalar = typename Derived::Scalar;
    const Scalar X = detail::checked_sum(s, x);
    const Scalar A = detail::scalar_cast<Scalar>(s.A);
    const Scalar B = detail::scalar_cast<Scalar>(s.B);
    Scalar inv_n = Scalar(1);
    for (int k = 0; k < s.n; ++k)
        inv_n /= X;
    Scalar det = A - Scalar(s.n - 1) * B * inv_n;
    for (int k = 0; k < s.n - 1; ++k)
        det *= A + B * inv_n;
    return det;
}

/// Classes h[H] - e[E] with h > e > 0 rescale to e * ((h/e)[H] - [E]).
struct ScaledClass
{
    Rational h;
    Rational e;
    Rational reduced() const { return h / e; }
    Rational scale() const { return e; }
};

ScaledClass make_scaled_class(const Rational& h, const Rational& e);

/// Scaling [omega] by t multiplies the boundary-to-bulk ratio by t, and
/// scaling the bundle class by s multiplies the bulk term by s^2, so the
/// required alpha_1/alpha_0 transforms by t / s^2.
Rational ratio_scale_factor(const ScaledClass& bundle, const ScaledClass& kahler);

} // namespace futaki

#endif
