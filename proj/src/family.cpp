#include "futaki/family.hpp"

namespace futaki {

namespace {

void require_classes(int n, const Rational& a, const Rational& b)
{
    if (n < 2)
        throw std::invalid_argument("blow-up family needs n >= 2");
    if (b <= 1)
        throw HypothesisViolation("b must exceed 1 for b[H]-[E] to be a Kahler class (got b = " +
                                  to_string(b) + ")");
    if (a <= 1)
        throw HypothesisViolation("a must exceed 1 for a[H]-[E] to be ample (got a = " +
                                  to_string(a) + ")");
}

FamilySpec fill(int n, const Rational& a, const Rational& b)
{
    FamilySpec s;
    s.n = n;
    s.a = a;
    s.b = b;
    const Rational bn = pow(b, n);
    const Rational bn1 = pow(b, n - 1);
    s.A = (a * bn1 - 1) / (bn - 1);
    s.B = (bn - a * bn1) / (bn - 1);
    s.lambda = Rational(n) * s.A;
    s.solvable = solvability_value(n, a, b) > n - 1;
    s.integral_class = denominator(a) == 1 && denominator(b) == 1;
    return s;
}

} // namespace

Rational solvability_value(int n, const Rational& a, const Rational& b)
{
    return slope_lambda_intersection(n, a, b);
}

bool solvable(int n, const Rational& a, const Rational& b)
{
    require_classes(n, a, b);
    return solvability_value(n, a, b) > n - 1;
}

FamilySpec make_spec(int n, const Rational& a, const Rational& b)
{
    require_classes(n, a, b);
    FamilySpec s = fill(n, a, b);
    if (!s.solvable)
        throw HypothesisViolation(
            "J-equation has no Calabi-symmetric solution; character formula inapplicable: "
            "n(ab^{n-1}-1)/(b^n-1) = " + to_string(solvability_value(n, a, b)) +
            " is not > n-1 = " + std::to_string(n - 1));
    return s;
}

FamilySpec make_spec_forced(int n, const Rational& a, const Rational& b)
{
    require_classes(n, a, b);
    return fill(n, a, b);
}

Rational slope_lambda_intersection(int n, const Rational& a, const Rational& b)
{
    if (b <= 1)
        throw HypothesisViolation("b must exceed 1");
    const Rational volume = pow(b, n) - 1;
    const Rational mixed = a * pow(b, n - 1) - 1;
    return Rational(n) * mixed / volume;
}

RadialSum minor_sum_radial(const FamilySpec& s)
{
    const Rational pairs = binomial(static_cast<unsigned>(s.n), 2);
    RadialSum r = RadialSum::power(s.n, 0, pairs * s.A * s.A);
    r += RadialSum::power(s.n, -2 * s.n, -pairs * s.B * s.B);
    return r;
}

ScaledClass make_scaled_class(const Rational& h, const Rational& e)
{
    if (!(e > 0) || !(h > e))
        throw HypothesisViolation("two-parameter class h[H]-e[E] needs h > e > 0");
    return {h, e};
}

Rational ratio_scale_factor(const ScaledClass& bundle, const ScaledClass& kahler)
{
    return kahler.scale() / (bundle.scale() * bundle.scale());
}

} // namespace futaki
