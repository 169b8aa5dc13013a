#include "futaki/ampleness.hpp"

#include <cmath>
#include <random>

namespace futaki {

namespace {

const double log3 = std::log(3.0);

InequalityCheck classify(std::string expression, double value)
{
    InequalityCheck c;
    c.expression = std::move(expression);
    c.value = value;
    c.marginal = std::abs(value) < marginal_band;
    c.holds = value > marginal_band;
    return c;
}

} // namespace

AmpleCoefficients coefficients_from_m(const Rational& m1, const Rational& m2)
{
    if (m1 == 0 && m2 == 0)
        throw std::invalid_argument("(m1, m2) must not both be zero");
    const double x = to_double(m1);
    const double y = to_double(m2);
    const double d = 2 + 3 * log3;
    return {(x + y * log3) / d, (2 * y - 3 * x) / d};
}

ConeCheck nakai_check(double a, double b)
{
    ConeCheck c;
    c.a = a;
    c.b = b;
    c.inequalities = {classify("a + b > 0", a + b),
                      classify("2a - b log 3 > 0", 2 * a - b * log3),
                      classify("b^2 log 3 - 4a^2 > 0", b * b * log3 - 4 * a * a)};
    c.feasible = c.inequalities[0].holds && c.inequalities[1].holds && c.inequalities[2].holds;
    return c;
}

ConeCheck nakai_check_m(const Rational& m1, const Rational& m2)
{
    const auto [a, b] = coefficients_from_m(m1, m2);
    ConeCheck c = nakai_check(a, b);
    c.m1 = m1;
    c.m2 = m2;
    return c;
}

InfeasibilitySummary infeasibility_scan(int grid_bound, std::uint64_t random_pairs,
                                        std::uint64_t seed)
{
    if (grid_bound < 1)
        throw std::invalid_argument("grid bound must be at least 1");
    InfeasibilitySummary s;
    s.grid_bound = grid_bound;
    auto record = [&](const Rational& m1, const Rational& m2) {
        const ConeCheck c = nakai_check_m(m1, m2);
        if (c.feasible)
            ++s.feasible_found;
        for (const auto& q : c.inequalities)
            if (q.marginal) {
                ++s.marginal_found;
                break;
            }
    };
    for (int m1 = -grid_bound; m1 <= grid_bound; ++m1) {
        for (int m2 = -grid_bound; m2 <= grid_bound; ++m2) {
            if (m1 == 0 && m2 == 0)
                continue;
            record(Rational(m1), Rational(m2));
            ++s.grid_points;
        }
    }
    // raw engine output keeps the stream identical across standard libraries
    std::mt19937_64 rng(seed);
    auto draw = [&]() {
        const long long den = 1 + static_cast<long long>(rng() % 1000);
        const long long reach = grid_bound * den;
        const long long num = static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * reach + 1)) - reach;
        return Rational(num, den);
    };
    while (s.random_points < random_pairs) {
        const Rational m1 = draw();
        const Rational m2 = draw();
        if (m1 == 0 && m2 == 0)
            continue;
        record(m1, m2);
        ++s.random_points;
    }
    s.infeasible = s.feasible_found == 0;
    return s;
}

} // namespace futaki
