/**
 * Nakai-Moishezon test for the classes delta = (a omega + b gamma) / 2pi on
 * P(O + O(-1)) -> P^1, with
 *     a = (m1 + m2 log 3) / (2 + 3 log 3),  b = (2 m2 - 3 m1) / (2 + 3 log 3).
 * Ampleness needs a + b > 0, 2a - b log 3 > 0 and b^2 log 3 > 4 a^2.
 *
 * log 3 is irrational, so this runs in double precision. Any expression
 * within `marginal_band` of zero is flagged rather than classified.
 */

#ifndef FUTAKI_AMPLENESS_HPP
#define FUTAKI_AMPLENESS_HPP

#include <array>
#include <cstdint>
#include <string>

#include "futaki/exactnum.hpp"

namespace futaki {

inline constexpr double marginal_band = 1e-12;

struct InequalityCheck
{
    std::string expression;
    double value = 0;
    /// value > marginal_band
    bool holds = false;
    /// |value| < marginal_band
    bool marginal = false;
};

struct ConeCheck
{
    Rational m1;
    Rational m2;
    double a = 0;
    double b = 0;
    std::array<InequalityCheck, 3> inequalities;
    bool feasible = false;
};

struct AmpleCoefficients
{
    double a;
    double b;
};

/// Throws std::invalid_argument for (0, 0).
AmpleCoefficients coefficients_from_m(const Rational& m1, const Rational& m2);

ConeCheck nakai_check(double a, double b);
ConeCheck nakai_check_m(const Rational& m1, const Rational& m2);

struct InfeasibilitySummary
{
    int grid_bound = 0;
    std::uint64_t grid_points = 0;
    std::uint64_t random_points = 0;
    std::uint64_t feasible_found = 0;
    std::uint64_t marginal_found = 0;
    bool infeasible = false;
};

/// Every integer (m1, m2) in [-bound, bound]^2 minus the origin, plus
/// `random_pairs` rational pairs from the same box drawn with `seed`.
InfeasibilitySummary infeasibility_scan(int grid_bound, std::uint64_t random_pairs = 10000,
                                        std::uint64_t seed = 42);

} // namespace futaki

#endif
