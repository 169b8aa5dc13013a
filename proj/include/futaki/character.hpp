/**
 * The alpha-Futaki character on the torus generators xi_i of a toric
 * manifold whose Kahler class and bundle class are related by a J-equation
 * solution with transition map U:
 *
 *   (2 pi)^{-n} <F, xi_i> = (alpha_0 / 2) int_{dP} (x_i + c_i) dsigma
 *                         +  alpha_1     int_P  (x_i + c_i) e_2(DU) dmu
 *
 * where e_2 is the sum of 2x2 principal minors and c_i centres x_i.
 * Everything here is evaluated on the blow-up family, where e_2 is a radial
 * sum and both terms are rational.
 */

#ifndef FUTAKI_CHARACTER_HPP
#define FUTAKI_CHARACTER_HPP

#include <optional>
#include <string>
#include <vector>

#include "futaki/family.hpp"
#include "futaki/integrate.hpp"

namespace futaki {

enum class Verdict
{
    VanishesAtRatio,
    /// alpha_1/alpha_0 > 0 while every vanishing ratio is negative
    ObstructedForPositiveAlpha,
    /// character nonzero at the given couplings, outside the case above
    Obstructed,
    /// the bulk term vanishes but the boundary term does not
    NoVanishingPossible,
};

std::string to_string(Verdict v);

/// Classical toric Futaki functional int_{dP} (x_i + c_i) dsigma.
Rational classical_futaki_axis(const DelzantPolytope& p, int axis);

/// int_P (x_i + c_i) e_2(DU) dmu on P_n(b). The log b coefficient is kept
/// so that callers can check it vanishes.
LogLinear bulk_term(const FamilySpec& spec, int axis);

/// (alpha_0 / 2) F_boundary + alpha_1 F_bulk. Throws std::logic_error if the
/// bulk term carries a log b component.
Rational alpha_futaki_axis(const FamilySpec& spec, int axis, const Rational& alpha0,
                           const Rational& alpha1);

/// Axis terms disagree on a polytope where they must coincide.
class AxisDisagreement : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/// alpha_1/alpha_0 = -(1/2) F_boundary / F_bulk, or nullopt when the bulk
/// term is zero. Throws AxisDisagreement if the axes give different ratios.
std::optional<Rational> required_ratio(const FamilySpec& spec);

/// Throws std::invalid_argument when alpha0 == 0.
Verdict verdict(const FamilySpec& spec, const Rational& alpha0, const Rational& alpha1);

/// A closed form that disagrees with the exact pipeline.
struct Discrepancy
{
    std::string formula;
    Rational published;
    Rational computed;
    /// published / computed, when computed != 0
    std::optional<Rational> factor;
};

struct CharacterReport
{
    FamilySpec spec;
    std::vector<Rational> c;
    std::vector<Rational> boundary;
    std::vector<Rational> bulk;
    std::vector<Rational> bulk_log_coeff;
    std::optional<Rational> alpha0;
    std::optional<Rational> alpha1;
    std::vector<Rational> character;
    std::optional<Rational> required_ratio;
    std::optional<Verdict> verdict;
    std::vector<Discrepancy> discrepancies;
    bool hypothesis_violated = false;
    /// set when a two-parameter class was reduced to the b[H]-[E] form
    std::optional<Rational> ratio_scale;
};

/// Full per-axis evaluation. Works for forced (unsolvable) specs too, with
/// hypothesis_violated set. alpha values are optional; when given, alpha0
/// must be nonzero.
CharacterReport character_report(const FamilySpec& spec, std::optional<Rational> alpha0 = {},
                                 std::optional<Rational> alpha1 = {});

/// Published closed forms for the required ratio.
Rational published_ratio_n2(const Rational& a, const Rational& b);           // -(b^2-1)/(b-a)^2
Rational published_ratio_n2_statement(const Rational& a, const Rational& b); // -2b^2(b^2-1)/(b^2-ab)^2
Rational published_ratio_n3(const Rational& a, const Rational& b);

/// Ratio for the ruled-surface solutions P(O + L) -> Sigma, L of degree k,
/// with genus h, and the bundle class E = 2(k1-k2)[E0] + (k1 k' + k2(2k+k'))[C].
struct RuledSurfaceClass
{
    Rational e0_coef;
    Rational fiber_coef;
    /// in the (H, E) basis of the one-point blow-up of P^2; only for k = k' = 1
    std::optional<Rational> h_coef;
    std::optional<Rational> e_coef;
    Rational ratio;
};

/// -((2 - s) k + 2 k') / (8 k2^2 (k + k')), s = 2 (1 - h) / k.
RuledSurfaceClass kf_ruled_ratio(int genus, int k, int kprime, const Rational& k1,
                                 const Rational& k2);

struct ScanRow
{
    int n;
    Rational a;
    Rational b;
    bool solvable;
    std::optional<Rational> boundary;
    std::optional<Rational> bulk;
    std::optional<Rational> ratio;
    std::optional<Verdict> verdict;
};

/// Rows over the rational grid a_from:step:a_to x b_from:step:b_to, sorted
/// by (a, b). Grid points with a <= 1 or b <= 1 are skipped. The verdict
/// column is evaluated at alpha_1/alpha_0 = 1.
std::vector<ScanRow> scan(int n, const Rational& a_from, const Rational& a_to,
                          const Rational& b_from, const Rational& b_to, const Rational& step);

} // namespace futaki

#endif
