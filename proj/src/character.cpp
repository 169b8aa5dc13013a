#include "futaki/character.hpp"

#include <algorithm>

namespace futaki {

namespace {

struct AxisTerms
{
    std::vector<Rational> c;
    std::vector<Rational> boundary;
    std::vector<LogLinear> bulk;
};

AxisTerms axis_terms(const FamilySpec& spec)
{
    const DelzantPolytope p = standard_blowup_polytope(spec.n, spec.b);
    const Rational vol = volume(p);
    const RadialSum minors = minor_sum_radial(spec);
    AxisTerms t;
    for (int i = 0; i < spec.n; ++i) {
        const MultiPoly xi = MultiPoly::variable(spec.n, i);
        const Rational ci = -integrate_poly(p, xi) / vol;
        const MultiPoly centred = xi + MultiPoly::constant(spec.n, ci);
        t.c.push_back(ci);
        t.boundary.push_back(integrate_poly_boundary(p, centred));
        t.bulk.push_back(integrate_radial(spec.n, spec.b, centred * minors));
    }
    return t;
}

std::optional<Rational> ratio_from(const AxisTerms& t)
{
    std::optional<Rational> ratio;
    for (std::size_t i = 0; i < t.boundary.size(); ++i) {
        if (!t.bulk[i].is_rational())
            throw std::logic_error("bulk term has a nonzero log b coefficient");
        std::optional<Rational> r;
        if (t.bulk[i].q0 != 0)
            r = -t.boundary[i] / (2 * t.bulk[i].q0);
        if (i == 0)
            ratio = r;
        else if (r != ratio)
            throw AxisDisagreement("required ratio differs between axis 1 and axis " +
                                   std::to_string(i + 1));
    }
    return ratio;
}

Verdict verdict_from(const std::optional<Rational>& ratio, const Rational& boundary,
                     const Rational& alpha0, const Rational& alpha1)
{
    if (alpha0 == 0)
        throw std::invalid_argument(alpha1 == 0 ? "alpha0 and alpha1 are both zero"
                                                : "alpha0 must be nonzero");
    if (!ratio)
        return boundary != 0 ? Verdict::NoVanishingPossible : Verdict::VanishesAtRatio;
    const Rational r = alpha1 / alpha0;
    if (r == *ratio)
        return Verdict::VanishesAtRatio;
    if (*ratio < 0 && r > 0)
        return Verdict::ObstructedForPositiveAlpha;
    return Verdict::Obstructed;
}

} // namespace

std::string to_string(Verdict v)
{
    switch (v) {
        case Verdict::VanishesAtRatio:
            return "VanishesAtRatio";
        case Verdict::ObstructedForPositiveAlpha:
            return "ObstructedForPositiveAlpha";
        case Verdict::Obstructed:
            return "Obstructed";
        case Verdict::NoVanishingPossible:
            return "NoVanishingPossible";
    }
    return "unknown";
}

Rational classical_futaki_axis(const DelzantPolytope& p, int axis)
{
    const int n = p.dimension();
    const MultiPoly centred = MultiPoly::variable(n, axis) +
                              MultiPoly::constant(n, c_constant(p, axis));
    return integrate_poly_boundary(p, centred);
}

LogLinear bulk_term(const FamilySpec& spec, int axis)
{
    if (axis < 0 || axis >= spec.n)
        throw std::out_of_range("axis index out of range");
    const DelzantPolytope p = standard_blowup_polytope(spec.n, spec.b);
    const MultiPoly centred = MultiPoly::variable(spec.n, axis) +
                              MultiPoly::constant(spec.n, c_constant(p, axis));
    return integrate_radial(spec.n, spec.b, centred * minor_sum_radial(spec));
}

Rational alpha_futaki_axis(const FamilySpec& spec, int axis, const Rational& alpha0,
                           const Rational& alpha1)
{
    const LogLinear bulk = bulk_term(spec, axis);
    if (!bulk.is_rational())
        throw std::logic_error("bulk term has a nonzero log b coefficient");
    const DelzantPolytope p = standard_blowup_polytope(spec.n, spec.b);
    return alpha0 / 2 * classical_futaki_axis(p, axis) + alpha1 * bulk.q0;
}

std::optional<Rational> required_ratio(const FamilySpec& spec)
{
    return ratio_from(axis_terms(spec));
}

Verdict verdict(const FamilySpec& spec, const Rational& alpha0, const Rational& alpha1)
{
    const AxisTerms t = axis_terms(spec);
    return verdict_from(ratio_from(t), t.boundary.front(), alpha0, alpha1);
}

Rational published_ratio_n2(const Rational& a, const Rational& b)
{
    return -(b * b - 1) / ((b - a) * (b - a));
}

Rational published_ratio_n2_statement(const Rational& a, const Rational& b)
{
    const Rational d = b * b - a * b;
    return -2 * b * b * (b * b - 1) / (d * d);
}

Rational published_ratio_n3(const Rational& a, const Rational& b)
{
    const Rational num = (3 * b + 1) * pow(b - 1, 3) * (b * b + b + 1);
    const Rational den = 3 * b * (b - a) * (b - a) * (pow(b, 3) + b * b - b + 1);
    return -num / den;
}

CharacterReport character_report(const FamilySpec& spec, std::optional<Rational> alpha0,
                                 std::optional<Rational> alpha1)
{
    if (alpha0.has_value() != alpha1.has_value())
        throw std::invalid_argument("alpha0 and alpha1 must be given together");
    CharacterReport report;
    report.spec = spec;
    report.hypothesis_violated = !spec.solvable;

    const AxisTerms t = axis_terms(spec);
    report.c = t.c;
    report.boundary = t.boundary;
    for (const auto& b : t.bulk) {
        report.bulk.push_back(b.q0);
        report.bulk_log_coeff.push_back(b.q1);
    }
    report.required_ratio = ratio_from(t);

    if (alpha0) {
        report.alpha0 = *alpha0;
        report.alpha1 = *alpha1;
        for (int i = 0; i < spec.n; ++i)
            report.character.push_back(*alpha0 / 2 * t.boundary[i] + *alpha1 * t.bulk[i].q0);
        report.verdict = verdict_from(report.required_ratio, t.boundary.front(), *alpha0, *alpha1);
    }

    if (report.required_ratio && spec.a != spec.b) {
        const Rational computed = *report.required_ratio;
        auto note = [&](std::string formula, const Rational& published) {
            if (published == computed)
                return;
            Discrepancy d{std::move(formula), published, computed, {}};
            if (computed != 0)
                d.factor = published / computed;
            report.discrepancies.push_back(std::move(d));
        };
        if (spec.n == 2) {
            note("-(b^2-1)/(b-a)^2", published_ratio_n2(spec.a, spec.b));
            note("-2b^2(b^2-1)/(b^2-ab)^2", published_ratio_n2_statement(spec.a, spec.b));
        } else if (spec.n == 3) {
            note("-(3b+1)(b-1)^3(b^2+b+1)/(3b(b-a)^2(b^3+b^2-b+1))",
                 published_ratio_n3(spec.a, spec.b));
        }
    }
    return report;
}

RuledSurfaceClass kf_ruled_ratio(int genus, int k, int kprime, const Rational& k1,
                                 const Rational& k2)
{
    if (k < 1 || kprime < 1)
        throw std::invalid_argument("k and k' must be positive integers");
    if (genus < 0)
        throw std::invalid_argument("genus must be nonnegative");
    if (k2 == 0)
        throw std::invalid_argument("k2 must be nonzero");
    RuledSurfaceClass out;
    out.e0_coef = 2 * (k1 - k2);
    out.fiber_coef = k1 * kprime + k2 * (2 * k + kprime);
    // [E0] = [H], [C] = [H] - [E]
    if (k == 1 && kprime == 1) {
        out.h_coef = out.e0_coef + out.fiber_coef;
        out.e_coef = out.fiber_coef;
    }
    const Rational s = Rational(2 * (1 - genus), k);
    out.ratio = -((2 - s) * k + 2 * kprime) / (8 * k2 * k2 * (k + kprime));
    return out;
}

std::vector<ScanRow> scan(int n, const Rational& a_from, const Rational& a_to,
                          const Rational& b_from, const Rational& b_to, const Rational& step)
{
    if (step <= 0)
        throw std::invalid_argument("scan step must be positive");
    if (a_to < a_from || b_to < b_from)
        throw std::invalid_argument("empty scan range");
    std::vector<ScanRow> rows;
    for (Rational a = a_from; a <= a_to; a += step) {
        for (Rational b = b_from; b <= b_to; b += step) {
            if (a <= 1 || b <= 1)
                continue;
            ScanRow row{n, a, b, solvable(n, a, b), {}, {}, {}, {}};
            if (row.solvable) {
                const FamilySpec spec = make_spec(n, a, b);
                const AxisTerms t = axis_terms(spec);
                row.boundary = t.boundary.front();
                row.bulk = t.bulk.front().q0;
                row.ratio = ratio_from(t);
                row.verdict = verdict_from(row.ratio, t.boundary.front(), Rational(1), Rational(1));
            }
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty())
        throw std::invalid_argument("scan range contains no admissible (a, b) with a, b > 1");
    std::sort(rows.begin(), rows.end(), [](const ScanRow& x, const ScanRow& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    return rows;
}

} // namespace futaki
