#include "futaki/integrate.hpp"

#include <cmath>
#include <numeric>

#include "futaki/linalg.hpp"

namespace futaki {

FacetMeasureContext::FacetMeasureContext(const DelzantPolytope& p, std::size_t facet,
                                         std::optional<IntVector> transversal)
    : facet_(facet)
{
    if (facet >= p.facet_count())
        throw std::out_of_range("facet index " + std::to_string(facet) + " out of range");
    normal_ = p.halfspaces()[facet].normal;
    if (transversal) {
        if (transversal->size() != normal_.size())
            throw std::invalid_argument("transversal vector has wrong length");
        if (transversal->dot(normal_) == 0)
            throw std::invalid_argument("transversal vector is parallel to the facet");
        transversal_ = *transversal;
    } else {
        transversal_ = IntVector::Zero(normal_.size());
        for (Eigen::Index k = 0; k < normal_.size(); ++k) {
            if (normal_[k] != 0) {
                transversal_[k] = 1;
                break;
            }
        }
    }
}

Rational FacetMeasureContext::parallelepiped_measure(const MatrixQ& edges) const
{
    const Eigen::Index n = normal_.size();
    if (edges.rows() != n - 1 || edges.cols() != n)
        throw std::invalid_argument("facet parallelepiped needs n-1 edges in R^n");
    MatrixQ m(n, n);
    m.topRows(n - 1) = edges;
    m.row(n - 1) = transversal_.cast<Rational>().transpose();
    Rational pairing(static_cast<long long>(std::abs(normal_.dot(transversal_))));
    return abs(exact_determinant(m)) / pairing;
}

Rational FacetMeasureContext::simplex_measure(const Simplex& s) const
{
    const Eigen::Index n = normal_.size();
    if (s.dimension() != n - 1 || s.ambient_dimension() != n)
        throw std::invalid_argument("facet simplex must be (n-1)-dimensional in R^n");
    MatrixQ edges(n - 1, n);
    for (Eigen::Index k = 0; k < n - 1; ++k)
        edges.row(k) = s.vertices.row(k + 1) - s.vertices.row(0);
    return parallelepiped_measure(edges) / Rational(factorial(static_cast<unsigned>(n - 1)));
}

Rational integrate_simplex(const Simplex& s, const MultiPoly& p, const Rational& measure)
{
    const int n = static_cast<int>(s.ambient_dimension());
    if (p.dimension() != n)
        throw std::invalid_argument("integrand dimension does not match the simplex");
    const int m = static_cast<int>(s.dimension());
    // x_i = sum_j lambda_j * V(j, i), lambda in m+1 barycentric variables
    std::vector<MultiPoly> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) {
        MultiPoly xi(m + 1);
        for (int j = 0; j <= m; ++j)
            xi += MultiPoly::variable(m + 1, j) * s.vertices(j, i);
        images.push_back(std::move(xi));
    }
    const MultiPoly bary = p.substitute(images);
    const Integer m_fact = factorial(static_cast<unsigned>(m));
    Rational total(0);
    for (const auto& [beta, c] : bary.terms()) {
        Integer num = m_fact;
        unsigned deg = 0;
        for (unsigned e : beta) {
            num *= factorial(e);
            deg += e;
        }
        total += c * Rational(num, factorial(static_cast<unsigned>(m) + deg));
    }
    return total * measure;
}

Rational integrate_poly(const DelzantPolytope& p, const MultiPoly& f)
{
    if (f.dimension() != p.dimension())
        throw std::invalid_argument("integrand dimension does not match the polytope");
    Rational total(0);
    for (const auto& s : triangulate(p))
        total += integrate_simplex(s, f, simplex_volume(s));
    return total;
}

Rational integrate_poly_facet(const DelzantPolytope& p, std::size_t facet, const MultiPoly& f,
                              std::optional<IntVector> transversal)
{
    if (f.dimension() != p.dimension())
        throw std::invalid_argument("integrand dimension does not match the polytope");
    const FacetMeasureContext ctx(p, facet, std::move(transversal));
    Rational total(0);
    for (const auto& s : facet_triangulate(p, facet))
        total += integrate_simplex(s, f, ctx.simplex_measure(s));
    return total;
}

Rational integrate_poly_boundary(const DelzantPolytope& p, const MultiPoly& f)
{
    Rational total(0);
    for (std::size_t facet = 0; facet < p.facet_count(); ++facet)
        total += integrate_poly_facet(p, facet, f);
    return total;
}

Rational volume(const DelzantPolytope& p)
{
    Rational total(0);
    for (const auto& s : triangulate(p))
        total += simplex_volume(s);
    return total;
}

Rational c_constant(const DelzantPolytope& p, int axis)
{
    const int n = p.dimension();
    if (axis < 0 || axis >= n)
        throw std::out_of_range("axis index out of range");
    const Rational vol = volume(p);
    if (vol == 0)
        throw std::domain_error("zero-volume polytope");
    return -integrate_poly(p, MultiPoly::variable(n, axis)) / vol;
}

LogLinear integrate_radial(int n, const Rational& b, const RadialSum& r)
{
    if (r.dimension() != n)
        throw std::invalid_argument("radial integrand is not defined on the n-dimensional slab");
    if (b <= 1)
        throw std::domain_error("slab needs b > 1");
    LogLinear total;
    for (const auto& [k, poly] : r.terms()) {
        for (const auto& [alpha, c] : poly.terms()) {
            Integer num(1);
            unsigned deg = 0;
            for (unsigned e : alpha) {
                num *= factorial(e);
                deg += e;
            }
            const Rational moment(num, factorial(static_cast<unsigned>(n - 1) + deg));
            // int_1^b X^{deg + k + n - 1} dX
            const int e = static_cast<int>(deg) + k + n - 1;
            if (e == -1)
                total.q1 += c * moment;
            else
                total.q0 += c * moment * (pow(b, e + 1) - 1) / Rational(e + 1);
        }
    }
    return total;
}

double counter_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t coord)
{
    // splitmix64 finalizer over a (seed, index, coord) counter
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    const std::uint64_t z = mix(mix(mix(seed) ^ index) ^ (coord * 0xd1b54a32d192ed03ULL));
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

McEstimate mc_integrate(const DelzantPolytope& p, const PointFunction& f, std::uint64_t samples,
                        std::uint64_t seed)
{
    if (samples == 0)
        throw std::invalid_argument("Monte Carlo needs at least one sample");
    const int n = p.dimension();
    const auto [lo_q, hi_q] = p.bounding_box();
    Eigen::VectorXd lo(n), width(n);
    double box = 1;
    for (int i = 0; i < n; ++i) {
        lo[i] = to_double(lo_q[i]);
        width[i] = to_double(hi_q[i]) - lo[i];
        box *= width[i];
    }
    std::vector<std::pair<Eigen::VectorXd, double>> faces;
    for (const auto& h : p.halfspaces())
        faces.emplace_back(h.normal.cast<double>(), to_double(h.offset));

    long double sum = 0, sum_sq = 0;
    std::uint64_t accepted = 0;
    Eigen::VectorXd x(n);
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (int i = 0; i < n; ++i)
            x[i] = lo[i] + width[i] * counter_uniform(seed, s, static_cast<std::uint64_t>(i));
        bool inside = true;
        for (const auto& [v, lam] : faces) {
            if (x.dot(v) + lam < 0) {
                inside = false;
                break;
            }
        }
        if (!inside)
            continue;
        ++accepted;
        const long double y = f(x);
        sum += y;
        sum_sq += y * y;
    }
    if (accepted == 0)
        throw std::domain_error("no Monte Carlo sample landed inside the polytope");

    const long double count = static_cast<long double>(samples);
    const long double mean = sum / count;
    const long double var = std::max(0.0L, sum_sq / count - mean * mean);
    McEstimate out;
    out.estimate = static_cast<double>(box * mean);
    out.standard_error = static_cast<double>(box * std::sqrt(var / count));
    out.samples = samples;
    out.accepted = accepted;
    out.seed = seed;
    return out;
}

bool mc_agrees(double exact, const McEstimate& mc)
{
    const double tol = std::max(4.0 * mc.standard_error, 1e-9 * std::abs(exact));
    return std::abs(exact - mc.estimate) <= tol;
}

} // namespace futaki
