/**
 * Exact integration over polytopes.
 *
 * Bodies carry the Lebesgue measure dmu. Facets carry the lattice measure
 * dsigma, fixed by dsigma ^ dl = +-dmu where l is the facet's defining
 * function with primitive normal. For a transversal integer vector w with
 * <v, w> != 0, the parallelepiped spanned by u_1..u_{n-1} inside the facet
 * has sigma-measure |det[u_1, ..., u_{n-1}, w]| / |<v, w>|, so every facet
 * integral stays rational.
 *
 * Monomials are integrated over simplices in barycentric coordinates:
 *   int_S lambda^a dV = vol(S) * m! * prod(a_j!) / (m + |a|)!
 * with m the simplex dimension.
 */

#ifndef FUTAKI_INTEGRATE_HPP
#define FUTAKI_INTEGRATE_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "futaki/multipoly.hpp"
#include "futaki/polytope.hpp"

namespace futaki {

class FacetMeasureContext
{
    public:
        /// Uses the first unit vector e_k with v_k != 0 unless `transversal`
        /// is supplied.
        FacetMeasureContext(const DelzantPolytope& p, std::size_t facet,
                            std::optional<IntVector> transversal = {});

        std::size_t facet() const { return facet_; }
        const IntVector& normal() const { return normal_; }
        const IntVector& transversal() const { return transversal_; }

        /// sigma-measure of the parallelepiped whose edges are the rows of
        /// `edges` ((n-1) x n).
        Rational parallelepiped_measure(const MatrixQ& edges) const;

        /// sigma-measure of an (n-1)-simplex lying in the facet.
        Rational simplex_measure(const Simplex& s) const;

    private:
        std::size_t facet_;
        IntVector normal_;
        IntVector transversal_;
};

/// int_S p dV where `measure` is the total measure of S.
Rational integrate_simplex(const Simplex& s, const MultiPoly& p, const Rational& measure);

Rational integrate_poly(const DelzantPolytope& p, const MultiPoly& f);

Rational integrate_poly_facet(const DelzantPolytope& p, std::size_t facet, const MultiPoly& f,
                              std::optional<IntVector> transversal = {});

/// Sum of integrate_poly_facet over all facets.
Rational integrate_poly_boundary(const DelzantPolytope& p, const MultiPoly& f);

Rational volume(const DelzantPolytope& p);

/// c_i with int_P (x_i + c_i) dmu = 0, axis i 0-based.
Rational c_constant(const DelzantPolytope& p, int axis);

/// int over the slab {x >= 0, 1 <= X <= b} of a radial sum, as q0 + q1 log b.
///
/// With x = X t, t on the simplex {t >= 0, sum t = 1}:
///   dmu = X^{n-1} dX dnu(t),  int t^a dnu = prod(a_i!) / (n - 1 + |a|)!
/// so each monomial term reduces to a power of X integrated over [1, b].
LogLinear integrate_radial(int n, const Rational& b, const RadialSum& r);

struct McEstimate
{
    double estimate = 0;
    double standard_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t accepted = 0;
    std::uint64_t seed = 0;
};

using PointFunction = std::function<double(const Eigen::VectorXd&)>;

/// Uniform draw in [0, 1) for coordinate `coord` of sample `index`. Every
/// sample owns a fixed substream, so any partition of the index range
/// reproduces the same draws.
double counter_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t coord);

/// Rejection sampling in the bounding box of `p`. Throws std::domain_error
/// when no sample lands inside.
McEstimate mc_integrate(const DelzantPolytope& p, const PointFunction& f, std::uint64_t samples,
                        std::uint64_t seed);

/// |exact - estimate| <= max(4 SE, 1e-9 |exact|)
bool mc_agrees(double exact, const McEstimate& mc);

} // namespace futaki

#endif
