/**
 * Half-space polytopes {x : <x, v_i> + lam_i >= 0} with primitive integer
 * normals, exact vertex enumeration, pulling triangulations of the body and
 * of its facets, and the slab polytopes of the blow-up family.
 */

#ifndef FUTAKI_POLYTOPE_HPP
#define FUTAKI_POLYTOPE_HPP

#include <optional>
#include <vector>

#include "futaki/exactnum.hpp"

namespace futaki {

/// l(x) = <x, normal> + offset >= 0, normal primitive.
struct HalfSpace
{
    IntVector normal;
    Rational offset;

    Rational evaluate(const VectorQ& x) const;
    VectorQ normal_q() const { return normal.cast<Rational>(); }
    friend bool operator==(const HalfSpace& a, const HalfSpace& b)
    {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

/// Rows of `vertices` are the affinely independent corners.
struct Simplex
{
    MatrixQ vertices;

    Eigen::Index dimension() const { return vertices.rows() - 1; }
    Eigen::Index ambient_dimension() const { return vertices.cols(); }
};

/// Lebesgue volume of a full-dimensional simplex.
Rational simplex_volume(const Simplex& s);

class DelzantPolytope
{
    public:
        /// Limit on the number of n-subsets of half-spaces tried during
        /// vertex enumeration.
        static constexpr long long max_subsets = 100000;

        /// Validates the half-spaces, enumerates vertices and drops redundant
        /// inequalities. Throws std::invalid_argument for malformed normals and
        /// std::domain_error for empty, unbounded or lower-dimensional input.
        DelzantPolytope(int n, std::vector<HalfSpace> halfspaces);

        int dimension() const { return n_; }
        const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
        std::size_t facet_count() const { return halfspaces_.size(); }

        /// Lexicographically sorted vertex list.
        const std::vector<VectorQ>& vertices() const { return vertices_; }

        /// Indices of the half-spaces tight at vertex `v`.
        const std::vector<int>& tight_at(std::size_t v) const { return tight_[v]; }

        /// Indices of the vertices on facet `facet`.
        std::vector<int> facet_vertices(std::size_t facet) const;

        bool contains(const VectorQ& x) const;

        /// Axis-aligned bounding box as (lower, upper) corners.
        std::pair<VectorQ, VectorQ> bounding_box() const;

    private:
        int n_;
        std::vector<HalfSpace> halfspaces_;
        std::vector<VectorQ> vertices_;
        std::vector<std::vector<int>> tight_;
};

const std::vector<VectorQ>& vertices(const DelzantPolytope& p);

/// Pulling triangulation. Each face is coned from its lexicographically
/// smallest vertex; `root` overrides that choice for the top-level body.
std::vector<Simplex> triangulate(const DelzantPolytope& p, std::optional<std::size_t> root = {});

/// (n-1)-simplices covering facet `facet`.
std::vector<Simplex> facet_triangulate(const DelzantPolytope& p, std::size_t facet);

/// Exactly n facets at every vertex with a unimodular normal matrix.
bool is_delzant(const DelzantPolytope& p);

/// {x^i >= 0, X - 1 >= 0, b - X >= 0}, X the coordinate sum. Facet order:
/// x^1..x^n, then X = 1, then X = b.
DelzantPolytope standard_blowup_polytope(int n, const Rational& b);

/// P + t
DelzantPolytope translate(const DelzantPolytope& p, const IntVector& t);

} // namespace futaki

#endif
