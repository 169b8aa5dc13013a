#include "futaki/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "futaki/linalg.hpp"

namespace futaki {

namespace {

// Calls f(indices) for every k-subset of {0..m-1} in lexicographic order.
template <typename F>
void for_each_subset(int m, int k, F&& f)
{
    if (k > m)
        return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

long long subset_count(int m, int k)
{
    if (k > m)
        return 0;
    long double c = 1;
    for (int i = 1; i <= k; ++i)
        c = c * (m - k + i) / i;
    return static_cast<long long>(c + 0.5L);
}

MatrixQ normal_rows(const std::vector<HalfSpace>& hs, const std::vector<int>& idx, int n)
{
    MatrixQ m(idx.size(), n);
    for (std::size_t r = 0; r < idx.size(); ++r)
        m.row(r) = hs[idx[r]].normal_q().transpose();
    return m;
}

// Kernel direction of an (n-1) x n matrix of rank n-1, by signed cofactors.
VectorQ kernel_direction(const MatrixQ& m)
{
    const Eigen::Index n = m.cols();
    VectorQ d(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        MatrixQ minor(m.rows(), n - 1);
        for (Eigen::Index c = 0, k = 0; c < n; ++c)
            if (c != j)
                minor.col(k++) = m.col(c);
        Rational det = exact_determinant(minor);
        d[j] = (j % 2 == 0) ? det : Rational(-det);
    }
    return d;
}

Eigen::Index affine_dimension(const std::vector<VectorQ>& pts, const std::vector<int>& ids)
{
    if (ids.empty())
        return -1;
    const Eigen::Index n = pts[ids[0]].size();
    MatrixQ diffs(ids.size() - 1, n);
    for (std::size_t k = 1; k < ids.size(); ++k)
        diffs.row(k - 1) = (pts[ids[k]] - pts[ids[0]]).transpose();
    return exact_rank(diffs);
}

bool is_primitive(const IntVector& v)
{
    std::int64_t g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        g = std::gcd(g, v[i]);
    return g == 1;
}

} // namespace

Rational HalfSpace::evaluate(const VectorQ& x) const
{
    if (x.size() != normal.size())
        throw std::invalid_argument("point dimension does not match half-space");
    return x.dot(normal_q()) + offset;
}

Rational simplex_volume(const Simplex& s)
{
    const Eigen::Index n = s.ambient_dimension();
    if (s.dimension() != n)
        throw std::invalid_argument("simplex_volume expects a full-dimensional simplex");
    MatrixQ edges(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
        edges.row(k) = s.vertices.row(k + 1) - s.vertices.row(0);
    return abs(exact_determinant(edges)) / Rational(factorial(static_cast<unsigned>(n)));
}

DelzantPolytope::DelzantPolytope(int n, std::vector<HalfSpace> halfspaces) : n_(n)
{
    if (n < 1)
        throw std::invalid_argument("polytope dimension must be positive");
    for (const auto& h : halfspaces) {
        if (h.normal.size() != n)
            throw std::invalid_argument("half-space normal has wrong length");
        if (h.normal.isZero())
            throw std::invalid_argument("half-space normal is zero");
        if (!is_primitive(h.normal))
            throw std::invalid_argument("half-space normal is not primitive");
    }
    // exact duplicates describe one facet
    std::vector<HalfSpace> unique;
    for (auto& h : halfspaces)
        if (std::find(unique.begin(), unique.end(), h) == unique.end())
            unique.push_back(std::move(h));

    const int m = static_cast<int>(unique.size());
    if (m < n + 1)
        throw std::domain_error("unbounded polytope: fewer than n+1 half-spaces");
    if (subset_count(m, n) > max_subsets)
        throw std::length_error("vertex enumeration exceeds the subset cap");

    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    if (exact_rank(normal_rows(unique, all, n)) < n)
        throw std::domain_error("unbounded polytope: normals do not span");

    // With spanning normals the recession cone is pointed, so it is
    // nontrivial iff it has an extreme ray cut out by n-1 normals.
    for_each_subset(m, n - 1, [&](const std::vector<int>& idx) {
        MatrixQ rows = normal_rows(unique, idx, n);
        if (exact_rank(rows) != n - 1)
            return;
        VectorQ d = kernel_direction(rows);
        for (int sign : {1, -1}) {
            VectorQ dir = d * Rational(sign);
            bool recedes = std::all_of(unique.begin(), unique.end(),
                                       [&](const HalfSpace& h) { return dir.dot(h.normal_q()) >= 0; });
            if (recedes)
                throw std::domain_error("unbounded polytope: recession direction found");
        }
    });

    std::vector<VectorQ> found;
    for_each_subset(m, n, [&](const std::vector<int>& idx) {
        MatrixQ rows = normal_rows(unique, idx, n);
        VectorQ rhs(n);
        for (int r = 0; r < n; ++r)
            rhs[r] = -unique[idx[r]].offset;
        auto x = solve_exact(rows, rhs);
        if (!x)
            return;
        for (const auto& h : unique)
            if (h.evaluate(*x) < 0)
                return;
        found.push_back(*x);
    });
    std::sort(found.begin(), found.end(), lex_less);
    found.erase(std::unique(found.begin(), found.end(),
                            [](const VectorQ& a, const VectorQ& b) { return a == b; }),
                found.end());
    if (found.empty())
        throw std::domain_error("empty polytope");

    std::vector<int> ids(found.size());
    std::iota(ids.begin(), ids.end(), 0);
    if (affine_dimension(found, ids) != n)
        throw std::domain_error("degenerate polytope: not full-dimensional");

    // keep only inequalities whose tight set spans a hyperplane
    for (const auto& h : unique) {
        std::vector<int> tight;
        for (std::size_t v = 0; v < found.size(); ++v)
            if (h.evaluate(found[v]) == 0)
                tight.push_back(static_cast<int>(v));
        if (static_cast<int>(tight.size()) >= n && affine_dimension(found, tight) == n - 1)
            halfspaces_.push_back(h);
    }
    vertices_ = std::move(found);
    tight_.resize(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        for (std::size_t f = 0; f < halfspaces_.size(); ++f)
            if (halfspaces_[f].evaluate(vertices_[v]) == 0)
                tight_[v].push_back(static_cast<int>(f));
}

std::vector<int> DelzantPolytope::facet_vertices(std::size_t facet) const
{
    if (facet >= halfspaces_.size())
        throw std::out_of_range("facet index " + std::to_string(facet) + " out of range");
    std::vector<int> ids;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (std::binary_search(tight_[v].begin(), tight_[v].end(), static_cast<int>(facet)))
            ids.push_back(static_cast<int>(v));
    return ids;
}

bool DelzantPolytope::contains(const VectorQ& x) const
{
    return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                       [&](const HalfSpace& h) { return h.evaluate(x) >= 0; });
}

std::pair<VectorQ, VectorQ> DelzantPolytope::bounding_box() const
{
    VectorQ lo = vertices_.front();
    VectorQ hi = vertices_.front();
    for (const auto& v : vertices_) {
        for (int i = 0; i < n_; ++i) {
            if (v[i] < lo[i])
                lo[i] = v[i];
            if (hi[i] < v[i])
                hi[i] = v[i];
        }
    }
    return {lo, hi};
}

const std::vector<VectorQ>& vertices(const DelzantPolytope& p)
{
    return p.vertices();
}

namespace {

class PullingTriangulator
{
    public:
        explicit PullingTriangulator(const DelzantPolytope& p) : p_(p) {}

        // `face` is a sorted vertex-index list of affine dimension `dim`.
        std::vector<std::vector<int>> run(const std::vector<int>& face, Eigen::Index dim,
                                          std::optional<int> root = {})
        {
            if (dim == 0)
                return {{face.front()}};
            const int apex = root.value_or(face.front());
            std::set<std::vector<int>> subfaces;
            for (std::size_t f = 0; f < p_.facet_count(); ++f) {
                std::vector<int> sub;
                for (int v : face)
                    if (tight(v, static_cast<int>(f)))
                        sub.push_back(v);
                if (sub.size() == face.size() || sub.empty())
                    continue;
                if (std::binary_search(sub.begin(), sub.end(), apex))
                    continue;
                if (affine_dimension(p_.vertices(), sub) == dim - 1)
                    subfaces.insert(std::move(sub));
            }
            std::vector<std::vector<int>> cells;
            for (const auto& sub : subfaces) {
                for (auto cell : run(sub, dim - 1)) {
                    cell.insert(cell.begin(), apex);
                    cells.push_back(std::move(cell));
                }
            }
            return cells;
        }

        Simplex to_simplex(const std::vector<int>& cell) const
        {
            Simplex s{MatrixQ(cell.size(), p_.dimension())};
            for (std::size_t k = 0; k < cell.size(); ++k)
                s.vertices.row(k) = p_.vertices()[cell[k]].transpose();
            return s;
        }

    private:
        bool tight(int v, int f) const
        {
            const auto& t = p_.tight_at(v);
            return std::binary_search(t.begin(), t.end(), f);
        }

        const DelzantPolytope& p_;
};

} // namespace

std::vector<Simplex> triangulate(const DelzantPolytope& p, std::optional<std::size_t> root)
{
    std::vector<int> all(p.vertices().size());
    std::iota(all.begin(), all.end(), 0);
    if (root && *root >= all.size())
        throw std::out_of_range("triangulation root is not a vertex index");
    PullingTriangulator tri(p);
    std::optional<int> apex;
    if (root)
        apex = static_cast<int>(*root);
    std::vector<Simplex> out;
    for (const auto& cell : tri.run(all, p.dimension(), apex))
        out.push_back(tri.to_simplex(cell));
    return out;
}

std::vector<Simplex> facet_triangulate(const DelzantPolytope& p, std::size_t facet)
{
    std::vector<int> face = p.facet_vertices(facet);
    if (face.empty())
        throw std::domain_error("empty facet");
    PullingTriangulator tri(p);
    std::vector<Simplex> out;
    for (const auto& cell : tri.run(face, p.dimension() - 1))
        out.push_back(tri.to_simplex(cell));
    return out;
}

bool is_delzant(const DelzantPolytope& p)
{
    const int n = p.dimension();
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
        const auto& tight = p.tight_at(v);
        if (static_cast<int>(tight.size()) != n)
            return false;
        MatrixQ normals = normal_rows(p.halfspaces(), tight, n);
        if (abs(exact_determinant(normals)) != 1)
            return false;
    }
    return true;
}

DelzantPolytope standard_blowup_polytope(int n, const Rational& b)
{
    if (n < 2)
        throw std::invalid_argument("blow-up family needs n >= 2");
    if (b <= 1)
        throw std::domain_error("class parameter b must exceed 1 (b <= 1 is not a Kahler class)");
    std::vector<HalfSpace> hs;
    for (int i = 0; i < n; ++i) {
        IntVector e = IntVector::Zero(n);
        e[i] = 1;
        hs.push_back({e, Rational(0)});
    }
    hs.push_back({IntVector::Ones(n), Rational(-1)});
    hs.push_back({IntVector::Constant(n, -1), b});
    return DelzantPolytope(n, std::move(hs));
}

DelzantPolytope translate(const DelzantPolytope& p, const IntVector& t)
{
    if (t.size() != p.dimension())
        throw std::invalid_argument("translation vector has wrong length");
    std::vector<HalfSpace> hs = p.halfspaces();
    const VectorQ tq = t.cast<Rational>();
    for (auto& h : hs)
        h.offset -= tq.dot(h.normal_q());
    return DelzantPolytope(p.dimension(), std::move(hs));
}

} // namespace futaki
