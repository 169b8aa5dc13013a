#ifndef FUTAKI_TESTS_SUPPORT_HPP
#define FUTAKI_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>

#include "futaki/exactnum.hpp"
#include "futaki/polytope.hpp"

namespace futaki::test {

inline Rational Q(const std::string& s) { return parse_rational(s); }

inline VectorQ vq(std::initializer_list<Rational> xs)
{
    VectorQ v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (const auto& x : xs)
        v[i++] = x;
    return v;
}

inline IntVector vi(std::initializer_list<std::int64_t> xs)
{
    IntVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (auto x : xs)
        v[i++] = x;
    return v;
}

inline HalfSpace hs(std::initializer_list<std::int64_t> normal, const Rational& offset)
{
    return {vi(normal), offset};
}

// [lo, hi]^n as half-spaces x_i - lo >= 0, hi - x_i >= 0
inline DelzantPolytope box(int n, const Rational& lo, const Rational& hi)
{
    std::vector<HalfSpace> h;
    for (int i = 0; i < n; ++i) {
        IntVector e = IntVector::Zero(n);
        e[i] = 1;
        h.push_back({e, -lo});
        h.push_back({IntVector(-e), hi});
    }
    return DelzantPolytope(n, std::move(h));
}

inline DelzantPolytope unit_square() { return box(2, Rational(0), Rational(1)); }

} // namespace futaki::test

#endif
