#include "futaki/multipoly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace futaki {

MultiPoly::MultiPoly(int n) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("negative polynomial dimension");
}

MultiPoly MultiPoly::constant(int n, const Rational& c)
{
    MultiPoly p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int n, int i)
{
    if (i < 0 || i >= n)
        throw std::out_of_range("variable index out of range");
    Exponent alpha(n, 0);
    alpha[i] = 1;
    return monomial(n, std::move(alpha), Rational(1));
}

MultiPoly MultiPoly::monomial(int n, Exponent alpha, const Rational& c)
{
    MultiPoly p(n);
    p.add_term(alpha, c);
    return p;
}

MultiPoly MultiPoly::coordinate_sum(int n)
{
    MultiPoly p(n);
    for (int i = 0; i < n; ++i)
        p += variable(n, i);
    return p;
}

unsigned MultiPoly::degree() const
{
    unsigned d = 0;
    for (const auto& [alpha, c] : terms_)
        d = std::max(d, std::accumulate(alpha.begin(), alpha.end(), 0u));
    return d;
}

Rational MultiPoly::coefficient(const Exponent& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& alpha, const Rational& c)
{
    if (static_cast<int>(alpha.size()) != n_)
        throw std::invalid_argument("exponent length does not match polynomial dimension");
    if (std::accumulate(alpha.begin(), alpha.end(), 0ull) > max_degree)
        throw std::length_error("monomial exceeds the total degree cap of 64");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    if (o.n_ != n_)
        throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [alpha, c] : o.terms_)
        add_term(alpha, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    if (o.n_ != n_)
        throw std::invalid_argument("polynomial dimension mismatch");
    for (const auto& [alpha, c] : o.terms_)
        add_term(alpha, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, c] : terms_)
        c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.n_ != b.n_)
        throw std::invalid_argument("polynomial dimension mismatch");
    MultiPoly r(a.n_);
    MultiPoly::Exponent gamma(a.n_);
    for (const auto& [alpha, c] : a.terms_) {
        for (const auto& [beta, d] : b.terms_) {
            for (int i = 0; i < a.n_; ++i)
                gamma[i] = alpha[i] + beta[i];
            r.add_term(gamma, c * d);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result = constant(n_, Rational(1));
    MultiPoly base = *this;
    for (; e != 0; e >>= 1) {
        if (e & 1u)
            result = result * base;
        if (e > 1)
            base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const
{
    if (static_cast<int>(images.size()) != n_)
        throw std::invalid_argument("substitution needs one image per variable");
    const int m = images.empty() ? 0 : images.front().dimension();
    // powers[i][e] = images[i]^e, built lazily up to the largest exponent used
    std::vector<std::vector<MultiPoly>> powers(n_);
    for (int i = 0; i < n_; ++i)
        powers[i].push_back(constant(m, Rational(1)));

    MultiPoly result(m);
    for (const auto& [alpha, c] : terms_) {
        MultiPoly term = constant(m, c);
        for (int i = 0; i < n_; ++i) {
            while (powers[i].size() <= alpha[i])
                powers[i].push_back(powers[i].back() * images[i]);
            if (alpha[i] != 0)
                term = term * powers[i][alpha[i]];
        }
        result += term;
    }
    return result;
}

MultiPoly MultiPoly::shifted(const VectorQ& t) const
{
    check_point_size(t.size());
    std::vector<MultiPoly> images;
    images.reserve(n_);
    for (int i = 0; i < n_; ++i)
        images.push_back(variable(n_, i) + constant(n_, t[i]));
    return substitute(images);
}

std::string MultiPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // highest exponents first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [alpha, c] = *it;
        Rational mag = abs(c);
        out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        bool is_const = std::all_of(alpha.begin(), alpha.end(), [](unsigned e) { return e == 0; });
        bool wrote = false;
        if (mag != 1 || is_const) {
            out << to_string(mag);
            wrote = true;
        }
        for (int i = 0; i < n_; ++i) {
            if (alpha[i] == 0)
                continue;
            out << (wrote ? "*" : "") << 'x' << (i + 1);
            if (alpha[i] > 1)
                out << '^' << alpha[i];
            wrote = true;
        }
    }
    return out.str();
}

void MultiPoly::check_point_size(Eigen::Index size) const
{
    if (size != n_)
        throw std::invalid_argument("point dimension " + std::to_string(size) +
                                    " does not match polynomial dimension " + std::to_string(n_));
}

Rational poly_eval(const MultiPoly& p, const VectorQ& x)
{
    return p(x);
}

// --- RadialSum ---------------------------------------------------------------

RadialSum::RadialSum(const MultiPoly& p, int k) : n_(p.dimension())
{
    add_term(p, k);
}

RadialSum RadialSum::power(int n, int k, const Rational& c)
{
    return RadialSum(MultiPoly::constant(n, c), k);
}

int RadialSum::min_power() const
{
    return terms_.empty() ? 0 : terms_.begin()->first;
}

void RadialSum::add_term(const MultiPoly& p, int k)
{
    if (p.dimension() != n_)
        throw std::invalid_argument("radial sum dimension mismatch");
    if (p.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(k, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

RadialSum& RadialSum::operator+=(const RadialSum& o)
{
    if (o.n_ != n_)
        throw std::invalid_argument("radial sum dimension mismatch");
    for (const auto& [k, p] : o.terms_)
        add_term(p, k);
    return *this;
}

RadialSum& RadialSum::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, p] : terms_)
        p *= s;
    return *this;
}

RadialSum operator*(const RadialSum& a, const RadialSum& b)
{
    if (a.n_ != b.n_)
        throw std::invalid_argument("radial sum dimension mismatch");
    RadialSum r(a.n_);
    for (const auto& [k, p] : a.terms_)
        for (const auto& [l, q] : b.terms_)
            r.add_term(p * q, k + l);
    return r;
}

MultiPoly RadialSum::to_poly() const
{
    MultiPoly result(n_);
    const MultiPoly sum = MultiPoly::coordinate_sum(n_);
    for (const auto& [k, p] : terms_) {
        if (k < 0)
            throw std::domain_error("radial sum has a negative power of X; not a polynomial");
        result += p * sum.pow(static_cast<unsigned>(k));
    }
    return result;
}

std::string RadialSum::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, p] : terms_) {
        out << (first ? "" : " + ") << '(' << p.str() << ')';
        if (k != 0)
            out << "*X^" << k;
        first = false;
    }
    return out.str();
}

Rational radial_eval(const RadialSum& r, const VectorQ& x)
{
    return r(x);
}

// --- expression parser -------------------------------------------------------

namespace {

class ExpressionParser
{
    public:
        ExpressionParser(std::string_view text, int n) : text_(text), n_(n) {}

        RadialSum parse()
        {
            RadialSum value = expression();
            skip_space();
            if (pos_ != text_.size())
                fail("unexpected character");
            return value;
        }

    private:
        RadialSum expression()
        {
            RadialSum value = term();
            for (;;) {
                skip_space();
                if (accept('+'))
                    value += term();
                else if (accept('-'))
                    value = value - term();
                else
                    return value;
            }
        }

        RadialSum term()
        {
            RadialSum value = unary();
            for (;;) {
                skip_space();
                if (accept('*'))
                    value = value * unary();
                else if (accept('/'))
                    value = value * reciprocal(unary());
                else
                    return value;
            }
        }

        RadialSum unary()
        {
            skip_space();
            if (accept('-'))
                return unary() * Rational(-1);
            if (accept('+'))
                return unary();
            return power();
        }

        RadialSum power()
        {
            RadialSum base = atom();
            skip_space();
            if (!accept('^'))
                return base;
            skip_space();
            // integer exponent, optionally signed and parenthesised: X^-4, X^(-4)
            const bool paren = accept('(');
            skip_space();
            bool negative = accept('-');
            if (!negative)
                accept('+');
            Integer e = digits();
            skip_space();
            if (paren && !accept(')'))
                fail("expected ')' after exponent");
            if (e > Integer(MultiPoly::max_degree))
                fail("exponent too large");
            int k = e.convert_to<int>();
            if (negative)
                return raise(reciprocal(base), k);
            return raise(base, k);
        }

        RadialSum atom()
        {
            skip_space();
            if (accept('(')) {
                RadialSum value = expression();
                skip_space();
                if (!accept(')'))
                    fail("expected ')'");
                return value;
            }
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                return RadialSum(MultiPoly::constant(n_, Rational(digits())));
            if (accept('X'))
                return RadialSum::power(n_, 1);
            if (accept('x')) {
                accept('_');
                Integer i = digits();
                if (i < 1 || i > n_)
                    fail("variable index out of range 1.." + std::to_string(n_));
                return RadialSum(MultiPoly::variable(n_, i.convert_to<int>() - 1));
            }
            fail("expected a number, variable or '('");
        }

        RadialSum raise(const RadialSum& base, int k)
        {
            RadialSum result = RadialSum::power(n_, 0);
            for (int i = 0; i < k; ++i)
                result = result * base;
            return result;
        }

        // Only single-term c * X^k values (constant polynomial part) invert.
        RadialSum reciprocal(const RadialSum& value)
        {
            if (value.terms().size() == 1) {
                const auto& [k, p] = *value.terms().begin();
                if (p.degree() == 0 && !p.is_zero()) {
                    Rational c = p.coefficient(MultiPoly::Exponent(n_, 0));
                    return RadialSum::power(n_, -k, Rational(1) / c);
                }
            }
            fail("division or negative power is only supported for c*X^k");
        }

        Integer digits()
        {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected digits");
            return Integer(std::string(text_.substr(start, pos_ - start)));
        }

        bool accept(char c)
        {
            if (pos_ < text_.size() && text_[pos_] == c) {
                ++pos_;
                return true;
            }
            return false;
        }

        void skip_space()
        {
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }

        [[noreturn]] void fail(const std::string& what) const
        {
            throw std::invalid_argument("expression parse error at offset " + std::to_string(pos_) +
                                        ": " + what + " in '" + std::string(text_) + "'");
        }

        std::string_view text_;
        int n_;
        size_t pos_ = 0;
};

} // namespace

RadialSum parse_radial(std::string_view text, int n)
{
    return ExpressionParser(text, n).parse();
}

MultiPoly parse_poly(std::string_view text, int n)
{
    return parse_radial(text, n).to_poly();
}

} // namespace futaki
