#ifndef JENHYP_RATIONAL_POLY_HPP
#define JENHYP_RATIONAL_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jenhyp {

/// Dense univariate polynomial with exact rational coefficients, lowest
/// degree first. The zero polynomial is the empty coefficient list.
class ExactPoly {
public:
    ExactPoly() = default;

    explicit ExactPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static ExactPoly constant(const mpq_class& v) {
        if (v == 0) return ExactPoly();
        return ExactPoly({v});
    }

    static ExactPoly monomial(const mpq_class& v, std::size_t deg) {
        if (v == 0) return ExactPoly();
        std::vector<mpq_class> c(deg + 1);
        c[deg] = v;
        return ExactPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const mpq_class& coeff(std::size_t i) const {
        static const mpq_class zero(0);
        return i < c_.size() ? c_[i] : zero;
    }

    const mpq_class& leading() const {
        if (is_zero()) throw std::logic_error("ExactPoly::leading of zero polynomial");
        return c_.back();
    }

    const std::vector<mpq_class>& coeffs() const { return c_; }

    friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
        std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return ExactPoly(std::move(r));
    }

    friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
        std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return ExactPoly(std::move(r));
    }

    ExactPoly operator-() const {
        std::vector<mpq_class> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = -c_[i];
        return ExactPoly(std::move(r));
    }

    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
        if (a.is_zero() || b.is_zero()) return ExactPoly();
        std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return ExactPoly(std::move(r));
    }

    friend ExactPoly operator*(const ExactPoly& a, const mpq_class& s) {
        if (s == 0) return ExactPoly();
        std::vector<mpq_class> r(a.c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] * s;
        return ExactPoly(std::move(r));
    }
    friend ExactPoly operator*(const mpq_class& s, const ExactPoly& a) { return a * s; }

    friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.c_ == b.c_; }

    ExactPoly derivative() const {
        if (c_.size() <= 1) return ExactPoly();
        std::vector<mpq_class> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * mpq_class(static_cast<long>(i));
        return ExactPoly(std::move(r));
    }

    mpq_class eval(const mpq_class& x) const {
        mpq_class acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// P(a*X + b).
    ExactPoly compose_affine(const mpq_class& a, const mpq_class& b) const {
        ExactPoly result;
        ExactPoly lin({b, a});
        for (std::size_t i = c_.size(); i-- > 0;) result = result * lin + constant(c_[i]);
        return result;
    }

    /// Euclidean remainder; exact rational division, no rounding.
    friend ExactPoly rem(const ExactPoly& a, const ExactPoly& b) {
        if (b.is_zero()) throw std::logic_error("ExactPoly::rem by zero");
        ExactPoly r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            mpq_class q = r.leading() / b.leading();
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= q * b.c_[i];
            r.trim();
        }
        return r;
    }

    friend ExactPoly gcd(ExactPoly a, ExactPoly b) {
        while (!b.is_zero()) {
            ExactPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r).primitive_part();
        }
        if (a.is_zero()) return a;
        return a.primitive_part();
    }

    /// Divide by the rational content: primitive integer coefficients, sign
    /// pattern preserved (Sturm chains depend on it). Controls coefficient
    /// blowup in remainder chains.
    ExactPoly primitive_part() && {
        if (is_zero()) return std::move(*this);
        mpz_class num_gcd(0), den_lcm(1);
        for (const auto& q : c_) {
            if (q == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        }
        mpq_class scale(den_lcm, num_gcd);
        scale.canonicalize();
        for (auto& q : c_) q *= scale;
        return std::move(*this);
    }
    ExactPoly primitive_part() const& { return ExactPoly(*this).primitive_part_move(); }

    ExactPoly squarefree_part() const {
        if (is_zero()) throw std::logic_error("ExactPoly::squarefree_part of zero");
        if (degree() == 0) return constant(1);
        ExactPoly g = gcd(*this, derivative());
        if (g.degree() == 0) return *this;
        return divide_exact(*this, g);
    }

    /// Exact quotient; throws if the division is not exact.
    friend ExactPoly divide_exact(const ExactPoly& a, const ExactPoly& b) {
        if (b.is_zero()) throw std::logic_error("ExactPoly::divide_exact by zero");
        ExactPoly r = a;
        std::vector<mpq_class> q(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
        while (!r.is_zero() && r.degree() >= b.degree()) {
            mpq_class f = r.leading() / b.leading();
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            q[shift] = f;
            for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
            r.trim();
        }
        if (!r.is_zero()) throw std::logic_error("ExactPoly::divide_exact: inexact");
        return ExactPoly(std::move(q));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += " + ";
            s += c_[i].get_str() + "*X^" + std::to_string(i);
        }
        return s;
    }

private:
    ExactPoly primitive_part_move() { return std::move(*this).primitive_part(); }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpq_class> c_;
};

namespace detail {

inline int sign_at_infinity(const ExactPoly& p, bool positive_end) {
    if (p.is_zero()) return 0;
    int s = sgn(p.leading());
    if (!positive_end && p.degree() % 2 == 1) s = -s;
    return s;
}

inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace detail

/// Number of distinct real roots of p, via an exact Sturm chain of the
/// squarefree part evaluated at -inf and +inf.
inline long sturm_real_root_count(const ExactPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_real_root_count: zero polynomial");
    ExactPoly f = p.squarefree_part();
    if (f.degree() == 0) return 0;
    std::vector<ExactPoly> chain;
    chain.push_back(f.primitive_part());
    chain.push_back(f.derivative().primitive_part());
    while (!chain.back().is_zero()) {
        ExactPoly r = -rem(chain[chain.size() - 2], chain.back());
        chain.push_back(std::move(r).primitive_part());
    }
    chain.pop_back();
    std::vector<int> neg, pos;
    neg.reserve(chain.size());
    pos.reserve(chain.size());
    for (const auto& q : chain) {
        neg.push_back(detail::sign_at_infinity(q, false));
        pos.push_back(detail::sign_at_infinity(q, true));
    }
    return detail::sign_variations(neg) - detail::sign_variations(pos);
}

/// All roots real, counted without multiplicity against the squarefree part.
inline bool is_hyperbolic_sturm(const ExactPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("is_hyperbolic_sturm: zero polynomial");
    ExactPoly f = p.squarefree_part();
    if (f.degree() == 0) return true;
    return sturm_real_root_count(f) == f.degree();
}

} // namespace jenhyp

#endif
