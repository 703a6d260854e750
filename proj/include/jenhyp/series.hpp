#ifndef JENHYP_SERIES_HPP
#define JENHYP_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "asymptotics.hpp"
#include "interval.hpp"

namespace jenhyp {

/// Truncated power series with interval coefficients, index k -> coefficient
/// of w^k. All ring operations truncate consistently at `order` (number of
/// retained coefficients).
class SeriesPoly {
public:
    SeriesPoly(std::size_t order, mpfr_prec_t prec = Interval::default_prec)
        : c_(order, Interval::zero(prec)), prec_(prec) {
        if (order == 0) throw std::invalid_argument("SeriesPoly: order must be >= 1");
    }

    static SeriesPoly constant(const Interval& v, std::size_t order) {
        SeriesPoly s(order, v.precision());
        s.c_[0] = v;
        return s;
    }

    std::size_t order() const { return c_.size(); }
    mpfr_prec_t precision() const { return prec_; }

    const Interval& operator[](std::size_t k) const { return c_.at(k); }
    Interval& operator[](std::size_t k) { return c_.at(k); }

    const std::vector<Interval>& coeffs() const { return c_; }

    friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
        check_compatible(a, b);
        SeriesPoly r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] += b.c_[k];
        return r;
    }

    friend SeriesPoly operator-(const SeriesPoly& a, const SeriesPoly& b) {
        check_compatible(a, b);
        SeriesPoly r = a;
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] -= b.c_[k];
        return r;
    }

    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
        check_compatible(a, b);
        SeriesPoly r(a.order(), a.prec_);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; i + j < a.c_.size() && j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }

    friend SeriesPoly operator*(const SeriesPoly& a, const Interval& s) {
        SeriesPoly r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    friend SeriesPoly operator*(const Interval& s, const SeriesPoly& a) { return a * s; }

    SeriesPoly operator-() const {
        SeriesPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    /// Multiply by w^k.
    SeriesPoly shift_up(std::size_t k) const {
        SeriesPoly r(order(), prec_);
        for (std::size_t i = 0; i + k < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    /// 1/f; requires the constant term to exclude zero.
    SeriesPoly recip() const {
        if (c_[0].contains_zero())
            throw std::domain_error("SeriesPoly::recip: constant term encloses zero");
        SeriesPoly r(order(), prec_);
        Interval inv0 = c_[0].recip();
        r.c_[0] = inv0;
        for (std::size_t n = 1; n < c_.size(); ++n) {
            Interval acc = Interval::zero(prec_);
            for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
            r.c_[n] = -inv0 * acc;
        }
        return r;
    }

    /// sqrt(f); requires a strictly positive constant term.
    SeriesPoly sqrt() const {
        if (!c_[0].is_positive())
            throw std::domain_error("SeriesPoly::sqrt: constant term not positive");
        SeriesPoly r(order(), prec_);
        r.c_[0] = c_[0].sqrt();
        Interval two_s0 = r.c_[0] * 2;
        for (std::size_t n = 1; n < c_.size(); ++n) {
            Interval acc = c_[n];
            for (std::size_t k = 1; k < n; ++k) acc -= r.c_[k] * r.c_[n - k];
            r.c_[n] = acc / two_s0;
        }
        return r;
    }

    /// exp(f); via g' = f'g after factoring out e^{f_0}.
    SeriesPoly exp() const {
        SeriesPoly r(order(), prec_);
        Interval e0 = c_[0].exp();
        r.c_[0] = Interval(1L, prec_);
        for (std::size_t n = 1; n < c_.size(); ++n) {
            Interval acc = Interval::zero(prec_);
            for (std::size_t k = 1; k <= n; ++k)
                acc += Interval(static_cast<long>(k), prec_) * c_[k] * r.c_[n - k];
            r.c_[n] = acc / Interval(static_cast<long>(n), prec_);
        }
        for (auto& v : r.c_) v *= e0;
        return r;
    }

    /// Horner evaluation at an interval point.
    Interval eval(const Interval& x) const {
        Interval acc = Interval::zero(prec_);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

private:
    static void check_compatible(const SeriesPoly& a, const SeriesPoly& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("SeriesPoly: mismatched truncation orders");
    }

    std::vector<Interval> c_;
    mpfr_prec_t prec_;
};

/// Taylor expansion of R(j, w) around w = x0 in the offset h = w - x0; the
/// k-th coefficient encloses R^{(k)}(j, x)/k! for every x in x0. With a thin
/// x0 = 0 this is the plain Maclaurin series of Eq-2.3 shape.
inline SeriesPoly r_series_at(const ShiftRatio& sr, const Interval& x0, std::size_t order) {
    mpfr_prec_t prec = std::max(x0.precision(), sr.t.precision());
    SeriesPoly w(order, prec);
    w[0] = x0;
    if (order > 1) w[1] = Interval(1L, prec);
    SeriesPoly one = SeriesPoly::constant(Interval(1L, prec), order);
    SeriesPoly u = one + sr.t * (w * w);
    if (!u[0].is_positive())
        throw std::domain_error("r_series_at: 1 + t w^2 must stay positive");
    SeriesPoly root = u.sqrt();
    SeriesPoly a = ((sr.t * w) * (one + root).recip()).exp();
    SeriesPoly b = root - w;
    SeriesPoly cd = ((one - w) * u * root).recip(); // 1/((1-w)(1+tw^2)^{3/2})
    return a * b * cd;
}

/// Degree order-1 Taylor polynomial coefficients of R(j, w) at w = 0.
inline SeriesPoly taylor_of_R(const ShiftRatio& sr, std::size_t order,
                              mpfr_prec_t prec = Interval::default_prec) {
    if (order < 1) throw std::invalid_argument("taylor_of_R: order must be >= 1");
    return r_series_at(sr, Interval(0L, prec), order);
}

} // namespace jenhyp

#endif
