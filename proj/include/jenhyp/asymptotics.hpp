#ifndef JENHYP_ASYMPTOTICS_HPP
#define JENHYP_ASYMPTOTICS_HPP

#include <stdexcept>

#include "interval.hpp"

namespace jenhyp {

/// Shift index j together with the enclosure of t = c*j. Negative shifts
/// are allowed (the ratio inequality certificate needs j = -1).
struct ShiftRatio {
    long j;
    Interval t;

    explicit ShiftRatio(long j_, mpfr_prec_t prec = Interval::default_prec)
        : j(j_), t(Interval::hr_constant(prec) * j_) {}
};

/// w(n) = 1/sqrt(c(n - 1/24)).
inline Interval w_of(long n, mpfr_prec_t prec = Interval::default_prec) {
    if (n < 1) throw std::invalid_argument("w_of: n must be >= 1");
    Interval c = Interval::hr_constant(prec);
    Interval arg = c * (Interval(n, prec) - Interval(mpq_class(1, 24), prec));
    return arg.sqrt().recip();
}

/// delta(n) = c*w(n)^{3/2}/sqrt(2).
inline Interval delta_of(long n, mpfr_prec_t prec = Interval::default_prec) {
    Interval c = Interval::hr_constant(prec);
    Interval w = w_of(n, prec);
    Interval w32 = (w.pown(3)).sqrt();
    return c * w32 / Interval(2L, prec).sqrt();
}

/// Leading Hardy-Ramanujan term: F(w) = (pi^2/(6 sqrt 3))(w^2 - w^3) e^{1/w}.
inline Interval F_of(const Interval& w) {
    if (!w.is_positive())
        throw std::domain_error("F_of: enclosure of w must be strictly positive");
    Interval pi = Interval::pi(w.precision());
    Interval pref = pi * pi / (Interval(6L, w.precision()) * Interval(3L, w.precision()).sqrt());
    // w^2(1-w) rather than w^2 - w^3: stays positive on wide enclosures
    return pref * w.pown(2) * (Interval(1L, w.precision()) - w) * w.recip().exp();
}

/// R(j, w): closed-form approximation of p(n+j)/p(n) in terms of w = w(n).
inline Interval R_of(const ShiftRatio& sr, const Interval& w) {
    mpfr_prec_t prec = std::max(w.precision(), sr.t.precision());
    Interval one(1L, prec);
    Interval u = one + sr.t * w.pown(2);
    if (!u.is_positive())
        throw std::domain_error("R_of: 1 + t w^2 must stay positive");
    Interval root = u.sqrt();
    Interval one_minus_w = one - w;
    if (!one_minus_w.is_positive())
        throw std::domain_error("R_of: requires w < 1");
    Interval expo = (sr.t * w / (one + root)).exp();
    return expo * (root - w) / (one_minus_w * u * root);
}

/// L(w) = (1+21w)/(1-w) e^{-1/2w} + e^{-1/w}/(w^2 - w^3): relative-error
/// bound for F(w) against p(n), from Lehmer's truncation bound with N = 2.
inline Interval L_of(const Interval& w) {
    mpfr_prec_t prec = w.precision();
    if (!w.is_positive())
        throw std::domain_error("L_of: enclosure of w must be strictly positive");
    Interval one(1L, prec);
    if (!(one - w).is_positive())
        throw std::domain_error("L_of: requires w < 1");
    Interval inv_w = w.recip();
    Interval first = (one + Interval(21L, prec) * w) / (one - w) * (-(inv_w / 2)).exp();
    Interval second = (-inv_w).exp() / (w.pown(2) * (one - w));
    return first + second;
}

/// Upper bound from Lehmer's theorem on the series remainder |B(n, N)|:
/// (pi^2 N^{-2/3}/sqrt 3)(N^3 w^3 e^{1/Nw}/2 + 1/6).
inline Interval lehmer_B_bound(long n, long N, mpfr_prec_t prec = Interval::default_prec) {
    if (n < 1 || N < 1) throw std::invalid_argument("lehmer_B_bound: need n, N >= 1");
    Interval w = w_of(n, prec);
    Interval pi = Interval::pi(prec);
    Interval Nv(N, prec);
    Interval n23 = (Nv.log() * mpq_class(-2, 3)).exp(); // N^{-2/3}
    Interval pref = pi * pi * n23 / Interval(3L, prec).sqrt();
    Interval inner = Nv.pown(3) * w.pown(3) * ((Nv * w).recip().exp()) / 2 +
                     Interval(mpq_class(1, 6), prec);
    return pref * inner;
}

/// Lemma-style bound on |p(n+j)/p(n) - R(j,w)|: R(j,w) * 2L(w)/(1-L(w)).
inline Interval ratio_error_bound(const ShiftRatio& sr, const Interval& w) {
    Interval L = L_of(w);
    Interval one(1L, w.precision());
    if (!(one - L).is_positive())
        throw std::domain_error("ratio_error_bound: L(w) >= 1; use a smaller epsilon");
    return R_of(sr, w) * (Interval(2L, w.precision()) * L) / (one - L);
}

} // namespace jenhyp

#endif
