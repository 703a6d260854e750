#ifndef JENHYP_INTERVAL_HPP
#define JENHYP_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>

namespace jenhyp {

/// Enclosure [lo, hi] of a real number, with outward-rounded arithmetic.
///
/// Every operation rounds the lower endpoint toward -inf and the upper
/// endpoint toward +inf, so the result always contains the exact value.
class Interval {
public:
    static constexpr mpfr_prec_t default_prec = 128;

    Interval() : Interval(raw_t{}, default_prec) {}

    /// Zero interval at a chosen working precision.
    static Interval zero(mpfr_prec_t prec = default_prec) { return Interval(raw_t{}, prec); }

    Interval(long v, mpfr_prec_t prec = default_prec) : prec_(prec) {
        init();
        mpfr_set_si(lo_, v, MPFR_RNDD);
        mpfr_set_si(hi_, v, MPFR_RNDU);
    }

    Interval(const mpq_class& q, mpfr_prec_t prec = default_prec) : prec_(prec) {
        init();
        mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
    }

    Interval(const mpz_class& z, mpfr_prec_t prec = default_prec) : prec_(prec) {
        init();
        mpfr_set_z(lo_, z.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(hi_, z.get_mpz_t(), MPFR_RNDU);
    }

    /// Smallest enclosure of a decimal string, e.g. "0.021".
    static Interval from_string(const std::string& s, mpfr_prec_t prec = default_prec) {
        Interval r(raw_t{}, prec);
        if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 &&
            mpfr_nan_p(r.lo_))
            throw std::invalid_argument("Interval::from_string: bad literal '" + s + "'");
        if (mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU) != 0 && mpfr_nan_p(r.hi_))
            throw std::invalid_argument("Interval::from_string: bad literal '" + s + "'");
        return r;
    }

    static Interval from_endpoints(const std::string& lo, const std::string& hi,
                                   mpfr_prec_t prec = default_prec) {
        Interval r(raw_t{}, prec);
        mpfr_set_str(r.lo_, lo.c_str(), 10, MPFR_RNDD);
        mpfr_set_str(r.hi_, hi.c_str(), 10, MPFR_RNDU);
        if (mpfr_nan_p(r.lo_) || mpfr_nan_p(r.hi_) || mpfr_cmp(r.lo_, r.hi_) > 0)
            throw std::invalid_argument("Interval::from_endpoints: bad endpoints");
        return r;
    }

    /// Exact conversion of double endpoints (doubles embed in any prec >= 53).
    static Interval from_doubles(double lo, double hi, mpfr_prec_t prec = default_prec) {
        Interval r(raw_t{}, prec);
        mpfr_set_d(r.lo_, lo, MPFR_RNDD);
        mpfr_set_d(r.hi_, hi, MPFR_RNDU);
        return r;
    }

    static Interval pi(mpfr_prec_t prec = default_prec) {
        Interval r(raw_t{}, prec);
        mpfr_const_pi(r.lo_, MPFR_RNDD);
        mpfr_const_pi(r.hi_, MPFR_RNDU);
        return r;
    }

    static Interval euler_e(mpfr_prec_t prec = default_prec) {
        Interval r(raw_t{}, prec);
        mpfr_set_si(r.lo_, 1, MPFR_RNDN);
        mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
        mpfr_set_si(r.hi_, 1, MPFR_RNDN);
        mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
        return r;
    }

    /// c = 2*pi^2/3, the constant in w(n).
    static Interval hr_constant(mpfr_prec_t prec = default_prec) {
        Interval p = pi(prec);
        return (p * p) * mpq_class(2, 3);
    }

    Interval(const Interval& o) : prec_(o.prec_) {
        init();
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }

    Interval(Interval&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }

    Interval& operator=(const Interval& o) {
        if (this != &o) {
            if (prec_ != o.prec_) {
                mpfr_set_prec(lo_, o.prec_);
                mpfr_set_prec(hi_, o.prec_);
                prec_ = o.prec_;
            }
            mpfr_set(lo_, o.lo_, MPFR_RNDD);
            mpfr_set(hi_, o.hi_, MPFR_RNDU);
        }
        return *this;
    }

    Interval& operator=(Interval&& o) noexcept {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        std::swap(prec_, o.prec_);
        return *this;
    }

    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    mpfr_prec_t precision() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    double lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_double() const { return 0.5 * (lo_double() + hi_double()); }

    bool contains_zero() const {
        return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
    }
    bool is_positive() const { return mpfr_sgn(lo_) > 0; }
    bool is_negative() const { return mpfr_sgn(hi_) < 0; }
    bool is_nonnegative() const { return mpfr_sgn(lo_) >= 0; }

    bool contains(const Interval& o) const {
        return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
    }
    bool intersects(const Interval& o) const {
        return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
    }
    bool contains_rational(const mpq_class& q) const {
        return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
    }

    /// True if the enclosure is strictly below the other (disjoint order).
    bool strictly_less(const Interval& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }

    Interval width() const {
        Interval r(raw_t{}, prec_);
        mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
        mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
        return r;
    }

    double width_double() const {
        mpfr_t t;
        mpfr_init2(t, 64);
        mpfr_sub(t, hi_, lo_, MPFR_RNDU);
        double w = mpfr_get_d(t, MPFR_RNDU);
        mpfr_clear(t);
        return w;
    }

    /// Thin interval at the midpoint.
    Interval midpoint() const {
        Interval r(raw_t{}, prec_);
        mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
        mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
        mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
        return r;
    }

    Interval lower_endpoint() const {
        Interval r(raw_t{}, prec_);
        mpfr_set(r.lo_, lo_, MPFR_RNDN);
        mpfr_set(r.hi_, lo_, MPFR_RNDN);
        return r;
    }

    Interval upper_endpoint() const {
        Interval r(raw_t{}, prec_);
        mpfr_set(r.lo_, hi_, MPFR_RNDN);
        mpfr_set(r.hi_, hi_, MPFR_RNDN);
        return r;
    }

    /// Enclosure of |x| over the interval.
    Interval abs_enclosure() const {
        Interval r(raw_t{}, prec_);
        if (contains_zero()) {
            mpfr_set_zero(r.lo_, 1);
        } else {
            mpfr_abs(r.lo_, lo_, MPFR_RNDD);
            mpfr_t t;
            mpfr_init2(t, prec_);
            mpfr_abs(t, hi_, MPFR_RNDD);
            mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
            mpfr_clear(t);
        }
        mpfr_abs(r.hi_, lo_, MPFR_RNDU);
        mpfr_t t2;
        mpfr_init2(t2, prec_);
        mpfr_abs(t2, hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t2, MPFR_RNDU);
        mpfr_clear(t2);
        return r;
    }

    /// Upper bound on |x| over the interval.
    Interval mag() const {
        Interval r(raw_t{}, prec_);
        mpfr_abs(r.lo_, lo_, MPFR_RNDU);
        mpfr_abs(r.hi_, hi_, MPFR_RNDU);
        if (mpfr_cmp(r.lo_, r.hi_) > 0) mpfr_set(r.hi_, r.lo_, MPFR_RNDU);
        mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
        return r;
    }

    Interval operator-() const {
        Interval r(raw_t{}, prec_);
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r(raw_t{}, std::max(a.prec_, b.prec_));
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r(raw_t{}, std::max(a.prec_, b.prec_));
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }

    friend Interval operator*(const Interval& a, const Interval& b) {
        Interval r(raw_t{}, std::max(a.prec_, b.prec_));
        mpfr_t t;
        mpfr_init2(t, r.prec_);
        // lo: min of the four endpoint products rounded down
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        // hi: max of the four rounded up
        mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero())
            throw std::domain_error("Interval division by enclosure of zero");
        Interval r(raw_t{}, std::max(a.prec_, b.prec_));
        mpfr_t t;
        mpfr_init2(t, r.prec_);
        mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDD);
        mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
        mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
        mpfr_div(t, a.lo_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_div(t, a.hi_, b.hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
        return r;
    }

    friend Interval operator+(const Interval& a, long b) { return a + Interval(b, a.prec_); }
    friend Interval operator+(long a, const Interval& b) { return Interval(a, b.prec_) + b; }
    friend Interval operator-(const Interval& a, long b) { return a - Interval(b, a.prec_); }
    friend Interval operator-(long a, const Interval& b) { return Interval(a, b.prec_) - b; }
    friend Interval operator*(const Interval& a, long b) { return a * Interval(b, a.prec_); }
    friend Interval operator*(long a, const Interval& b) { return Interval(a, b.prec_) * b; }
    friend Interval operator/(const Interval& a, long b) { return a / Interval(b, a.prec_); }
    friend Interval operator/(long a, const Interval& b) { return Interval(a, b.prec_) / b; }
    friend Interval operator*(const Interval& a, const mpq_class& q) { return a * Interval(q, a.prec_); }
    friend Interval operator*(const mpq_class& q, const Interval& a) { return a * Interval(q, a.prec_); }

    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }
    Interval& operator/=(const Interval& o) { return *this = *this / o; }

    Interval sqrt() const {
        if (mpfr_sgn(lo_) < 0)
            throw std::domain_error("Interval::sqrt of partially negative enclosure");
        Interval r(raw_t{}, prec_);
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    Interval exp() const {
        Interval r(raw_t{}, prec_);
        mpfr_exp(r.lo_, lo_, MPFR_RNDD);
        mpfr_exp(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    Interval log() const {
        if (mpfr_sgn(lo_) <= 0)
            throw std::domain_error("Interval::log of enclosure touching zero");
        Interval r(raw_t{}, prec_);
        mpfr_log(r.lo_, lo_, MPFR_RNDD);
        mpfr_log(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    Interval log10() const {
        if (mpfr_sgn(lo_) <= 0)
            throw std::domain_error("Interval::log10 of enclosure touching zero");
        Interval r(raw_t{}, prec_);
        mpfr_log10(r.lo_, lo_, MPFR_RNDD);
        mpfr_log10(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    Interval recip() const { return Interval(1L, prec_) / *this; }

    /// Integer power, handling sign cases for even exponents.
    Interval pown(long n) const {
        if (n == 0) return Interval(1L, prec_);
        if (n < 0) return pown(-n).recip();
        Interval base = *this;
        if (n % 2 == 0 && contains_zero()) {
            // even power of a straddling interval: [0, max(|lo|,|hi|)^n]
            Interval m = mag();
            Interval r(raw_t{}, prec_);
            mpfr_set_zero(r.lo_, 1);
            mpfr_pow_si(r.hi_, m.hi(), n, MPFR_RNDU);
            return r;
        }
        // monotone on each sign half; endpoint evaluation suffices
        Interval r(raw_t{}, prec_);
        if (n % 2 == 0 && is_negative()) {
            mpfr_pow_si(r.lo_, hi_, n, MPFR_RNDD);
            mpfr_pow_si(r.hi_, lo_, n, MPFR_RNDU);
        } else {
            mpfr_pow_si(r.lo_, lo_, n, MPFR_RNDD);
            mpfr_pow_si(r.hi_, hi_, n, MPFR_RNDU);
        }
        return r;
    }

    friend Interval hull(const Interval& a, const Interval& b) {
        Interval r(raw_t{}, std::max(a.prec_, b.prec_));
        mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }

    /// floor(x) when it is unambiguous from the enclosure.
    long floor_long() const {
        mpfr_t fl, fh;
        mpfr_init2(fl, prec_);
        mpfr_init2(fh, prec_);
        mpfr_floor(fl, lo_);
        mpfr_floor(fh, hi_);
        if (!mpfr_equal_p(fl, fh)) {
            mpfr_clear(fl);
            mpfr_clear(fh);
            throw std::runtime_error("Interval::floor_long: enclosure straddles an integer");
        }
        long v = mpfr_get_si(fl, MPFR_RNDN);
        mpfr_clear(fl);
        mpfr_clear(fh);
        return v;
    }

    /// Exact rational equal to the lower endpoint.
    mpq_class lo_rational() const {
        mpz_class m;
        mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), lo_);
        mpq_class q(m);
        if (e >= 0) {
            mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), e);
        } else {
            mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), -e);
        }
        q.canonicalize();
        return q;
    }

    std::string lo_string(int digits = 40) const { return fmt_mpfr(lo_, digits, MPFR_RNDD); }
    std::string hi_string(int digits = 40) const { return fmt_mpfr(hi_, digits, MPFR_RNDU); }

    std::string to_string(int digits = 20) const {
        return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
    }

    /// Widen to a higher working precision (enclosure unchanged).
    Interval widen_to(mpfr_prec_t prec) const {
        Interval r(raw_t{}, prec);
        mpfr_set(r.lo_, lo_, MPFR_RNDD);
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
        return r;
    }

private:
    struct raw_t {};

    Interval(raw_t, mpfr_prec_t prec) : prec_(prec) {
        init();
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    void init() {
        mpfr_init2(lo_, prec_);
        mpfr_init2(hi_, prec_);
    }

    static std::string fmt_mpfr(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*R*e", digits, rnd, x);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    mpfr_prec_t prec_;
    mpfr_t lo_;
    mpfr_t hi_;
};

} // namespace jenhyp

#endif
