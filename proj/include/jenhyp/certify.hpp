#ifndef JENHYP_CERTIFY_HPP
#define JENHYP_CERTIFY_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel.hpp"
#include "interval.hpp"
#include "jensen.hpp"
#include "series.hpp"
#include "supbound.hpp"

namespace jenhyp {

/// Exact rational value of a plain decimal string like "0.021" or "-3.5e-2".
inline mpq_class parse_decimal(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    mpz_class num(0);
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw std::invalid_argument("parse_decimal: bad number: " + s);
            seen_dot = true;
            continue;
        }
        num = num * 10 + (s[i] - '0');
        if (seen_dot) ++frac_digits;
        seen_digit = true;
    }
    long exp10 = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) exp10 = std::stol(s.substr(i + 1)), i = s.size();
    if (!seen_digit || i != s.size())
        throw std::invalid_argument("parse_decimal: bad number: " + s);
    mpq_class q(num);
    long shift = exp10 - frac_digits;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        q *= mpq_class(pow10);
    else
        q /= mpq_class(pow10);
    return neg ? mpq_class(-q) : q;
}

/// Polynomial in w whose coefficients are polynomials in error symbols
/// E_1..E_k, stored as a map from E-exponent vectors to truncated
/// w-coefficient lists.
class ErrorPoly {
public:
    using Expvec = std::vector<int>;

    ErrorPoly(std::size_t nsyms, std::size_t order, mpfr_prec_t prec = Interval::default_prec)
        : nsyms_(nsyms), order_(order), prec_(prec) {
        if (order == 0) throw std::invalid_argument("ErrorPoly: order must be >= 1");
    }

    static ErrorPoly from_series(const SeriesPoly& s, std::size_t nsyms) {
        ErrorPoly r(nsyms, s.order(), s.precision());
        r.accumulate(Expvec(nsyms, 0), s, 0, Interval(1L, s.precision()));
        return r;
    }

    static ErrorPoly constant(const Interval& v, std::size_t nsyms, std::size_t order) {
        return from_series(SeriesPoly::constant(v, order), nsyms);
    }

    /// E_{sym} * w^{w_power}.
    static ErrorPoly error_symbol(std::size_t nsyms, std::size_t sym, std::size_t w_power,
                                  std::size_t order, mpfr_prec_t prec = Interval::default_prec) {
        ErrorPoly r(nsyms, order, prec);
        Expvec e(nsyms, 0);
        e.at(sym) = 1;
        std::vector<Interval> c(order, Interval::zero(prec));
        c.at(w_power) = Interval(1L, prec);
        r.terms_.emplace(std::move(e), std::move(c));
        return r;
    }

    std::size_t nsyms() const { return nsyms_; }
    std::size_t order() const { return order_; }
    mpfr_prec_t precision() const { return prec_; }
    const std::map<Expvec, std::vector<Interval>>& terms() const { return terms_; }

    /// Add scale * s * w^{w_shift} into the coefficient of E^e.
    void accumulate(const Expvec& e, const SeriesPoly& s, std::size_t w_shift,
                    const Interval& scale) {
        if (e.size() != nsyms_) throw std::invalid_argument("ErrorPoly: arity mismatch");
        auto& dst = coeffs_for(e);
        for (std::size_t i = 0; i < s.order() && i + w_shift < order_; ++i)
            dst[i + w_shift] += scale * s[i];
    }

    friend ErrorPoly operator+(const ErrorPoly& a, const ErrorPoly& b) {
        check_compatible(a, b);
        ErrorPoly r = a;
        for (const auto& [e, c] : b.terms_) {
            auto& dst = r.coeffs_for(e);
            for (std::size_t i = 0; i < r.order_; ++i) dst[i] += c[i];
        }
        return r;
    }

    friend ErrorPoly operator-(const ErrorPoly& a, const ErrorPoly& b) {
        check_compatible(a, b);
        ErrorPoly r = a;
        for (const auto& [e, c] : b.terms_) {
            auto& dst = r.coeffs_for(e);
            for (std::size_t i = 0; i < r.order_; ++i) dst[i] -= c[i];
        }
        return r;
    }

    friend ErrorPoly operator*(const ErrorPoly& a, const ErrorPoly& b) {
        check_compatible(a, b);
        ErrorPoly r(a.nsyms_, a.order_, a.prec_);
        Expvec e(a.nsyms_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t k = 0; k < a.nsyms_; ++k) e[k] = ea[k] + eb[k];
                auto& dst = r.coeffs_for(e);
                for (std::size_t i = 0; i < a.order_; ++i) {
                    if (ca[i].contains_zero() && ca[i].width_double() == 0.0) continue;
                    for (std::size_t j = 0; i + j < a.order_ && j < b.order_; ++j)
                        dst[i + j] += ca[i] * cb[j];
                }
            }
        return r;
    }

    friend ErrorPoly operator*(const ErrorPoly& a, const Interval& s) {
        ErrorPoly r = a;
        for (auto& [e, c] : r.terms_)
            for (auto& v : c) v *= s;
        return r;
    }

private:
    static void check_compatible(const ErrorPoly& a, const ErrorPoly& b) {
        if (a.nsyms_ != b.nsyms_ || a.order_ != b.order_)
            throw std::invalid_argument("ErrorPoly: mismatched shapes");
    }

    std::vector<Interval>& coeffs_for(const Expvec& e) {
        auto it = terms_.find(e);
        if (it == terms_.end())
            it = terms_.emplace(e, std::vector<Interval>(order_, Interval::zero(prec_))).first;
        return it->second;
    }

    std::size_t nsyms_;
    std::size_t order_;
    mpfr_prec_t prec_;
    std::map<Expvec, std::vector<Interval>> terms_;
};

/// Shifted, error-minimized lower-bound polynomial for one D_{d,m}: after
/// dividing by w^k, coefficient 0 and 1 are genuine enclosures and every
/// later coefficient is a nonpositive lower bound with the error symbols
/// replaced by their worst case.
struct PerMCertificate {
    long m = 0;
    long k = 0;
    std::vector<Interval> coefficients;
    Interval value_at_epsilon;
    int sign_changes = 0;
    bool cancellation_ok = false;
    bool positive = false;
};

struct ThresholdCertificate {
    long d = 0;
    long s = 0;
    std::string epsilon;
    mpfr_prec_t precision_bits = 0;
    SupStrategy sup_strategy = SupStrategy::branch_and_bound;
    std::vector<Interval> error_bounds; // |E_j| for j = 1..d
    std::vector<PerMCertificate> per_m; // m = 2..d
    long threshold_n0 = 0;              // certifies hyperbolicity for all n > threshold_n0
    bool verified = false;
};

namespace detail {

/// n0 = floor(1/(c eps^2) + 1/24): w(n) <= eps exactly when n > n0.
inline long threshold_from_epsilon(const mpq_class& eps, mpfr_prec_t prec) {
    Interval c = Interval::hr_constant(prec);
    Interval e(eps, prec);
    Interval expr = (c * e.pown(2)).recip() + Interval(mpq_class(1, 24), prec);
    return expr.floor_long();
}

/// Worst-case magnitude of one E-monomial coefficient: |coeff| * prod bound^exp.
inline Interval error_magnitude(const Interval& coeff, const ErrorPoly::Expvec& e,
                                const std::vector<Interval>& bounds, mpfr_prec_t prec) {
    Interval m = coeff.mag();
    for (std::size_t j = 0; j < e.size(); ++j)
        for (int k = 0; k < e[j]; ++k) m *= bounds[j].mag();
    (void)prec;
    return m;
}

/// Descartes count over interval coefficients; indeterminate signs are
/// reported as -1 (certification then fails).
inline int interval_sign_changes(const std::vector<Interval>& c) {
    int changes = 0, prev = 0;
    for (const auto& v : c) {
        int s;
        if (v.is_positive())
            s = 1;
        else if (v.is_negative())
            s = -1;
        else if (v.width_double() == 0.0 && v.contains_zero())
            s = 0;
        else
            return -1;
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

/// Reduce an ErrorPoly to certified per-degree lower-bound coefficients:
/// the first n_exact coefficients from w^k on are full enclosures, the rest
/// are floored at zero. Checks that everything below w^k cancels.
inline PerMCertificate reduce_expansion(const ErrorPoly& expansion, long k,
                                        const std::vector<Interval>& error_bounds,
                                        const Interval& eps, std::size_t n_exact = 2) {
    mpfr_prec_t prec = expansion.precision();
    std::size_t order = expansion.order();
    std::size_t ku = static_cast<std::size_t>(k);
    if (ku + 1 >= order) throw std::invalid_argument("reduce_expansion: k beyond order");

    std::vector<Interval> pure(order, Interval::zero(prec));
    std::vector<Interval> err_mag(order, Interval::zero(prec));
    bool pure_seen = false;
    for (const auto& [e, coeffs] : expansion.terms()) {
        bool is_pure = true;
        for (int v : e) is_pure = is_pure && v == 0;
        for (std::size_t i = 0; i < order; ++i) {
            if (is_pure)
                pure[i] += coeffs[i];
            else
                err_mag[i] += error_magnitude(coeffs[i], e, error_bounds, prec);
        }
        pure_seen = pure_seen || is_pure;
    }
    if (!pure_seen) throw std::logic_error("reduce_expansion: no error-free part");

    PerMCertificate cert;
    cert.k = k;

    // scale for deciding that a residual coefficient is numerical noise
    Interval c0 = hull(pure[ku] - err_mag[ku], pure[ku] + err_mag[ku]);
    double tol = 1e-10 * c0.abs_enclosure().hi_double();
    cert.cancellation_ok = true;
    for (std::size_t i = 0; i < ku; ++i) {
        Interval low = pure[i] - err_mag[i];
        Interval high = pure[i] + err_mag[i];
        Interval span = hull(low, high);
        if (!span.contains_rational(mpq_class(0)) ||
            span.abs_enclosure().hi_double() > tol)
            cert.cancellation_ok = false;
    }

    for (std::size_t i = ku; i < ku + n_exact && i < order; ++i)
        cert.coefficients.push_back(hull(pure[i] - err_mag[i], pure[i] + err_mag[i]));
    for (std::size_t i = ku + n_exact; i < order; ++i) {
        Interval low = (pure[i] - err_mag[i]).lower_endpoint();
        if (low.is_positive()) low = Interval::zero(prec);
        cert.coefficients.push_back(low);
    }

    Interval acc = Interval::zero(prec);
    for (std::size_t i = cert.coefficients.size(); i-- > 0;)
        acc = acc * eps + cert.coefficients[i];
    cert.value_at_epsilon = acc;
    cert.sign_changes = interval_sign_changes(cert.coefficients);
    cert.positive = cert.coefficients[0].is_positive() && cert.value_at_epsilon.is_positive() &&
                    cert.sign_changes >= 0 && cert.sign_changes <= 1;
    return cert;
}

/// Memoized products of the pure coefficient series B_j = C(d,j) A_s(j, w).
class SeriesProductCache {
public:
    SeriesProductCache(std::vector<SeriesPoly> base, std::size_t order, mpfr_prec_t prec)
        : base_(std::move(base)), order_(order), prec_(prec) {}

    const SeriesPoly& product(const std::vector<int>& exps) {
        auto it = cache_.find(exps);
        if (it != cache_.end()) return it->second;
        SeriesPoly value = SeriesPoly::constant(Interval(1L, prec_), order_);
        std::size_t j = 0;
        while (j < exps.size() && exps[j] == 0) ++j;
        if (j < exps.size()) {
            std::vector<int> smaller = exps;
            smaller[j] -= 1;
            value = product(smaller) * base_[j];
        }
        return cache_.emplace(exps, std::move(value)).first->second;
    }

private:
    std::vector<SeriesPoly> base_;
    std::size_t order_;
    mpfr_prec_t prec_;
    std::map<std::vector<int>, SeriesPoly> cache_;
};

/// Substitute a_j = C(d,j)(A_s(j,w) + E_j w^s) into the symbolic D_{d,m}.
inline ErrorPoly expand_hankel_with_errors(long d, long m, long s, mpfr_prec_t prec) {
    std::size_t order = static_cast<std::size_t>((2 * m - 2) * s) + 1;
    std::size_t nv = static_cast<std::size_t>(d) + 1;

    std::vector<SeriesPoly> base;
    base.reserve(nv);
    base.push_back(SeriesPoly::constant(Interval(1L, prec), order)); // shift 0 is exact
    for (long j = 1; j <= d; ++j) {
        SeriesPoly a = taylor_of_R(ShiftRatio(j, prec), static_cast<std::size_t>(s), prec);
        SeriesPoly padded(order, prec);
        for (std::size_t i = 0; i < a.order(); ++i) padded[i] = a[i];
        base.push_back(padded * Interval(binomial(d, j), prec));
    }
    SeriesProductCache cache(std::move(base), order, prec);

    const SymbolicHankel& sym = hankel_symbolic(d, m);
    ErrorPoly out(static_cast<std::size_t>(d), order, prec);
    std::vector<int> verr(static_cast<std::size_t>(d), 0);
    std::vector<int> pure_exp(nv, 0);
    for (const auto& [monomial, q] : sym.poly.terms()) {
        // walk every split of the monomial into pure and error factors
        std::vector<int> v(nv, 0);
        while (true) {
            long w_shift = 0;
            mpz_class multiplier = 1;
            bool valid = true;
            for (std::size_t j = 0; j < nv; ++j) {
                if (v[j] > monomial[j]) valid = false;
                if (j == 0 && v[j] > 0) valid = false; // E_0 = 0
            }
            if (valid) {
                for (std::size_t j = 0; j < nv; ++j) {
                    pure_exp[j] = monomial[j] - v[j];
                    if (v[j] == 0) continue;
                    w_shift += s * v[j];
                    mpz_class choose;
                    mpz_bin_uiui(choose.get_mpz_t(), static_cast<unsigned long>(monomial[j]),
                                 static_cast<unsigned long>(v[j]));
                    multiplier *= choose;
                    for (int t = 0; t < v[j]; ++t)
                        multiplier *= binomial(d, static_cast<long>(j));
                }
                if (static_cast<std::size_t>(w_shift) < order) {
                    for (std::size_t j = 1; j < nv; ++j) verr[j - 1] = v[j];
                    Interval scale(q * mpq_class(multiplier), prec);
                    out.accumulate(verr, cache.product(pure_exp),
                                   static_cast<std::size_t>(w_shift), scale);
                }
            }
            // odometer over 0 <= v <= monomial
            std::size_t pos = 0;
            while (pos < nv) {
                if (v[pos] < monomial[pos]) {
                    ++v[pos];
                    break;
                }
                v[pos] = 0;
                ++pos;
            }
            if (pos == nv) break;
        }
    }
    return out;
}

} // namespace detail

/// Certify that J^{d,n} is hyperbolic for every n > threshold_n0, by
/// expanding each D_{d,m} in w with controlled Taylor errors and verifying
/// the sign pattern of the resulting lower-bound polynomials.
inline ThresholdCertificate certify_threshold(long d, long s, const std::string& epsilon,
                                              mpfr_prec_t precision = Interval::default_prec,
                                              SupStrategy strategy = SupStrategy::branch_and_bound,
                                              bool allow_escalation = true) {
    if (d < 2) throw std::invalid_argument("certify_threshold: d must be >= 2");
    if (s < 2) throw std::invalid_argument("certify_threshold: s must be >= 2");
    mpq_class eps_q = parse_decimal(epsilon);
    if (eps_q <= 0) throw std::invalid_argument("certify_threshold: epsilon must be positive");

    ThresholdCertificate cert;
    cert.d = d;
    cert.s = s;
    cert.epsilon = epsilon;
    cert.sup_strategy = strategy;
    cert.threshold_n0 = detail::threshold_from_epsilon(eps_q, precision);

    for (mpfr_prec_t prec = precision;; prec *= 2) {
        cert.precision_bits = prec;
        cert.error_bounds.clear();
        cert.per_m.clear();
        Interval eps(eps_q, prec);
        for (long j = 1; j <= d; ++j)
            cert.error_bounds.push_back(
                taylor_error_bound(ShiftRatio(j, prec), s, eps, strategy).total);

        cert.verified = true;
        for (long m = 2; m <= d; ++m) {
            ErrorPoly expansion = detail::expand_hankel_with_errors(d, m, s, prec);
            PerMCertificate pm =
                detail::reduce_expansion(expansion, 3 * m * (m - 1) / 2, cert.error_bounds, eps);
            pm.m = m;
            cert.verified = cert.verified && pm.cancellation_ok && pm.positive;
            cert.per_m.push_back(std::move(pm));
        }
        if (cert.verified || !allow_escalation || prec >= 2 * precision) break;
    }
    return cert;
}

/// One-sided ratio inequality certificate: for n with w(n) <= eps,
/// 4(1-u_n)(1-u_{n+1}) < (1 + pi/(sqrt 24 n^{3/2}))(1 - u_n u_{n+1})^2
/// holds because the rewritten form is w^10 (25 pi^12/729 - x(w)) with x
/// increasing and small at eps.
struct RatioInequalityCertificate {
    long s = 0;
    std::string epsilon;
    mpfr_prec_t precision_bits = 0;
    std::vector<Interval> error_bounds; // shifts -1, 1, 2
    Interval leading;                   // coefficient of w^10
    std::vector<Interval> coefficients; // lower bounds after dividing by w^10
    Interval value_at_epsilon;
    long threshold_n0 = 0;
    bool cancellation_ok = false;
    bool verified = false;
};

inline RatioInequalityCertificate certify_ratio_inequality(
    const std::string& epsilon = "0.013", long s = 6,
    mpfr_prec_t precision = Interval::default_prec,
    SupStrategy strategy = SupStrategy::branch_and_bound) {
    mpq_class eps_q = parse_decimal(epsilon);
    if (eps_q <= 0)
        throw std::invalid_argument("certify_ratio_inequality: epsilon must be positive");
    mpfr_prec_t prec = precision;
    Interval eps(eps_q, prec);

    RatioInequalityCertificate cert;
    cert.s = s;
    cert.epsilon = epsilon;
    cert.precision_bits = prec;
    cert.threshold_n0 = detail::threshold_from_epsilon(eps_q, prec);

    const long shifts[3] = {-1, 1, 2};
    for (long sh : shifts)
        cert.error_bounds.push_back(taylor_error_bound(ShiftRatio(sh, prec), s, eps, strategy).total);

    std::size_t order = 41;
    std::size_t nsyms = 3;
    auto make_a = [&](std::size_t sym) {
        SeriesPoly a = taylor_of_R(ShiftRatio(shifts[sym], prec), static_cast<std::size_t>(s), prec);
        SeriesPoly padded(order, prec);
        for (std::size_t i = 0; i < a.order(); ++i) padded[i] = a[i];
        return ErrorPoly::from_series(padded, nsyms) +
               ErrorPoly::error_symbol(nsyms, sym, static_cast<std::size_t>(s), order, prec);
    };
    ErrorPoly am1 = make_a(0), a1 = make_a(1), a2 = make_a(2);
    ErrorPoly one = ErrorPoly::constant(Interval(1L, prec), nsyms, order);

    SeriesPoly w3(order, prec);
    Interval pi = Interval::pi(prec);
    w3[3] = pi.pown(4) / 9;
    ErrorPoly weight = one + ErrorPoly::from_series(w3, nsyms);

    ErrorPoly inner = a1 * a1 - am1 * a1 * a2;
    ErrorPoly expr = weight * (inner * inner) -
                     (a1 * a1 * (one - am1 * a1) * (a1 * a1 - a2)) * Interval(4L, prec);

    PerMCertificate reduced = detail::reduce_expansion(expr, 10, cert.error_bounds, eps, 1);
    cert.leading = reduced.coefficients[0];
    cert.coefficients = reduced.coefficients;
    cert.value_at_epsilon = reduced.value_at_epsilon;
    cert.cancellation_ok = reduced.cancellation_ok;
    cert.verified = reduced.cancellation_ok && reduced.positive;
    return cert;
}

/// Exact check of the ratio inequality at one n >= 2, using a rational lower
/// bound for the pi/(sqrt 24 n^{3/2}) correction.
inline bool ratio_inequality_exact(long n, const PartitionTable& table,
                                   mpfr_prec_t prec = Interval::default_prec) {
    if (n < 2) throw std::invalid_argument("ratio_inequality_exact: n must be >= 2");
    auto u = [&](long i) {
        mpq_class r(table.at(i + 1) * table.at(i - 1), table.at(i) * table.at(i));
        r.canonicalize();
        return r;
    };
    mpq_class un = u(n), un1 = u(n + 1);
    Interval nv(n, prec);
    Interval corr = Interval::pi(prec) /
                    (Interval(24L, prec).sqrt() * (nv.pown(3)).sqrt());
    mpq_class corr_lo = corr.lower_endpoint().lo_rational();
    if (corr_lo < 0) corr_lo = 0;
    mpq_class lhs = 4 * (1 - un) * (1 - un1);
    mpq_class rhs = (1 + corr_lo) * (1 - un * un1) * (1 - un * un1);
    return lhs < rhs;
}

/// Log-space verification of the general-d bound chain: the accumulated
/// error coefficient times epsilon(d) = (3d)^{-12d} (50d)^{-3d^2/2} stays
/// at most 1, so N(d) <= (3d)^{24d} (50d)^{3d^2}.
struct GeneralBoundReport {
    long d = 0;
    Interval log10_epsilon;
    Interval log10_n_bound;
    Interval log_term_count;        // ln of d^{2d} 2^{d^2}
    Interval log_binomial_factor;   // ln of (e^{4e/c^2})^{d^2}
    Interval log_taylor_error;      // ln of 2e^2 (3d)^{10d-10} (4cd)^{3d^2/2}
    Interval log_error_coefficient; // ln of the full error product
    mpq_class hermite_hankel_floor = 1; // Delta_m(H_d) never drops below this
    bool chain_ok = false;
};

inline GeneralBoundReport general_bound(long d, mpfr_prec_t prec = Interval::default_prec) {
    if (d < 2) throw std::invalid_argument("general_bound: d must be >= 2");
    GeneralBoundReport rep;
    rep.d = d;
    Interval c = Interval::hr_constant(prec);
    Interval e = Interval::euler_e(prec);
    Interval dd(d, prec);
    Interval ln10 = Interval(10L, prec).log();
    Interval log_3d = (Interval(3L, prec) * dd).log();
    Interval log_50d = (Interval(50L, prec) * dd).log();

    rep.log10_n_bound = (Interval(24L, prec) * dd * log_3d +
                         Interval(3L, prec) * dd.pown(2) * log_50d) /
                        ln10;
    Interval log_eps = -(Interval(12L, prec) * dd * log_3d +
                         Interval(mpq_class(3, 2), prec) * dd.pown(2) * log_50d);
    rep.log10_epsilon = log_eps / ln10;

    // d^{2d} 2^{d^2} (e^{4e/c^2})^{d^2} 2e^2 (3d)^{10d-10} (4cd)^{3d^2/2}
    rep.log_term_count =
        Interval(2L, prec) * dd * dd.log() + dd.pown(2) * Interval(2L, prec).log();
    rep.log_binomial_factor = dd.pown(2) * (Interval(4L, prec) * e / c.pown(2));
    rep.log_taylor_error = Interval(2L, prec).log() + Interval(2L, prec) +
                           (Interval(10L, prec) * dd - Interval(10L, prec)) * log_3d +
                           Interval(mpq_class(3, 2), prec) * dd.pown(2) *
                               (Interval(4L, prec) * c * dd).log();
    Interval log_err = rep.log_term_count + rep.log_binomial_factor + rep.log_taylor_error;
    rep.log_error_coefficient = log_err;
    Interval slack = log_err + log_eps;
    rep.chain_ok = slack.is_negative() || slack.hi_double() <= 0.0;
    return rep;
}

} // namespace jenhyp

#endif
