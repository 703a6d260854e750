#ifndef JENHYP_HANKEL_HPP
#define JENHYP_HANKEL_HPP

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "jensen.hpp"
#include "multipoly.hpp"
#include "partition.hpp"
#include "rational_poly.hpp"

namespace jenhyp {

/// Power sums S_0..S_kmax of the roots of a polynomial given by its exact
/// coefficients, via the Newton-Girard recurrence on the elementary
/// symmetric functions e_i = (-1)^i a_{d-i}/a_d.
inline std::vector<mpq_class> power_sums_exact(const ExactPoly& p, long k_max) {
    if (p.is_zero()) throw std::invalid_argument("power_sums_exact: zero polynomial");
    long d = p.degree();
    std::vector<mpq_class> e(static_cast<std::size_t>(k_max) + 1);
    e[0] = 1;
    for (long i = 1; i <= k_max; ++i) {
        if (i <= d) {
            e[i] = p.coeff(static_cast<std::size_t>(d - i)) / p.leading();
            if (i % 2 == 1) e[i] = -e[i];
        }
    }
    std::vector<mpq_class> s(static_cast<std::size_t>(k_max) + 1);
    s[0] = d;
    for (long k = 1; k <= k_max; ++k) {
        mpq_class acc = mpq_class(k) * e[k];
        if (k % 2 == 0) acc = -acc;
        for (long i = 1; i < k; ++i) {
            mpq_class t = e[k - i] * s[i];
            if ((k - 1 + i) % 2 == 1) t = -t;
            acc += t;
        }
        s[k] = acc;
    }
    return s;
}

/// Scaled symbolic power sums P_k = a_d^k * S_k as polynomials in the
/// coefficient variables a_0..a_d. Clearing the a_d denominators keeps the
/// whole computation polynomial.
inline std::vector<MultiPoly> scaled_power_sums_symbolic(long d, long k_max) {
    if (d < 1) throw std::invalid_argument("scaled_power_sums_symbolic: d < 1");
    std::size_t nv = static_cast<std::size_t>(d) + 1;
    auto var = [&](long i) { return MultiPoly::variable(nv, static_cast<std::size_t>(i)); };
    // f_i = a_d * e_i = (-1)^i a_{d-i}, zero for i > d
    std::vector<MultiPoly> f(static_cast<std::size_t>(k_max) + 1, MultiPoly(nv));
    for (long i = 1; i <= k_max && i <= d; ++i) {
        f[i] = var(d - i);
        if (i % 2 == 1) f[i] = MultiPoly(nv) - f[i];
    }
    MultiPoly ad = var(d);
    std::vector<MultiPoly> ad_pow{MultiPoly::constant(nv, 1)};
    for (long k = 1; k <= k_max; ++k) ad_pow.push_back(ad_pow.back() * ad);

    std::vector<MultiPoly> P(static_cast<std::size_t>(k_max) + 1, MultiPoly(nv));
    P[0] = MultiPoly::constant(nv, d);
    for (long k = 1; k <= k_max; ++k) {
        MultiPoly acc = f[k] * ad_pow[k - 1] * mpq_class(k);
        if (k % 2 == 0) acc = MultiPoly(nv) - acc;
        for (long i = 1; i < k; ++i) {
            MultiPoly t = f[k - i] * ad_pow[k - i - 1] * P[i];
            if ((k - 1 + i) % 2 == 1) t = MultiPoly(nv) - t;
            acc = acc + t;
        }
        P[k] = std::move(acc);
    }
    return P;
}

namespace detail {

template <typename T, typename Sub>
T laplace_det(const std::vector<std::vector<T>>& m, Sub sub) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    std::vector<std::vector<T>> minor(n - 1, std::vector<T>(n - 1, m[0][0]));
    T acc = m[0][0];
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        T term = m[0][j] * laplace_det(minor, sub);
        if (j % 2 == 1) term = sub(term);
        if (first) {
            acc = std::move(term);
            first = false;
        } else {
            acc = acc + term;
        }
    }
    return acc;
}

} // namespace detail

/// D_{d,m} = a_d^{2m-2} * Delta_m as an explicit polynomial in a_0..a_d,
/// homogeneous of degree 2m-2.
struct SymbolicHankel {
    long d;
    long m;
    MultiPoly poly;
};

/// Materialize D_{d,m} once and cache it; the certifier substitutes series
/// into the same object repeatedly.
inline const SymbolicHankel& hankel_symbolic(long d, long m) {
    if (m < 2 || m > d) throw std::invalid_argument("hankel_symbolic: need 2 <= m <= d");
    static std::map<std::pair<long, long>, SymbolicHankel> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(d, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    auto P = scaled_power_sums_symbolic(d, 2 * m - 2);
    std::size_t mm = static_cast<std::size_t>(m);
    std::vector<std::vector<MultiPoly>> mat(mm, std::vector<MultiPoly>(mm, MultiPoly()));
    for (std::size_t i = 0; i < mm; ++i)
        for (std::size_t j = 0; j < mm; ++j) mat[i][j] = P[i + j];
    // det of the P-matrix carries a_d^{m(m-1)}; D_{d,m} keeps only a_d^{2m-2}
    MultiPoly det = detail::laplace_det<MultiPoly>(
        mat, [](const MultiPoly& t) { return MultiPoly(t.nvars()) - t; });
    MultiPoly D = det.divide_by_power(static_cast<std::size_t>(d), (m - 1) * (m - 2));
    auto [pos, ok] = cache.emplace(key, SymbolicHankel{d, m, std::move(D)});
    (void)ok;
    return pos->second;
}

/// Delta_m of a concrete polynomial, exactly.
inline mpq_class hankel_delta_exact(const ExactPoly& p, long m) {
    if (m < 1) throw std::invalid_argument("hankel_delta_exact: m < 1");
    auto s = power_sums_exact(p, 2 * m - 2);
    std::size_t mm = static_cast<std::size_t>(m);
    std::vector<std::vector<mpq_class>> mat(mm, std::vector<mpq_class>(mm));
    for (std::size_t i = 0; i < mm; ++i)
        for (std::size_t j = 0; j < mm; ++j) mat[i][j] = s[i + j];
    return detail::laplace_det<mpq_class>(mat, [](const mpq_class& t) { return mpq_class(-t); });
}

/// D_{d,m}(P) = a_d^{2m-2} Delta_m(P), exactly.
inline mpq_class hankel_D_exact(const ExactPoly& p, long m) {
    mpq_class r = hankel_delta_exact(p, m);
    mpq_class lead = p.leading();
    for (long k = 0; k < 2 * m - 2; ++k) r *= lead;
    return r;
}

/// Delta_m(H_d) under the monic generating-function convention.
inline mpq_class hermite_hankel_exact(long d, long m) {
    if (m < 2 || m > d) throw std::invalid_argument("hermite_hankel_exact: need 2 <= m <= d");
    return hankel_delta_exact(hermite_poly(d), m);
}

/// Delta_m(H_d) under the leading-coefficient-2^d convention.
inline mpq_class hermite_hankel_exact_phys(long d, long m) {
    if (m < 2 || m > d) throw std::invalid_argument("hermite_hankel_exact_phys: need 2 <= m <= d");
    return hankel_delta_exact(hermite_poly_phys(d), m);
}

/// Exact values of the normalized Hankel determinants of a Jensen
/// polynomial, and the resulting hyperbolicity verdict.
struct HankelVerdict {
    long d;
    long n;
    std::vector<mpq_class> values; // D_{d,m}(n) for m = 2..d
    bool hyperbolic;
};

inline HankelVerdict hankel_verdict(const JensenSpec& spec, const PartitionTable& table) {
    ExactPoly jp = jensen_poly(spec, table);
    mpq_class pn(table.at(spec.n));
    ExactPoly normalized = jp * mpq_class(1 / pn);
    HankelVerdict v{spec.d, spec.n, {}, true};
    if (spec.d == 1) return v; // linear polynomials are always hyperbolic
    for (long m = 2; m <= spec.d; ++m) {
        mpq_class D = hankel_D_exact(normalized, m);
        if (sgn(D) < 0) v.hyperbolic = false;
        v.values.push_back(std::move(D));
    }
    return v;
}

} // namespace jenhyp

#endif
