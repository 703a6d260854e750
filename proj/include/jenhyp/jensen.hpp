#ifndef JENHYP_JENSEN_HPP
#define JENHYP_JENSEN_HPP

#include <gmpxx.h>

#include <stdexcept>

#include "partition.hpp"
#include "rational_poly.hpp"

namespace jenhyp {

/// Degree and shift of a Jensen polynomial.
struct JensenSpec {
    long d;
    long n;

    JensenSpec(long d_, long n_) : d(d_), n(n_) {
        if (d < 1) throw std::invalid_argument("JensenSpec: d must be >= 1");
        if (n < 0) throw std::invalid_argument("JensenSpec: n must be >= 0");
    }
};

inline mpz_class binomial(long n, long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// J^{d,n}(X) = sum_j C(d,j) p(n+j) X^j.
inline ExactPoly jensen_poly(const JensenSpec& spec, const PartitionTable& table) {
    if (table.max_n() < spec.n + spec.d)
        throw std::out_of_range("jensen_poly: partition table too short");
    std::vector<mpq_class> c(static_cast<std::size_t>(spec.d) + 1);
    for (long j = 0; j <= spec.d; ++j)
        c[static_cast<std::size_t>(j)] = mpq_class(binomial(spec.d, j) * table.at(spec.n + j));
    return ExactPoly(std::move(c));
}

/// Hermite polynomial under the e^{tX - t^2} generating-function convention
/// (monic): H_0 = 1, H_1 = X, H_{d+1} = X*H_d - 2d*H_{d-1}.
inline ExactPoly hermite_poly(long d) {
    if (d < 0) throw std::invalid_argument("hermite_poly: d < 0");
    ExactPoly prev = ExactPoly::constant(1);
    if (d == 0) return prev;
    ExactPoly cur = ExactPoly::monomial(1, 1);
    ExactPoly x = cur;
    for (long k = 1; k < d; ++k) {
        ExactPoly next = x * cur - mpq_class(2 * k) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Same polynomial under the e^{2tX - t^2} convention (leading coefficient
/// 2^d), i.e. H_d(2X).
inline ExactPoly hermite_poly_phys(long d) {
    return hermite_poly(d).compose_affine(2, 0);
}

} // namespace jenhyp

#endif
