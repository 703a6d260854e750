#ifndef JENHYP_PARTITION_HPP
#define JENHYP_PARTITION_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace jenhyp {

/// Exact values p(0..max_n) of the partition function, built once with the
/// Euler pentagonal-number recurrence. Immutable after construction.
class PartitionTable {
public:
    static constexpr long hard_limit = 10'000'000;

    explicit PartitionTable(long max_n) {
        if (max_n < 0) throw std::invalid_argument("PartitionTable: max_n < 0");
        if (max_n > hard_limit)
            throw std::invalid_argument("PartitionTable: max_n exceeds resource limit");
        values_.reserve(static_cast<std::size_t>(max_n) + 1);
        values_.emplace_back(1);
        for (long n = 1; n <= max_n; ++n) {
            mpz_class acc(0);
            for (long k = 1;; ++k) {
                long g1 = k * (3 * k - 1) / 2;
                long g2 = k * (3 * k + 1) / 2;
                if (g1 > n) break;
                if (k % 2 == 1) {
                    acc += values_[n - g1];
                    if (g2 <= n) acc += values_[n - g2];
                } else {
                    acc -= values_[n - g1];
                    if (g2 <= n) acc -= values_[n - g2];
                }
            }
            values_.push_back(std::move(acc));
        }
    }

    long max_n() const { return static_cast<long>(values_.size()) - 1; }

    const mpz_class& at(long n) const {
        if (n < 0 || n > max_n())
            throw std::out_of_range("PartitionTable: index out of range");
        return values_[static_cast<std::size_t>(n)];
    }

    const mpz_class& operator[](long n) const { return values_[static_cast<std::size_t>(n)]; }

    /// p(n+j)/p(n) as an exact rational.
    mpq_class ratio(long n, long j) const {
        mpq_class r(at(n + j), at(n));
        r.canonicalize();
        return r;
    }

private:
    std::vector<mpz_class> values_;
};

} // namespace jenhyp

#endif
