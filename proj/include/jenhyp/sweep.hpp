#ifndef JENHYP_SWEEP_HPP
#define JENHYP_SWEEP_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "certify.hpp"
#include "hankel.hpp"
#include "jensen.hpp"
#include "partition.hpp"
#include "rational_poly.hpp"

namespace jenhyp {

enum class SweepMethod { hankel, sturm, both };

inline SweepMethod sweep_method_from_string(const std::string& s) {
    if (s == "hankel") return SweepMethod::hankel;
    if (s == "sturm") return SweepMethod::sturm;
    if (s == "both") return SweepMethod::both;
    throw std::invalid_argument("unknown method: " + s);
}

inline const char* to_string(SweepMethod m) {
    switch (m) {
        case SweepMethod::hankel: return "hankel";
        case SweepMethod::sturm: return "sturm";
        default: return "both";
    }
}

struct SweepResult {
    long d = 0;
    long n_min = 0;
    long n_max = 0;
    SweepMethod method = SweepMethod::both;
    std::vector<long> failures; // n with a non-hyperbolic Jensen polynomial, ascending
};

/// Exact hyperbolicity verdict for one (d, n) under the requested method;
/// with `both`, Hankel and Sturm must agree or the run aborts.
inline bool exact_verdict(long d, long n, const PartitionTable& table, SweepMethod method) {
    JensenSpec spec(d, n);
    bool via_hankel = false, via_sturm = false;
    if (method != SweepMethod::sturm) via_hankel = hankel_verdict(spec, table).hyperbolic;
    if (method != SweepMethod::hankel)
        via_sturm = is_hyperbolic_sturm(jensen_poly(spec, table));
    if (method == SweepMethod::both && via_hankel != via_sturm)
        throw std::logic_error("criterion disagreement at d=" + std::to_string(d) +
                               " n=" + std::to_string(n));
    return method == SweepMethod::sturm ? via_sturm : via_hankel;
}

/// Exact sweep over [n_min, n_max], sharded across threads by residue of n;
/// the shared table is immutable and the merge is deterministic.
inline SweepResult sweep_range(long d, long n_min, long n_max, SweepMethod method,
                               unsigned jobs = 0) {
    if (d < 1) throw std::invalid_argument("sweep_range: d must be >= 1");
    if (n_min < 0 || n_max < n_min) throw std::invalid_argument("sweep_range: bad range");
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    PartitionTable table(n_max + d);

    std::vector<std::vector<long>> found(jobs);
    auto worker = [&](unsigned shard) {
        for (long n = n_min + static_cast<long>(shard); n <= n_max;
             n += static_cast<long>(jobs))
            if (!exact_verdict(d, n, table, method)) found[shard].push_back(n);
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
        for (auto& t : pool) t.join();
    }

    SweepResult r{d, n_min, n_max, method, {}};
    for (const auto& shard : found) r.failures.insert(r.failures.end(), shard.begin(), shard.end());
    std::sort(r.failures.begin(), r.failures.end());
    return r;
}

struct FindNResult {
    long d = 0;
    long n_of_d = 0;
    ThresholdCertificate certificate;
    SweepResult sweep;
};

/// N(d): certify the tail beyond threshold_n0, sweep [1, threshold_n0]
/// exactly, and return one more than the last failure.
inline FindNResult find_n(long d, long s, const std::string& epsilon,
                          mpfr_prec_t precision = Interval::default_prec,
                          SupStrategy strategy = SupStrategy::branch_and_bound,
                          SweepMethod method = SweepMethod::both, unsigned jobs = 0) {
    FindNResult r;
    r.d = d;
    r.certificate = certify_threshold(d, s, epsilon, precision, strategy);
    if (!r.certificate.verified)
        throw std::runtime_error("find_n: certificate did not verify; choose a smaller epsilon");
    r.sweep = sweep_range(d, 1, r.certificate.threshold_n0, method, jobs);
    r.n_of_d = r.sweep.failures.empty() ? 1 : r.sweep.failures.back() + 1;
    return r;
}

} // namespace jenhyp

#endif
