#ifndef JENHYP_MULTIPOLY_HPP
#define JENHYP_MULTIPOLY_HPP

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace jenhyp {

/// Sparse multivariate polynomial over Q, keyed by exponent vectors of a
/// fixed number of variables.
class MultiPoly {
public:
    using Expvec = std::vector<int>;

    explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(std::size_t nvars, const mpq_class& v) {
        MultiPoly p(nvars);
        if (v != 0) p.terms_[Expvec(nvars, 0)] = v;
        return p;
    }

    static MultiPoly variable(std::size_t nvars, std::size_t i) {
        MultiPoly p(nvars);
        Expvec e(nvars, 0);
        e.at(i) = 1;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expvec, mpq_class>& terms() const { return terms_; }

    void add_term(const Expvec& e, const mpq_class& v) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (v != 0) terms_.emplace(e, v);
        } else {
            it->second += v;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, v] : b.terms_) r.add_term(e, v);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, v] : b.terms_) r.add_term(e, -v);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars_);
        Expvec e(a.nvars_);
        for (const auto& [ea, va] : a.terms_)
            for (const auto& [eb, vb] : b.terms_) {
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, va * vb);
            }
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const mpq_class& s) {
        MultiPoly r(a.nvars_);
        if (s == 0) return r;
        for (const auto& [e, v] : a.terms_) r.terms_[e] = v * s;
        return r;
    }
    friend MultiPoly operator*(const mpq_class& s, const MultiPoly& a) { return a * s; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Exact division by variable i to the given power.
    MultiPoly divide_by_power(std::size_t i, int power) const {
        MultiPoly r(nvars_);
        for (const auto& [e, v] : terms_) {
            if (e[i] < power)
                throw std::logic_error("MultiPoly::divide_by_power: inexact division");
            Expvec f = e;
            f[i] -= power;
            r.terms_[std::move(f)] = v;
        }
        return r;
    }

    mpq_class eval(const std::vector<mpq_class>& x) const {
        if (x.size() != nvars_) throw std::invalid_argument("MultiPoly::eval: arity mismatch");
        mpq_class acc(0);
        for (const auto& [e, v] : terms_) {
            mpq_class t = v;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    /// True iff every term has the given total degree.
    bool is_homogeneous(int total_degree) const {
        for (const auto& [e, v] : terms_) {
            (void)v;
            int s = 0;
            for (int k : e) s += k;
            if (s != total_degree) return false;
        }
        return true;
    }

private:
    std::size_t nvars_;
    std::map<Expvec, mpq_class> terms_;
};

} // namespace jenhyp

#endif
