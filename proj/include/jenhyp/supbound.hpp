#ifndef JENHYP_SUPBOUND_HPP
#define JENHYP_SUPBOUND_HPP

#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "asymptotics.hpp"
#include "interval.hpp"
#include "series.hpp"

namespace jenhyp {

enum class SupStrategy { branch_and_bound, lemma_closed_form };

/// Rigorous upper bound on a supremum, with the best certified lower bound
/// found along the way. `converged` is false if the adaptive bisection hit
/// its work cap before reaching the target relative width.
struct SupResult {
    Interval enclosure; // [best lower bound, rigorous upper bound]
    bool converged = true;
};

namespace detail {

/// Maximize f over [lo, hi] by best-first interval bisection. f must return
/// an enclosure of its value on any subinterval.
inline SupResult maximize_on_interval(const std::function<Interval(const Interval&)>& f,
                                      const Interval& domain, double rel_tol = 1e-3,
                                      std::size_t max_evals = 40000) {
    struct Node {
        double ub;
        Interval box;
        bool operator<(const Node& o) const { return ub < o.ub; }
    };
    mpfr_prec_t prec = domain.precision();
    std::priority_queue<Node> queue;
    double global_lb = f(domain.midpoint()).lo_double();
    global_lb = std::max(global_lb, f(domain.lower_endpoint()).lo_double());
    global_lb = std::max(global_lb, f(domain.upper_endpoint()).lo_double());
    Interval first = f(domain);
    queue.push({first.hi_double(), domain});
    std::size_t evals = 4;
    bool converged = true;
    double best_ub = first.hi_double();
    while (!queue.empty()) {
        Node top = queue.top();
        // heap order makes the head a global upper bound at every step
        best_ub = top.ub;
        if (best_ub <= global_lb ||
            (best_ub - global_lb) <= rel_tol * std::max(std::abs(global_lb), 1e-300))
            break;
        if (evals > max_evals) {
            converged = false;
            break;
        }
        queue.pop();
        Interval mid = top.box.midpoint();
        Interval left = hull(top.box.lower_endpoint(), mid);
        Interval right = hull(mid, top.box.upper_endpoint());
        for (const Interval& half : {left, right}) {
            Interval val = f(half);
            global_lb = std::max(global_lb, f(half.midpoint()).lo_double());
            queue.push({val.hi_double(), half});
        }
        evals += 4;
    }
    return {Interval::from_doubles(std::min(global_lb, best_ub), best_ub, prec), converged};
}

} // namespace detail

/// Closed-form derivative bound: |R^{(m)}(j,w)| <= m! C(m+3,3) e^{g(eps)}
/// (4 e^{2|t|eps} |t|)^m for w in [0, eps]; divided by s! here (m = s).
inline Interval derivative_bound_closed_form(const ShiftRatio& sr, long s, const Interval& eps) {
    mpfr_prec_t prec = eps.precision();
    Interval t_abs = sr.t.abs_enclosure();
    Interval one(1L, prec);
    Interval g = sr.t * eps / (one + (one + sr.t * eps.pown(2)).sqrt());
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(s) + 3, 3);
    Interval factor = Interval(4L, prec) * (Interval(2L, prec) * t_abs * eps).exp() * t_abs;
    return Interval(binom, prec) * g.exp() * factor.pown(s);
}

/// Rigorous upper bound on sup_{x in [0,eps]} |R^{(s)}(j,x)| / s!.
inline SupResult sup_abs_derivative(const ShiftRatio& sr, long s, const Interval& eps,
                                    SupStrategy strategy) {
    if (s < 1) throw std::invalid_argument("sup_abs_derivative: s must be >= 1");
    if (strategy == SupStrategy::lemma_closed_form)
        return {derivative_bound_closed_form(sr, s, eps), true};
    mpfr_prec_t prec = eps.precision();
    Interval domain = hull(Interval(0L, prec), eps);
    std::size_t order = static_cast<std::size_t>(s) + 1;
    auto f = [&](const Interval& x) {
        return r_series_at(sr, x, order)[static_cast<std::size_t>(s)].abs_enclosure();
    };
    return detail::maximize_on_interval(f, domain);
}

/// Rigorous upper bound on sup_{x in (0,eps]} R(j,x) 2L(x)/(x^s (1-L(x))).
///
/// Near zero the integrand vanishes but naive interval evaluation blows up,
/// so the leftmost slice [0, a] is bounded through monotonicity: L(x)/x^s is
/// increasing for x < 1/(2s) (both of its summands have the form
/// h(x) e^{-alpha/x} / x^k with h increasing, increasing whenever x < alpha/k),
/// and 1/(1-L) is increasing in L.
inline SupResult sup_tail_term(const ShiftRatio& sr, long s, const Interval& eps) {
    mpfr_prec_t prec = eps.precision();
    Interval one(1L, prec);
    if (!(eps * Interval(2 * s, prec)).strictly_less(one))
        throw std::domain_error("sup_tail_term: requires eps < 1/(2s)");
    Interval a = eps / 1024;
    auto term = [&](const Interval& x) {
        Interval L = L_of(x);
        if (!(one - L).is_positive())
            throw std::domain_error("sup_tail_term: L(x) >= 1; use a smaller epsilon");
        return R_of(sr, x) * (Interval(2L, prec) * L) / (x.pown(s) * (one - L));
    };
    // [0, a]: R evaluated over the whole slice, L/x^s bounded at the right end
    Interval La = L_of(a.upper_endpoint());
    Interval slice_bound = R_of(sr, hull(Interval(0L, prec), a)).mag() *
                           (Interval(2L, prec) * La) /
                           (a.upper_endpoint().pown(s) * (one - La));
    // [a, eps]: direct branch-and-bound
    SupResult main = detail::maximize_on_interval(term, hull(a, eps));
    Interval enc = main.enclosure;
    if (mpfr_cmp(slice_bound.hi(), enc.hi()) > 0)
        enc = hull(enc, slice_bound);
    return {enc, main.converged};
}

/// Bound of |E_s(j, w)| over [0, eps]: the two suprema of the Taylor
/// remainder estimate, kept separately for reporting.
struct TaylorErrorBound {
    SupResult derivative_part;
    SupResult tail_part;
    Interval total;
};

inline TaylorErrorBound taylor_error_bound(const ShiftRatio& sr, long s, const Interval& eps,
                                           SupStrategy strategy) {
    TaylorErrorBound r{sup_abs_derivative(sr, s, eps, strategy), sup_tail_term(sr, s, eps),
                       Interval::zero(eps.precision())};
    r.total = r.derivative_part.enclosure.upper_endpoint() + r.tail_part.enclosure.upper_endpoint();
    return r;
}

} // namespace jenhyp

#endif
