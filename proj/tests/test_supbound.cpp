#include <catch_amalgamated.hpp>

#include <jenhyp/supbound.hpp>

using namespace jenhyp;

TEST_CASE("derivative sup bounds reproduce the reference maxima") {
    // published Maximize values for sup |R^{(10)}(j, x)|/10! on [0, eps]
    struct Case {
        long j;
        const char* eps;
        double reference;
    };
    for (const Case& c : {Case{2, "0.021", 328255.0}, Case{3, "0.021", 3.77919e6},
                          Case{5, "0.0081", 5.37043e7}}) {
        SupResult r = sup_abs_derivative(ShiftRatio(c.j), 10, Interval::from_string(c.eps),
                                         SupStrategy::branch_and_bound);
        INFO("j=" << c.j << " eps=" << c.eps << " got " << r.enclosure.to_string(8));
        CHECK(r.converged);
        CHECK(r.enclosure.hi_double() >= 0.9999 * c.reference);
        CHECK(r.enclosure.hi_double() <= 1.1 * c.reference);
    }
}

TEST_CASE("closed-form bound dominates branch-and-bound") {
    Interval eps = Interval::from_string("0.0081");
    for (long j = 1; j <= 5; ++j) {
        SupResult bnb =
            sup_abs_derivative(ShiftRatio(j), 10, eps, SupStrategy::branch_and_bound);
        Interval closed = derivative_bound_closed_form(ShiftRatio(j), 10, eps);
        REQUIRE(closed.lo_double() >= bnb.enclosure.hi_double());
    }
}

TEST_CASE("tail term values at the certification epsilons") {
    // appendix second summands (computed there without the factor 2, so our
    // bound may exceed them by up to 2x)
    SupResult r = sup_tail_term(ShiftRatio(1), 10, Interval::from_string("0.0081"));
    CHECK(r.enclosure.hi_double() >= 1.54878e-6 * 0.99);
    CHECK(r.enclosure.hi_double() <= 2.0 * 1.54878e-6 * 1.1);
    r = sup_tail_term(ShiftRatio(1), 10, Interval::from_string("0.021"));
    CHECK(r.enclosure.hi_double() >= 4.30607e6 * 0.99);
    CHECK(r.enclosure.hi_double() <= 2.0 * 4.30607e6 * 1.1);
    // decays to nothing for small epsilon
    r = sup_tail_term(ShiftRatio(1), 10, Interval::from_string("0.001"));
    CHECK(r.enclosure.hi_double() < 1e-180);
}

TEST_CASE("taylor error bound combines both parts") {
    TaylorErrorBound b =
        taylor_error_bound(ShiftRatio(1), 10, Interval::from_string("0.0081"),
                           SupStrategy::branch_and_bound);
    CHECK(b.derivative_part.enclosure.hi_double() >= 5893.44 * 0.9999);
    CHECK(b.derivative_part.enclosure.hi_double() <= 5893.44 * 1.1);
    CHECK(b.total.hi_double() >= b.derivative_part.enclosure.hi_double());
}

TEST_CASE("taylor remainder containment on sampled points") {
    for (long j = 1; j <= 5; ++j) {
        for (long s : {6L, 10L}) {
            Interval eps = Interval::from_string("0.021");
            ShiftRatio sr(j);
            SupResult sup = sup_abs_derivative(sr, s, eps, SupStrategy::branch_and_bound);
            SeriesPoly a = taylor_of_R(sr, static_cast<std::size_t>(s));
            for (int i = 1; i <= 50; ++i) {
                Interval w = eps * Interval(i, 128) / 50;
                Interval diff = (R_of(sr, w) - a.eval(w)).abs_enclosure();
                Interval budget = sup.enclosure.upper_endpoint() * w.pown(s);
                REQUIRE(diff.hi_double() <= budget.hi_double() * (1 + 1e-9));
            }
        }
    }
}
