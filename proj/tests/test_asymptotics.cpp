#include <catch_amalgamated.hpp>

#include <jenhyp/asymptotics.hpp>
#include <jenhyp/partition.hpp>

using namespace jenhyp;

namespace {

Interval rational_enclosure(const mpq_class& q, mpfr_prec_t prec = Interval::default_prec) {
    return Interval(q, prec);
}

} // namespace

TEST_CASE("w(n) values and monotonicity") {
    Interval w1 = w_of(1);
    CHECK(w1.lo_double() > 0.39823);
    CHECK(w1.hi_double() < 0.39824);
    Interval w25 = w_of(25);
    CHECK(w25.lo_double() > 0.078034);
    CHECK(w25.hi_double() < 0.078035);
    Interval prev = w_of(1);
    for (long n = 2; n <= 1000; ++n) {
        Interval w = w_of(n);
        REQUIRE(w.strictly_less(prev));
        prev = w;
    }
    CHECK_THROWS_AS(w_of(0), std::invalid_argument);
}

TEST_CASE("delta(n) positive and vanishing") {
    Interval d1 = delta_of(1);
    Interval check = Interval::hr_constant() * (w_of(1).pown(3)).sqrt() / Interval(2L).sqrt();
    CHECK(d1.intersects(check));
    CHECK(d1.is_positive());
    CHECK(delta_of(1000000).hi_double() < 1e-3);
    for (long n : {1L, 10L, 100L, 10000L}) CHECK(delta_of(n).is_positive());
}

TEST_CASE("F approximates p(n)") {
    PartitionTable t(1000);
    Interval f100 = F_of(w_of(100));
    Interval ratio = f100 / rational_enclosure(mpq_class(t.at(100)));
    CHECK(ratio.lo_double() > 0.95);
    CHECK(ratio.hi_double() < 1.05);
    Interval f1000 = F_of(w_of(1000)) / rational_enclosure(mpq_class(t.at(1000)));
    CHECK(f1000.lo_double() > 0.99);
    CHECK(f1000.hi_double() < 1.01);
    CHECK(F_of(Interval::from_string("0.5")).is_positive());
    CHECK_THROWS_AS(F_of(Interval(0L)), std::domain_error);
}

TEST_CASE("R at w = 0 is 1, and handles negative shifts") {
    for (long j : {-1L, 1L, 3L, 5L}) {
        Interval r = R_of(ShiftRatio(j), Interval(0L));
        CHECK(r.contains_rational(mpq_class(1)));
        CHECK(r.width_double() < 1e-30);
    }
    Interval r = R_of(ShiftRatio(-1), Interval::from_string("0.013"));
    CHECK(r.hi_double() < 1.0);
    CHECK(r.is_positive());
    // domain violation: 1 + t w^2 <= 0 for j very negative
    CHECK_THROWS_AS(R_of(ShiftRatio(-7), Interval::from_string("0.5")), std::domain_error);
}

TEST_CASE("L is tiny near zero and below 1 on the whole domain") {
    CHECK(L_of(Interval::from_string("0.001")).hi_double() < 1e-200);
    Interval l = L_of(Interval::from_string("0.1"));
    CHECK(l.lo_double() > 0.0282);
    CHECK(l.hi_double() < 0.0283);
    // below 1 on (0, 0.2], which covers every certification epsilon; L is
    // increasing so the right endpoint decides
    CHECK(L_of(Interval::from_string("0.2")).hi_double() < 1.0);
    CHECK(L_of(Interval::from_string("0.0295")).hi_double() <
          L_of(Interval::from_string("0.2")).lo_double());
}

TEST_CASE("lehmer remainder bound") {
    Interval b = lehmer_B_bound(100, 2);
    CHECK(b.is_positive());
    CHECK(b.hi_double() < 1e12);
    // the absolute remainder grows with n at fixed N, but shrinks relative
    // to the main term
    Interval prev = lehmer_B_bound(10, 2) / F_of(w_of(10));
    for (long n = 20; n <= 10000; n += 10) {
        Interval cur = lehmer_B_bound(n, 2) / F_of(w_of(n));
        REQUIRE(cur.lo_double() <= prev.hi_double());
        prev = cur;
    }
    CHECK(lehmer_B_bound(1, 1).is_positive());
}

TEST_CASE("ratio containment: exact p(n+j)/p(n) within R +- bound") {
    PartitionTable t(2010);
    for (long n : {50L, 94L, 100L, 500L, 1000L, 2000L}) {
        for (long j = -1; j <= 5; ++j) {
            if (n + j < 1) continue;
            Interval w = w_of(n);
            ShiftRatio sr(j);
            Interval r = R_of(sr, w);
            Interval bound = ratio_error_bound(sr, w);
            mpq_class exact = t.ratio(n, j);
            Interval window = hull(r - bound, r + bound);
            REQUIRE(window.contains_rational(exact));
        }
    }
}

TEST_CASE("w shift identity: w(n+j) = w(n)/sqrt(1 + c j w(n)^2)") {
    for (long n : {5L, 40L, 377L, 1999L})
        for (long j : {-1L, 1L, 2L, 5L}) {
            Interval lhs = w_of(n + j);
            Interval w = w_of(n);
            Interval rhs = w / (Interval(1L) + Interval::hr_constant() * j * w.pown(2)).sqrt();
            REQUIRE(lhs.intersects(rhs));
        }
}

TEST_CASE("enclosure widths shrink when precision doubles") {
    for (long n : {10L, 100L}) {
        double w128 = F_of(w_of(n, 128)).width_double();
        double w256 = F_of(w_of(n, 256)).width_double();
        REQUIRE(w256 < 0.5 * w128);
    }
}

TEST_CASE("lemma error bound is small at certification epsilons") {
    Interval b = ratio_error_bound(ShiftRatio(1), Interval::from_string("0.0081"));
    CHECK(b.hi_double() < 1e-20);
}
