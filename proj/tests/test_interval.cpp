#include <catch_amalgamated.hpp>

#include <jenhyp/interval.hpp>

using jenhyp::Interval;

TEST_CASE("basic arithmetic encloses exact rational results") {
    Interval a(mpq_class(1, 3));
    Interval b(mpq_class(1, 7));
    CHECK((a + b).contains_rational(mpq_class(10, 21)));
    CHECK((a - b).contains_rational(mpq_class(4, 21)));
    CHECK((a * b).contains_rational(mpq_class(1, 21)));
    CHECK((a / b).contains_rational(mpq_class(7, 3)));
    CHECK((a * b).width_double() < 1e-35);
}

TEST_CASE("multiplication sign cases") {
    Interval neg = Interval(-3L) + Interval(mpq_class(1, 2)); // [-2.5, -2.5]
    Interval straddle = Interval::from_endpoints("-2", "3");
    Interval pos = Interval::from_endpoints("4", "5");
    Interval r = straddle * neg;
    CHECK(r.contains_rational(mpq_class(-15, 2)));
    CHECK(r.contains_rational(mpq_class(5)));
    r = straddle * pos;
    CHECK(r.contains_rational(mpq_class(-10)));
    CHECK(r.contains_rational(mpq_class(15)));
    CHECK(straddle.pown(2).contains_rational(mpq_class(9)));
    CHECK(straddle.pown(2).is_nonnegative());
    CHECK(neg.pown(2).contains_rational(mpq_class(25, 4)));
    CHECK(neg.pown(3).contains_rational(mpq_class(-125, 8)));
}

TEST_CASE("pi enclosure is tight and correct") {
    Interval pi = Interval::pi();
    CHECK(pi.contains_rational(mpq_class(314159265, 100000000)) == false);
    CHECK(pi.lo_double() > 3.14159265358979);
    CHECK(pi.hi_double() < 3.1415926535898);
    CHECK(pi.width_double() < 1e-36);
    Interval c = Interval::hr_constant();
    CHECK(c.lo_double() > 6.5797);
    CHECK(c.hi_double() < 6.5798);
}

TEST_CASE("transcendental functions outward round") {
    Interval one(1L);
    Interval e = one.exp();
    CHECK(e.lo_double() > 2.7182818);
    CHECK(e.hi_double() < 2.7182819);
    CHECK(e.log().contains_rational(mpq_class(1)));
    Interval two(2L);
    Interval s = two.sqrt();
    CHECK((s * s).contains_rational(mpq_class(2)));
    CHECK_THROWS_AS((Interval(-1L)).sqrt(), std::domain_error);
    CHECK_THROWS_AS(Interval(0L).log(), std::domain_error);
    CHECK_THROWS_AS(one / Interval(0L), std::domain_error);
}

TEST_CASE("enclosure width halves when precision doubles") {
    for (mpfr_prec_t p : {64, 128, 256}) {
        Interval lo_p = Interval::pi(p);
        Interval hi_p = Interval::pi(2 * p);
        CHECK(hi_p.width_double() < 0.5 * lo_p.width_double());
    }
}

TEST_CASE("floor and string round trips") {
    Interval x = Interval::from_string("344.63");
    CHECK(x.floor_long() == 344);
    Interval tight = Interval::from_string("0.021");
    Interval back = Interval::from_endpoints(tight.lo_string(), tight.hi_string());
    CHECK(back.contains(tight));
    CHECK(back.width_double() < 1e-30);
}

TEST_CASE("abs enclosure") {
    Interval straddle = Interval::from_endpoints("-2", "3");
    Interval a = straddle.abs_enclosure();
    CHECK(a.lo_double() == 0.0);
    CHECK(a.hi_double() == 3.0);
    Interval neg = Interval::from_endpoints("-5", "-4");
    a = neg.abs_enclosure();
    CHECK(a.lo_double() == 4.0);
    CHECK(a.hi_double() == 5.0);
}
