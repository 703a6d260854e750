#include <catch_amalgamated.hpp>

#include <jenhyp/series.hpp>

using namespace jenhyp;

namespace {

// Independent derivative oracle: central differences with one Richardson step.
double derivative_oracle(long j, double h) {
    auto r = [&](double w) {
        double c = 2.0 / 3.0 * 3.14159265358979323846 * 3.14159265358979323846;
        double t = c * j;
        double u = 1 + t * w * w;
        return std::exp(t * w / (1 + std::sqrt(u))) * (std::sqrt(u) - w) /
               ((1 - w) * std::pow(u, 1.5));
    };
    auto d = [&](double step) { return (r(step) - r(-step)) / (2 * step); };
    return (4 * d(h) - d(2 * h)) / 3.0;
}

} // namespace

TEST_CASE("series ring identities") {
    mpfr_prec_t prec = 128;
    SeriesPoly one = SeriesPoly::constant(Interval(1L, prec), 8);
    SeriesPoly w(8, prec);
    w[1] = Interval(1L, prec);
    SeriesPoly f = one + w * Interval(3L, prec) + (w * w) * Interval(2L, prec);
    SeriesPoly g = f * f.recip();
    CHECK(g[0].contains_rational(mpq_class(1)));
    for (std::size_t k = 1; k < 8; ++k) {
        CHECK(g[k].contains_zero());
        CHECK(g[k].width_double() < 1e-30);
    }
    SeriesPoly s = f.sqrt();
    SeriesPoly back = s * s;
    for (std::size_t k = 0; k < 8; ++k) REQUIRE(back[k].contains(f[k]));
    // exp(log-free check): exp(w)*exp(-w) = 1
    SeriesPoly pe = w.exp() * (-w).exp();
    CHECK(pe[0].contains_rational(mpq_class(1)));
    for (std::size_t k = 1; k < 8; ++k) CHECK(pe[k].contains_zero());
}

TEST_CASE("exp with nonzero constant term") {
    mpfr_prec_t prec = 128;
    SeriesPoly f(5, prec);
    f[0] = Interval(2L, prec);
    f[1] = Interval(1L, prec);
    SeriesPoly e = f.exp();
    Interval e2 = Interval(2L, prec).exp();
    // coefficients of e^{2+w}: e^2/k!
    mpq_class fact(1);
    for (std::size_t k = 0; k < 5; ++k) {
        if (k > 0) fact /= mpq_class(static_cast<long>(k));
        REQUIRE(e[k].intersects(e2 * Interval(fact, prec)));
    }
}

TEST_CASE("taylor of R: constant and linear coefficients") {
    for (long j : {-1L, 1L, 2L, 5L}) {
        SeriesPoly a = taylor_of_R(ShiftRatio(j), 11);
        CHECK(a[0].contains_rational(mpq_class(1)));
        CHECK(a[0].width_double() < 1e-25);
        // linear coefficient is c*j/2
        Interval expect = Interval::hr_constant() * j / 2;
        REQUIRE(a[1].intersects(expect));
        // cross-check against the finite-difference oracle
        double oracle = derivative_oracle(j, 1e-6);
        REQUIRE(std::abs(a[1].mid_double() - oracle) < 1e-4 * std::abs(oracle));
    }
}

TEST_CASE("taylor polynomial reproduces R within the remainder scale") {
    for (long j = 1; j <= 5; ++j) {
        ShiftRatio sr(j);
        SeriesPoly a = taylor_of_R(sr, 10);
        Interval w0 = Interval::from_string("0.0105"); // epsilon/2 for d=3
        Interval direct = R_of(sr, w0);
        Interval viaseries = a.eval(w0);
        Interval diff = (direct - viaseries).abs_enclosure();
        // |remainder| ~ |a_10| w^10; generous envelope
        CHECK(diff.hi_double() < 1e8 * std::pow(0.0105, 10));
    }
}

TEST_CASE("jet at an interval point encloses jets at contained points") {
    ShiftRatio sr(2);
    Interval box = Interval::from_endpoints("0.01", "0.02");
    SeriesPoly wide = r_series_at(sr, box, 11);
    for (const char* pt : {"0.01", "0.013", "0.0177", "0.02"}) {
        SeriesPoly thin = r_series_at(sr, Interval::from_string(pt), 11);
        for (std::size_t k = 0; k < 11; ++k) REQUIRE(wide[k].intersects(thin[k]));
    }
}

TEST_CASE("series ops reject bad constant terms") {
    SeriesPoly z(4);
    CHECK_THROWS_AS(z.recip(), std::domain_error);
    CHECK_THROWS_AS(z.sqrt(), std::domain_error);
}
