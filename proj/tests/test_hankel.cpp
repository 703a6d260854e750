#include <catch_amalgamated.hpp>

#include <random>

#include <jenhyp/hankel.hpp>

using namespace jenhyp;

namespace {

// Discriminant through resultant-free route: D_{d,d} for small fixed cases.
mpq_class discriminant_cubic(const mpq_class& p, const mpq_class& q) {
    // X^3 + pX + q
    return -4 * p * p * p - 27 * q * q;
}

ExactPoly random_int_poly(std::mt19937& rng, long degree) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::vector<mpq_class> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = coeff(rng);
    while (c.back() == 0) c.back() = coeff(rng);
    return ExactPoly(std::move(c));
}

} // namespace

TEST_CASE("power sums of fixed polynomials") {
    auto s = power_sums_exact(ExactPoly({1, 2, 1}), 2); // (X+1)^2
    CHECK(s[0] == 2);
    CHECK(s[1] == -2);
    CHECK(s[2] == 2);
    s = power_sums_exact(ExactPoly({-2, 0, 1}), 2); // X^2-2
    CHECK(s[1] == 0);
    CHECK(s[2] == 4);
    s = power_sums_exact(ExactPoly({1, 3, 3, 1}), 1); // (X+1)^3
    CHECK(s[1] == -3);
}

TEST_CASE("symbolic D_{2,2} is the discriminant") {
    const auto& h = hankel_symbolic(2, 2);
    MultiPoly expect(3);
    expect.add_term({0, 2, 0}, 1);  // a_1^2
    expect.add_term({1, 0, 1}, -4); // -4 a_0 a_2
    CHECK(h.poly == expect);
}

TEST_CASE("symbolic D matches exact evaluation and the discriminant for m = d") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        long d = 2 + trial % 5; // degrees 2..6
        ExactPoly p = random_int_poly(rng, d);
        for (long m = 2; m <= d; ++m) {
            const auto& h = hankel_symbolic(d, m);
            std::vector<mpq_class> coords(p.coeffs().begin(), p.coeffs().end());
            REQUIRE(h.poly.eval(coords) == hankel_D_exact(p, m));
        }
    }
}

TEST_CASE("cubic discriminant identity") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        mpq_class p(coeff(rng)), q(coeff(rng));
        ExactPoly cubic({q, p, 0, 1});
        REQUIRE(hankel_D_exact(cubic, 3) == discriminant_cubic(p, q));
    }
    CHECK(hankel_D_exact(ExactPoly({0, -6, 0, 1}), 3) == 864);
}

TEST_CASE("homogeneity of degree 2m-2") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> num(1, 12);
    for (long d = 2; d <= 5; ++d)
        for (long m = 2; m <= d; ++m) {
            const auto& h = hankel_symbolic(d, m);
            REQUIRE(h.poly.is_homogeneous(static_cast<int>(2 * m - 2)));
            ExactPoly p = random_int_poly(rng, d);
            mpq_class lambda(num(rng), num(rng));
            lambda.canonicalize();
            std::vector<mpq_class> coords(p.coeffs().begin(), p.coeffs().end());
            std::vector<mpq_class> scaled = coords;
            for (auto& v : scaled) v *= lambda;
            mpq_class factor(1);
            for (long k = 0; k < 2 * m - 2; ++k) factor *= lambda;
            REQUIRE(h.poly.eval(scaled) == factor * h.poly.eval(coords));
        }
}

TEST_CASE("repeated roots kill every minor: (X+1)^d") {
    for (long d = 2; d <= 6; ++d) {
        ExactPoly p = ExactPoly::constant(1);
        for (long k = 0; k < d; ++k) p = p * ExactPoly({1, 1});
        for (long m = 2; m <= d; ++m) {
            std::vector<mpq_class> coords(p.coeffs().begin(), p.coeffs().end());
            REQUIRE(hankel_symbolic(d, m).poly.eval(coords) == 0);
        }
    }
}

TEST_CASE("Delta_m is invariant under root translation") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        long d = 2 + trial % 4;
        // planted real roots so Delta is a sum of squared differences
        ExactPoly p = ExactPoly::constant(1);
        for (long k = 0; k < d; ++k) p = p * ExactPoly({mpq_class(num(rng)), 1});
        mpq_class shift(num(rng), den(rng));
        shift.canonicalize();
        ExactPoly q = p.compose_affine(1, shift);
        for (long m = 2; m <= d; ++m)
            REQUIRE(hankel_delta_exact(p, m) == hankel_delta_exact(q, m));
    }
}

TEST_CASE("hermite hankel values") {
    CHECK(hermite_hankel_exact(2, 2) == 8);
    CHECK(hermite_hankel_exact(3, 3) == 864);
    // closed form under the monic convention: 2^{d(d-1)/2} prod nu^nu
    for (long d = 2; d <= 8; ++d) {
        mpq_class expect(1);
        for (long nu = 1; nu <= d; ++nu)
            for (long k = 0; k < nu; ++k) expect *= nu;
        mpz_class two_pow(1);
        mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(),
                     static_cast<unsigned long>(d * (d - 1) / 2));
        expect *= mpq_class(two_pow);
        REQUIRE(hermite_hankel_exact(d, d) == expect);
    }
    // and 2^{-d(d-1)/2} prod nu^nu when the leading coefficient is 2^d
    for (long d = 2; d <= 8; ++d) {
        mpq_class expect(1);
        for (long nu = 1; nu <= d; ++nu)
            for (long k = 0; k < nu; ++k) expect *= nu;
        mpz_class two_pow(1);
        mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(),
                     static_cast<unsigned long>(d * (d - 1) / 2));
        expect /= mpq_class(two_pow);
        REQUIRE(hermite_hankel_exact_phys(d, d) == expect);
    }
    // Delta_m(H_d) >= 1 in both normalizations
    for (long d = 2; d <= 10; ++d)
        for (long m = 2; m <= d; ++m) {
            REQUIRE(hermite_hankel_exact(d, m) >= 1);
            REQUIRE(hermite_hankel_exact_phys(d, m) >= 1);
        }
}

TEST_CASE("hankel verdict at the N(3) boundary") {
    PartitionTable t(120);
    CHECK_FALSE(hankel_verdict(JensenSpec(3, 93), t).hyperbolic);
    CHECK(hankel_verdict(JensenSpec(3, 94), t).hyperbolic);
    CHECK_FALSE(hankel_verdict(JensenSpec(2, 24), t).hyperbolic);
    auto v = hankel_verdict(JensenSpec(2, 24), t);
    REQUIRE(v.values.size() == 1);
    CHECK(sgn(v.values[0]) < 0);
}
