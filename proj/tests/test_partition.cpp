#include <catch_amalgamated.hpp>

#include <jenhyp/partition.hpp>

using jenhyp::PartitionTable;

namespace {

// Independent oracle: direct enumeration of partitions with parts <= cap.
long enumerate_partitions(long n, long cap) {
    if (n == 0) return 1;
    long total = 0;
    for (long part = std::min(n, cap); part >= 1; --part)
        total += enumerate_partitions(n - part, part);
    return total;
}

} // namespace

TEST_CASE("p(0) table") {
    PartitionTable t(0);
    CHECK(t.max_n() == 0);
    CHECK(t.at(0) == 1);
}

TEST_CASE("recurrence matches brute-force enumeration up to 20") {
    PartitionTable t(20);
    for (long n = 0; n <= 20; ++n)
        CHECK(t.at(n) == enumerate_partitions(n, n));
    CHECK(t.at(5) == 7);
    CHECK(t.at(10) == 42);
}

TEST_CASE("larger classical values") {
    PartitionTable t(200);
    CHECK(t.at(100) == mpz_class("190569292"));
    CHECK(t.at(200) == mpz_class("3972999029388"));
}

TEST_CASE("monotone and positive") {
    PartitionTable t(500);
    for (long n = 1; n <= 500; ++n) {
        CHECK(t.at(n) >= 1);
        CHECK(t.at(n) >= t.at(n - 1));
    }
}

TEST_CASE("exact ratios") {
    PartitionTable t(30);
    mpq_class expect(t.at(27), t.at(25));
    expect.canonicalize();
    CHECK(t.ratio(25, 2) == expect);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(PartitionTable(-1), std::invalid_argument);
    CHECK_THROWS_AS(PartitionTable(PartitionTable::hard_limit + 1), std::invalid_argument);
    PartitionTable t(3);
    CHECK_THROWS_AS(t.at(4), std::out_of_range);
}
