// quad_forms unit tests: lattice enumeration vs theta series, and the
// omega/B3 relations the module exists for.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qseries/partitions.hpp"
#include "qseries/quadforms.hpp"

using namespace qseries;

TEST_CASE("omega_enumerate spot values") {
    CHECK(omega_enumerate(3, 0) == 1);
    CHECK(omega_enumerate(3, 5) == 96);  // 24 from y=0 plus 72 from |y|^2=1
    CHECK(omega_enumerate(3, 2) == 12);
    CHECK(omega_enumerate(1, 4) == 6);   // (+-2,0) and (+-1,+-1)
    CHECK_THROWS_AS(omega_enumerate(0, 3), QSeriesError);
}

TEST_CASE("sum_of_squares_table sanity") {
    std::vector<Integer> r1 = sum_of_squares_table(1, 10);
    CHECK(r1[0] == 1);
    CHECK(r1[1] == 2);
    CHECK(r1[2] == 0);
    CHECK(r1[9] == 2);
    std::vector<Integer> r2 = sum_of_squares_table(2, 10);
    CHECK(r2[0] == 1);
    CHECK(r2[1] == 4);
    CHECK(r2[5] == 8);
    CHECK(r2[3] == 0);
}

TEST_CASE("omega_series spot values") {
    IntSeries w3 = omega_series(3, 4);
    CHECK(w3.coefficient(0) == 1);
    CHECK(w3.coefficient(1) == 6);
    CHECK(w3.coefficient(2) == 12);
    CHECK(omega_series(1, 4).coefficient(4) == 6);
    CHECK(omega_series(2, 0).coefficient(0) == 1);
}

TEST_CASE("series and enumeration agree for k <= 3, n <= 200") {
    for (int k = 1; k <= 3; ++k) {
        IntSeries w = omega_series(k, 200);
        for (int n = 0; n <= 200; ++n) CHECK(w.coefficient(n) == omega_enumerate(k, n));
    }
}

TEST_CASE("omega relations against the partition families") {
    int N = 600;
    IntSeries w3 = omega_series(3, N);
    IntSeries w2 = omega_series(2, N);
    IntSeries w1 = omega_series(1, N);
    IntSeries B3 = family_series({3, 3}, N);
    IntSeries A3 = family_series({3, 2}, N);
    IntSeries a3 = family_series({3, 1}, N);

    for (long n = 0; 6 * n + 5 <= N; ++n)
        CHECK(w3.coefficient(6 * n + 5) == 4 * B3.coefficient(6 * n + 4));
    for (long n = 0; 12 * n + 2 <= N; ++n)
        CHECK(w3.coefficient(12 * n + 2) == 12 * B3.coefficient(6 * n));
    for (long n = 0; 12 * n + 10 <= N; ++n)
        CHECK(w3.coefficient(12 * n + 10) == 6 * B3.coefficient(6 * n + 4));
    for (long n = 0; 6 * n + 5 <= N; ++n)
        CHECK(w2.coefficient(6 * n + 5) == 12 * A3.coefficient(2 * n + 1));
    for (long n = 0; 12 * n + 4 <= N; ++n)
        CHECK(w1.coefficient(12 * n + 4) == 6 * a3.coefficient(n));
}
