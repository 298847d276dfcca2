// series_core unit tests: exact arithmetic, the independent convolution
// oracle, inverse/dissection round trips, and the cache format.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "qseries/eta_theta.hpp"
#include "qseries/series.hpp"

using namespace qseries;

namespace {

// Test oracle: plain double-loop convolution, no sparsity tricks.
IntSeries naive_mul(const IntSeries& a, const IntSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Integer> c(static_cast<size_t>(n) + 1, Integer(0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return IntSeries::from_coeffs(std::move(c), n);
}

// Test oracle: prod_{k*m <= N} (1 - q^{k*m}) expanded factor by factor.
IntSeries naive_euler_product(int k, int order) {
    std::vector<Integer> c(static_cast<size_t>(order) + 1, Integer(0));
    c[0] = 1;
    for (int e = k; e <= order; e += k)
        for (int n = order; n >= e; --n) c[n] -= c[n - e];
    return IntSeries::from_coeffs(std::move(c), order);
}

IntSeries random_series(std::mt19937& rng, int order, double density) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> val(-9, 9);
    std::vector<Integer> c(static_cast<size_t>(order) + 1, Integer(0));
    for (int i = 0; i <= order; ++i)
        if (coin(rng) < density) c[i] = val(rng);
    return IntSeries::from_coeffs(std::move(c), order);
}

IntSeries random_unit_series(std::mt19937& rng, int order, double density) {
    IntSeries s = random_series(rng, order, density);
    std::vector<Integer> c = s.coeffs();
    c[0] = (rng() & 1) ? 1 : -1;
    return IntSeries::from_coeffs(std::move(c), order);
}

std::vector<long> small(const IntSeries& s) {
    std::vector<long> v;
    for (const Integer& c : s.coeffs()) v.push_back(c.get_si());
    return v;
}

} // namespace

TEST_CASE("from_coeffs zero-fills and truncates") {
    CHECK(small(IntSeries::from_coeffs({1}, 3)) == std::vector<long>{1, 0, 0, 0});
    CHECK(small(IntSeries::from_coeffs({0, 1}, 2)) == std::vector<long>{0, 1, 0});
    // first pentagonal partial of f1
    IntSeries pent = IntSeries::from_coeffs({1, -1, -1, 0, 0, 1}, 5);
    CHECK(eq_upto(pent, naive_euler_product(1, 5), 5));
    // longer input truncates at the order
    CHECK(small(IntSeries::from_coeffs({1, 2, 3, 4}, 1)) == std::vector<long>{1, 2});
}

TEST_CASE("add/neg/scale") {
    IntSeries a = IntSeries::from_coeffs({1, 1}, 1);
    IntSeries b = IntSeries::from_coeffs({1, -1}, 1);
    CHECK(small(add(a, b)) == std::vector<long>{2, 0});
    CHECK(small(neg(IntSeries::from_coeffs({0, 0, 1}, 2))) ==
          std::vector<long>{0, 0, -1});
    CHECK(small(scale(a, 3)) == std::vector<long>{3, 3});
}

TEST_CASE("mul basics") {
    IntSeries a = IntSeries::from_coeffs({1, 1}, 2);  // 1 + q
    IntSeries b = IntSeries::from_coeffs({1, -1}, 2); // 1 - q
    CHECK(small(mul(a, b)) == std::vector<long>{1, 0, -1});

    IntSeries f1 = euler_f(1, 64);
    CHECK(eq_upto(mul(f1, inverse(f1)), one(64), 64));

    // f2^3 f3^3 low-order coefficients
    IntSeries prod = mul(pow(euler_f(2, 8), 3), pow(euler_f(3, 8), 3));
    CHECK(prod.coefficient(1) == 0);
    CHECK(prod.coefficient(2) == -3);
    CHECK(prod.coefficient(3) == -3);
    CHECK(prod.coefficient(5) == 9);
}

TEST_CASE("mul: both paths agree with the naive oracle") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        int order = 1 + static_cast<int>(rng() % 128);
        double da = (trial % 3 == 0) ? 0.05 : 0.8; // force both dispatch paths
        IntSeries a = random_series(rng, order, da);
        IntSeries b = random_series(rng, order, 0.6);
        IntSeries expect = naive_mul(a, b);
        CHECK(eq_upto(detail::mul_schoolbook(a, b), expect, expect.order()));
        CHECK(eq_upto(detail::mul_sparse(a, b), expect, expect.order()));
        CHECK(eq_upto(mul(a, b), expect, expect.order()));
    }
}

TEST_CASE("ring axioms on random series") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 25; ++trial) {
        int order = 1 + static_cast<int>(rng() % 64);
        IntSeries a = random_series(rng, order, 0.5);
        IntSeries b = random_series(rng, order, 0.5);
        IntSeries c = random_series(rng, order, 0.5);
        CHECK(eq_upto(add(a, b), add(b, a), order));
        CHECK(eq_upto(mul(a, b), mul(b, a), order));
        CHECK(eq_upto(add(add(a, b), c), add(a, add(b, c)), order));
        CHECK(eq_upto(mul(mul(a, b), c), mul(a, mul(b, c)), order));
        CHECK(eq_upto(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), order));
    }
}

TEST_CASE("pow") {
    IntSeries a = IntSeries::from_coeffs({1, 1}, 2);
    CHECK(small(pow(a, 2)) == std::vector<long>{1, 2, 1});
    std::mt19937 rng(5);
    CHECK(eq_upto(pow(random_series(rng, 10, 0.5), 0), one(10), 10));
    CHECK(eq_upto(pow(euler_f(1, 200), 3), jacobi_cube(200), 200));
}

TEST_CASE("inverse") {
    IntSeries geo = inverse(IntSeries::from_coeffs({1, -1}, 6));
    CHECK(small(geo) == std::vector<long>{1, 1, 1, 1, 1, 1, 1});

    // partition numbers p(0..10)
    IntSeries p = inverse(euler_f(1, 10));
    CHECK(small(p) == std::vector<long>{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42});
    CHECK(p.coefficient(6) == 11);

    CHECK_THROWS_AS(inverse(IntSeries::from_coeffs({2, 1}, 3)), NonUnitConstantTerm);

    std::mt19937 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        int order = 1 + static_cast<int>(rng() % 100);
        IntSeries a = random_unit_series(rng, order, 0.5);
        CHECK(eq_upto(mul(a, inverse(a)), one(order), order));
    }
}

TEST_CASE("substitute_power") {
    CHECK(eq_upto(substitute_power(euler_f(1, 40), 3, 120), euler_f(3, 120), 120));
    CHECK(small(substitute_power(IntSeries::from_coeffs({0, 1}, 1), 2)) ==
          std::vector<long>{0, 0, 1, 0});
    // cap limits the order
    CHECK(substitute_power(one(10), 5, 17).order() == 17);
    CHECK(substitute_power(one(10), 5).order() == 54);

    // P(q^3) from substitution vs independent evaluation of the bilateral sum
    IntSeries sub = substitute_power(p_series(80), 3, 240);
    std::vector<Integer> direct(241, Integer(0));
    for (long m = -20; m <= 20; ++m) {
        long e = 3 * (m * (3 * m + 1) / 2);
        if (e >= 0 && e <= 240)
            direct[e] += ((m % 2 + 2) % 2 == 0) ? (6 * m + 1) : -(6 * m + 1);
    }
    CHECK(eq_upto(sub, IntSeries::from_coeffs(std::move(direct), 240), 240));
}

TEST_CASE("dissect") {
    IntSeries a = IntSeries::from_coeffs({1, 2, 3, 4, 5}, 4);
    CHECK(small(dissect(a, 2, 1)) == std::vector<long>{2, 4});
    CHECK_THROWS_AS(dissect(a, 2, 2), ResidueOutOfRange);
    CHECK_THROWS_AS(dissect(IntSeries::from_coeffs({1}, 0), 3, 2), OrderExceeded);

    // odd part of phi: exponents are the odd squares 1, 9, 25
    IntSeries ph_odd = dissect(phi(30), 2, 1);
    std::vector<long> expect(15, 0);
    expect[0] = 2;  // q^1
    expect[4] = 2;  // q^9
    expect[12] = 2; // q^25
    CHECK(small(ph_odd) == expect);
}

TEST_CASE("dissection completeness: reassembly recovers the series") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 12; ++trial) {
        int order = 5 + static_cast<int>(rng() % 90);
        IntSeries a = random_series(rng, order, 0.7);
        for (int m = 1; m <= 6; ++m) {
            IntSeries sum(order);
            for (int r = 0; r < m && r <= order; ++r)
                sum = add(sum, shift(substitute_power(dissect(a, m, r), m, order), r));
            CHECK(eq_upto(sum, a, order));
        }
    }
}

TEST_CASE("coefficient access and comparisons") {
    IntSeries f1 = euler_f(1, 210);
    CHECK(eq_upto(f1, f1, 210));
    CHECK(congruent_upto(pow(f1, 5), euler_f(5, 200), 5, 200));
    CHECK_THROWS_AS(f1.coefficient(211), OrderExceeded);
    CHECK_THROWS_AS(eq_upto(f1, one(100), 150), OrderExceeded);
    CHECK_THROWS_AS(congruent_upto(f1, one(100), 5, 150), OrderExceeded);
    CHECK_THROWS_AS(congruent_upto(f1, f1, 1, 10), QSeriesError);
}

TEST_CASE("zero series is explicit") {
    IntSeries z(7);
    CHECK(z.order() == 7);
    CHECK(z.nonzero_count() == 0);
    CHECK(eq_upto(mul(z, euler_f(1, 7)), z, 7));
}

TEST_CASE("cache format round-trips exactly") {
    std::mt19937 rng(777);
    IntSeries s = random_series(rng, 120, 0.4);
    // make a coefficient that overflows any machine word
    std::vector<Integer> c = s.coeffs();
    c[60] = Integer("-123456789012345678901234567890123456789");
    s = IntSeries::from_coeffs(std::move(c), 120);

    std::stringstream buf;
    write_series(buf, s, "random-test");
    std::string name;
    IntSeries back = read_series(buf, &name);
    CHECK(name == "random-test");
    CHECK(back.order() == 120);
    CHECK(eq_upto(back, s, 120));

    // zeros are omitted from the file body
    std::stringstream buf2;
    write_series(buf2, IntSeries::from_coeffs({1, 0, 0, 5}, 3), "sparse");
    CHECK(buf2.str() == "# qseries v1 name=sparse order=3\n0\t1\n3\t5\n");

    std::stringstream bad("not a header\n");
    CHECK_THROWS_AS(read_series(bad), QSeriesError);
}
