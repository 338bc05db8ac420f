#include "zeta/periodic.hpp"
#include "zeta/power_series.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <numeric>

using namespace zeta;

namespace {

NielsenData data2(Int n1, Int n2) {
    return NielsenData(2, {{1, std::move(n1)}, {2, std::move(n2)}});
}

NielsenData random_nielsen(std::mt19937& gen, long max_period = 36, long max_count = 50) {
    const long m = testing::random_long(gen, 1, max_period);
    std::map<long, Int> counts;
    for (long d : divisors_of(m))
        counts[d] = Int(testing::random_long(gen, 0, max_count));
    return NielsenData(m, std::move(counts));
}

}  // namespace

TEST_CASE("moebius function") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
    CHECK(moebius(210) == 1);
    CHECK_THROWS_AS(moebius(0), std::invalid_argument);
}

TEST_CASE("divisor enumeration") {
    CHECK(divisors_of(1) == std::vector<long>{1});
    CHECK(divisors_of(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors_of(36) == std::vector<long>{1, 2, 3, 4, 6, 9, 12, 18, 36});
}

TEST_CASE("count expansion by the gcd rule") {
    CHECK(expand_counts(data2(Int(2), Int(4)), 4) ==
          std::vector<Int>{Int(2), Int(4), Int(2), Int(4)});
    CHECK(expand_counts(NielsenData(1, {{1, Int(7)}}), 3) ==
          std::vector<Int>{Int(7), Int(7), Int(7)});

    const NielsenData six(6, {{1, Int(1)}, {2, Int(3)}, {3, Int(5)}, {6, Int(9)}});
    CHECK(expand_counts(six, 6) ==
          std::vector<Int>{Int(1), Int(3), Int(5), Int(3), Int(1), Int(9)});
}

TEST_CASE("nielsen data validation") {
    CHECK_THROWS_AS(NielsenData(2, {{1, Int(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(NielsenData(2, {{1, Int(1)}, {2, Int(1)}, {3, Int(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(NielsenData(2, {{1, Int(-1)}, {2, Int(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(NielsenData(0, {}), std::invalid_argument);
}

TEST_CASE("inversion coefficients") {
    const auto p2 = p_coefficients(data2(Int(2), Int(4)));
    CHECK(p2.at(1) == 2);
    CHECK(p2.at(2) == 2);

    const auto p3 = p_coefficients(NielsenData(3, {{1, Int(1)}, {3, Int(4)}}));
    CHECK(p3.at(1) == 1);
    CHECK(p3.at(3) == 3);

    const auto p1 = p_coefficients(NielsenData(1, {{1, Int(9)}}));
    CHECK(p1.at(1) == 9);

    SUBCASE("negative values are legitimate") {
        const auto p = p_coefficients(data2(Int(5), Int(1)));
        CHECK(p.at(2) == -4);
    }
}

TEST_CASE("periodic zeta factor lists") {
    const CyclotomicProduct z2 = periodic_zeta(data2(Int(2), Int(4)));
    CHECK(z2.factors() == std::map<long, Rat>{{1, Rat(-2)}, {2, Rat(-1)}});

    const CyclotomicProduct z3 = periodic_zeta(NielsenData(3, {{1, Int(1)}, {3, Int(4)}}));
    CHECK(z3.factors() == std::map<long, Rat>{{1, Rat(-1)}, {3, Rat(-1)}});

    SUBCASE("a genuinely radical case") {
        const CyclotomicProduct z = periodic_zeta(data2(Int(0), Int(1)));
        CHECK(z.factors() == std::map<long, Rat>{{2, make_rat(-1, 2)}});
        const PowerSeries s = expand_cyclotomic(z, 4);
        CHECK(s == PowerSeries(4, {Rat(1), Rat(0), make_rat(1, 2), Rat(0), make_rat(3, 8)}));
    }

    SUBCASE("zero exponents are dropped") {
        const CyclotomicProduct z = periodic_zeta(data2(Int(0), Int(0)));
        CHECK(z.factors().empty());
    }
}

TEST_CASE("cyclotomic product expansion") {
    CHECK(expand_cyclotomic(CyclotomicProduct(1, {{1, Rat(-1)}}), 3) ==
          PowerSeries(3, {Rat(1), Rat(1), Rat(1), Rat(1)}));
    CHECK(expand_cyclotomic(CyclotomicProduct(2, {{2, make_rat(-1, 2)}}), 4) ==
          PowerSeries(4, {Rat(1), Rat(0), make_rat(1, 2), Rat(0), make_rat(3, 8)}));
    CHECK(expand_cyclotomic(CyclotomicProduct(2, {{1, Rat(-2)}, {2, Rat(-1)}}), 2) ==
          PowerSeries(2, {Rat(1), Rat(2), Rat(4)}));

    CHECK_THROWS_AS(CyclotomicProduct(2, {{3, Rat(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(CyclotomicProduct(2, {{2, Rat(0)}}), std::invalid_argument);
}

TEST_CASE("inversion identities on random data") {
    std::mt19937 gen(311);
    for (int i = 0; i < 120; ++i) {
        const NielsenData data = random_nielsen(gen);
        const auto p = p_coefficients(data);

        // recursion result matches the explicit Moebius sum
        for (long d : divisors_of(data.period())) {
            Int direct(0);
            for (long d1 : divisors_of(d)) {
                const int mu = moebius(d1);
                if (mu != 0)
                    direct += mu * data.count(d / d1);
            }
            CHECK(p.at(d) == direct);
        }

        // round trip: summing P over the divisor lattice recovers N
        for (long d : divisors_of(data.period())) {
            Int total(0);
            for (long d1 : divisors_of(d))
                total += p.at(d1);
            CHECK(total == data.count(d));
        }
    }
}

TEST_CASE("zeta expansion equals the count series on random data") {
    std::mt19937 gen(312);
    for (int i = 0; i < 40; ++i) {
        const NielsenData data = random_nielsen(gen, 24, 12);
        const int order = 24;
        CHECK(expand_cyclotomic(periodic_zeta(data), order) ==
              zeta_series_from_counts(expand_counts(data, order)));
    }
}

TEST_CASE("prime periods collapse to the two-factor form") {
    std::mt19937 gen(313);
    for (long m : {2L, 3L, 5L, 7L, 11L, 13L}) {
        const Int n1(testing::random_long(gen, 0, 50));
        const Int nm(testing::random_long(gen, 0, 50));
        const NielsenData data(m, {{1, n1}, {m, nm}});
        const CyclotomicProduct zeta_fn = periodic_zeta(data);

        std::map<long, Rat> expected;
        if (n1 != 0)
            expected[1] = Rat(-n1);
        if (n1 != nm)
            expected[m] = make_rat(n1 - nm, Int(m));
        CHECK(zeta_fn.factors() == expected);
    }
}
