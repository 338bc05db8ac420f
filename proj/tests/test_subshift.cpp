#include "zeta/power_series.hpp"
#include "zeta/subshift.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace zeta;

namespace {

Subshift from_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> data;
    for (const auto& row : rows) {
        std::vector<Int> out;
        for (long v : row)
            out.emplace_back(v);
        data.push_back(std::move(out));
    }
    return Subshift(IntMatrix(data));
}

const Subshift kFullTwoShift = from_rows({{1, 1}, {1, 1}});
const Subshift kGoldenMean = from_rows({{1, 1}, {1, 0}});
const Subshift kEmptyShift = from_rows({{0}});

Subshift random_subshift(std::mt19937& gen, int max_dim, double density = 0.45) {
    const int dim = static_cast<int>(testing::random_long(gen, 1, max_dim));
    std::bernoulli_distribution edge(density);
    std::vector<std::vector<Int>> rows(static_cast<size_t>(dim),
                                       std::vector<Int>(static_cast<size_t>(dim), Int(0)));
    for (auto& row : rows)
        for (auto& entry : row)
            entry = edge(gen) ? 1 : 0;
    return Subshift(IntMatrix(rows));
}

}  // namespace

TEST_CASE("transition matrix validation") {
    CHECK_THROWS_AS(from_rows({{2, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(from_rows({{-1}}), std::invalid_argument);
}

TEST_CASE("trace counts") {
    CHECK(trace_count(kFullTwoShift, 3) == 8);
    CHECK(trace_count(kGoldenMean, 1) == 1);
    CHECK(trace_count(kGoldenMean, 2) == 3);
    CHECK(trace_count(kGoldenMean, 3) == 4);
    CHECK(trace_count(kGoldenMean, 4) == 7);
    for (long n = 1; n <= 5; ++n)
        CHECK(trace_count(kEmptyShift, n) == 0);
}

TEST_CASE("brute force enumeration") {
    CHECK(brute_force_count(kFullTwoShift, 3) == 8);
    CHECK(brute_force_count(kGoldenMean, 2) == 3);
    CHECK(brute_force_count(kEmptyShift, 1) == 0);

    SUBCASE("caps raise resource errors") {
        CHECK_THROWS_AS(brute_force_count(kGoldenMean, 13), ResourceLimitError);
        std::mt19937 gen(411);
        const Subshift big = random_subshift(gen, 7, 1.0);
        if (big.alphabet_size() > 6)
            CHECK_THROWS_AS(brute_force_count(big, 2), ResourceLimitError);
        const EnumerationCaps tight{4, 6};
        CHECK_THROWS_AS(brute_force_count(kGoldenMean, 5, tight), ResourceLimitError);
    }
}

TEST_CASE("trace equals enumeration over a random corpus") {
    std::mt19937 gen(412);
    std::vector<Subshift> corpus = {kFullTwoShift, kGoldenMean, kEmptyShift};
    for (int i = 0; i < 25; ++i)
        corpus.push_back(random_subshift(gen, 6));
    for (const Subshift& s : corpus)
        for (int n = 1; n <= 12; ++n)
            CHECK(trace_count(s, n) == brute_force_count(s, n));
}

TEST_CASE("signed trace formula") {
    const SignedSubshiftFamily golden({{kGoldenMean, 1}});
    CHECK(trace_formula(golden, 2) == 3);

    const Subshift loop = from_rows({{1}});
    const SignedSubshiftFamily mixed({{kFullTwoShift, 1}, {loop, -1}});
    CHECK(trace_formula(mixed, 3) == 7);

    const SignedSubshiftFamily cancelling({{loop, 1}, {loop, -1}});
    for (long n = 1; n <= 4; ++n)
        CHECK(trace_formula(cancelling, n) == 0);

    CHECK_THROWS_AS(SignedSubshiftFamily({}), std::invalid_argument);
    CHECK_THROWS_AS(SignedSubshiftFamily({{loop, 2}}), std::invalid_argument);
}

TEST_CASE("subshift zeta closed forms") {
    CHECK(subshift_zeta(SignedSubshiftFamily({{kGoldenMean, 1}})) ==
          RationalFunction(Polynomial::one(), Polynomial{1, -1, -1}));
    CHECK(subshift_zeta(SignedSubshiftFamily({{kFullTwoShift, 1}})) ==
          RationalFunction(Polynomial::one(), Polynomial{1, -2}));

    const Subshift loop = from_rows({{1}});
    CHECK(subshift_zeta(SignedSubshiftFamily({{loop, 1}, {loop, -1}})) ==
          RationalFunction());
}

TEST_CASE("zeta expansion equals the signed trace series") {
    std::mt19937 gen(413);
    for (int i = 0; i < 30; ++i) {
        const int piece_count = static_cast<int>(testing::random_long(gen, 1, 3));
        std::vector<SignedPiece> pieces;
        for (int k = 0; k < piece_count; ++k)
            pieces.push_back(SignedPiece{random_subshift(gen, 4),
                                         testing::random_long(gen, 0, 1) == 0 ? 1 : -1});
        const SignedSubshiftFamily family(std::move(pieces));
        const int order = 24;
        std::vector<Int> counts;
        for (int n = 1; n <= order; ++n)
            counts.push_back(trace_formula(family, n));
        CHECK(expand_rational(subshift_zeta(family), order) ==
              zeta_series_from_counts(counts));
    }
}
