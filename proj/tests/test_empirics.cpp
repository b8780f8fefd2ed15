#include <catch2/catch_amalgamated.hpp>

#include "fhseq/empirics.hpp"
#include "test_util.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace fhseq;

TEST_CASE("monte carlo tail experiment validates its inputs", "[empirics]") {
    CHECK_THROWS_WITH(mc_small_distance_fraction(8, 2, 0.3, 10, 1),
                      ContainsSubstring("n >= 9"));
    CHECK_THROWS_WITH(mc_small_distance_fraction(9, 2, 0.6, 10, 1),
                      ContainsSubstring("epsilon"));
    CHECK_THROWS_AS(mc_small_distance_fraction(9, 2, 0.3, 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_WITH(
        mc_small_distance_fraction(9, 2, 0.3, 10, 1,
                                   ConcentrationVariant::prime_length),
        ContainsSubstring("prime"));
    CHECK_THROWS_WITH(
        mc_small_distance_fraction(2, 2, 0.3, 10, 1,
                                   ConcentrationVariant::prime_length),
        ContainsSubstring("prime n >= 3"));
}

TEST_CASE("monte carlo tail bound holds on a vacuous instance", "[empirics]") {
    // n = 9: the bound is 81 e^{-eps^2/2} > 1, so any frequency passes; the
    // point of the instance is exercising the full reporting path
    const auto r = mc_small_distance_fraction(9, 2, 0.3, 500, 1);
    CHECK(r.experiment == "mc-lemma4");
    CHECK(r.bound > 1.0);
    CHECK_THAT(r.bound, WithinRel(81.0 * std::exp(-0.09 / 2.0), 1e-12));
    CHECK_THAT(r.threshold, WithinRel(3.0 * 0.2, 1e-12));
    CHECK(r.pass);
    CHECK(r.trials == 500);
    CHECK(r.observed_count <= 500);
}

TEST_CASE("monte carlo tail bound holds on a nonvacuous instance", "[empirics]") {
    // n = 1600, q = 64, eps = 0.9: bound = 1600^2 e^{-0.405 * 38} ~ 0.53 < 1,
    // and the event d(u) <= 128.25 is astronomically unlikely
    const auto r = mc_small_distance_fraction(1600, 64, 0.9, 500, 3);
    CHECK(r.bound < 1.0);
    CHECK(r.observed_count == 0);
    CHECK(r.pass);
}

TEST_CASE("monte carlo runs are bit-reproducible", "[empirics]") {
    const auto a = mc_small_distance_fraction(16, 2, 0.2, 2000, 42);
    const auto b = mc_small_distance_fraction(16, 2, 0.2, 2000, 42);
    CHECK(a == b);
    CHECK(a.machine_line() == b.machine_line());
    const auto c = mc_small_distance_fraction(16, 2, 0.2, 2000, 43);
    CHECK(c.seed == 43);
}

TEST_CASE("prime-length variant supports both threshold readings", "[empirics]") {
    const auto stated = mc_small_distance_fraction(
        11, 2, 0.2, 300, 5, ConcentrationVariant::prime_length,
        PrimeThresholdForm::stated);
    const auto alt = mc_small_distance_fraction(
        11, 2, 0.2, 300, 5, ConcentrationVariant::prime_length,
        PrimeThresholdForm::alternative);
    CHECK(stated.experiment == "mc-lemma3");
    CHECK_THAT(stated.threshold, WithinRel(9.0 * 0.3, 1e-12));
    CHECK_THAT(alt.threshold, WithinRel(10.0 * 0.3, 1e-12));
    CHECK(stated.bound == alt.bound);
    CHECK(stated.pass);
    CHECK(alt.pass);
    CHECK(alt.observed_count >= stated.observed_count);  // looser event
}

TEST_CASE("exhaustive small-distance count matches hand-verified instances",
          "[empirics]") {
    const auto r1 = exhaustive_small_distance_count(4, 2, 2);
    CHECK(r1.experiment == "count-lemma");
    CHECK(r1.observed_count == 4);  // 0000, 1111, 0101, 1010
    CHECK(r1.trials == 16);
    CHECK_THAT(r1.observed_frequency, WithinAbs(0.25, 1e-15));
    CHECK_THAT(r1.bound, WithinRel(181.01933598375617, 1e-9));
    CHECK(r1.pass);

    const auto r2 = exhaustive_small_distance_count(4, 4, 2);
    CHECK(r2.observed_count == 16);  // the words of period 1 or 2
    CHECK(r2.pass);
}

TEST_CASE("count experiment enforces hypothesis, range and cap", "[empirics]") {
    CHECK_THROWS_WITH(exhaustive_small_distance_count(4, 2, 3),
                      ContainsSubstring("d < (1 - 1/(sqrt q + 1)) n"));
    CHECK_THROWS_AS(exhaustive_small_distance_count(4, 2, 0), std::invalid_argument);
    CHECK_THROWS_WITH(exhaustive_small_distance_count(40, 2, 2),
                      ContainsSubstring("cap"));
}

TEST_CASE("counts grow with d and skip distance 1", "[empirics]") {
    // valid d at n = 6, q = 2: hypothesis threshold is about 3.51
    const auto c1 = exhaustive_small_distance_count(6, 2, 1);
    const auto c2 = exhaustive_small_distance_count(6, 2, 2);
    const auto c3 = exhaustive_small_distance_count(6, 2, 3);
    CHECK(c1.observed_count == 10);  // exactly the periodic words
    // no word has self-distance exactly 1, so d = 2 adds nothing
    CHECK(c2.observed_count == c1.observed_count);
    CHECK(c3.observed_count >= c2.observed_count);
}

namespace {

// words of {0..q-1}^n with a nontrivial period, via exact-period recursion
std::uint64_t periodic_word_count(std::size_t n, std::uint32_t q) {
    std::vector<std::uint64_t> exact(n + 1, 0);
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < p; ++i) total *= q;
        for (std::size_t t = 1; t < p; ++t) {
            if (p % t == 0) total -= exact[t];
        }
        exact[p] = total;
    }
    std::uint64_t sum = 0;
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p == 0) sum += exact[p];
    }
    return sum;
}

}  // namespace

TEST_CASE("the d = 2 count equals the periodic-word count", "[empirics]") {
    for (std::uint32_t q : {2u, 3u}) {
        for (std::size_t n = 4; n <= 10; ++n) {
            const double hypothesis = (1.0 - 1.0 / (std::sqrt(double(q)) + 1.0)) * n;
            if (!(2.0 < hypothesis)) continue;
            const auto r = exhaustive_small_distance_count(n, q, 2);
            REQUIRE(r.observed_count == periodic_word_count(n, q));
        }
    }
}

TEST_CASE("greedy oracle equivalence holds on exhaustive instances", "[empirics]") {
    const auto r1 = oracle_greedy_equivalence(3, 3, 3);
    CHECK(r1.experiment == "oracle-greedy");
    CHECK(r1.pass);
    CHECK(r1.observed_count == 3);
    CHECK(r1.observed_stat == 3.0);
    CHECK(r1.trials == 27);

    CHECK(oracle_greedy_equivalence(6, 2, 3).pass);
    CHECK(oracle_greedy_equivalence(8, 2, 4).pass);
    CHECK(oracle_greedy_equivalence(5, 3, 2).pass);
}

TEST_CASE("negligibility rate is strictly negative below the boundary",
          "[empirics]") {
    const auto r = asymptotic_negligibility_check(9);
    CHECK(r.experiment == "negligibility");
    CHECK(r.pass);
    CHECK(r.observed_stat < 0.0);
    CHECK_THAT(r.threshold, WithinRel(1.0 - M_E / 3.0, 1e-12));

    // single-point grid with a hand-computed rate
    const auto single = asymptotic_negligibility_check(49, DeltaGrid{0.5, 0.5, 0.1});
    CHECK(single.trials == 1);
    CHECK_THAT(single.observed_stat, WithinAbs(-0.403677461028802, 1e-12));
    CHECK(single.pass);

    CHECK(asymptotic_negligibility_check(8).pass);
    CHECK(asymptotic_negligibility_check(16).pass);
}

TEST_CASE("negligibility validates alphabet and grid", "[empirics]") {
    CHECK_THROWS_WITH(asymptotic_negligibility_check(7), ContainsSubstring("q >= 8"));
    CHECK_THROWS_WITH(asymptotic_negligibility_check(9, DeltaGrid{0.0, 0.5, 0.01}),
                      ContainsSubstring("1 - e/sqrt(q)"));
    CHECK_THROWS_AS(asymptotic_negligibility_check(9, DeltaGrid{0.0, 0.05, -1.0}),
                    std::invalid_argument);
}

TEST_CASE("trial reports render machine lines stably", "[empirics]") {
    const auto r = exhaustive_small_distance_count(4, 2, 2);
    const std::string line = r.machine_line();
    CHECK_THAT(line, ContainsSubstring("experiment=count-lemma"));
    CHECK_THAT(line, ContainsSubstring("count=4"));
    CHECK_THAT(line, ContainsSubstring("pass=1"));
    CHECK_THAT(r.to_text(), ContainsSubstring("PASS"));
}
