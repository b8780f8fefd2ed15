#include <catch2/catch_amalgamated.hpp>

#include "fhseq/codec.hpp"
#include "fhseq/rng.hpp"
#include "test_util.hpp"

using fhseq::FhSequenceSet;
using fhseq::HoppingCyclicCode;
using fhseq::Sequence;
using testutil::seq;

TEST_CASE("hopping-cyclic check diagnoses closure and aperiodicity",
          "[codec]") {
    SECTION("a full aperiodic orbit passes") {
        const auto diag = fhseq::check_hopping_cyclic({seq({0, 1}, 2), seq({1, 0}, 2)});
        CHECK(diag.ok);
        CHECK(diag.message() == "hopping cyclic");
    }
    SECTION("a periodic word is witnessed") {
        const auto diag = fhseq::check_hopping_cyclic({seq({0, 0}, 2)});
        CHECK(!diag.ok);
        REQUIRE(diag.periodic_word.has_value());
        CHECK(*diag.periodic_word == seq({0, 0}, 2));
        CHECK(diag.message().find("period") != std::string::npos);
    }
    SECTION("a missing rotation is witnessed") {
        const auto diag = fhseq::check_hopping_cyclic({seq({0, 1}, 2)});
        CHECK(!diag.ok);
        REQUIRE(diag.unclosed_word.has_value());
        CHECK(*diag.unclosed_word == seq({0, 1}, 2));
        CHECK(*diag.missing_rotation == seq({1, 0}, 2));
    }
    SECTION("degenerate inputs are rejected") {
        CHECK_THROWS_AS(fhseq::check_hopping_cyclic({}), std::invalid_argument);
        CHECK_THROWS_AS(fhseq::check_hopping_cyclic({seq({0, 1}, 2), seq({0, 1}, 2)}),
                        std::invalid_argument);
        CHECK_THROWS_AS(fhseq::check_hopping_cyclic({seq({0, 1}, 2), seq({0, 1, 1}, 2)}),
                        std::invalid_argument);
    }
}

TEST_CASE("hopping cyclic code construction", "[codec]") {
    const HoppingCyclicCode code({seq({1, 0}, 2), seq({0, 1}, 2)});
    CHECK(code.size() == 2);
    CHECK(code.length() == 2);
    CHECK(code.codewords().front() == seq({0, 1}, 2));

    const HoppingCyclicCode empty(3, 2);
    CHECK(empty.empty());
    CHECK(empty.length() == 3);

    CHECK_THROWS_WITH(HoppingCyclicCode({seq({0, 1}, 2)}),
                      Catch::Matchers::ContainsSubstring("missing"));
    CHECK_THROWS_WITH(HoppingCyclicCode({seq({0, 1, 0, 1}, 2), seq({1, 0, 1, 0}, 2)}),
                      Catch::Matchers::ContainsSubstring("period"));
}

TEST_CASE("expanding a family gives the union of its orbits", "[codec]") {
    SECTION("single orbit of full length") {
        const auto code = fh_to_code(FhSequenceSet({seq({0, 1, 2}, 3)}));
        REQUIRE(code.size() == 3);
        CHECK(code.codewords()[0] == seq({0, 1, 2}, 3));
        CHECK(code.codewords()[1] == seq({1, 2, 0}, 3));
        CHECK(code.codewords()[2] == seq({2, 0, 1}, 3));
        CHECK(fhseq::code_min_distance(code) == 3);
    }
    SECTION("binary example") {
        const auto code = fh_to_code(FhSequenceSet({seq({0, 0, 1}, 2)}));
        REQUIRE(code.size() == 3);
        CHECK(fhseq::code_min_distance(code) == 2);
    }
    SECTION("periodic members are rejected with a witness") {
        CHECK_THROWS_WITH(fh_to_code(FhSequenceSet({seq({0, 1, 0, 1}, 2)})),
                          Catch::Matchers::ContainsSubstring("0 1 0 1"));
    }
    SECTION("members sharing an orbit are rejected") {
        CHECK_THROWS_WITH(
            fh_to_code(FhSequenceSet({seq({0, 1, 2}, 3), seq({1, 2, 0}, 3)})),
            Catch::Matchers::ContainsSubstring("orbit"));
    }
}

TEST_CASE("collapsing a code keeps canonical representatives", "[codec]") {
    const auto family = code_to_fh(HoppingCyclicCode(
        {seq({0, 1, 2}, 3), seq({1, 2, 0}, 3), seq({2, 0, 1}, 3)}));
    REQUIRE(family.size() == 1);
    CHECK(family.members()[0] == seq({0, 1, 2}, 3));

    CHECK_THROWS_AS(code_to_fh(HoppingCyclicCode(3, 3)), std::invalid_argument);
}

namespace {

// distinct-orbit aperiodic family for roundtrip / parameter-map checks
FhSequenceSet random_family(fhseq::SplitMix64& gen, std::size_t n, std::uint32_t q,
                            std::size_t want) {
    std::vector<Sequence> members;
    std::vector<Sequence> canon;
    int attempts = 0;
    while (members.size() < want && attempts < 200) {
        ++attempts;
        Sequence cand = fhseq::random_sequence(gen, n, q);
        if (fhseq::smallest_period(cand) != n) continue;
        Sequence c = canonical_rotation(cand);
        bool fresh = true;
        for (const Sequence& s : canon) fresh = fresh && !(s == c);
        if (!fresh) continue;
        canon.push_back(std::move(c));
        members.push_back(std::move(cand));
    }
    return FhSequenceSet(std::move(members));
}

}  // namespace

TEST_CASE("conversion is a parameter-exact roundtrip", "[codec]") {
    fhseq::SplitMix64 gen(77);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 2 + gen.uniform_below(7);
        const std::uint32_t q = 2 + gen.uniform_below(2);
        const std::size_t want = 1 + gen.uniform_below(3);
        const FhSequenceSet family = random_family(gen, n, q, want);
        const std::size_t m = family.size();

        const auto code = fh_to_code(family);
        REQUIRE(code.size() == n * m);
        REQUIRE(fhseq::check_hopping_cyclic(code.codewords()).ok);

        // min distance of the code equals n minus the max correlation
        const auto profile = set_profile(family);
        const unsigned dist = fhseq::code_min_distance(code);
        REQUIRE(dist == n - profile.max_correlation);

        // collapsing reproduces the family up to canonical representatives
        std::vector<Sequence> canon;
        for (const Sequence& u : family.members()) {
            canon.push_back(canonical_rotation(u));
        }
        REQUIRE(code_to_fh(code) == FhSequenceSet(std::move(canon)));
    }
}
