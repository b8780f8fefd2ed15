#include <catch2/catch_amalgamated.hpp>

#include "fhseq/correlation.hpp"
#include "fhseq/rng.hpp"
#include "test_util.hpp"

using fhseq::FhSequenceSet;
using fhseq::Sequence;
using fhseq::hamming_correlation;
using fhseq::pairwise_distance;
using testutil::seq;

TEST_CASE("hamming correlation counts agreements at a delay", "[correlation]") {
    const Sequence x = seq({0, 1, 2}, 3);
    CHECK(hamming_correlation(x, x, 0) == 3);
    CHECK(hamming_correlation(x, x, 1) == 0);
    CHECK(hamming_correlation(seq({0, 1, 0, 1}, 2), seq({0, 1, 0, 1}, 2), 2) == 4);
    CHECK(hamming_correlation(seq({0, 1, 2}, 3), seq({0, 1, 0}, 3), 0) == 2);

    CHECK_THROWS_AS(hamming_correlation(x, seq({0, 1}, 3), 0), std::invalid_argument);
    CHECK_THROWS_AS(hamming_correlation(x, seq({0, 1, 2}, 4), 0), std::invalid_argument);
    CHECK_THROWS_AS(hamming_correlation(x, x, 3), std::invalid_argument);
}

TEST_CASE("pairwise distance is the unshifted Hamming distance", "[correlation]") {
    CHECK(pairwise_distance(seq({0, 1, 2}, 3), seq({0, 2, 1}, 3)) == 2);
    CHECK(pairwise_distance(seq({0, 1, 2}, 3), seq({0, 1, 2}, 3)) == 0);
    CHECK(pairwise_distance(seq({0, 0}, 2), seq({1, 1}, 2)) == 2);
}

TEST_CASE("cyclic min distance minimises over nontrivial rotations", "[correlation]") {
    CHECK(fhseq::cyclic_min_distance(seq({0, 1, 2}, 3)) == 3);
    CHECK(fhseq::cyclic_min_distance(seq({0, 0, 1}, 2)) == 2);
    CHECK(fhseq::cyclic_min_distance(seq({0, 1, 0, 1}, 2)) == 0);
    CHECK_THROWS_AS(fhseq::cyclic_min_distance(seq({0}, 2)), std::invalid_argument);
}

TEST_CASE("correlation identities hold exhaustively on small ranges",
          "[correlation]") {
    const auto check_pairs = [](std::size_t n, std::uint32_t q) {
        std::vector<Sequence> all;
        testutil::for_each_word(n, q, [&](const std::vector<fhseq::symbol_t>& w) {
            all.emplace_back(w, q);
        });
        for (const Sequence& x : all) {
            for (const Sequence& y : all) {
                for (std::size_t tau = 0; tau < n; ++tau) {
                    const unsigned h = hamming_correlation(x, y, tau);
                    REQUIRE(h <= n);
                    // delay-distance relation
                    REQUIRE(h == n - pairwise_distance(x, rotate(y, tau)));
                    // delay symmetry
                    REQUIRE(h == hamming_correlation(y, x, (n - tau) % n));
                    // invariance under simultaneous rotation
                    for (std::size_t s = 0; s < n; ++s) {
                        REQUIRE(hamming_correlation(rotate(x, s), rotate(y, s), tau) == h);
                    }
                }
            }
        }
    };
    for (std::size_t n = 2; n <= 6; ++n) check_pairs(n, 2);
    for (std::size_t n = 2; n <= 4; ++n) check_pairs(n, 3);
}

TEST_CASE("distance to a rotation is never exactly 1", "[correlation]") {
    // if u and a rotation agree everywhere but one place, following the
    // disagreement around the shift cycle forces a second one
    for (std::uint32_t q : {2u, 3u}) {
        for (std::size_t n = 2; n <= 8; ++n) {
            testutil::for_each_word(n, q, [&](const std::vector<fhseq::symbol_t>& w) {
                const Sequence u(w, q);
                for (std::size_t i = 1; i < n; ++i) {
                    REQUIRE(pairwise_distance(u, rotate(u, i)) != 1);
                }
            });
        }
    }
}

TEST_CASE("set profile reports maxima with smallest witnesses", "[correlation]") {
    SECTION("singleton family: crosscorrelation undefined") {
        const auto p = set_profile(FhSequenceSet({seq({0, 1, 2}, 3)}));
        REQUIRE(p.auto_max.has_value());
        CHECK(*p.auto_max == 0);
        CHECK(!p.cross_max.has_value());
        CHECK(p.max_correlation == 0);
        CHECK(p.auto_witness->x_index == 0);
        CHECK(p.auto_witness->delay == 1);
    }
    SECTION("pair whose crosscorrelation peaks at a shift") {
        const auto p = set_profile(FhSequenceSet({seq({0, 1}, 2), seq({1, 0}, 2)}));
        CHECK(*p.auto_max == 0);
        CHECK(*p.cross_max == 2);
        CHECK(p.max_correlation == 2);
        CHECK(p.cross_witness->x_index == 0);
        CHECK(p.cross_witness->y_index == 1);
        CHECK(p.cross_witness->delay == 1);
    }
    SECTION("crosscorrelation includes delay zero") {
        // members sort to [(0,1,0), (0,1,2)]; they agree in two places unshifted
        const auto p =
            set_profile(FhSequenceSet({seq({0, 1, 2}, 3), seq({0, 1, 0}, 3)}));
        CHECK(*p.cross_max == 2);
        CHECK(p.cross_witness->x_index == 0);
        CHECK(p.cross_witness->y_index == 1);
        CHECK(p.cross_witness->delay == 0);
    }
    SECTION("length-1 families have no autocorrelation") {
        const auto p = set_profile(FhSequenceSet({seq({0}, 2), seq({1}, 2)}));
        CHECK(!p.auto_max.has_value());
        REQUIRE(p.cross_max.has_value());
        CHECK(*p.cross_max == 0);
        CHECK(p.max_correlation == 0);
    }
    SECTION("single sequence of length 1 is rejected") {
        CHECK_THROWS_AS(set_profile(FhSequenceSet({seq({0}, 2)})),
                        std::invalid_argument);
    }
}

TEST_CASE("set profile witnesses reproduce the reported maxima", "[correlation]") {
    fhseq::SplitMix64 gen(2024);
    for (int round = 0; round < 30; ++round) {
        const std::size_t n = 2 + gen.uniform_below(6);
        const std::uint32_t q = 2 + gen.uniform_below(3);
        const std::size_t m = 1 + gen.uniform_below(4);
        std::vector<Sequence> members;
        while (members.size() < m) {
            Sequence cand = fhseq::random_sequence(gen, n, q);
            bool fresh = true;
            for (const Sequence& s : members) fresh = fresh && !(s == cand);
            if (fresh) members.push_back(std::move(cand));
        }
        const FhSequenceSet family(std::move(members));
        const auto p = set_profile(family);

        REQUIRE(p.max_correlation ==
                std::max(p.auto_max.value_or(0), p.cross_max.value_or(0)));
        if (p.auto_max) {
            const auto& w = *p.auto_witness;
            REQUIRE(w.x_index == w.y_index);
            REQUIRE(hamming_correlation(family.members()[w.x_index],
                                        family.members()[w.x_index],
                                        w.delay) == *p.auto_max);
            REQUIRE(w.delay >= 1);
        }
        if (p.cross_max) {
            const auto& w = *p.cross_witness;
            REQUIRE(w.x_index < w.y_index);
            REQUIRE(hamming_correlation(family.members()[w.x_index],
                                        family.members()[w.y_index],
                                        w.delay) == *p.cross_max);
        }

        // brute-force maxima straight from the definition
        unsigned best_auto = 0, best_cross = 0;
        const auto& mem = family.members();
        for (std::size_t x = 0; x < mem.size(); ++x) {
            for (std::size_t tau = 1; tau < n; ++tau) {
                best_auto = std::max(best_auto, hamming_correlation(mem[x], mem[x], tau));
            }
            for (std::size_t y = 0; y < mem.size(); ++y) {
                if (x == y) continue;
                for (std::size_t tau = 0; tau < n; ++tau) {
                    best_cross =
                        std::max(best_cross, hamming_correlation(mem[x], mem[y], tau));
                }
            }
        }
        if (p.auto_max) REQUIRE(*p.auto_max == best_auto);
        if (p.cross_max) REQUIRE(*p.cross_max == best_cross);
    }
}
