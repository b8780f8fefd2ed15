#pragma once

#include <bit>
#include <cmath>
#include <cstdio>
#include <string>

#include "fhseq/bounds.hpp"
#include "fhseq/gv.hpp"
#include "fhseq/rng.hpp"

namespace fhseq {

/// Uniform result record for every validation experiment. Fields that do not
/// apply to a given experiment are left at their zero defaults; equality is
/// bitwise on the floating-point fields so reproducibility checks are exact.
struct TrialReport {
    std::string experiment;
    std::size_t n = 0;
    std::uint32_t q = 0;
    double epsilon = 0.0;
    unsigned d = 0;
    std::uint64_t trials = 0;  ///< Monte Carlo trials or enumeration size
    std::uint64_t observed_count = 0;
    double observed_frequency = 0.0;
    double observed_stat = 0.0;  ///< primary observable when not a frequency
    double threshold = 0.0;      ///< event / hypothesis threshold
    double bound = 0.0;          ///< theoretical bound being tested
    double slack = 0.0;          ///< sampling-noise allowance (0 when exact)
    bool pass = false;
    std::uint64_t seed = 0;

    friend bool operator==(const TrialReport& a, const TrialReport& b) {
        const auto bits = [](double v) { return std::bit_cast<std::uint64_t>(v); };
        return a.experiment == b.experiment && a.n == b.n && a.q == b.q &&
               bits(a.epsilon) == bits(b.epsilon) && a.d == b.d &&
               a.trials == b.trials && a.observed_count == b.observed_count &&
               bits(a.observed_frequency) == bits(b.observed_frequency) &&
               bits(a.observed_stat) == bits(b.observed_stat) &&
               bits(a.threshold) == bits(b.threshold) &&
               bits(a.bound) == bits(b.bound) && bits(a.slack) == bits(b.slack) &&
               a.pass == b.pass && a.seed == b.seed;
    }

    std::string machine_line() const {
        const auto g17 = [](double v) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return std::string(buf);
        };
        std::string out = "experiment=" + experiment;
        out += " n=" + std::to_string(n);
        out += " q=" + std::to_string(q);
        out += " epsilon=" + g17(epsilon);
        out += " d=" + std::to_string(d);
        out += " trials=" + std::to_string(trials);
        out += " count=" + std::to_string(observed_count);
        out += " frequency=" + g17(observed_frequency);
        out += " stat=" + g17(observed_stat);
        out += " threshold=" + g17(threshold);
        out += " bound=" + g17(bound);
        out += " slack=" + g17(slack);
        out += " pass=" + std::to_string(pass ? 1 : 0);
        out += " seed=" + std::to_string(seed);
        return out;
    }

    std::string to_text() const {
        const auto g = [](double v) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.10g", v);
            return std::string(buf);
        };
        std::string out;
        out += "experiment:      " + experiment + "\n";
        out += "parameters:     ";
        if (n != 0) out += " n=" + std::to_string(n);
        out += " q=" + std::to_string(q);
        if (epsilon != 0.0) out += " epsilon=" + g(epsilon);
        if (d != 0) out += " d=" + std::to_string(d);
        out += "\n";
        out += "trials:          " + std::to_string(trials) + "\n";
        out += "observed count:  " + std::to_string(observed_count) + "\n";
        out += "observed freq:   " + g(observed_frequency) + "\n";
        out += "observed stat:   " + g(observed_stat) + "\n";
        out += "threshold:       " + g(threshold) + "\n";
        out += "bound:           " + g(bound) + "\n";
        out += "slack:           " + g(slack) + "\n";
        out += "seed:            " + std::to_string(seed) + "\n";
        out += std::string("verdict:         ") + (pass ? "PASS" : "FAIL") + "\n";
        return out;
    }
};

inline bool is_prime(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) return false;
    }
    return true;
}

/// Which concentration statement is being sampled: the any-length form with
/// threshold factor n - 2 sqrt n, or the prime-length form with factor n - 2
/// (or n - 1 under the alternative reading of the same derivation).
enum class ConcentrationVariant { any_length, prime_length };
enum class PrimeThresholdForm { stated, alternative };

/// Monte Carlo estimate of Pr[d(u) <= threshold] for a uniform random word,
/// compared against the tail bound. Trial t draws from split(t) of the seed,
/// so the result is independent of batching and bit-reproducible. The pass
/// criterion allows three binomial standard deviations plus 1/trials of
/// sampling slack above the bound.
inline TrialReport mc_small_distance_fraction(
    std::size_t n, std::uint32_t q, double epsilon, std::uint64_t trials,
    std::uint64_t seed, ConcentrationVariant variant = ConcentrationVariant::any_length,
    PrimeThresholdForm form = PrimeThresholdForm::stated) {
    detail::check_alphabet(q);
    if (!(epsilon > 0.0 && epsilon < 1.0 - 1.0 / static_cast<double>(q))) {
        throw std::invalid_argument(
            "mc_small_distance_fraction: epsilon must lie in (0, 1 - 1/q)");
    }
    if (trials == 0) {
        throw std::invalid_argument("mc_small_distance_fraction: need at least one trial");
    }

    const double nd = static_cast<double>(n);
    double threshold = 0.0;
    double bound = 0.0;
    const char* name = nullptr;
    if (variant == ConcentrationVariant::any_length) {
        if (n < 9) {
            throw std::invalid_argument(
                "mc_small_distance_fraction: the any-length tail bound needs n >= 9");
        }
        threshold = (nd - 2.0 * std::sqrt(nd)) * (1.0 - 1.0 / q - epsilon);
        bound = nd * nd * std::exp(-epsilon * epsilon * (std::sqrt(nd) - 2.0) / 2.0);
        name = "mc-lemma4";
    } else {
        if (n < 3 || !is_prime(n)) {
            throw std::invalid_argument(
                "mc_small_distance_fraction: the prime-length bound needs prime n >= 3");
        }
        const double factor = (form == PrimeThresholdForm::stated) ? nd - 2.0 : nd - 1.0;
        threshold = factor * (1.0 - 1.0 / q - epsilon);
        bound = (nd - 1.0) * std::exp(-epsilon * epsilon * (nd - 2.0) / 2.0);
        name = "mc-lemma3";
    }

    const SplitMix64 root(seed);
    std::vector<symbol_t> word(n);
    std::uint64_t count = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 gen = root.split(t);
        random_word_into(gen, q, word);
        const unsigned sd = detail::cyclic_self_distance(word);
        if (static_cast<double>(sd) <= threshold) ++count;
    }

    TrialReport r;
    r.experiment = name;
    r.n = n;
    r.q = q;
    r.epsilon = epsilon;
    r.trials = trials;
    r.observed_count = count;
    r.observed_frequency =
        static_cast<double>(count) / static_cast<double>(trials);
    r.observed_stat = r.observed_frequency;
    r.threshold = threshold;
    r.bound = bound;
    r.slack = 3.0 * std::sqrt(r.observed_frequency * (1.0 - r.observed_frequency) /
                              static_cast<double>(trials)) +
              1.0 / static_cast<double>(trials);
    r.pass = r.observed_frequency <= bound + r.slack;
    r.seed = seed;
    return r;
}

/// Exhaustively count words with d(u) < d over all of {0,...,q-1}^n and
/// compare against the counting bound n d C(n, d-1) q^{(n+d-1)/2}, which is
/// only claimed under the hypothesis d < (1 - 1/(sqrt q + 1)) n.
inline TrialReport exhaustive_small_distance_count(std::size_t n, std::uint32_t q,
                                                   unsigned d,
                                                   std::uint64_t cap = 1ull << 28) {
    detail::check_alphabet(q);
    if (n < 2) {
        throw std::invalid_argument(
            "exhaustive_small_distance_count: length must be at least 2");
    }
    if (d < 1 || d > n) {
        throw std::invalid_argument(
            "exhaustive_small_distance_count: need 1 <= d <= n, got d = " +
            std::to_string(d));
    }
    const double hypothesis =
        (1.0 - 1.0 / (std::sqrt(static_cast<double>(q)) + 1.0)) *
        static_cast<double>(n);
    if (!(static_cast<double>(d) < hypothesis)) {
        throw std::invalid_argument(
            "exhaustive_small_distance_count: the bound is only claimed for d < (1 "
            "- 1/(sqrt q + 1)) n = " +
            std::to_string(hypothesis) + ", got d = " + std::to_string(d));
    }
    const auto total = detail::checked_pow(q, n);
    if (!total || *total > cap) {
        throw std::invalid_argument(
            "exhaustive_small_distance_count: q^n exceeds the enumeration cap " +
            std::to_string(cap));
    }

    std::vector<symbol_t> word(n, 0);
    std::uint64_t count = 0;
    do {
        if (detail::cyclic_self_distance(word) < d) ++count;
    } while (detail::next_word(word, q));

    // n d C(n, d-1) q^{(n+d-1)/2}, evaluated in double (exact comparisons are
    // done against observed integer counts, not against this bound).
    mpz_class bin;
    mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(n), d - 1);
    const double bound = static_cast<double>(n) * d * bin.get_d() *
                         std::pow(static_cast<double>(q),
                                  static_cast<double>(n + d - 1) / 2.0);

    TrialReport r;
    r.experiment = "count-lemma";
    r.n = n;
    r.q = q;
    r.d = d;
    r.trials = *total;
    r.observed_count = count;
    r.observed_frequency =
        static_cast<double>(count) / static_cast<double>(*total);
    r.observed_stat = static_cast<double>(count);
    r.threshold = hypothesis;
    r.bound = bound;
    r.pass = static_cast<double>(count) <= bound;
    return r;
}

/// Run the greedy construction twice -- once with the representative-only
/// acceptance check, once re-checking every rotation -- over all aperiodic
/// words, and verify the outputs coincide and meet the target distance. This
/// is the oracle for the shift-symmetry argument the fast path relies on.
inline TrialReport oracle_greedy_equivalence(std::size_t n, std::uint32_t q,
                                             unsigned d,
                                             std::uint64_t cap = 1ull << 28) {
    GVConfig cfg;
    cfg.n = n;
    cfg.q = q;
    cfg.d = d;
    cfg.epsilon = 0.5 * (1.0 - 1.0 / static_cast<double>(q));  // inert: see override
    cfg.threshold_override = 0.0;  // candidates = all aperiodic words
    cfg.enumeration_cap = cap;
    cfg.validate();

    const GVResult fast = gv_greedy(cfg, RotationCheck::representative_only);
    const GVResult slow = gv_greedy(cfg, RotationCheck::all_rotations);
    const bool equal =
        fast.code == slow.code && fast.orbits_added == slow.orbits_added;

    unsigned dist = 0;
    bool distance_ok = true;
    if (fast.code.size() >= 2) {
        const auto& w = fast.code.codewords();
        dist = static_cast<unsigned>(n);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                dist = std::min(dist, pairwise_distance(w[i], w[j]));
            }
        }
        distance_ok = dist >= d;
    }

    TrialReport r;
    r.experiment = "oracle-greedy";
    r.n = n;
    r.q = q;
    r.d = d;
    r.trials = detail::checked_pow(q, n).value_or(0);
    r.observed_count = fast.code.size();
    r.observed_frequency = r.trials
                               ? static_cast<double>(r.observed_count) /
                                     static_cast<double>(r.trials)
                               : 0.0;
    r.observed_stat = static_cast<double>(dist);
    r.threshold = static_cast<double>(d);
    r.bound = static_cast<double>(fast.orbits_added);
    r.pass = equal && distance_ok;
    return r;
}

/// Grid for scanning the negligibility rate exponent.
struct DeltaGrid {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
};

inline DeltaGrid default_negligibility_grid(std::uint32_t q) {
    return DeltaGrid{0.001, 1.0 - M_E / std::sqrt(static_cast<double>(q)) - 0.001,
                     0.005};
}

/// Scan the rate exponent H_2(delta) - ((1 - delta)/2) log2 q over the grid
/// and check it stays strictly negative. Negative rate means the subtracted
/// term in the counting guarantee is asymptotically negligible relative to
/// q^n; the region is nonempty only once q > e^2, hence the q >= 8 gate,
/// and the grid must stay strictly below the boundary 1 - e/sqrt(q).
inline TrialReport asymptotic_negligibility_check(std::uint32_t q,
                                                  const DeltaGrid& grid) {
    detail::check_alphabet(q);
    if (q < 8) {
        throw std::invalid_argument(
            "asymptotic_negligibility_check: needs q > e^2, i.e. q >= 8, got q = " +
            std::to_string(q));
    }
    const double boundary = 1.0 - M_E / std::sqrt(static_cast<double>(q));
    if (!(grid.step > 0.0)) {
        throw std::invalid_argument("asymptotic_negligibility_check: step must be positive");
    }
    if (!(grid.start >= 0.0 && grid.start <= grid.stop && grid.stop < boundary)) {
        throw std::invalid_argument(
            "asymptotic_negligibility_check: grid must satisfy 0 <= start <= stop "
            "< 1 - e/sqrt(q) = " +
            std::to_string(boundary));
    }

    const double log2q = std::log2(static_cast<double>(q));
    const auto k_max = static_cast<std::size_t>(
        std::floor((grid.stop - grid.start) / grid.step + 1e-9));
    double max_rate = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= k_max; ++k) {
        double delta = grid.start + static_cast<double>(k) * grid.step;
        if (delta > grid.stop) delta = grid.stop;
        const double rate = entropy_q(2, delta) - (1.0 - delta) / 2.0 * log2q;
        if (rate > max_rate) max_rate = rate;
    }

    TrialReport r;
    r.experiment = "negligibility";
    r.q = q;
    r.trials = k_max + 1;
    r.observed_stat = max_rate;
    r.threshold = boundary;
    r.pass = max_rate < 0.0;
    return r;
}

inline TrialReport asymptotic_negligibility_check(std::uint32_t q) {
    if (q < 8) {
        throw std::invalid_argument(
            "asymptotic_negligibility_check: needs q > e^2, i.e. q >= 8, got q = " +
            std::to_string(q));
    }
    return asymptotic_negligibility_check(q, default_negligibility_grid(q));
}

}  // namespace fhseq
