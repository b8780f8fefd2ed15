#pragma once

#include <cmath>
#include <limits>
#include <optional>

#include <gmpxx.h>
#include <mpfr.h>

#include "fhseq/codec.hpp"
#include "fhseq/rng.hpp"

namespace fhseq {

namespace detail {

/// Minimal RAII wrapper around an mpfr_t at fixed working precision.
class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t prec = 256) { mpfr_init2(v, prec); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_t v;
};

}  // namespace detail

/// Exact number of words within Hamming distance strictly below d of a fixed
/// center in {0,...,q-1}^n: sum_{i=0}^{d-1} C(n,i)(q-1)^i. With
/// include_center = false the i = 0 term (the center itself) is dropped.
inline mpz_class ball_volume(std::size_t n, std::size_t d, std::uint32_t q,
                             bool include_center = true) {
    detail::check_alphabet(q);
    if (d > n + 1) {
        throw std::invalid_argument(
            "ball_volume: radius bound d must be in [0, n + 1], got " +
            std::to_string(d));
    }
    mpz_class total = 0;
    mpz_class term = 1;  // C(n, i) (q-1)^i, starting at i = 0
    for (std::size_t i = 0; i < d; ++i) {
        if (i > 0 || include_center) total += term;
        term *= static_cast<unsigned long>(n - i);
        term /= static_cast<unsigned long>(i + 1);  // exact: C(n,i)(n-i)/(i+1) = C(n,i+1)
        term *= static_cast<unsigned long>(q - 1);
    }
    return total;
}

/// A sign-aware rendering of a (possibly astronomically large) guaranteed
/// family size. All roundings are directed toward the vacuous side, so the
/// reported value never overstates the guarantee.
struct SizeBound {
    int sign = 0;              ///< -1, 0 or +1
    double value = 0.0;        ///< double rendering; +-inf when out of range
    double log_q_magnitude =   ///< log_q |value|; NaN when the value is zero
        std::numeric_limits<double>::quiet_NaN();
    bool vacuous = true;       ///< value < 1: guarantees nothing nontrivial
    std::string decimal;       ///< short scientific rendering, e.g. "1.58e+59"
};

namespace detail {

inline SizeBound make_size_bound(const Mpfr& res, std::uint32_t q) {
    SizeBound b;
    b.sign = mpfr_sgn(res.v);
    b.value = mpfr_get_d(res.v, MPFR_RNDN);
    b.vacuous = mpfr_cmp_ui(res.v, 1) < 0;
    if (b.sign != 0) {
        Mpfr mag, lq;
        mpfr_abs(mag.v, res.v, MPFR_RNDN);
        mpfr_log(mag.v, mag.v, MPFR_RNDN);
        mpfr_set_ui(lq.v, q, MPFR_RNDN);
        mpfr_log(lq.v, lq.v, MPFR_RNDN);
        mpfr_div(mag.v, mag.v, lq.v, MPFR_RNDN);
        b.log_q_magnitude = mpfr_get_d(mag.v, MPFR_RNDN);
    }
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.6Re", res.v);
    b.decimal = buf;
    return b;
}

// Probabilistic guarantee (n - d + lambda form): q^n (1 - n^2 e^{-eps^2
// (sqrt n - 2)/2}) / (n sum_{i<d} C(n,i)(q-1)^i), rounded down throughout.
// The survival probability term is rounded *up* so the final quotient is a
// certified lower bound on the true expression.
inline SizeBound guarantee_I_value(std::size_t n, std::uint32_t q, unsigned d,
                                   double epsilon) {
    Mpfr x, root, t, s1, num, res;
    const bool root_negative = n < 4;  // sqrt(n) - 2 < 0
    mpfr_set_ui(root.v, static_cast<unsigned long>(n), MPFR_RNDD);
    mpfr_sqrt(root.v, root.v, MPFR_RNDD);
    mpfr_sub_ui(root.v, root.v, 2, MPFR_RNDD);
    mpfr_set_d(x.v, epsilon, MPFR_RNDN);  // exact
    mpfr_sqr(x.v, x.v, root_negative ? MPFR_RNDU : MPFR_RNDD);
    mpfr_mul(x.v, x.v, root.v, MPFR_RNDD);
    mpfr_div_ui(x.v, x.v, 2, MPFR_RNDD);  // lower bound on the exponent
    mpfr_neg(x.v, x.v, MPFR_RNDN);
    mpfr_exp(t.v, x.v, MPFR_RNDU);
    mpfr_mul_ui(t.v, t.v, static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_mul_ui(t.v, t.v, static_cast<unsigned long>(n), MPFR_RNDU);
    mpfr_ui_sub(s1.v, 1, t.v, MPFR_RNDD);

    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), q, static_cast<unsigned long>(n));
    mpfr_mul_z(num.v, s1.v, qn.get_mpz_t(), MPFR_RNDD);

    mpz_class den = ball_volume(n, d, q);
    den *= static_cast<unsigned long>(n);
    mpfr_div_z(res.v, num.v, den.get_mpz_t(), MPFR_RNDD);
    return make_size_bound(res, q);
}

// Counting guarantee: (q^n - d C(n, d-1) q^{(n+d-1)/2}) / (n sum_{i<d}
// C(n,i)(q-1)^i); the subtracted term is rounded up, the rest down.
inline SizeBound guarantee_II_value(std::size_t n, std::uint32_t q, unsigned d) {
    mpz_class tail;
    mpz_bin_uiui(tail.get_mpz_t(), static_cast<unsigned long>(n), d - 1);
    tail *= static_cast<unsigned long>(d);
    mpz_class qpow;
    const std::size_t e2 = (n + d - 1) / 2;
    mpz_ui_pow_ui(qpow.get_mpz_t(), q, static_cast<unsigned long>(e2));
    tail *= qpow;

    Mpfr term, qnf, num, res;
    mpfr_set_z(term.v, tail.get_mpz_t(), MPFR_RNDU);
    if ((n + d - 1) % 2 == 1) {
        Mpfr rootq;
        mpfr_set_ui(rootq.v, q, MPFR_RNDU);
        mpfr_sqrt(rootq.v, rootq.v, MPFR_RNDU);
        mpfr_mul(term.v, term.v, rootq.v, MPFR_RNDU);
    }
    mpz_class qn;
    mpz_ui_pow_ui(qn.get_mpz_t(), q, static_cast<unsigned long>(n));
    mpfr_set_z(qnf.v, qn.get_mpz_t(), MPFR_RNDD);
    mpfr_sub(num.v, qnf.v, term.v, MPFR_RNDD);

    mpz_class den = ball_volume(n, d, q);
    den *= static_cast<unsigned long>(n);
    mpfr_div_z(res.v, num.v, den.get_mpz_t(), MPFR_RNDD);
    return make_size_bound(res, q);
}

inline void check_guarantee_common(std::size_t n, std::uint32_t q,
                                   std::size_t lambda, const char* op) {
    check_alphabet(q);
    if (n < 2) {
        throw std::invalid_argument(std::string(op) + ": length must be at least 2");
    }
    if (lambda > n) {
        throw std::invalid_argument(std::string(op) +
                                    ": max correlation lambda must be at most n");
    }
    if (n - lambda < 2) {
        throw std::invalid_argument(
            std::string(op) +
            ": distance n - lambda must be at least 2; lambda = n leaves no margin");
    }
}

}  // namespace detail

/// Guaranteed family size nM from the probabilistic construction, valid when
/// lambda >= n - (n - 2 sqrt n)(1 - 1/q - epsilon). Inputs outside that
/// region are rejected with the computed threshold.
inline SizeBound gv_guaranteed_size_I(std::size_t n, std::uint32_t q,
                                      std::size_t lambda, double epsilon) {
    detail::check_guarantee_common(n, q, lambda, "gv_guaranteed_size_I");
    if (!(epsilon > 0.0 && epsilon < 1.0 - 1.0 / static_cast<double>(q))) {
        throw std::invalid_argument(
            "gv_guaranteed_size_I: epsilon must lie in (0, 1 - 1/q)");
    }
    const double threshold = (static_cast<double>(n) -
                              2.0 * std::sqrt(static_cast<double>(n))) *
                             (1.0 - 1.0 / static_cast<double>(q) - epsilon);
    if (static_cast<double>(lambda) < static_cast<double>(n) - threshold) {
        throw std::invalid_argument(
            "gv_guaranteed_size_I: requires lambda >= n - (n - 2 sqrt n)(1 - 1/q - "
            "epsilon) = " +
            std::to_string(static_cast<double>(n) - threshold) + ", got lambda = " +
            std::to_string(lambda));
    }
    return detail::guarantee_I_value(n, q, static_cast<unsigned>(n - lambda), epsilon);
}

/// Guaranteed family size nM from the counting construction, valid when
/// lambda >= e n / sqrt(q). Inputs below that gate are rejected with the
/// computed gate value.
inline SizeBound gv_guaranteed_size_II(std::size_t n, std::uint32_t q,
                                       std::size_t lambda) {
    detail::check_guarantee_common(n, q, lambda, "gv_guaranteed_size_II");
    const double gate = M_E * static_cast<double>(n) /
                        std::sqrt(static_cast<double>(q));
    if (static_cast<double>(lambda) < gate) {
        throw std::invalid_argument(
            "gv_guaranteed_size_II: requires lambda >= e n / sqrt(q) = " +
            std::to_string(gate) + ", got lambda = " + std::to_string(lambda));
    }
    return detail::guarantee_II_value(n, q, static_cast<unsigned>(n - lambda));
}

enum class CandidatePolicy { exhaustive, sampled };

/// Parameters of a greedy construction run. The candidate filter keeps the
/// aperiodic words u with cyclic self-distance d(u) strictly above the
/// threshold (n - 2 sqrt n)(1 - 1/q - epsilon), derived on demand and never
/// cached; threshold_override substitutes an explicit value for exploration.
struct GVConfig {
    std::size_t n = 0;
    std::uint32_t q = 0;
    unsigned d = 0;  ///< target minimum distance, 2 <= d <= n
    double epsilon = 0.0;
    CandidatePolicy policy = CandidatePolicy::exhaustive;
    std::uint64_t sample_count = 0;  ///< sampled policy: words to draw
    std::uint64_t seed = 0;          ///< sampled policy: RNG seed
    std::uint64_t enumeration_cap = 1ull << 28;
    std::optional<double> threshold_override;

    double derived_threshold() const {
        return (static_cast<double>(n) - 2.0 * std::sqrt(static_cast<double>(n))) *
               (1.0 - 1.0 / static_cast<double>(q) - epsilon);
    }
    double filter_threshold() const {
        return threshold_override ? *threshold_override : derived_threshold();
    }

    void validate() const {
        detail::check_alphabet(q);
        if (n < 2) {
            throw std::invalid_argument("construction length n must be at least 2");
        }
        if (d < 2 || d > n) {
            throw std::invalid_argument(
                "target distance must satisfy 2 <= d <= n, got d = " +
                std::to_string(d));
        }
        if (!(epsilon > 0.0 && epsilon < 1.0 - 1.0 / static_cast<double>(q))) {
            throw std::invalid_argument("epsilon must lie in (0, 1 - 1/q)");
        }
        if (policy == CandidatePolicy::sampled && sample_count == 0) {
            throw std::invalid_argument("sampled policy needs a positive sample count");
        }
    }
};

/// Streams filter-passing candidate words. Exhaustive policy walks all of
/// {0,...,q-1}^n in lexicographic order (rejected when q^n exceeds the cap);
/// sampled policy draws sample_count words from the seeded generator and
/// keeps those passing the filter.
class CandidateStream {
public:
    explicit CandidateStream(const GVConfig& cfg) : cfg_(cfg), gen_(cfg.seed) {
        cfg_.validate();
        threshold_ = cfg_.filter_threshold();
        if (threshold_ >= static_cast<double>(cfg_.n)) {
            done_ = true;  // d(u) <= n always; nothing can pass
            return;
        }
        if (cfg_.policy == CandidatePolicy::exhaustive) {
            const auto total = detail::checked_pow(cfg_.q, cfg_.n);
            if (!total || *total > cfg_.enumeration_cap) {
                throw std::invalid_argument(
                    "exhaustive candidate enumeration needs q^n <= " +
                    std::to_string(cfg_.enumeration_cap) +
                    "; switch to the sampled policy for this size");
            }
        } else {
            remaining_ = cfg_.sample_count;
        }
        word_.assign(cfg_.n, 0);
    }

    /// Next candidate, or nullopt once the stream is finished.
    std::optional<Sequence> next() {
        if (done_) return std::nullopt;
        if (cfg_.policy == CandidatePolicy::exhaustive) {
            for (;;) {
                if (started_ && !detail::next_word(word_, cfg_.q)) {
                    done_ = true;
                    return std::nullopt;
                }
                started_ = true;
                if (passes(word_)) return Sequence(word_, cfg_.q);
            }
        }
        if (remaining_ == 0) {
            done_ = true;
            return std::nullopt;
        }
        std::uint64_t rejections = 0;
        for (;;) {
            random_word_into(gen_, cfg_.q, word_);
            if (passes(word_)) {
                --remaining_;
                return Sequence(word_, cfg_.q);
            }
            if (++rejections == max_consecutive_rejections) {
                throw std::runtime_error(
                    "candidate filter accepted none of " +
                    std::to_string(max_consecutive_rejections) +
                    " consecutive random words; the threshold appears infeasible "
                    "for these parameters");
            }
        }
    }

    /// True once the exhaustive policy has walked the whole space.
    bool enumerated_all() const {
        return cfg_.policy == CandidatePolicy::exhaustive && done_;
    }

private:
    static constexpr std::uint64_t max_consecutive_rejections = 5'000'000;

    bool passes(const std::vector<symbol_t>& w) const {
        const unsigned sd = detail::cyclic_self_distance(w);
        // sd >= 1 is aperiodicity, required of every hopping codeword; the
        // threshold may well be negative at desk scale.
        return sd >= 1 && static_cast<double>(sd) > threshold_;
    }

    GVConfig cfg_;
    double threshold_ = 0.0;
    SplitMix64 gen_;
    std::vector<symbol_t> word_;
    std::uint64_t remaining_ = 0;
    bool started_ = false;
    bool done_ = false;
};

/// Whether greedy acceptance tests only the streamed representative against
/// the partial code, or all of its rotations. Because the partial code is
/// closed under shifts, the two are equivalent; the oracle harness in the
/// empirics module re-verifies that equivalence instance by instance.
enum class RotationCheck { representative_only, all_rotations };

struct GVResult {
    HoppingCyclicCode code;
    std::size_t orbits_added = 0;
    std::uint64_t candidates_seen = 0;   ///< filter-passing words streamed
    bool candidates_exhausted = false;   ///< exhaustive policy ran to the end
    std::optional<unsigned> achieved_min_distance;  ///< absent below 2 codewords
    SizeBound guaranteed_size;  ///< probabilistic-construction formula value
    /// True when the formula's hypotheses match this run: exhaustive policy,
    /// no filter override loosening, and d within the derived threshold.
    bool guarantee_applicable = false;
};

namespace detail {

inline bool greedy_accepts(const std::vector<Sequence>& code, const Sequence& u,
                           unsigned d, RotationCheck mode) {
    const auto n = static_cast<unsigned>(u.length());
    if (cyclic_min_distance(u) < d) return false;  // intra-orbit distances
    if (mode == RotationCheck::representative_only) {
        for (const Sequence& c : code) {
            if (n - agreement_count(u.symbols(), c.symbols(), 0) < d) return false;
        }
        return true;
    }
    for (const Sequence& r : orbit(u)) {
        for (const Sequence& c : code) {
            if (n - agreement_count(r.symbols(), c.symbols(), 0) < d) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Greedy Gilbert-Varshamov style construction: stream candidates, accept a
/// word whenever its whole rotation orbit keeps minimum distance >= d, and
/// add that orbit. The result is always a hopping cyclic code.
inline GVResult gv_greedy(const GVConfig& cfg,
                          RotationCheck mode = RotationCheck::representative_only) {
    cfg.validate();
    CandidateStream stream(cfg);
    std::vector<Sequence> words;
    std::size_t orbits = 0;
    std::uint64_t seen = 0;
    while (auto cand = stream.next()) {
        ++seen;
        if (detail::greedy_accepts(words, *cand, cfg.d, mode)) {
            for (Sequence& r : orbit(*cand)) words.push_back(std::move(r));
            ++orbits;
        }
    }

    std::optional<unsigned> dist;
    if (words.size() >= 2) dist = min_pairwise_distance(words);

    const double derived = cfg.derived_threshold();
    const bool applicable =
        cfg.policy == CandidatePolicy::exhaustive &&
        (!cfg.threshold_override || *cfg.threshold_override <= derived) &&
        static_cast<double>(cfg.d) <= derived;

    HoppingCyclicCode code = words.empty()
                                 ? HoppingCyclicCode(cfg.n, cfg.q)
                                 : HoppingCyclicCode(std::move(words));
    return GVResult{std::move(code),
                    orbits,
                    seen,
                    stream.enumerated_all(),
                    dist,
                    detail::guarantee_I_value(cfg.n, cfg.q, cfg.d, cfg.epsilon),
                    applicable};
}

}  // namespace fhseq
