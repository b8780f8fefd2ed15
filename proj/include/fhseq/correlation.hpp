#pragma once

#include <optional>

#include "fhseq/sequence.hpp"

namespace fhseq {

namespace detail {

// Number of positions j with x[j] == y[(j + tau) mod n]. The wrap-around is
// split into two contiguous loops so the compiler can vectorise both.
inline unsigned agreement_count(std::span<const symbol_t> x,
                                std::span<const symbol_t> y, std::size_t tau) {
    const std::size_t n = x.size();
    const std::size_t head = n - tau;
    unsigned c = 0;
    for (std::size_t j = 0; j < head; ++j) c += (x[j] == y[j + tau]);
    for (std::size_t j = head; j < n; ++j) c += (x[j] == y[j + tau - n]);
    return c;
}

// min over 0 < i < n of the Hamming distance between u and its i-th rotation.
inline unsigned cyclic_self_distance(std::span<const symbol_t> u) {
    const std::size_t n = u.size();
    unsigned best = static_cast<unsigned>(n);
    for (std::size_t i = 1; i < n; ++i) {
        const unsigned d = static_cast<unsigned>(n) - agreement_count(u, u, i);
        if (d < best) {
            best = d;
            if (best == 0) break;
        }
    }
    return best;
}

inline void require_same_parameters(const Sequence& x, const Sequence& y,
                                    const char* op) {
    if (x.length() != y.length()) {
        throw std::invalid_argument(std::string(op) + ": sequence lengths differ (" +
                                    std::to_string(x.length()) + " vs " +
                                    std::to_string(y.length()) + ")");
    }
    if (x.alphabet_size() != y.alphabet_size()) {
        throw std::invalid_argument(std::string(op) + ": alphabet sizes differ (" +
                                    std::to_string(x.alphabet_size()) + " vs " +
                                    std::to_string(y.alphabet_size()) + ")");
    }
}

}  // namespace detail

/// Periodic Hamming correlation of x against y at relative delay tau:
/// the number of positions j with x[j] == y[(j + tau) mod n].
inline unsigned hamming_correlation(const Sequence& x, const Sequence& y,
                                    std::size_t tau) {
    detail::require_same_parameters(x, y, "hamming_correlation");
    if (tau >= x.length()) {
        throw std::invalid_argument("hamming_correlation: delay must be in [0, n), got " +
                                    std::to_string(tau));
    }
    return detail::agreement_count(x.symbols(), y.symbols(), tau);
}

/// Plain (unshifted) Hamming distance between two words of equal length.
inline unsigned pairwise_distance(const Sequence& x, const Sequence& y) {
    detail::require_same_parameters(x, y, "pairwise_distance");
    return static_cast<unsigned>(x.length()) -
           detail::agreement_count(x.symbols(), y.symbols(), 0);
}

/// Cyclic self-distance d(u) = min over 0 < i < n of the Hamming distance
/// between u and its i-th rotation. Equals n minus the maximum nontrivial
/// autocorrelation; u is aperiodic exactly when d(u) >= 1.
inline unsigned cyclic_min_distance(const Sequence& u) {
    if (u.length() < 2) {
        throw std::invalid_argument(
            "cyclic_min_distance: length must be at least 2 (no nontrivial shifts)");
    }
    return detail::cyclic_self_distance(u.symbols());
}

/// Location of an extremal correlation: sequence indices into the sorted
/// member list of the set and the delay at which the maximum is attained.
/// For autocorrelation witnesses y_index == x_index.
struct CorrelationWitness {
    std::size_t x_index = 0;
    std::size_t y_index = 0;
    std::size_t delay = 0;

    friend bool operator==(const CorrelationWitness&, const CorrelationWitness&) = default;
};

/// Correlation summary of a sequence set.
///
/// auto_max maximises over all members and nonzero delays; it is absent when
/// n == 1 (no nonzero delay exists). cross_max maximises over distinct member
/// pairs and all delays *including zero*, so that n - max_correlation is
/// exactly the minimum distance of the associated cyclic code; it is absent
/// when the set has a single member. Witnesses are the lexicographically
/// smallest (x_index, y_index, delay) attaining each maximum.
struct CorrelationProfile {
    std::size_t n = 0;
    std::uint32_t q = 0;
    std::optional<unsigned> auto_max;
    std::optional<unsigned> cross_max;
    unsigned max_correlation = 0;
    std::optional<CorrelationWitness> auto_witness;
    std::optional<CorrelationWitness> cross_witness;
};

/// Scan every member pair and delay of the set and report the maximum
/// auto-/cross-correlations with witnesses.
inline CorrelationProfile set_profile(const FhSequenceSet& family) {
    const auto& m = family.members();
    CorrelationProfile p;
    p.n = family.length();
    p.q = family.alphabet_size();

    if (p.n == 1 && m.size() == 1) {
        throw std::invalid_argument(
            "set_profile: a single sequence of length 1 admits no correlation");
    }

    if (p.n >= 2) {
        unsigned best = 0;
        CorrelationWitness w;
        bool found = false;
        for (std::size_t x = 0; x < m.size(); ++x) {
            const auto sym = m[x].symbols();
            for (std::size_t tau = 1; tau < p.n; ++tau) {
                const unsigned h = detail::agreement_count(sym, sym, tau);
                if (!found || h > best) {
                    best = h;
                    w = {x, x, tau};
                    found = true;
                }
            }
        }
        p.auto_max = best;
        p.auto_witness = w;
    }

    if (m.size() >= 2) {
        unsigned best = 0;
        CorrelationWitness w;
        bool found = false;
        // Ordered pairs are redundant: H_{x,y}(tau) = H_{y,x}(n - tau mod n),
        // and the lexicographically smallest witness always has x < y.
        for (std::size_t x = 0; x + 1 < m.size(); ++x) {
            for (std::size_t y = x + 1; y < m.size(); ++y) {
                for (std::size_t tau = 0; tau < p.n; ++tau) {
                    const unsigned h =
                        detail::agreement_count(m[x].symbols(), m[y].symbols(), tau);
                    if (!found || h > best) {
                        best = h;
                        w = {x, y, tau};
                        found = true;
                    }
                }
            }
        }
        p.cross_max = best;
        p.cross_witness = w;
    }

    p.max_correlation = std::max(p.auto_max.value_or(0), p.cross_max.value_or(0));
    return p;
}

}  // namespace fhseq
