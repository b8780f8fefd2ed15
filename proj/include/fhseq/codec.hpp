#pragma once

#include <optional>

#include "fhseq/correlation.hpp"
#include "fhseq/sequence.hpp"

namespace fhseq {

/// Outcome of the hopping-cyclic check. A word set qualifies when it is
/// closed under cyclic shifts and every word is aperiodic (all n rotations
/// distinct). On failure exactly one witness group is populated.
struct HoppingDiagnosis {
    bool ok = false;
    /// Word whose smallest period is a proper divisor of n.
    std::optional<Sequence> periodic_word;
    /// Word some rotation of which is missing, and that missing rotation.
    std::optional<Sequence> unclosed_word;
    std::optional<Sequence> missing_rotation;

    std::string message() const {
        if (ok) return "hopping cyclic";
        if (periodic_word) {
            return "word (" + periodic_word->to_string() +
                   ") has a nontrivial period (its rotations are not all distinct)";
        }
        if (unclosed_word) {
            return "rotation (" + missing_rotation->to_string() + ") of word (" +
                   unclosed_word->to_string() + ") is missing from the set";
        }
        return "not hopping cyclic";
    }
};

/// Check the defining property on a raw nonempty word set: shift closure plus
/// aperiodicity of every word. Words must share (n, q) and be distinct.
inline HoppingDiagnosis check_hopping_cyclic(const std::vector<Sequence>& words) {
    if (words.empty()) {
        throw std::invalid_argument(
            "check_hopping_cyclic: cannot infer parameters of an empty word set");
    }
    const std::size_t n = words.front().length();
    const std::uint32_t q = words.front().alphabet_size();
    for (const Sequence& w : words) {
        if (w.length() != n || w.alphabet_size() != q) {
            throw std::invalid_argument(
                "check_hopping_cyclic: words must share length and alphabet");
        }
    }
    std::vector<Sequence> sorted(words.begin(), words.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("check_hopping_cyclic: words must be distinct");
    }

    HoppingDiagnosis diag;
    for (const Sequence& w : words) {
        if (smallest_period(w) != n) {
            diag.periodic_word = w;
            return diag;
        }
        for (std::size_t i = 1; i < n; ++i) {
            Sequence r = rotate(w, i);
            if (!std::binary_search(sorted.begin(), sorted.end(), r)) {
                diag.unclosed_word = w;
                diag.missing_rotation = std::move(r);
                return diag;
            }
        }
    }
    diag.ok = true;
    return diag;
}

/// A (possibly empty) code over {0,...,q-1}^n that is closed under cyclic
/// shifts with every codeword aperiodic. Codewords are kept sorted; the size
/// is always a multiple of n.
class HoppingCyclicCode {
public:
    /// Empty code with explicit parameters.
    HoppingCyclicCode(std::size_t n, std::uint32_t q) : n_(n), q_(q) {
        detail::check_alphabet(q_);
        if (n_ == 0) throw std::invalid_argument("code length must be at least 1");
    }

    /// Validating constructor; rejects word sets that fail the hopping-cyclic
    /// check, quoting the diagnosis.
    explicit HoppingCyclicCode(std::vector<Sequence> codewords) {
        HoppingDiagnosis diag = check_hopping_cyclic(codewords);
        if (!diag.ok) {
            throw std::invalid_argument("not a hopping cyclic code: " + diag.message());
        }
        n_ = codewords.front().length();
        q_ = codewords.front().alphabet_size();
        codewords_ = std::move(codewords);
        std::sort(codewords_.begin(), codewords_.end());
    }

    std::size_t length() const { return n_; }
    std::uint32_t alphabet_size() const { return q_; }
    std::size_t size() const { return codewords_.size(); }
    bool empty() const { return codewords_.empty(); }
    const std::vector<Sequence>& codewords() const { return codewords_; }

    friend bool operator==(const HoppingCyclicCode& a, const HoppingCyclicCode& b) {
        return a.n_ == b.n_ && a.q_ == b.q_ && a.codewords_ == b.codewords_;
    }

private:
    std::vector<Sequence> codewords_;
    std::size_t n_ = 0;
    std::uint32_t q_ = 0;
};

/// Minimum pairwise Hamming distance over distinct words; requires >= 2 words.
inline unsigned min_pairwise_distance(std::span<const Sequence> words) {
    if (words.size() < 2) {
        throw std::invalid_argument(
            "min_pairwise_distance: need at least two words");
    }
    const std::size_t n = words.front().length();
    unsigned best = static_cast<unsigned>(n);
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const unsigned d = static_cast<unsigned>(n) -
                detail::agreement_count(words[i].symbols(), words[j].symbols(), 0);
            if (d < best) {
                best = d;
                if (best == 0) return 0;
            }
        }
    }
    return best;
}

/// Minimum distance of a hopping cyclic code with at least two codewords.
inline unsigned code_min_distance(const HoppingCyclicCode& code) {
    if (code.size() < 2) {
        throw std::invalid_argument(
            "code_min_distance: need at least two codewords");
    }
    return min_pairwise_distance(code.codewords());
}

/// Expand a sequence set into the associated hopping cyclic code: the union
/// of the rotation orbits of all members. Every member must be aperiodic and
/// no two members may share an orbit, otherwise |C| = n * M would fail.
inline HoppingCyclicCode fh_to_code(const FhSequenceSet& family) {
    const std::size_t n = family.length();
    std::vector<Sequence> codewords;
    codewords.reserve(n * family.size());
    std::vector<Sequence> canon_seen;
    for (const Sequence& u : family.members()) {
        if (smallest_period(u) != n) {
            throw std::invalid_argument(
                "fh_to_code: member (" + u.to_string() +
                ") has a nontrivial period; its orbit has fewer than n rotations");
        }
        Sequence canon = canonical_rotation(u);
        for (const Sequence& seen : canon_seen) {
            if (seen == canon) {
                throw std::invalid_argument(
                    "fh_to_code: member (" + u.to_string() +
                    ") shares a rotation orbit with another member");
            }
        }
        canon_seen.push_back(std::move(canon));
        for (Sequence& r : orbit(u)) codewords.push_back(std::move(r));
    }
    return HoppingCyclicCode(std::move(codewords));
}

/// Collapse a nonempty hopping cyclic code back to a sequence set by keeping
/// the lexicographically smallest rotation of each orbit. Inverse of
/// fh_to_code up to choice of orbit representatives.
inline FhSequenceSet code_to_fh(const HoppingCyclicCode& code) {
    if (code.empty()) {
        throw std::invalid_argument(
            "code_to_fh: empty code yields no sequence set (M >= 1 required)");
    }
    std::vector<Sequence> reps;
    for (const Sequence& w : code.codewords()) {
        Sequence canon = canonical_rotation(w);
        if (canon == w) reps.push_back(std::move(canon));
    }
    return FhSequenceSet(std::move(reps));
}

}  // namespace fhseq
