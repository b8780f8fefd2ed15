#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fhseq {

/// Symbol of a hopping pattern; alphabets are capped at 2^16 so a symbol
/// always fits in 16 bits.
using symbol_t = std::uint16_t;

inline constexpr std::uint32_t max_alphabet_size = 1u << 16;

namespace detail {

inline void check_alphabet(std::uint32_t q) {
    if (q < 2 || q > max_alphabet_size) {
        throw std::invalid_argument("alphabet size must be in [2, 2^16], got " +
                                    std::to_string(q));
    }
}

// Lexicographic odometer over words of length n over {0,...,q-1}.
// Returns false once the all-(q-1) word has been passed.
inline bool next_word(std::vector<symbol_t>& w, std::uint32_t q) {
    for (std::size_t j = w.size(); j-- > 0;) {
        if (std::uint32_t(w[j]) + 1 < q) {
            ++w[j];
            return true;
        }
        w[j] = 0;
    }
    return false;
}

// q^n if it fits in 64 bits, nullopt otherwise.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::size_t n) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
        r *= q;
    }
    return r;
}

}  // namespace detail

/// A length-n word over the frequency-slot alphabet {0,...,q-1}.
/// Immutable after construction.
class Sequence {
public:
    Sequence(std::vector<symbol_t> symbols, std::uint32_t q)
        : symbols_(std::move(symbols)), q_(q) {
        detail::check_alphabet(q_);
        if (symbols_.empty()) {
            throw std::invalid_argument("sequence length must be at least 1");
        }
        for (symbol_t s : symbols_) {
            if (std::uint32_t(s) >= q_) {
                throw std::invalid_argument("symbol " + std::to_string(s) +
                                            " outside alphabet [0, " +
                                            std::to_string(q_) + ")");
            }
        }
    }

    std::size_t length() const { return symbols_.size(); }
    std::uint32_t alphabet_size() const { return q_; }
    std::span<const symbol_t> symbols() const { return symbols_; }
    symbol_t operator[](std::size_t i) const { return symbols_[i]; }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(symbols_[i]);
        }
        return out;
    }

    friend bool operator==(const Sequence& a, const Sequence& b) {
        return a.q_ == b.q_ && a.symbols_ == b.symbols_;
    }
    friend std::strong_ordering operator<=>(const Sequence& a, const Sequence& b) {
        if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
        return a.q_ <=> b.q_;
    }

private:
    std::vector<symbol_t> symbols_;
    std::uint32_t q_;
};

/// i-th cyclic left shift: position j of the result holds u[(j + i) mod n].
inline Sequence rotate(const Sequence& u, std::size_t i) {
    const std::size_t n = u.length();
    if (i >= n) {
        throw std::invalid_argument("rotation shift must be in [0, n), got " +
                                    std::to_string(i));
    }
    const auto s = u.symbols();
    std::vector<symbol_t> out;
    out.reserve(n);
    out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(i), s.end());
    out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i));
    return Sequence(std::move(out), u.alphabet_size());
}

/// Smallest p > 0 with rotate(u, p) == u; always a divisor of n.
inline std::size_t smallest_period(const Sequence& u) {
    const auto s = u.symbols();
    const std::size_t n = s.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool fixed = true;
        for (std::size_t j = 0; j < n && fixed; ++j) {
            fixed = (s[j] == s[(j + p) % n]);
        }
        if (fixed) return p;
    }
    return n;
}

/// Lexicographically smallest rotation of u. Constant on rotation orbits and
/// idempotent, which makes it a canonical orbit representative.
inline Sequence canonical_rotation(const Sequence& u) {
    const auto s = u.symbols();
    const std::size_t n = s.size();
    std::size_t best = 0;
    for (std::size_t cand = 1; cand < n; ++cand) {
        for (std::size_t j = 0; j < n; ++j) {
            const symbol_t a = s[(cand + j) % n];
            const symbol_t b = s[(best + j) % n];
            if (a != b) {
                if (a < b) best = cand;
                break;
            }
        }
    }
    return rotate(u, best);
}

/// All distinct rotations of u, sorted lexicographically. The orbit size is
/// the smallest period of u and always divides n.
inline std::vector<Sequence> orbit(const Sequence& u) {
    const std::size_t p = smallest_period(u);
    std::vector<Sequence> out;
    out.reserve(p);
    for (std::size_t i = 0; i < p; ++i) out.push_back(rotate(u, i));
    std::sort(out.begin(), out.end());
    return out;
}

/// A set of M >= 1 distinct hopping patterns sharing (n, q).
/// Members are kept sorted lexicographically for reproducible iteration.
class FhSequenceSet {
public:
    explicit FhSequenceSet(std::vector<Sequence> members)
        : members_(std::move(members)) {
        if (members_.empty()) {
            throw std::invalid_argument("sequence set must contain at least one sequence");
        }
        n_ = members_.front().length();
        q_ = members_.front().alphabet_size();
        for (const Sequence& m : members_) {
            if (m.length() != n_ || m.alphabet_size() != q_) {
                throw std::invalid_argument(
                    "sequence set members must share length and alphabet");
            }
        }
        std::sort(members_.begin(), members_.end());
        auto dup = std::adjacent_find(members_.begin(), members_.end());
        if (dup != members_.end()) {
            throw std::invalid_argument("sequence set members must be distinct; saw (" +
                                        dup->to_string() + ") twice");
        }
    }

    std::size_t length() const { return n_; }
    std::uint32_t alphabet_size() const { return q_; }
    std::size_t size() const { return members_.size(); }
    const std::vector<Sequence>& members() const { return members_; }

    friend bool operator==(const FhSequenceSet& a, const FhSequenceSet& b) {
        return a.n_ == b.n_ && a.q_ == b.q_ && a.members_ == b.members_;
    }

private:
    std::vector<Sequence> members_;
    std::size_t n_ = 0;
    std::uint32_t q_ = 0;
};

/// Family parameters in the usual (n, M, lambda; q) form; for codes M is the
/// codeword count and lambda = n - d.
struct CodeParams {
    std::size_t n = 0;
    std::size_t family_size = 0;
    unsigned max_correlation = 0;
    std::uint32_t q = 0;

    std::string to_string() const {
        return "(" + std::to_string(n) + "," + std::to_string(family_size) + "," +
               std::to_string(max_correlation) + ";" + std::to_string(q) + ")";
    }
};

}  // namespace fhseq
