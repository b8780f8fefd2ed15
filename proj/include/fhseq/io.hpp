#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fhseq/sequence.hpp"

namespace fhseq {

/// Raw contents of a word-set file: header parameters plus the words in file
/// order. Works for both sequence sets and codes; the caller decides which
/// structure to build on top.
struct WordFile {
    std::size_t n = 0;
    std::uint32_t q = 0;
    std::vector<Sequence> words;
};

namespace detail {

inline long long read_integer(std::istream& in, const std::string& source,
                              const char* what) {
    long long v = 0;
    if (!(in >> v)) {
        throw std::runtime_error(source + ": expected " + std::string(what) +
                                 ", found end of input or a non-integer token");
    }
    return v;
}

}  // namespace detail

/// Parse the plain text format: a header line "n q M" followed by M words of
/// n space-separated symbols each. Whitespace layout is not significant.
inline WordFile read_word_set(std::istream& in,
                              const std::string& source = "<stream>") {
    const long long n = detail::read_integer(in, source, "sequence length n");
    const long long q = detail::read_integer(in, source, "alphabet size q");
    const long long m = detail::read_integer(in, source, "word count M");
    if (n < 1) throw std::runtime_error(source + ": length n must be at least 1");
    if (q < 2 || q > static_cast<long long>(max_alphabet_size)) {
        throw std::runtime_error(source + ": alphabet size q must be in [2, 2^16]");
    }
    if (m < 0) throw std::runtime_error(source + ": word count M must be nonnegative");

    WordFile file;
    file.n = static_cast<std::size_t>(n);
    file.q = static_cast<std::uint32_t>(q);
    file.words.reserve(static_cast<std::size_t>(m));
    for (long long row = 0; row < m; ++row) {
        std::vector<symbol_t> symbols;
        symbols.reserve(file.n);
        for (std::size_t col = 0; col < file.n; ++col) {
            long long s = 0;
            if (!(in >> s)) {
                throw std::runtime_error(source + ": word " + std::to_string(row + 1) +
                                         " of " + std::to_string(m) + " is truncated");
            }
            if (s < 0 || s >= q) {
                throw std::runtime_error(source + ": symbol " + std::to_string(s) +
                                         " in word " + std::to_string(row + 1) +
                                         " outside alphabet [0, " + std::to_string(q) + ")");
            }
            symbols.push_back(static_cast<symbol_t>(s));
        }
        file.words.emplace_back(std::move(symbols), file.q);
    }
    std::string trailing;
    if (in >> trailing) {
        throw std::runtime_error(source + ": trailing data after the last word: '" +
                                 trailing + "'");
    }
    return file;
}

inline WordFile read_word_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    return read_word_set(in, path);
}

/// Emit the text format: "n q M" header then one word per line.
inline void write_word_set(std::ostream& out, std::size_t n, std::uint32_t q,
                           std::span<const Sequence> words) {
    out << n << ' ' << q << ' ' << words.size() << '\n';
    for (const Sequence& w : words) out << w.to_string() << '\n';
}

inline void write_word_set_file(const std::string& path, std::size_t n,
                                std::uint32_t q, std::span<const Sequence> words) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    write_word_set(out, n, q, words);
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace fhseq
