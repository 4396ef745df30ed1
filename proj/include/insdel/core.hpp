#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "insdel/error.hpp"

namespace insdel {

using Symbol = std::uint32_t;

/// Alphabet {0, ..., q-1}; q >= 2.
class Alphabet {
public:
    explicit Alphabet(std::uint32_t q);

    std::uint32_t size() const noexcept { return q_; }
    bool contains(Symbol s) const noexcept { return s < q_; }

    friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

private:
    std::uint32_t q_;
};

/// A finite sequence over an alphabet. The empty word is valid.
class Word {
public:
    explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
    Word(Alphabet alphabet, std::vector<Symbol> symbols);

    static Word repetition(Alphabet alphabet, Symbol s, std::size_t n);

    /// Digit string for q <= 10, comma-separated integers otherwise.
    static Word parse(std::string_view text, Alphabet alphabet);
    std::string str() const;

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::uint32_t q() const noexcept { return alphabet_.size(); }
    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    /// Symbols [pos, pos + len) clipped to the word.
    Word subword(std::size_t pos, std::size_t len) const;
    Word concat(const Word& other) const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
        return a.alphabet_ <=> b.alphabet_;
    }

private:
    Alphabet alphabet_;
    std::vector<Symbol> symbols_;
};

/// Structural decomposition of a word into zero blocks and nonzero symbols.
struct RunProfile {
    int w = 0;    // Hamming weight
    int t = 0;    // number of empty zero blocks a_i = 0, i in [1, w+1], capped at w
    int phi = 0;  // number of runs

    friend bool operator==(const RunProfile&, const RunProfile&) = default;
};

std::size_t lcs_length(const Word& a, const Word& b);
std::size_t lcs_length(std::span<const Symbol> a, std::span<const Symbol> b);

/// |a| + |b| - 2 LCS(a, b).
std::size_t insdel_distance(const Word& a, const Word& b);
std::size_t insdel_distance(std::span<const Symbol> a, std::span<const Symbol> b);

int count_runs(const Word& r);
RunProfile run_profile(const Word& r);
bool is_repetition(const Word& r);
int hamming_weight(const Word& r);

/// q^n, or throws a capacity error if it exceeds `limit`.
std::uint64_t checked_power(std::uint64_t q, std::size_t n, std::uint64_t limit);

/// Word with index `index` in lexicographic order of Sigma_q^n.
Word word_from_index(Alphabet alphabet, std::size_t n, std::uint64_t index);

/// Calls fn(word) for every word of Sigma_q^n in lexicographic order.
template <typename Fn>
void for_each_word(Alphabet alphabet, std::size_t n, Fn&& fn) {
    std::vector<Symbol> digits(n, 0);
    const Symbol top = alphabet.size() - 1;
    while (true) {
        fn(Word(alphabet, digits));
        std::size_t i = n;
        while (i > 0 && digits[i - 1] == top) {
            digits[i - 1] = 0;
            --i;
        }
        if (i == 0) return;
        ++digits[i - 1];
    }
}

}  // namespace insdel
