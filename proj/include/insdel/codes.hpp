#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "insdel/core.hpp"
#include "insdel/rng.hpp"

namespace insdel {

/// Distinct words of a common length. Keeps insertion order, which samplers
/// use as the encoding order.
class Code {
public:
    Code(Alphabet alphabet, std::size_t n) : alphabet_(alphabet), n_(n) {}
    Code(Alphabet alphabet, std::size_t n, std::vector<Word> words);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::uint32_t q() const noexcept { return alphabet_.size(); }
    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<Word>& words() const noexcept { return words_; }
    const Word& operator[](std::size_t i) const { return words_.at(i); }

    bool contains(const Word& w) const;
    /// Adds w; throws on length/alphabet mismatch or duplicates.
    void add(Word w);

    std::vector<Word> sorted_words() const;

private:
    void check_shape(const Word& w) const;

    Alphabet alphabet_;
    std::size_t n_;
    std::vector<Word> words_;
};

struct CodeStats {
    double rate = 0.0;
    std::size_t min_dist = 0;
    double rel_dist = 0.0;
};

std::size_t min_insdel_distance(const Code& c);
CodeStats code_stats(const Code& c);

/// M distinct words drawn uniformly from Sigma_q^n, in draw order.
Code sample_random_code(std::uint32_t q, std::size_t n, std::uint64_t M, Seed seed);

struct LinearCode {
    Code code;
    std::vector<Word> generators;
};

bool is_prime(std::uint64_t q);

/// Span of k random independent words over the prime field F_q. Codewords are
/// listed in order of their message (coefficients, most significant first).
LinearCode sample_random_linear_code(std::uint32_t q, std::size_t n, std::size_t k, Seed seed);

/// Repetition words first, then a lexicographic scan keeping words at
/// distance >= d from everything kept so far.
Code greedy_gv_code(std::uint32_t q, std::size_t n, std::size_t d);

/// {(0)^(n-k) (a)^k : a in Sigma_q} with k = floor(delta n); needs (q-1)/q < delta < 1.
/// Sets *floored when delta n is not an integer.
Code sparse_gv_code(std::uint32_t q, std::size_t n, double delta, bool* floored = nullptr);

/// {"n":..,"q":..,"words":[...]} with words in stored order.
std::string code_to_json(const Code& c);
Code code_from_json(const std::string& text);

/// SHA-256 hex of the canonical JSON of the code with its words sorted.
std::string code_digest(const Code& c);
std::string sha256_hex(const std::string& data);

}  // namespace insdel
