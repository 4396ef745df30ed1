#include "insdel/codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "json.hpp"
#include <openssl/evp.h>

namespace insdel {

namespace {

constexpr std::uint64_t enumeration_limit = 10'000'000;

std::size_t word_hash(std::span<const Symbol> s) {
    std::size_t h = 1469598103934665603ULL;
    for (Symbol x : s) h = (h ^ x) * 1099511628211ULL;
    return h;
}

struct WordHash {
    std::size_t operator()(const Word& w) const { return word_hash(w.symbols()); }
};

}  // namespace

Code::Code(Alphabet alphabet, std::size_t n, std::vector<Word> words) : alphabet_(alphabet), n_(n) {
    words_.reserve(words.size());
    std::unordered_set<Word, WordHash> seen;
    for (Word& w : words) {
        if (!seen.insert(w).second) throw Error(ErrorKind::domain, "duplicate codeword " + w.str());
        check_shape(w);
        words_.push_back(std::move(w));
    }
}

void Code::check_shape(const Word& w) const {
    if (w.alphabet() != alphabet_) throw Error(ErrorKind::alphabet_mismatch, "codeword over a different alphabet");
    if (w.size() != n_) {
        throw Error(ErrorKind::length, "codeword of length " + std::to_string(w.size()) + " in a length-" +
                                           std::to_string(n_) + " code");
    }
}

bool Code::contains(const Word& w) const { return std::find(words_.begin(), words_.end(), w) != words_.end(); }

void Code::add(Word w) {
    check_shape(w);
    if (contains(w)) throw Error(ErrorKind::domain, "duplicate codeword " + w.str());
    words_.push_back(std::move(w));
}

std::vector<Word> Code::sorted_words() const {
    std::vector<Word> out = words_;
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t min_insdel_distance(const Code& c) {
    if (c.size() < 2) throw Error(ErrorKind::domain, "minimum distance needs at least two codewords");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const auto& w = c.words();
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, insdel_distance(w[i], w[j]));
    }
    return best;
}

CodeStats code_stats(const Code& c) {
    CodeStats s;
    s.min_dist = min_insdel_distance(c);
    const double n = static_cast<double>(c.length());
    s.rate = n > 0 ? std::log(static_cast<double>(c.size())) / std::log(static_cast<double>(c.q())) / n : 0.0;
    s.rel_dist = n > 0 ? static_cast<double>(s.min_dist) / (2.0 * n) : 0.0;
    return s;
}

Code sample_random_code(std::uint32_t q, std::size_t n, std::uint64_t M, Seed seed) {
    Alphabet alphabet(q);
    CounterRng rng(seed);
    std::vector<Word> words;
    words.reserve(M);

    std::uint64_t space = 0;
    bool fits = true;
    try {
        space = checked_power(q, n, std::numeric_limits<std::uint64_t>::max());
    } catch (const Error&) {
        fits = false;
    }

    if (fits) {
        if (M > space) {
            throw Error(ErrorKind::capacity, "cannot draw " + std::to_string(M) + " distinct words from " +
                                                 std::to_string(space));
        }
        // Floyd's algorithm: M distinct indices from [0, space) with M draws
        std::unordered_set<std::uint64_t> chosen;
        chosen.reserve(M * 2);
        for (std::uint64_t j = space - M; j < space; ++j) {
            std::uint64_t t = rng.uniform(j + 1);
            if (!chosen.insert(t).second) {
                t = j;
                chosen.insert(j);
            }
            words.push_back(word_from_index(alphabet, n, t));
        }
        return Code(alphabet, n, std::move(words));
    }

    std::unordered_set<Word, WordHash> seen;
    while (words.size() < M) {
        std::vector<Symbol> s(n);
        for (auto& x : s) x = static_cast<Symbol>(rng.uniform(q));
        Word w(alphabet, std::move(s));
        if (seen.insert(w).second) words.push_back(std::move(w));
    }
    return Code(alphabet, n, std::move(words));
}

bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    // Fermat; p is prime and small
    std::uint64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

// Reduces v against an echelon basis; returns true if v is outside the span
// and adds it to the basis.
bool extend_basis(std::vector<std::vector<std::uint64_t>>& basis, std::vector<std::size_t>& pivots,
                  std::vector<std::uint64_t> v, std::uint64_t p) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
        std::uint64_t c = v[pivots[b]];
        if (c == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + (p - c) * basis[b][i]) % p;
    }
    auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (it == v.end()) return false;
    std::size_t piv = static_cast<std::size_t>(it - v.begin());
    std::uint64_t inv = inverse_mod(v[piv], p);
    for (auto& x : v) x = x * inv % p;
    // keep the basis reduced so later pivots stay clean
    for (auto& row : basis) {
        std::uint64_t c = row[piv];
        if (c == 0) continue;
        for (std::size_t i = 0; i < row.size(); ++i) row[i] = (row[i] + (p - c) * v[i]) % p;
    }
    basis.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
}

}  // namespace

LinearCode sample_random_linear_code(std::uint32_t q, std::size_t n, std::size_t k, Seed seed) {
    if (!is_prime(q)) throw Error(ErrorKind::unsupported_field, "linear codes need a prime alphabet size, got " + std::to_string(q));
    if (k > n) throw Error(ErrorKind::domain, "dimension exceeds length");
    const std::uint64_t count = checked_power(q, k, enumeration_limit);
    Alphabet alphabet(q);
    CounterRng rng(seed);

    std::vector<Word> generators;
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivots;
    while (generators.size() < k) {
        std::vector<std::uint64_t> v(n);
        for (auto& x : v) x = rng.uniform(q);
        if (!extend_basis(basis, pivots, v, q)) continue;
        generators.emplace_back(alphabet, std::vector<Symbol>(v.begin(), v.end()));
    }

    std::vector<Word> words;
    words.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m) {
        const Word coeff = word_from_index(alphabet, k, m);
        std::vector<std::uint64_t> acc(n, 0);
        for (std::size_t g = 0; g < k; ++g) {
            for (std::size_t i = 0; i < n; ++i) acc[i] = (acc[i] + coeff[g] * generators[g][i]) % q;
        }
        words.emplace_back(alphabet, std::vector<Symbol>(acc.begin(), acc.end()));
    }
    return LinearCode{Code(alphabet, n, std::move(words)), std::move(generators)};
}

Code greedy_gv_code(std::uint32_t q, std::size_t n, std::size_t d) {
    if (d == 0 || d > 2 * n) throw Error(ErrorKind::domain, "greedy construction needs 0 < d <= 2n");
    checked_power(q, n, enumeration_limit);
    Alphabet alphabet(q);
    Code code(alphabet, n);
    for (Symbol a = 0; a < q; ++a) code.add(Word::repetition(alphabet, a, n));
    for_each_word(alphabet, n, [&](const Word& x) {
        if (is_repetition(x)) return;
        for (const Word& c : code.words()) {
            if (insdel_distance(c, x) < d) return;
        }
        code.add(x);
    });
    return code;
}

Code sparse_gv_code(std::uint32_t q, std::size_t n, double delta, bool* floored) {
    const double qd = static_cast<double>(q);
    if (!(delta > (qd - 1.0) / qd && delta < 1.0)) {
        throw Error(ErrorKind::domain, "sparse construction needs (q-1)/q < delta < 1");
    }
    const double exact = delta * static_cast<double>(n);
    const auto k = static_cast<std::size_t>(std::floor(exact + 1e-9));
    if (floored) *floored = std::abs(exact - static_cast<double>(k)) > 1e-9;
    Alphabet alphabet(q);
    std::vector<Word> words;
    for (Symbol a = 0; a < q; ++a) {
        std::vector<Symbol> s(n - k, 0);
        s.insert(s.end(), k, a);
        words.emplace_back(alphabet, std::move(s));
    }
    return Code(alphabet, n, std::move(words));
}

std::string code_to_json(const Code& c) {
    nlohmann::json j;
    j["q"] = c.q();
    j["n"] = c.length();
    auto& arr = j["words"] = nlohmann::json::array();
    for (const Word& w : c.words()) arr.push_back(w.str());
    return j.dump();
}

Code code_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        Alphabet alphabet(j.at("q").get<std::uint32_t>());
        const auto n = j.at("n").get<std::size_t>();
        std::vector<Word> words;
        for (const auto& w : j.at("words")) words.push_back(Word::parse(w.get<std::string>(), alphabet));
        return Code(alphabet, n, std::move(words));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse, std::string("bad code JSON: ") + e.what());
    }
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorKind::encoding, "SHA-256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

std::string code_digest(const Code& c) {
    return sha256_hex(code_to_json(Code(c.alphabet(), c.length(), c.sorted_words())));
}

}  // namespace insdel
