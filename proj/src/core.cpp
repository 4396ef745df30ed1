#include "insdel/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace insdel {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::alphabet_mismatch: return "alphabet mismatch";
        case ErrorKind::invalid_symbol: return "invalid symbol";
        case ErrorKind::invalid_radius: return "invalid radius";
        case ErrorKind::domain: return "domain error";
        case ErrorKind::out_of_regime: return "out of regime";
        case ErrorKind::capacity: return "capacity exceeded";
        case ErrorKind::infeasible: return "infeasible";
        case ErrorKind::unsupported_field: return "unsupported field";
        case ErrorKind::script: return "invalid script";
        case ErrorKind::budget: return "budget error";
        case ErrorKind::encoding: return "encoding error";
        case ErrorKind::length: return "length error";
        case ErrorKind::parse: return "parse error";
    }
    return "error";
}

Alphabet::Alphabet(std::uint32_t q) : q_(q) {
    if (q < 2) throw Error(ErrorKind::domain, "alphabet size must be at least 2");
}

Word::Word(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
    for (Symbol s : symbols_) {
        if (!alphabet_.contains(s)) {
            throw Error(ErrorKind::invalid_symbol, "symbol " + std::to_string(s) +
                                                       " outside alphabet of size " +
                                                       std::to_string(alphabet_.size()));
        }
    }
}

Word Word::repetition(Alphabet alphabet, Symbol s, std::size_t n) {
    return Word(alphabet, std::vector<Symbol>(n, s));
}

Word Word::parse(std::string_view text, Alphabet alphabet) {
    std::vector<Symbol> symbols;
    if (alphabet.size() <= 10) {
        for (char ch : text) {
            if (ch < '0' || ch > '9') {
                throw Error(ErrorKind::parse, "unexpected character '" + std::string(1, ch) + "' in word");
            }
            symbols.push_back(static_cast<Symbol>(ch - '0'));
        }
    } else if (!text.empty()) {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
            Symbol value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
                throw Error(ErrorKind::parse, "bad symbol '" + std::string(tok) + "' in word");
            }
            symbols.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    try {
        return Word(alphabet, std::move(symbols));
    } catch (const Error& e) {
        throw Error(ErrorKind::parse, e.what());
    }
}

std::string Word::str() const {
    std::string out;
    if (q() <= 10) {
        out.reserve(symbols_.size());
        for (Symbol s : symbols_) out.push_back(static_cast<char>('0' + s));
        return out;
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(symbols_[i]);
    }
    return out;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    pos = std::min(pos, symbols_.size());
    len = std::min(len, symbols_.size() - pos);
    return Word(alphabet_, std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len));
}

Word Word::concat(const Word& other) const {
    if (other.alphabet_ != alphabet_) throw Error(ErrorKind::alphabet_mismatch, "concatenating words over different alphabets");
    std::vector<Symbol> out = symbols_;
    out.insert(out.end(), other.symbols_.begin(), other.symbols_.end());
    Word w(alphabet_);
    w.symbols_ = std::move(out);
    return w;
}

std::size_t lcs_length(std::span<const Symbol> a, std::span<const Symbol> b) {
    if (a.size() < b.size()) std::swap(a, b);
    // single row over the shorter word
    std::vector<std::size_t> row(b.size() + 1, 0);
    for (Symbol x : a) {
        std::size_t diag = 0;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t up = row[j];
            row[j] = (x == b[j - 1]) ? diag + 1 : std::max(up, row[j - 1]);
            diag = up;
        }
    }
    return row[b.size()];
}

static void check_same_alphabet(const Word& a, const Word& b) {
    if (a.alphabet() != b.alphabet()) {
        throw Error(ErrorKind::alphabet_mismatch, "words over alphabets of size " + std::to_string(a.q()) +
                                                      " and " + std::to_string(b.q()));
    }
}

std::size_t lcs_length(const Word& a, const Word& b) {
    check_same_alphabet(a, b);
    return lcs_length(a.symbols(), b.symbols());
}

std::size_t insdel_distance(std::span<const Symbol> a, std::span<const Symbol> b) {
    return a.size() + b.size() - 2 * lcs_length(a, b);
}

std::size_t insdel_distance(const Word& a, const Word& b) {
    check_same_alphabet(a, b);
    return insdel_distance(a.symbols(), b.symbols());
}

int count_runs(const Word& r) {
    if (r.empty()) return 0;
    int runs = 1;
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (r[i] != r[i - 1]) ++runs;
    }
    return runs;
}

int hamming_weight(const Word& r) {
    return static_cast<int>(std::count_if(r.symbols().begin(), r.symbols().end(), [](Symbol s) { return s != 0; }));
}

bool is_repetition(const Word& r) {
    return std::adjacent_find(r.symbols().begin(), r.symbols().end(), std::not_equal_to<>()) == r.symbols().end();
}

RunProfile run_profile(const Word& r) {
    RunProfile p;
    p.phi = count_runs(r);
    // zero blocks a_1..a_{w+1} separated by the nonzero symbols
    int block = 0;
    for (Symbol s : r.symbols()) {
        if (s == 0) {
            ++block;
        } else {
            if (block == 0) ++p.t;
            block = 0;
            ++p.w;
        }
    }
    if (block == 0) ++p.t;
    p.t = std::min(p.t, p.w);
    return p;
}

std::uint64_t checked_power(std::uint64_t q, std::size_t n, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (v > limit / q) {
            throw Error(ErrorKind::capacity, std::to_string(q) + "^" + std::to_string(n) + " exceeds limit " +
                                                 std::to_string(limit));
        }
        v *= q;
    }
    return v;
}

Word word_from_index(Alphabet alphabet, std::size_t n, std::uint64_t index) {
    std::vector<Symbol> digits(n, 0);
    for (std::size_t i = n; i > 0; --i) {
        digits[i - 1] = static_cast<Symbol>(index % alphabet.size());
        index /= alphabet.size();
    }
    return Word(alphabet, std::move(digits));
}

}  // namespace insdel
