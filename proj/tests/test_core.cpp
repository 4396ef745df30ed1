#include "doctest.h"
#include "oracles.hpp"

#include "insdel/core.hpp"
#include "insdel/rng.hpp"

using namespace insdel;

namespace {
const Alphabet bin{2};
const Alphabet ter{3};
Word w2(const char* s) { return Word::parse(s, bin); }
Word w3(const char* s) { return Word::parse(s, ter); }
}  // namespace

TEST_CASE("alphabet and word construction") {
    CHECK_THROWS_AS(Alphabet(1), Error);
    CHECK_THROWS_AS(Word(bin, {0, 2}), Error);
    CHECK(Word(bin).empty());
    CHECK(Word::repetition(ter, 2, 3) == w3("222"));
    CHECK(w3("012").str() == "012");
    CHECK(Word::parse("", bin).empty());
}

TEST_CASE("parsing") {
    CHECK_THROWS_AS(Word::parse("012", bin), Error);
    CHECK_THROWS_AS(Word::parse("0a", bin), Error);
    Alphabet big{16};
    Word w = Word::parse("3,15,0", big);
    CHECK(w.size() == 3);
    CHECK(w[1] == 15);
    CHECK(w.str() == "3,15,0");
    CHECK_THROWS_AS(Word::parse("3,16", big), Error);
    try {
        Word::parse("2", bin);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parse);
    }
}

TEST_CASE("subword and concat") {
    Word w = w2("011010");
    CHECK(w.subword(1, 3) == w2("110"));
    CHECK(w.subword(4, 10) == w2("10"));
    CHECK(w.subword(9, 2).empty());
    CHECK(w2("01").concat(w2("1")) == w2("011"));
    CHECK_THROWS_AS(w2("01").concat(w3("2")), Error);
}

TEST_CASE("lcs and distance examples") {
    CHECK(lcs_length(w2("0110"), w2("0101")) == 3);
    CHECK(insdel_distance(w2("0110"), w2("0101")) == 2);
    CHECK(lcs_length(w2("0110"), w2("0110")) == 4);
    CHECK(insdel_distance(w2("0110"), w2("0110")) == 0);
    CHECK(lcs_length(Word(bin), w2("01")) == 0);
    CHECK(insdel_distance(Word(bin), w2("01")) == 2);
    CHECK_THROWS_AS(insdel_distance(w2("01"), w3("01")), Error);
}

TEST_CASE("lcs agrees with the subsequence oracle") {
    CounterRng rng(Seed{7});
    for (int trial = 0; trial < 400; ++trial) {
        const std::uint32_t q = 2 + static_cast<std::uint32_t>(rng.uniform(3));
        std::vector<Symbol> a(rng.uniform(9)), b(rng.uniform(9));
        for (auto& s : a) s = static_cast<Symbol>(rng.uniform(q));
        for (auto& s : b) s = static_cast<Symbol>(rng.uniform(q));
        CHECK(lcs_length(a, b) == oracle::lcs(a, b));
        CHECK(insdel_distance(a, b) == oracle::distance(a, b));
        CHECK(insdel_distance(a, b) == insdel_distance(b, a));
    }
}

TEST_CASE("distance is a metric on small words") {
    std::vector<Word> all;
    for (std::size_t n = 0; n <= 3; ++n) for_each_word(bin, n, [&](const Word& w) { all.push_back(w); });
    for (const auto& a : all) {
        for (const auto& b : all) {
            CHECK((insdel_distance(a, b) == 0) == (a == b));
            CHECK((insdel_distance(a, b) + a.size() + b.size()) % 2 == 0);
            for (const auto& c : all) CHECK(insdel_distance(a, c) <= insdel_distance(a, b) + insdel_distance(b, c));
        }
    }
}

TEST_CASE("runs and run profile") {
    CHECK(count_runs(w2("0110")) == 3);
    CHECK(count_runs(w2("0101")) == 4);
    CHECK(count_runs(w2("00000")) == 1);
    CHECK(count_runs(Word(bin)) == 0);
    CHECK(run_profile(w3("00120")) == RunProfile{2, 1, 4});
    CHECK(run_profile(w2("0110")) == RunProfile{2, 1, 3});
    CHECK(run_profile(w2("111")) == RunProfile{3, 3, 1});
    CHECK(run_profile(w2("000")) == RunProfile{0, 0, 1});
    for_each_word(ter, 6, [](const Word& w) { CHECK(count_runs(w) == oracle::runs(oracle::raw(w))); });
}

TEST_CASE("repetition and weight") {
    CHECK(is_repetition(w2("000")));
    CHECK_FALSE(is_repetition(w2("010")));
    CHECK(is_repetition(w3("22")));
    CHECK(is_repetition(Word(bin)));
    CHECK(hamming_weight(w2("0110")) == 2);
    CHECK(hamming_weight(w2("00")) == 0);
    CHECK(hamming_weight(w3("121")) == 3);
}

TEST_CASE("word enumeration") {
    CHECK(checked_power(3, 4, 100) == 81);
    CHECK_THROWS_AS(checked_power(3, 5, 100), Error);
    std::vector<Word> seen;
    for_each_word(ter, 3, [&](const Word& w) { seen.push_back(w); });
    REQUIRE(seen.size() == 27);
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    for (std::uint64_t k = 0; k < 27; ++k) CHECK(word_from_index(ter, 3, k) == seen[k]);
    std::size_t count = 0;
    for_each_word(bin, 0, [&](const Word& w) {
        CHECK(w.empty());
        ++count;
    });
    CHECK(count == 1);
}

TEST_CASE("counter rng") {
    CounterRng a(Seed{42}), b(Seed{42});
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    CHECK(a.counter() == 100);
    CHECK(CounterRng::derive(Seed{1}, 0).value != CounterRng::derive(Seed{1}, 1).value);
    CounterRng c(Seed{3});
    std::vector<int> hist(5, 0);
    for (int i = 0; i < 5000; ++i) ++hist[c.uniform(5)];
    for (int h : hist) CHECK(h > 800);
    for (int i = 0; i < 1000; ++i) {
        double u = c.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}
