#include "doctest.h"
#include "oracles.hpp"

#include <numeric>

#include "insdel/channel.hpp"
#include "insdel/codes.hpp"

using namespace insdel;

namespace {
const Alphabet bin{2};
Word w2(const char* s) { return Word::parse(s, bin); }

Word random_word(std::uint32_t q, std::size_t n, std::uint64_t seed) { return sample_random_code(q, n, 1, Seed{seed})[0]; }
}  // namespace

TEST_CASE("edit scripts") {
    Word w = w2("0110");
    CHECK(apply_script(w, {}) == w);
    EditScript wipe(4, EditOp{EditOp::Kind::erase, 0, 0});
    CHECK(apply_script(w, wipe).empty());
    Word ins = apply_script(w2("01"), {EditOp{EditOp::Kind::insert, 1, 1}});
    CHECK(ins == w2("011"));
    Word front = apply_script(w2("01"), {EditOp{EditOp::Kind::insert, 0, 1}});
    CHECK(front == w2("101"));
    CHECK(insdel_distance(w2("01"), front) == 1);
    CHECK(apply_script(w2("01"), {EditOp{EditOp::Kind::insert, 2, 0}}) == w2("010"));
    CHECK_THROWS_AS(apply_script(w2("01"), {EditOp{EditOp::Kind::erase, 2, 0}}), Error);
    CHECK_THROWS_AS(apply_script(w2("01"), {EditOp{EditOp::Kind::insert, 3, 0}}), Error);
    CHECK_THROWS_AS(apply_script(w2("01"), {EditOp{EditOp::Kind::insert, 0, 2}}), Error);
}

TEST_CASE("script json") {
    EditScript s{{EditOp::Kind::erase, 3, 0}, {EditOp::Kind::insert, 0, 2}};
    CHECK(script_from_json(script_to_json(s)) == s);
    CHECK_THROWS_AS(script_from_json("[{\"op\":\"swap\"}]"), Error);
}

TEST_CASE("random channel") {
    Word w = w2("0110100");
    auto same = random_channel(w, 0, 0, Seed{1});
    CHECK(same.word == w);
    CHECK(same.script.empty());
    CHECK_THROWS_AS(random_channel(w, 0, 8, Seed{1}), Error);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::uint32_t q = 2 + static_cast<std::uint32_t>(seed % 3);
        Word x = random_word(q, 8, seed);
        const std::size_t ins = seed % 4, del = seed / 4 % 4;
        auto out = random_channel(x, ins, del, Seed{seed});
        CHECK(out.word.size() == x.size() + ins - del);
        CHECK(out.script.size() == ins + del);
        CHECK(apply_script(x, out.script) == out.word);
        CHECK(oracle::distance(oracle::raw(x), oracle::raw(out.word)) <= ins + del);
        // deletions come first
        for (std::size_t i = 0; i < del; ++i) CHECK(out.script[i].kind == EditOp::Kind::erase);
    }
    auto a = random_channel(w, 2, 2, Seed{77});
    auto b = random_channel(w, 2, 2, Seed{77});
    CHECK(a.word == b.word);
    CHECK(a.script == b.script);
}

TEST_CASE("block channel") {
    Word c = random_word(2, 24, 3);
    auto id = adversarial_block_channel(c, 6, {0, 0, 0, 0}, Seed{1});
    CHECK(id.word == c);
    CHECK(id.segments.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(id.segments[i].start == 6 * i);
        CHECK(id.segments[i].length == 6);
    }

    auto one = adversarial_block_channel(c, 6, {2, 0, 0, 0}, Seed{2});
    CHECK(insdel_distance(c.subword(0, 6), one.word.subword(one.segments[0].start, one.segments[0].length)) <= 2);
    for (std::size_t i = 1; i < 4; ++i) {
        CHECK(one.word.subword(one.segments[i].start, one.segments[i].length) == c.subword(6 * i, 6));
    }

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto budgets = random_budget_split(6, 4, 3, Seed{seed});
        CHECK(std::accumulate(budgets.begin(), budgets.end(), std::size_t{0}) == 6);
        for (auto b : budgets) CHECK(b <= 3);
        auto out = adversarial_block_channel(c, 6, budgets, Seed{seed});
        CHECK(out.block_budgets == budgets);
        CHECK(apply_script(c, out.script) == out.word);
        CHECK(insdel_distance(c, out.word) <= 6);
        std::size_t pos = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& seg = out.segments[i];
            CHECK(seg.start == pos);
            pos += seg.length;
            CHECK(insdel_distance(c.subword(6 * i, 6), out.word.subword(seg.start, seg.length)) <= budgets[i]);
        }
        CHECK(pos == out.word.size());
    }
    CHECK_THROWS_AS(random_budget_split(10, 2, 4, Seed{1}), Error);
    CHECK_THROWS_AS(adversarial_block_channel(c, 5, {0, 0}, Seed{1}), Error);
}
