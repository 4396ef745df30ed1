#include "doctest.h"
#include "oracles.hpp"

#include <cmath>

#include "insdel/channel.hpp"
#include "insdel/concat.hpp"

using namespace insdel;
using doctest::Approx;

namespace {

ConcatParams small_params() {
    ConcatParams p;
    p.N = 6;
    p.n = 8;
    p.p = 7;
    p.K = 2;
    p.eps_cont = 0.5;
    p.tau_in = 0.25;
    p.tau_star = 0.125;
    p.alpha_out = 0.5;
    p.eps_conc = 0.0;
    p.validate();
    return p;
}

bool window_in_set(const ConcatParams& p, std::size_t M, const Window& w) {
    const double t = static_cast<double>(p.tau_hat_n);
    const double lead = std::max(0.0, static_cast<double>(p.n) - p.tau_star_n);
    if (w.phi % p.tau_hat_n != 0) return false;
    const double lambda = static_cast<double>(w.phi / p.tau_hat_n);
    if (lambda > 1.0 + (static_cast<double>(M) - lead) / t + 1e-9) return false;
    for (std::size_t mu = 0; mu * p.tau_hat_n <= 4 * p.n; ++mu) {
        const double m = static_cast<double>(mu);
        if (m + 1e-9 < lead / t || m > 1.0 + (static_cast<double>(p.n) + p.tau_star_n) / t + 1e-9) continue;
        if (w.lambda_len == std::min(mu * p.tau_hat_n, M - w.phi)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("parameter validation") {
    ConcatParams p;
    p.validate();
    CHECK(p.period == 2);
    CHECK(p.tau_hat_n == 1);
    CHECK(p.tau_in_n == 3);
    CHECK(p.tau == Approx(0.075));
    CHECK(p.budget == 7);
    CHECK(p.points == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 5, 6, 7});

    ConcatParams bad;
    bad.tau_star = 0.2;  // (tau_in - tau_star) n = 0.6
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = ConcatParams{};
    bad.tau_star = 0.3;
    CHECK_THROWS_AS(bad.validate(), Error);
    bad = ConcatParams{};
    bad.eps_cont = 0.3;
    CHECK_THROWS_AS(bad.validate(), Error);

    ConcatParams back = concat_params_from_json(concat_params_to_json(p));
    CHECK(back.budget == p.budget);
    CHECK(back.points == p.points);
    CHECK_THROWS_AS(concat_params_from_json("{\"N\":8}"), Error);
}

TEST_CASE("indexing and encoding") {
    ConcatCode code(small_params());
    CHECK(code.index_of(4) == 1);
    for (std::size_t i = 1; i + 3 <= 6; ++i) CHECK(code.index_of(i) == code.index_of(i + 3));
    CHECK_THROWS_AS(code.index_of(0), Error);
    CHECK_THROWS_AS(code.inner_encode(4, 0), Error);
    CHECK_THROWS_AS(code.inner_encode(1, 7), Error);

    FieldVector c = rs_encode(code.outer(), {3, 5});
    Word x = code.encode(c);
    CHECK(x.size() == 48);
    for (std::size_t i = 1; i <= 6; ++i) CHECK(x.subword((i - 1) * 8, 8) == code.inner_encode(code.index_of(i), c[i - 1]));
    CHECK(code.encode_message({3, 5}) == x);

    // inner encoder is injective on its domain
    std::set<Word> seen;
    for (std::size_t index = 1; index <= 3; ++index) {
        for (std::uint64_t s = 0; s < 7; ++s) seen.insert(code.inner_encode(index, s));
    }
    CHECK(seen.size() == 21);

    ConcatParams one = small_params();
    one.N = 1;
    one.K = 1;
    one.points.clear();
    one.eps_cont = 1.0;
    ConcatCode single(one);
    CHECK(single.encode({4}) == single.inner_encode(1, 4));
}

TEST_CASE("window set") {
    ConcatParams p;
    p.N = 2;
    p.n = 4;
    p.p = 5;
    p.K = 1;
    p.eps_cont = 0.5;
    p.tau_in = 0.5;
    p.tau_star = 0.25;
    p.alpha_out = 0.5;
    p.eps_conc = 0.0;
    p.validate();
    auto windows = build_windows(p, 10);
    std::set<Window> expect;
    for (std::size_t lambda = 0; lambda <= 8; ++lambda) {
        for (std::size_t mu = 3; mu <= 6; ++mu) expect.insert({lambda, std::min(mu, 10 - lambda)});
    }
    CHECK(std::set<Window>(windows.begin(), windows.end()) == expect);
    for (const auto& w : windows) {
        CHECK(w.phi + w.lambda_len <= 10);
        CHECK(window_in_set(p, 10, w));
    }

    ConcatParams d;
    d.validate();
    for (std::size_t M = d.n * d.N - d.budget; M <= d.n * d.N + d.budget; ++M) {
        auto ws = build_windows(d, M);
        CHECK(static_cast<double>(ws.size()) <= window_count_bound(d));
        for (const auto& w : ws) CHECK(window_in_set(d, M, w));
    }
}

TEST_CASE("window alignment") {
    CHECK(align_window(4, 6, 2) == Window{4, 6});
    CHECK(align_window(1, 3, 2) == Window{2, 2});
    CHECK(align_window(1, 2, 2) == Window{0, 4});
    CHECK_THROWS_AS(align_window(1, 2, 0), Error);
    CounterRng rng(Seed{5});
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t t = 1 + rng.uniform(4);
        const std::size_t len = 1 + rng.uniform(12);
        const std::size_t sp = rng.uniform(30);
        Word r = sample_random_code(2, 48, 1, Seed{static_cast<std::uint64_t>(trial)})[0];
        Window a = align_window(sp, len, t);
        CHECK(a.phi % t == 0);
        CHECK(a.lambda_len % t == 0);
        CHECK(insdel_distance(r.subword(sp, len), r.subword(a.phi, a.lambda_len)) <= t);
    }
}

TEST_CASE("feasible block offsets") {
    ConcatParams p = small_params();
    CHECK(p.budget == 6);
    // window exactly on block 2 of an error-free word
    CHECK(feasible_jN(p, 48, 1, Window{8, 8}) == std::vector<std::size_t>{0});
    CHECK(oracle::feasible_jN_scan(p, 48, 1, Window{8, 8}) == std::vector<std::size_t>{0});
    // zero-error windows pin every block
    for (std::size_t j = 1; j <= 6; ++j) {
        const std::size_t i0 = (j - 1) % 3;
        auto got = feasible_jN(p, 48, i0, Window{(j - 1) * 8, 8});
        CHECK(std::find(got.begin(), got.end(), (j - 1 - i0) / 3) != got.end());
    }
    // window too long for the inner radius
    CHECK(feasible_jN(p, 48, 0, Window{0, 12}).empty());
    for (std::size_t M = 42; M <= 54; ++M) {
        for (const auto& w : build_windows(p, M)) {
            for (std::size_t i0 = 0; i0 < 3; ++i0) CHECK(feasible_jN(p, M, i0, w) == oracle::feasible_jN_scan(p, M, i0, w));
        }
    }
    CHECK(feasible_jN(p, 48, 1, 8, 8) == feasible_jN(p, 48, 1, Window{8, 8}));
}

TEST_CASE("good indices") {
    ConcatParams d;
    ConcatCode code(d);
    const auto& P = code.params();
    Word x = code.encode_message({4, 9});
    auto clean = adversarial_block_channel(x, P.n, std::vector<std::size_t>(P.N, 0), Seed{1});
    CHECK(good_index_count(code, x, clean.word, clean.segments) == P.N);
    std::vector<std::size_t> one(P.N, 0);
    one[3] = 2;  // at most tau_star n
    auto hit = adversarial_block_channel(x, P.n, one, Seed{2});
    CHECK(good_index_count(code, x, hit.word, hit.segments) == P.N);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        std::vector<std::size_t> even(P.N, 0);
        for (std::size_t k = 0; k < P.budget; ++k) ++even[k % P.N];
        auto out = adversarial_block_channel(x, P.n, even, Seed{seed});
        const auto per_bad = static_cast<std::size_t>(std::floor(P.tau_star_n));
        CHECK(good_index_count(code, x, out.word, out.segments) >= P.N - P.budget / (per_bad + 1));
    }
}

TEST_CASE("decoding") {
    ConcatParams d;
    ConcatCode code(d);
    const auto& P = code.params();
    Word x = code.encode_message({4, 9});
    auto rep = code.decode(x);
    CHECK(std::find(rep.candidates.begin(), rep.candidates.end(), x) != rep.candidates.end());
    CHECK(rep.messages.size() == rep.candidates.size());
    CHECK(rep.lists.total_size() <= position_list_bound(rep.windows, max_ball_load(code.inner(), P.tau_in_n), P));

    // damage on one block within tau_star n
    std::vector<std::size_t> budgets(P.N, 0);
    budgets[5] = 2;
    auto out = adversarial_block_channel(x, P.n, budgets, Seed{9});
    auto r2 = code.decode(out.word);
    CHECK(std::find(r2.candidates.begin(), r2.candidates.end(), x) != r2.candidates.end());

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        FieldVector msg{seed % P.p, (seed * 7 + 3) % P.p};
        Word c = code.encode_message(msg);
        auto split = random_budget_split(P.budget, P.N, P.n, Seed{seed});
        auto noisy = adversarial_block_channel(c, P.n, split, Seed{seed + 100});
        auto got = code.decode(noisy.word);
        CHECK(std::find(got.messages.begin(), got.messages.end(), msg) != got.messages.end());
    }

    Word too_short = x.subword(0, x.size() - P.budget - 1);
    CHECK_THROWS_AS(code.decode(too_short), Error);
}

TEST_CASE("rate bookkeeping") {
    ConcatParams d;
    ConcatCode code(d);
    auto r = code.rates();
    CHECK(r.R_out == Approx(0.25));
    CHECK(r.R_in == Approx(std::log2(22.0) / 12));
    CHECK(r.R_conc == Approx(2 * std::log2(11.0) / 96));
    CHECK(r.R_conc == Approx(r.R_out * r.R_in - r.epsilon));
    CHECK(r.epsilon > 0.0);
    CHECK(r.R_conc_via_m == Approx(r.R_conc).epsilon(1e-9));
    CHECK(position_list_bound(10, 2, d) == 20);
}
