// Brute-force reference implementations used by the tests. They are written
// independently of the library code and favour obviousness over speed.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <set>
#include <vector>

#include "insdel/bounds.hpp"
#include "insdel/concat.hpp"
#include "insdel/core.hpp"
#include "insdel/decode.hpp"

namespace oracle {

using Raw = std::vector<insdel::Symbol>;

inline Raw raw(const insdel::Word& w) { return Raw(w.symbols().begin(), w.symbols().end()); }

inline bool is_subsequence(const Raw& x, const Raw& y) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < y.size() && i < x.size(); ++j) {
        if (x[i] == y[j]) ++i;
    }
    return i == x.size();
}

/// All distinct subsequences of s of length |s| - k, via subset masks.
inline std::set<Raw> subsequences(const Raw& s, std::size_t k) {
    std::set<Raw> out;
    const std::size_t n = s.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != n - k) continue;
        Raw sub;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) sub.push_back(s[i]);
        }
        out.insert(sub);
    }
    return out;
}

/// LCS by trying subsets of the shorter word from the largest down.
inline std::size_t lcs(const Raw& a, const Raw& b) {
    const Raw& s = a.size() <= b.size() ? a : b;
    const Raw& t = a.size() <= b.size() ? b : a;
    for (std::size_t k = 0; k <= s.size(); ++k) {
        for (const Raw& sub : subsequences(s, k)) {
            if (is_subsequence(sub, t)) return s.size() - k;
        }
    }
    return 0;
}

inline std::size_t distance(const Raw& a, const Raw& b) { return a.size() + b.size() - 2 * lcs(a, b); }

/// Every word of Sigma_q^n, lexicographic.
inline std::vector<Raw> all_words(std::uint32_t q, std::size_t n) {
    std::vector<Raw> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        Raw w(n);
        std::uint64_t rest = idx;
        for (std::size_t i = n; i > 0; --i) {
            w[i - 1] = static_cast<insdel::Symbol>(rest % q);
            rest /= q;
        }
        out.push_back(w);
    }
    return out;
}

/// Length |s| + k words over Sigma_q that contain s as a subsequence.
inline std::set<Raw> supersequences(const Raw& s, std::size_t k, std::uint32_t q) {
    std::set<Raw> out;
    for (const Raw& w : all_words(q, s.size() + k)) {
        if (is_subsequence(s, w)) out.insert(w);
    }
    return out;
}

inline int runs(const Raw& s) {
    int r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == 0 || s[i] != s[i - 1]) ++r;
    }
    return r;
}

/// Brute-force feasibility scan of the block-position requirements: block j (1-based)
/// can occupy the window when the inner part, the prefix and the suffix all fit in the
/// edit budget.
inline std::vector<std::size_t> feasible_jN_scan(const insdel::ConcatParams& p, std::size_t M, std::size_t index0,
                                                 const insdel::Window& w) {
    std::vector<std::size_t> out;
    const long n = static_cast<long>(p.n);
    const long N = static_cast<long>(p.N);
    const long B = static_cast<long>(p.budget);
    const long sp = static_cast<long>(w.phi);
    const long len = static_cast<long>(w.lambda_len);
    const long Ml = static_cast<long>(M);
    for (long j = 1; j <= N; ++j) {
        if ((j - 1) % static_cast<long>(p.period) != static_cast<long>(index0)) continue;
        const bool r1 = static_cast<long>(p.tau_in_n) >= std::labs(n - len);
        const bool r2 = B - std::labs(n - len) >= std::labs(sp - (j - 1) * n);
        const bool r3 = B - std::labs(n - len) - std::labs(sp - (j - 1) * n) >= std::labs((N - j) * n - (Ml - sp - len));
        const bool r4 = 0 <= sp && sp <= Ml - len;
        if (r1 && r2 && r3 && r4) out.push_back(static_cast<std::size_t>((j - 1 - static_cast<long>(index0)) / static_cast<long>(p.period)));
    }
    return out;
}

/// Outer codewords agreeing with the lists on at least ceil(alpha N) positions,
/// by evaluating every polynomial term by term.
inline std::vector<insdel::FieldVector> list_recover(const insdel::RSCode& code, const insdel::PositionLists& lists,
                                                     double alpha) {
    std::vector<insdel::FieldVector> out;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < code.K; ++k) total *= code.p;
    const double need = alpha * static_cast<double>(code.N());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        insdel::FieldVector msg(code.K);
        std::uint64_t rest = idx;
        for (std::size_t k = code.K; k > 0; --k) {
            msg[k - 1] = rest % code.p;
            rest /= code.p;
        }
        insdel::FieldVector cw;
        std::size_t agree = 0;
        for (std::size_t i = 0; i < code.N(); ++i) {
            std::uint64_t value = 0, power = 1;
            for (std::size_t k = 0; k < code.K; ++k) {
                value = (value + msg[k] * power) % code.p;
                power = power * code.points[i] % code.p;
            }
            cw.push_back(value);
            if (lists.lists[i].count(value)) ++agree;
        }
        if (static_cast<double>(agree) >= need - 1e-9) out.push_back(cw);
    }
    return out;
}

/// Minimum of f over `points` evenly spaced samples of [lo, hi].
inline double grid_min(const std::function<double(double)>& f, double lo, double hi, std::size_t points) {
    double best = f(lo);
    for (std::size_t k = 1; k < points; ++k) best = std::min(best, f(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points - 1)));
    return best;
}

/// Direct q >= 3 fixed-split rate, written out again from the formula.
inline double rate_q3(double q, double g, double k) {
    auto H = [q](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return (x * std::log(q - 1) - x * std::log(x) - (1 - x) * std::log(1 - x)) / std::log(q);
    };
    const double s = 2 * g - k + 1;
    return 1 - s * H(g / s) + g * std::log(q - 1) / std::log(q) - H(k);
}

inline double rate_binary(double g, double k) {
    auto H = [](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return -x * std::log2(x) - (1 - x) * std::log2(1 - x);
    };
    const double b = 1 + g - k;
    const double th = (1 + 2 * g - k) / 8 + std::sqrt(b * b + 10 * g * b + g * g) / 8;
    return 1 - (2 * th + g) * H(g / (2 * th + g)) - H(k) + b - b * H(std::min(1.0, 2 * th / b));
}

/// Worst split of tau on a dense grid.
inline double segment_min(std::uint32_t q, double tau, std::size_t points = 10000) {
    if (q == 2) {
        return grid_min([&](double g) { return rate_binary(g, tau - g); }, std::max(0.0, tau - 0.5), std::min(tau, 1.0), points);
    }
    const double qd = q;
    return grid_min([&](double g) { return rate_q3(qd, g, tau - g); }, std::max(0.0, tau - (qd - 1) / qd),
                    std::min(tau, qd - 1), points);
}

/// Zyablov radius on a dense (R_out, tau) grid: for each R_out the largest grid tau
/// whose worst-split rate still reaches R / R_out.
inline double zyablov_grid(std::uint32_t q, double R, std::size_t outer = 1000, std::size_t inner = 1000) {
    std::vector<double> taus(inner), f(inner);
    for (std::size_t k = 0; k < inner; ++k) {
        taus[k] = static_cast<double>(k) / static_cast<double>(inner - 1);
        f[k] = segment_min(q, taus[k], 1000);
    }
    double best = 0.0;
    for (std::size_t a = 1; a <= outer; ++a) {
        const double r_out = R + (1 - R) * static_cast<double>(a) / static_cast<double>(outer + 1);
        const double r_in = R / r_out;
        double t = 0.0;
        for (std::size_t k = 0; k < inner && f[k] >= r_in; ++k) t = taus[k];
        best = std::max(best, (1 - r_out) * t);
    }
    return best;
}

}  // namespace oracle
