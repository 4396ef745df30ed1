#include "insdel/spheres.hpp"

#include <algorithm>
#include <cmath>

#include "insdel/bounds.hpp"

namespace insdel {

namespace {

using Raw = std::vector<Symbol>;
using RawSet = std::set<Raw>;

RawSet grow_by_insertions(RawSet level, std::size_t count, Symbol q) {
    for (std::size_t step = 0; step < count; ++step) {
        RawSet next;
        for (const Raw& w : level) {
            Raw x(w.size() + 1);
            for (std::size_t pos = 0; pos <= w.size(); ++pos) {
                std::copy(w.begin(), w.begin() + pos, x.begin());
                std::copy(w.begin() + pos, w.end(), x.begin() + pos + 1);
                for (Symbol s = 0; s < q; ++s) {
                    x[pos] = s;
                    next.insert(x);
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

RawSet shrink_by_deletions(RawSet level, std::size_t count) {
    for (std::size_t step = 0; step < count; ++step) {
        RawSet next;
        for (const Raw& w : level) {
            Raw x(w.size() - 1);
            for (std::size_t pos = 0; pos < w.size(); ++pos) {
                // deleting inside a run gives the same word; only the first position of each run matters
                if (pos > 0 && w[pos] == w[pos - 1]) continue;
                std::copy(w.begin(), w.begin() + pos, x.begin());
                std::copy(w.begin() + pos + 1, w.end(), x.begin() + pos);
                next.insert(x);
            }
        }
        level = std::move(next);
    }
    return level;
}

WordSet to_words(const RawSet& raw, Alphabet alphabet) {
    WordSet out;
    for (const Raw& r : raw) out.emplace_hint(out.end(), alphabet, r);
    return out;
}

RawSet singleton(const Word& s) {
    return RawSet{Raw(s.symbols().begin(), s.symbols().end())};
}

}  // namespace

BigInt insertion_sphere_size(std::uint64_t n1, std::uint64_t n2, std::uint64_t q) {
    if (q < 2) throw Error(ErrorKind::domain, "alphabet size must be at least 2");
    BigInt total = 0;
    BigInt qpow = 1;
    for (std::uint64_t i = 0; i <= n2; ++i) {
        total += binomial(static_cast<std::int64_t>(n1 + n2), static_cast<std::int64_t>(i)) * qpow;
        qpow *= q - 1;
    }
    return total;
}

WordSet enumerate_insertion_sphere(const Word& s, std::size_t n2) {
    return to_words(grow_by_insertions(singleton(s), n2, s.q()), s.alphabet());
}

WordSet enumerate_deletion_sphere(const Word& s, std::size_t n2) {
    if (n2 > s.size()) {
        throw Error(ErrorKind::invalid_radius,
                    "cannot delete " + std::to_string(n2) + " symbols from a word of length " + std::to_string(s.size()));
    }
    return to_words(shrink_by_deletions(singleton(s), n2), s.alphabet());
}

SphereBounds deletion_sphere_bounds(std::int64_t phi, std::int64_t n2) {
    if (phi < 1 || n2 < 0) throw Error(ErrorKind::domain, "deletion sphere bounds need phi >= 1 and n2 >= 0");
    SphereBounds b;
    for (std::int64_t i = 0; i <= n2; ++i) b.lower += binomial(phi - n2, i);
    b.upper = binomial(phi + n2 - 1, n2);
    return b;
}

WordSet enumerate_ball_fixed_length(const BallQuery& query, BallMode mode) {
    const Word& center = query.center;
    const std::size_t m = center.size();
    const std::size_t n = query.target_len;
    const std::size_t radius = query.radius;
    const std::size_t gap = m > n ? m - n : n - m;
    if (radius < gap) return {};

    if (mode == BallMode::oracle) {
        const std::uint64_t total = checked_power(center.q(), n, ball_scan_limit);
        (void)total;
        WordSet out;
        for_each_word(center.alphabet(), n, [&](const Word& x) {
            if (insdel_distance(center, x) <= radius) out.insert(out.end(), x);
        });
        return out;
    }

    // a deletions then b = n - m + a insertions, with a + b <= radius
    const std::size_t a_lo = m > n ? m - n : 0;
    const std::size_t a_hi = std::min(m, (radius + m - n) / 2);
    RawSet ball;
    RawSet deleted = singleton(center);
    deleted = shrink_by_deletions(std::move(deleted), a_lo);
    for (std::size_t a = a_lo; a <= a_hi; ++a) {
        if (a > a_lo) deleted = shrink_by_deletions(std::move(deleted), 1);
        RawSet grown = grow_by_insertions(deleted, n + a - m, center.q());
        ball.merge(grown);
    }
    return to_words(ball, center.alphabet());
}

BigInt repetition_ball_exact(std::int64_t m, std::int64_t n, std::int64_t tau_n, std::uint64_t q) {
    if (m < 0 || n < 0 || tau_n < 0) throw Error(ErrorKind::domain, "lengths and radius must be nonnegative");
    if (tau_n < std::abs(n - m)) return 0;
    // count words by the number of symbols differing from the repeated one
    const std::int64_t top = std::min(n, (tau_n + n - m) / 2);
    BigInt total = 0;
    BigInt qpow = 1;
    for (std::int64_t w = 0; w <= top; ++w) {
        total += binomial(n, w) * qpow;
        qpow *= q - 1;
    }
    return total;
}

double ball_size_upper_bound(const RunProfile& profile, std::int64_t m, std::int64_t n, std::int64_t tau_n,
                             std::uint64_t q, double slack) {
    if (q < 2) throw Error(ErrorKind::domain, "alphabet size must be at least 2");
    if (n < 0 || m < 0 || tau_n < std::abs(n - m)) {
        throw Error(ErrorKind::domain, "center length must lie within the radius of the target length");
    }
    const double ins = static_cast<double>(tau_n - n + m) / 2.0;  // gamma* n
    const double kappa = n > 0 ? static_cast<double>(tau_n + n - m) / (2.0 * static_cast<double>(n)) : 0.0;
    const double qd = static_cast<double>(q);
    if (kappa >= (qd - 1.0) / qd) {
        throw Error(ErrorKind::out_of_regime, "deletion fraction " + std::to_string(kappa) + " reaches (q-1)/q");
    }
    double exponent = 0.0;
    const double w = profile.w;
    const double t = profile.t;
    const double span = (q == 2) ? 2.0 * (w - t) + 2.0 + ins : 2.0 * w - t + ins;
    // log_q C(span, ins) <= span H_q(ins/span) - ins log_q(q-1). The log_q(q-1) terms
    // cancel, which keeps the estimate valid at ins = span, where the H_q(1) = 0
    // convention would otherwise drive it negative (all-zero centers).
    if (span > 0.0 && ins > 0.0 && ins < span) {
        const double x = ins / span;
        exponent -= span * (x * log_q(qd, x) + (1.0 - x) * log_q(qd, 1.0 - x));
    }
    exponent += static_cast<double>(n) * entropy_q(q, kappa);
    if (n > 1) exponent += slack * log_q(qd, static_cast<double>(n));
    return exponent;
}

}  // namespace insdel
