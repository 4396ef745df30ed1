#pragma once

#include <cstdint>
#include <set>
#include <utility>

#include "insdel/bigint.hpp"
#include "insdel/core.hpp"

namespace insdel {

using WordSet = std::set<Word>;

struct BallQuery {
    Word center;
    std::size_t radius = 0;
    std::size_t target_len = 0;
};

enum class BallMode { oracle, fast };

/// Largest Sigma_q^n the oracle ball scan will walk.
inline constexpr std::uint64_t ball_scan_limit = 20'000'000;

/// Sum_{i <= n2} C(n1 + n2, i) (q - 1)^i.
BigInt insertion_sphere_size(std::uint64_t n1, std::uint64_t n2, std::uint64_t q);

WordSet enumerate_insertion_sphere(const Word& s, std::size_t n2);
WordSet enumerate_deletion_sphere(const Word& s, std::size_t n2);

struct SphereBounds {
    BigInt lower;
    BigInt upper;
};

/// Bounds on the deletion sphere of any center with `phi` runs; phi >= 1.
SphereBounds deletion_sphere_bounds(std::int64_t phi, std::int64_t n2);

/// Length-n words within insdel distance `radius` of the center.
WordSet enumerate_ball_fixed_length(const BallQuery& query, BallMode mode = BallMode::fast);

/// Exact ball count around a repetition word of length m, restricted to length n.
BigInt repetition_ball_exact(std::int64_t m, std::int64_t n, std::int64_t tau_n, std::uint64_t q);

/// log_q of the general ball upper bound for a center with the given (w, t),
/// plus slack * log_q(n). Radius is tau_n symbols.
double ball_size_upper_bound(const RunProfile& profile, std::int64_t m, std::int64_t n, std::int64_t tau_n,
                             std::uint64_t q, double slack = 2.0);

}  // namespace insdel
