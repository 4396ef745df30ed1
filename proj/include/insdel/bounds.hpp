#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "insdel/bigint.hpp"

namespace insdel {

enum class ListSizeClass { constant, exponential, polynomial };

const char* to_string(ListSizeClass c) noexcept;

/// A point on a rate curve. `rate` is `rate_raw` clamped to [0, 1].
struct RatePoint {
    double x = 0.0;
    double rate_raw = 0.0;
    double rate = 0.0;
    ListSizeClass list_size_class = ListSizeClass::constant;
};

/// log_q(x) for real x > 0.
double log_q(double q, double x);

/// q-ary entropy with H_q(0) = H_q(1) = 0.
double entropy_q(std::uint64_t q, double x);

/// floor(q^(n - d/2 + 1)) clamped to q^n. Odd d uses the exact real power.
BigInt singleton_max_size(std::uint64_t n, std::uint64_t d, std::uint64_t q);

/// Unclamped GV-type expression; delta in [0, 1).
double gv_lower_rate_raw(std::uint64_t q, double delta);
/// Clamped GV-type rate, zero beyond delta = (q-1)/q.
double gv_lower_rate(std::uint64_t q, double delta);

/// Random-code rate for gamma*n insertions and kappa*n deletions, q >= 3.
RatePoint random_rate_q3(std::uint64_t q, double gamma, double kappa, double epsilon);

double theta_binary(double gamma, double kappa);
RatePoint random_rate_binary(double gamma, double kappa, double epsilon);

/// Worst split of a total error fraction tau into insertions and deletions.
struct SegmentOptimum {
    RatePoint point;  // x = tau
    double gamma = 0.0;
    double kappa = 0.0;
};

SegmentOptimum worst_split_q3(std::uint64_t q, double tau, double epsilon);
SegmentOptimum worst_split_binary(double tau, double epsilon);

RatePoint random_rate_tau_q3(std::uint64_t q, double tau, double epsilon);
RatePoint random_rate_tau_binary(double tau, double epsilon);

RatePoint rate_insertion_only(std::uint64_t q, double gamma, double epsilon);
RatePoint rate_deletion_only(std::uint64_t q, double kappa, double epsilon);

/// Same rate as the random-code formulas; linear codes carry exponential list size.
RatePoint linear_rate_variants(std::uint64_t q, double gamma, double kappa, double epsilon);

/// 1 - kappa - epsilon, meaningful for q = 2^Omega(1/epsilon).
RatePoint large_q_rate(double kappa, double epsilon);

/// Fixed-split rate for any q (binary formula when q = 2).
RatePoint fixed_rate(std::uint64_t q, double gamma, double kappa, double epsilon);

struct ZyablovQuery {
    std::uint64_t q = 2;
    double R = 0.5;
    double epsilon = 0.0;
    std::size_t grid = 2048;
};

struct ZyablovResult {
    double tau_raw = 0.0;  // max (1 - R_out) f^-1(R_in) - epsilon
    double tau = 0.0;      // clamped at 0
    double R_out = 0.0;
    double R_in = 0.0;
    double worst_gamma_share = 0.0;  // gamma / (gamma + kappa) of the worst inner split
};

struct ZyablovSplit {
    double gamma = 0.0;
    double kappa = 0.0;
    double R_out = 0.0;
    double R_in = 0.0;
    double gamma_share = 0.0;
};

/// Inverts the inner tau-rate curve f (epsilon = 0) and optimizes the outer/inner
/// rate split. Tabulates f once, so reuse an instance across many rates.
class ZyablovSolver {
public:
    explicit ZyablovSolver(std::uint64_t q, std::size_t grid = 2048);
    ~ZyablovSolver();
    ZyablovSolver(ZyablovSolver&&) noexcept;
    ZyablovSolver& operator=(ZyablovSolver&&) noexcept;

    std::uint64_t q() const noexcept;

    /// f(tau) with epsilon = 0, unclamped.
    double inner_rate(double tau) const;
    /// Smallest tau on the decreasing prefix of f with f(tau) = rate, or nullopt
    /// when rate is outside the range covered there.
    std::optional<double> inverse(double rate) const;
    double max_tau() const noexcept;

    ZyablovResult solve(double R, double epsilon) const;

    /// Fixed-split variant: inner codes take gamma_share of their error fraction
    /// as insertions. Defaults to the worst split at the tau optimum.
    ZyablovSplit solve_split(double R, double epsilon, std::optional<double> gamma_share = std::nullopt) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

ZyablovResult zyablov_tau(const ZyablovQuery& query);
ZyablovSplit zyablov_gamma_kappa(std::uint64_t q, double R, double epsilon,
                                 std::optional<double> gamma_share = std::nullopt);

}  // namespace insdel
