#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "insdel/codes.hpp"
#include "insdel/core.hpp"
#include "insdel/rng.hpp"

namespace insdel {

struct DecodeResult {
    std::vector<Word> candidates;  // lexicographic order
    std::size_t radius = 0;
};

/// Codewords within insdel distance `radius` of r.
DecodeResult brute_force_list_decode(const Code& c, const Word& r, std::size_t radius);

enum class CertifyMode { exhaustive, sampled };

struct CertifyOptions {
    CertifyMode mode = CertifyMode::exhaustive;
    std::uint64_t samples = 0;  // sampled mode only
    Seed seed{};
};

struct Certificate {
    bool ok = true;
    std::optional<Word> witness;   // a center whose ball holds more than L codewords
    std::size_t witness_count = 0;
    std::uint64_t centers_checked = 0;
};

/// Largest number of centers the exhaustive certification will scan.
inline constexpr std::uint64_t certify_center_limit = 10'000'000;

/// Checks |B(r, tau_n) ∩ C| <= L for centers of every length in
/// [max(0, n - tau_n), n + tau_n].
Certificate certify_list_decodable(const Code& c, std::size_t tau_n, std::size_t L,
                                   const CertifyOptions& options = {});

/// Largest |B(r, radius) ∩ C| over all centers of length [n - radius, n + radius].
/// Exhaustive, with the same center limit.
std::size_t max_ball_load(const Code& c, std::size_t radius);

struct ExperimentReport {
    std::uint32_t q = 2;
    std::size_t n = 0;
    double gamma = 0.0;
    double kappa = 0.0;
    double epsilon = 0.0;
    double rate = 0.0;          // formula rate used to size the codes
    std::uint64_t code_size = 0;
    std::size_t tau_n = 0;
    std::size_t list_size = 0;  // L = ceil((1 + tau) / epsilon) - 1
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::uint64_t samples_per_trial = 0;
    std::vector<std::string> witnesses;
    std::uint64_t seed = 0;

    double failure_fraction() const { return trials ? static_cast<double>(failures) / static_cast<double>(trials) : 0.0; }
};

std::size_t experiment_list_size(double tau, double epsilon);

/// Samples `trials` random codes at the formula rate and certifies each in sampled mode.
ExperimentReport monte_carlo_rate_experiment(std::uint32_t q, std::size_t n, double gamma, double kappa,
                                             double epsilon, std::size_t trials, Seed seed,
                                             std::uint64_t samples_per_trial = 2000);

std::string experiment_report_json(const ExperimentReport& report);

/// Reed-Solomon code over the prime field F_p: message polynomials of degree < K
/// evaluated at N distinct points.
struct RSCode {
    std::uint64_t p = 2;
    std::size_t K = 1;
    std::vector<std::uint64_t> points;

    std::size_t N() const noexcept { return points.size(); }
};

RSCode make_rs_code(std::uint64_t p, std::size_t K, std::vector<std::uint64_t> points);

using FieldVector = std::vector<std::uint64_t>;

FieldVector rs_encode(const RSCode& code, const FieldVector& message);

/// Coefficients of the unique polynomial of degree < K through (points[pos[i]], values[i]);
/// needs exactly K positions.
FieldVector rs_interpolate(const RSCode& code, const std::vector<std::size_t>& positions, const FieldVector& values);

struct PositionLists {
    std::vector<std::set<std::uint64_t>> lists;

    std::size_t total_size() const;
};

struct RecoveredWord {
    FieldVector message;
    FieldVector codeword;
};

struct ListRecovery {
    std::vector<RecoveredWord> words;  // ordered by message
    std::size_t total_list_size = 0;   // sum |A_i|
};

inline constexpr std::uint64_t list_recovery_limit = 1'000'000;

/// Every codeword with c_i in A_i on at least ceil(alpha N) positions.
ListRecovery brute_force_list_recover(const RSCode& code, const PositionLists& lists, double alpha);

}  // namespace insdel
