#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "insdel/channel.hpp"
#include "insdel/codes.hpp"
#include "insdel/core.hpp"
#include "insdel/decode.hpp"

namespace insdel {

/// Parameters of the indexed concatenation of a Reed-Solomon outer code with a
/// random inner code.
struct ConcatParams {
    std::size_t N = 8;   // outer length
    std::size_t n = 12;  // inner length
    std::uint32_t q = 2;
    std::uint64_t p = 11;  // outer field order
    std::size_t K = 2;     // outer dimension
    std::vector<std::uint64_t> points;  // outer evaluation points; empty means 0..N-1
    double eps_cont = 0.25;  // eps_cont * N blocks share no index
    double tau_in = 0.25;    // inner decoding radius fraction
    double tau_star = 1.0 / 6.0;
    double alpha_out = 0.5;  // outer agreement threshold
    double eps_conc = 0.05;
    std::uint64_t inner_seed = 1;

    // Derived by validate().
    std::size_t period = 0;      // eps_cont * N
    std::size_t tau_in_n = 0;    // floor(tau_in * n)
    std::size_t tau_hat_n = 0;   // (tau_in - tau_star) * n
    double tau_star_n = 0.0;
    double tau = 0.0;            // (1 - alpha_out) tau_in - eps_conc
    std::size_t budget = 0;      // floor(tau * n * N)

    /// Checks the invariants and fills in the derived fields.
    void validate();
};

ConcatParams concat_params_from_json(const std::string& text);
std::string concat_params_to_json(const ConcatParams& params);

struct Window {
    std::size_t phi = 0;         // start offset
    std::size_t lambda_len = 0;  // length, possibly truncated at the right edge

    friend auto operator<=>(const Window&, const Window&) = default;
};

struct RateBookkeeping {
    double R_out = 0.0;
    double R_in = 0.0;
    double R_conc = 0.0;
    double epsilon = 0.0;     // R_out R_in - R_conc
    double m = 0.0;           // outer field exponent with p = N^(2m)
    double R_conc_via_m = 0.0;  // R_out / (1 + 1/(2m)) * (R_in - log_q(eps_cont) / n)
};

struct ConcatDecodeReport {
    std::vector<Word> candidates;        // concatenated codewords, ordered by message
    std::vector<FieldVector> messages;
    PositionLists lists;
    std::size_t windows = 0;
    std::size_t inner_hits = 0;          // (window, inner codeword) pairs within radius
};

class ConcatCode {
public:
    explicit ConcatCode(ConcatParams params);

    const ConcatParams& params() const noexcept { return params_; }
    const RSCode& outer() const noexcept { return outer_; }
    const Code& inner() const noexcept { return inner_; }

    /// Block index in [1, period] carried by outer position i in [1, N].
    std::size_t index_of(std::size_t i) const;
    /// Inner encoder on [period] x F_p.
    const Word& inner_encode(std::size_t index, std::uint64_t symbol) const;

    Word encode(const FieldVector& outer_codeword) const;
    Word encode_message(const FieldVector& message) const;

    ConcatDecodeReport decode(const Word& r) const;

    RateBookkeeping rates() const;

private:
    ConcatParams params_;
    RSCode outer_;
    Code inner_;
};

/// Grid windows (Phi, Lambda) = (lambda, mu) * tau_hat_n with the index ranges of the
/// window set; windows running past M are truncated, windows starting past M dropped.
std::vector<Window> build_windows(const ConcatParams& params, std::size_t M);

/// The window-set size estimate ((1+tau)N - max(0, 1-tau*)) / tau_hat * min(2 tau*, 1 + tau*) / tau_hat
/// with each factor widened by 2 for the integer grid.
double window_count_bound(const ConcatParams& params);

Window align_window(std::size_t sp, std::size_t len, std::size_t tau_hat_n);

/// Offsets j_N >= 0 for which block j = 1 + index0 + j_N * period (1-based, within [1, N])
/// can sit at `window` in a received word of length M.
std::vector<std::size_t> feasible_jN(const ConcatParams& params, std::size_t M, std::size_t index0, const Window& window);
std::vector<std::size_t> feasible_jN(const ConcatParams& params, std::size_t M, std::size_t index0, std::size_t lambda,
                                     std::size_t mu);

/// Blocks whose received segment is within tau_star n of the sent block.
std::size_t good_index_count(const ConcatCode& code, const Word& sent, const Word& received,
                             const std::vector<BlockSegment>& segments);

/// |S| * L_in * (floor(tau / eps_cont) + 1).
std::size_t position_list_bound(std::size_t windows, std::size_t inner_list, const ConcatParams& params);

}  // namespace insdel
