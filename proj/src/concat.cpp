#include "insdel/concat.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace insdel {

namespace {

constexpr double tol = 1e-9;

std::size_t as_count(double x, const char* what) {
    const double r = std::round(x);
    if (std::abs(x - r) > 1e-6 || r < 0) {
        throw Error(ErrorKind::domain, std::string(what) + " must be a nonnegative integer, got " + std::to_string(x));
    }
    return static_cast<std::size_t>(r);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

void ConcatParams::validate() {
    if (N == 0 || n == 0) throw Error(ErrorKind::domain, "block counts and lengths must be positive");
    if (points.empty()) {
        for (std::size_t i = 0; i < N; ++i) points.push_back(i);
    }
    if (points.size() != N) throw Error(ErrorKind::domain, "need one evaluation point per outer position");
    period = as_count(eps_cont * static_cast<double>(N), "eps_cont * N");
    if (period == 0 || period > N) throw Error(ErrorKind::domain, "eps_cont * N must lie in [1, N]");
    if (!(tau_star > 0.0 && tau_star < tau_in)) throw Error(ErrorKind::domain, "need 0 < tau_star < tau_in");
    tau_hat_n = as_count((tau_in - tau_star) * static_cast<double>(n), "(tau_in - tau_star) * n");
    if (tau_hat_n == 0) throw Error(ErrorKind::domain, "(tau_in - tau_star) * n must be positive");
    tau_in_n = static_cast<std::size_t>(std::floor(tau_in * static_cast<double>(n) + tol));
    tau_star_n = tau_star * static_cast<double>(n);
    if (!(alpha_out > 0.0 && alpha_out <= 1.0)) throw Error(ErrorKind::domain, "alpha_out must lie in (0, 1]");
    tau = (1.0 - alpha_out) * tau_in - eps_conc;
    if (tau < -tol) throw Error(ErrorKind::domain, "decoding radius (1 - alpha_out) tau_in - eps_conc is negative");
    tau = std::max(tau, 0.0);
    budget = static_cast<std::size_t>(std::floor(tau * static_cast<double>(n * N) + tol));
}

ConcatParams concat_params_from_json(const std::string& text) {
    ConcatParams p;
    try {
        const auto j = nlohmann::json::parse(text);
        p.N = j.at("N").get<std::size_t>();
        p.n = j.at("n").get<std::size_t>();
        p.q = j.at("q").get<std::uint32_t>();
        p.p = j.at("p").get<std::uint64_t>();
        p.K = j.at("K").get<std::size_t>();
        if (j.contains("points")) p.points = j.at("points").get<std::vector<std::uint64_t>>();
        p.eps_cont = j.at("eps_cont").get<double>();
        p.tau_in = j.at("tau_in").get<double>();
        p.tau_star = j.at("tau_star").get<double>();
        p.alpha_out = j.at("alpha_out").get<double>();
        p.eps_conc = j.at("eps_conc").get<double>();
        p.inner_seed = j.value("inner_seed", std::uint64_t{1});
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::parse, std::string("bad parameter JSON: ") + e.what());
    }
    p.validate();
    return p;
}

std::string concat_params_to_json(const ConcatParams& p) {
    nlohmann::ordered_json j;
    j["N"] = p.N;
    j["n"] = p.n;
    j["q"] = p.q;
    j["p"] = p.p;
    j["K"] = p.K;
    j["points"] = p.points;
    j["eps_cont"] = p.eps_cont;
    j["tau_in"] = p.tau_in;
    j["tau_star"] = p.tau_star;
    j["alpha_out"] = p.alpha_out;
    j["eps_conc"] = p.eps_conc;
    j["inner_seed"] = p.inner_seed;
    return j.dump(2);
}

ConcatCode::ConcatCode(ConcatParams params)
    : params_(std::move(params)), outer_{}, inner_(Alphabet(params_.q), params_.n) {
    params_.validate();
    outer_ = make_rs_code(params_.p, params_.K, params_.points);
    // inner codeword for (index, symbol) is the ((index - 1) * p + symbol)-th draw
    inner_ = sample_random_code(params_.q, params_.n, params_.period * params_.p, Seed{params_.inner_seed});
}

std::size_t ConcatCode::index_of(std::size_t i) const {
    if (i == 0 || i > params_.N) throw Error(ErrorKind::domain, "outer position outside [1, N]");
    return (i - 1) % params_.period + 1;
}

const Word& ConcatCode::inner_encode(std::size_t index, std::uint64_t symbol) const {
    if (index == 0 || index > params_.period || symbol >= params_.p) {
        throw Error(ErrorKind::encoding, "(" + std::to_string(index) + ", " + std::to_string(symbol) +
                                             ") is outside the inner encoder domain");
    }
    return inner_[(index - 1) * params_.p + symbol];
}

Word ConcatCode::encode(const FieldVector& outer_codeword) const {
    if (outer_codeword.size() != params_.N) throw Error(ErrorKind::encoding, "outer codeword has the wrong length");
    Word out(Alphabet(params_.q));
    for (std::size_t i = 1; i <= params_.N; ++i) out = out.concat(inner_encode(index_of(i), outer_codeword[i - 1]));
    return out;
}

Word ConcatCode::encode_message(const FieldVector& message) const { return encode(rs_encode(outer_, message)); }

ConcatDecodeReport ConcatCode::decode(const Word& r) const {
    const ConcatParams& P = params_;
    const std::size_t total = P.n * P.N;
    const std::size_t M = r.size();
    if (M + P.budget < total || M > total + P.budget) {
        throw Error(ErrorKind::length, "received length " + std::to_string(M) + " outside [" +
                                           std::to_string(total > P.budget ? total - P.budget : 0) + ", " +
                                           std::to_string(total + P.budget) + "]");
    }
    if (r.alphabet() != inner_.alphabet()) throw Error(ErrorKind::alphabet_mismatch, "received word over a different alphabet");

    ConcatDecodeReport rep;
    rep.lists.lists.assign(P.N, {});
    const std::vector<Window> windows = build_windows(P, M);
    rep.windows = windows.size();
    for (const Window& w : windows) {
        const auto s = r.symbols().subspan(w.phi, w.lambda_len);
        for (std::size_t index0 = 0; index0 < P.period; ++index0) {
            const std::vector<std::size_t> offsets = feasible_jN(P, M, index0, w);
            if (offsets.empty()) continue;
            for (std::uint64_t sym = 0; sym < P.p; ++sym) {
                if (insdel_distance(inner_encode(index0 + 1, sym).symbols(), s) > P.tau_in_n) continue;
                ++rep.inner_hits;
                for (std::size_t jN : offsets) rep.lists.lists[index0 + jN * P.period].insert(sym);
            }
        }
    }

    ListRecovery rec = brute_force_list_recover(outer_, rep.lists, P.alpha_out);
    for (auto& word : rec.words) {
        rep.candidates.push_back(encode(word.codeword));
        rep.messages.push_back(std::move(word.message));
    }
    return rep;
}

RateBookkeeping ConcatCode::rates() const {
    const ConcatParams& P = params_;
    const double lq = std::log(static_cast<double>(P.q));
    const double n = static_cast<double>(P.n);
    const double N = static_cast<double>(P.N);
    RateBookkeeping b;
    b.R_out = static_cast<double>(P.K) / N;
    b.R_in = std::log(static_cast<double>(P.period * P.p)) / lq / n;
    b.R_conc = static_cast<double>(P.K) * std::log(static_cast<double>(P.p)) / lq / (n * N);
    b.epsilon = b.R_out * b.R_in - b.R_conc;
    if (P.N >= 2) {
        b.m = std::log(static_cast<double>(P.p)) / (2.0 * std::log(N));
        b.R_conc_via_m = b.R_out / (1.0 + 1.0 / (2.0 * b.m)) * (b.R_in - std::log(P.eps_cont) / lq / n);
    }
    return b;
}

std::vector<Window> build_windows(const ConcatParams& params, std::size_t M) {
    const double t = static_cast<double>(params.tau_hat_n);
    const double n = static_cast<double>(params.n);
    const double lead = std::max(0.0, n - params.tau_star_n);  // max(0, 1 - tau*) n
    const double lambda_hi = std::floor(1.0 + (static_cast<double>(M) - lead) / t + tol);
    const auto mu_lo = static_cast<std::size_t>(std::max(0.0, std::ceil(lead / t - tol)));
    const auto mu_hi = static_cast<std::size_t>(std::floor(1.0 + (n + params.tau_star_n) / t + tol));

    std::vector<Window> out;
    if (lambda_hi < 0.0) return out;
    for (std::size_t lambda = 0; lambda <= static_cast<std::size_t>(lambda_hi); ++lambda) {
        const std::size_t phi = lambda * params.tau_hat_n;
        if (phi > M) break;
        for (std::size_t mu = mu_lo; mu <= mu_hi; ++mu) {
            out.push_back({phi, std::min(mu * params.tau_hat_n, M - phi)});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double window_count_bound(const ConcatParams& params) {
    const double hat = params.tau_in - params.tau_star;
    const double N = static_cast<double>(params.N);
    const double starts = ((1.0 + params.tau) * N - std::max(0.0, 1.0 - params.tau_star)) / hat;
    const double lengths = std::min(2.0 * params.tau_star, 1.0 + params.tau_star) / hat;
    return (starts + 2.0) * (lengths + 2.0);
}

Window align_window(std::size_t sp, std::size_t len, std::size_t tau_hat_n) {
    if (tau_hat_n == 0) throw Error(ErrorKind::domain, "window grid step must be positive");
    const std::size_t sp_q = sp / tau_hat_n, sp_r = sp % tau_hat_n;
    const std::size_t len_q = len / tau_hat_n, len_r = len % tau_hat_n;
    if (sp_r == 0 && len_r == 0) return {sp, len};
    if (sp_r + len_r < tau_hat_n) return {sp_q * tau_hat_n, (len_q + 1) * tau_hat_n};  // grid window contains w
    return {(sp_q + 1) * tau_hat_n, len_q * tau_hat_n};                               // w contains grid window
}

std::vector<std::size_t> feasible_jN(const ConcatParams& params, std::size_t M, std::size_t index0, const Window& window) {
    std::vector<std::size_t> out;
    const auto sp = static_cast<std::int64_t>(window.phi);
    const auto len = static_cast<std::int64_t>(window.lambda_len);
    const auto n = static_cast<std::int64_t>(params.n);
    const auto NN = static_cast<std::int64_t>(params.N);
    const auto Mi = static_cast<std::int64_t>(M);
    const auto P = static_cast<std::int64_t>(params.period);
    const auto B = static_cast<std::int64_t>(params.budget);
    if (sp + len > Mi) return out;
    const std::int64_t e = len - n;
    if (std::abs(e) > static_cast<std::int64_t>(params.tau_in_n)) return out;
    // with D = sp - (j-1) n the prefix, block and suffix need |D| + |e| + |D + K| <= B edits
    const std::int64_t slack = B - std::abs(e);
    const std::int64_t K = NN * n - Mi + e;
    if (slack < std::abs(K)) return out;
    const std::int64_t d_lo = ceil_div(-slack - K, 2);
    const std::int64_t d_hi = floor_div(slack - K, 2);
    // (j - 1) n = sp - D, j - 1 = index0 + jN * P
    const std::int64_t j_lo = std::max<std::int64_t>(ceil_div(sp - d_hi, n), 0);
    const std::int64_t j_hi = std::min<std::int64_t>(floor_div(sp - d_lo, n), NN - 1);
    const auto i0 = static_cast<std::int64_t>(index0);
    const std::int64_t jn_lo = std::max<std::int64_t>(ceil_div(j_lo - i0, P), 0);
    const std::int64_t jn_hi = floor_div(j_hi - i0, P);
    for (std::int64_t jn = jn_lo; jn <= jn_hi; ++jn) out.push_back(static_cast<std::size_t>(jn));
    return out;
}

std::vector<std::size_t> feasible_jN(const ConcatParams& params, std::size_t M, std::size_t index0, std::size_t lambda,
                                     std::size_t mu) {
    const std::size_t phi = lambda * params.tau_hat_n;
    if (phi > M) return {};
    return feasible_jN(params, M, index0, Window{phi, std::min(mu * params.tau_hat_n, M - phi)});
}

std::size_t good_index_count(const ConcatCode& code, const Word& sent, const Word& received,
                             const std::vector<BlockSegment>& segments) {
    const ConcatParams& P = code.params();
    if (segments.size() != P.N || sent.size() != P.n * P.N) throw Error(ErrorKind::length, "segmentation does not match the code");
    const auto limit = static_cast<std::size_t>(std::floor(P.tau_star_n + tol));
    std::size_t good = 0;
    for (std::size_t i = 0; i < P.N; ++i) {
        const Word v = sent.subword(i * P.n, P.n);
        const Word w = received.subword(segments[i].start, segments[i].length);
        if (insdel_distance(v, w) <= limit) ++good;
    }
    return good;
}

std::size_t position_list_bound(std::size_t windows, std::size_t inner_list, const ConcatParams& params) {
    const auto per_window = static_cast<std::size_t>(std::floor(params.tau / params.eps_cont + tol)) + 1;
    return windows * inner_list * per_window;
}

}  // namespace insdel
