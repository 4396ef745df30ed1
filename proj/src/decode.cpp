#include "insdel/decode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "insdel/bounds.hpp"
#include "json.hpp"

namespace insdel {

DecodeResult brute_force_list_decode(const Code& c, const Word& r, std::size_t radius) {
    if (r.alphabet() != c.alphabet()) throw Error(ErrorKind::alphabet_mismatch, "received word over a different alphabet");
    DecodeResult out;
    out.radius = radius;
    for (const Word& x : c.words()) {
        if (insdel_distance(x, r) <= radius) out.candidates.push_back(x);
    }
    std::sort(out.candidates.begin(), out.candidates.end());
    return out;
}

namespace {

std::size_t count_within(const Code& c, std::span<const Symbol> r, std::size_t radius) {
    std::size_t hits = 0;
    for (const Word& x : c.words()) {
        if (insdel_distance(x.symbols(), r) <= radius) ++hits;
    }
    return hits;
}

}  // namespace

Certificate certify_list_decodable(const Code& c, std::size_t tau_n, std::size_t L, const CertifyOptions& options) {
    const std::size_t n = c.length();
    const std::size_t m_lo = n > tau_n ? n - tau_n : 0;
    const std::size_t m_hi = n + tau_n;
    Certificate cert;

    if (options.mode == CertifyMode::exhaustive) {
        std::uint64_t total = 0;
        for (std::size_t m = m_lo; m <= m_hi; ++m) {
            try {
                total += checked_power(c.q(), m, certify_center_limit);
            } catch (const Error&) {
                total = certify_center_limit + 1;
            }
            if (total > certify_center_limit) {
                throw Error(ErrorKind::capacity, "exhaustive certification needs more than " +
                                                     std::to_string(certify_center_limit) +
                                                     " centers; use sampled mode");
            }
        }
        for (std::size_t m = m_lo; m <= m_hi && cert.ok; ++m) {
            const std::uint64_t count = checked_power(c.q(), m, certify_center_limit);
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                Word r = word_from_index(c.alphabet(), m, idx);
                ++cert.centers_checked;
                std::size_t hits = count_within(c, r.symbols(), tau_n);
                if (hits > L) {
                    cert.ok = false;
                    cert.witness = std::move(r);
                    cert.witness_count = hits;
                    break;
                }
            }
        }
        return cert;
    }

    // lengths weighted by q^m, done in log space relative to the longest length
    std::vector<double> weights;
    const double lq = std::log(static_cast<double>(c.q()));
    for (std::size_t m = m_lo; m <= m_hi; ++m) {
        weights.push_back(std::exp(lq * (static_cast<double>(m) - static_cast<double>(m_hi))));
    }
    double total_weight = 0.0;
    for (double w : weights) total_weight += w;
    CounterRng rng(options.seed);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
        double u = rng.uniform01() * total_weight;
        std::size_t k = 0;
        while (k + 1 < weights.size() && u >= weights[k]) {
            u -= weights[k];
            ++k;
        }
        std::vector<Symbol> sym(m_lo + k);
        for (auto& x : sym) x = static_cast<Symbol>(rng.uniform(c.q()));
        ++cert.centers_checked;
        std::size_t hits = count_within(c, sym, tau_n);
        if (hits > L) {
            cert.ok = false;
            cert.witness = Word(c.alphabet(), std::move(sym));
            cert.witness_count = hits;
            break;
        }
    }
    return cert;
}

std::size_t max_ball_load(const Code& c, std::size_t radius) {
    const std::size_t n = c.length();
    const std::size_t m_lo = n > radius ? n - radius : 0;
    std::uint64_t total = 0;
    for (std::size_t m = m_lo; m <= n + radius; ++m) {
        total += checked_power(c.q(), m, certify_center_limit);
        if (total > certify_center_limit) throw Error(ErrorKind::capacity, "too many centers for an exhaustive ball scan");
    }
    std::size_t best = 0;
    for (std::size_t m = m_lo; m <= n + radius; ++m) {
        const std::uint64_t count = checked_power(c.q(), m, certify_center_limit);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            best = std::max(best, count_within(c, word_from_index(c.alphabet(), m, idx).symbols(), radius));
        }
    }
    return best;
}

std::size_t experiment_list_size(double tau, double epsilon) {
    if (!(epsilon > 0.0)) throw Error(ErrorKind::domain, "epsilon must be positive");
    const double v = std::ceil((1.0 + tau) / epsilon - 1e-12) - 1.0;
    return static_cast<std::size_t>(std::max(0.0, v));
}

ExperimentReport monte_carlo_rate_experiment(std::uint32_t q, std::size_t n, double gamma, double kappa,
                                             double epsilon, std::size_t trials, Seed seed,
                                             std::uint64_t samples_per_trial) {
    ExperimentReport rep;
    rep.q = q;
    rep.n = n;
    rep.gamma = gamma;
    rep.kappa = kappa;
    rep.epsilon = epsilon;
    rep.trials = trials;
    rep.seed = seed.value;
    rep.samples_per_trial = samples_per_trial;
    rep.rate = fixed_rate(q, gamma, kappa, epsilon).rate;
    const double tau = gamma + kappa;
    rep.tau_n = static_cast<std::size_t>(std::floor(tau * static_cast<double>(n) + 1e-9));
    rep.list_size = experiment_list_size(tau, epsilon);

    const std::uint64_t space = checked_power(q, n, std::numeric_limits<std::uint64_t>::max() / 2);
    const double target = std::floor(std::pow(static_cast<double>(q), rep.rate * static_cast<double>(n)) + 1e-9);
    rep.code_size = static_cast<std::uint64_t>(std::clamp(target, 1.0, static_cast<double>(space)));

    for (std::size_t t = 0; t < trials; ++t) {
        Code code = sample_random_code(q, n, rep.code_size, CounterRng::derive(seed, 2 * t));
        CertifyOptions opts{CertifyMode::sampled, samples_per_trial, CounterRng::derive(seed, 2 * t + 1)};
        Certificate cert = certify_list_decodable(code, rep.tau_n, rep.list_size, opts);
        if (!cert.ok) {
            ++rep.failures;
            rep.witnesses.push_back(cert.witness->str());
        }
    }
    return rep;
}

std::string experiment_report_json(const ExperimentReport& r) {
    nlohmann::ordered_json j;
    j["params"] = {{"q", r.q},
                   {"n", r.n},
                   {"gamma", r.gamma},
                   {"kappa", r.kappa},
                   {"epsilon", r.epsilon},
                   {"rate", r.rate},
                   {"code_size", r.code_size},
                   {"tau_n", r.tau_n},
                   {"list_size", r.list_size},
                   {"samples_per_trial", r.samples_per_trial}};
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["witnesses"] = r.witnesses;
    j["seed"] = r.seed;
    return j.dump(2);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a % p) * (b % p) % p;  // p < 2^32, checked when the code is built
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw Error(ErrorKind::domain, "division by zero in the field");
    return powmod(a, p - 2, p);
}

void check_message(const RSCode& code, const FieldVector& v, std::size_t len, const char* what) {
    if (v.size() != len) {
        throw Error(ErrorKind::length, std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                                           std::to_string(len));
    }
    for (auto x : v) {
        if (x >= code.p) throw Error(ErrorKind::invalid_symbol, "field element " + std::to_string(x) + " outside F_" + std::to_string(code.p));
    }
}

}  // namespace

RSCode make_rs_code(std::uint64_t p, std::size_t K, std::vector<std::uint64_t> points) {
    if (!is_prime(p)) throw Error(ErrorKind::unsupported_field, "Reed-Solomon field order must be prime");
    if (p >= (std::uint64_t{1} << 32)) throw Error(ErrorKind::unsupported_field, "Reed-Solomon field order must be below 2^32");
    if (K == 0 || K > points.size() || points.size() > p) throw Error(ErrorKind::domain, "need 0 < K <= N <= p");
    std::vector<std::uint64_t> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error(ErrorKind::domain, "evaluation points must be distinct");
    if (sorted.back() >= p) throw Error(ErrorKind::invalid_symbol, "evaluation point outside the field");
    return RSCode{p, K, std::move(points)};
}

FieldVector rs_encode(const RSCode& code, const FieldVector& message) {
    check_message(code, message, code.K, "message");
    FieldVector out(code.N());
    for (std::size_t i = 0; i < code.N(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = message.size(); k > 0; --k) acc = (mulmod(acc, code.points[i], code.p) + message[k - 1]) % code.p;
        out[i] = acc;
    }
    return out;
}

FieldVector rs_interpolate(const RSCode& code, const std::vector<std::size_t>& positions, const FieldVector& values) {
    const std::uint64_t p = code.p;
    if (positions.size() != code.K || values.size() != code.K) throw Error(ErrorKind::length, "interpolation needs exactly K points");
    FieldVector coeffs(code.K, 0);
    for (std::size_t a = 0; a < code.K; ++a) {
        // basis polynomial prod_{b != a} (x - x_b) / (x_a - x_b)
        FieldVector basis{1};
        std::uint64_t denom = 1;
        const std::uint64_t xa = code.points.at(positions[a]);
        for (std::size_t b = 0; b < code.K; ++b) {
            if (b == a) continue;
            const std::uint64_t xb = code.points.at(positions[b]);
            FieldVector next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] = (next[k + 1] + basis[k]) % p;
                next[k] = (next[k] + mulmod(basis[k], p - xb, p)) % p;
            }
            basis = std::move(next);
            denom = mulmod(denom, (xa + p - xb) % p, p);
        }
        const std::uint64_t scale = mulmod(values[a] % p, inv(denom, p), p);
        for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] = (coeffs[k] + mulmod(basis[k], scale, p)) % p;
    }
    return coeffs;
}

std::size_t PositionLists::total_size() const {
    std::size_t s = 0;
    for (const auto& l : lists) s += l.size();
    return s;
}

ListRecovery brute_force_list_recover(const RSCode& code, const PositionLists& lists, double alpha) {
    if (lists.lists.size() != code.N()) throw Error(ErrorKind::length, "need one list per codeword position");
    for (const auto& l : lists.lists) {
        for (auto x : l) {
            if (x >= code.p) throw Error(ErrorKind::invalid_symbol, "list symbol outside the field");
        }
    }
    const std::uint64_t count = checked_power(code.p, code.K, list_recovery_limit);
    const auto need = static_cast<std::size_t>(std::max(0.0, std::ceil(alpha * static_cast<double>(code.N()) - 1e-9)));

    ListRecovery out;
    out.total_list_size = lists.total_size();
    FieldVector message(code.K, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t k = code.K; k > 0; --k) {
            message[k - 1] = rest % code.p;
            rest /= code.p;
        }
        FieldVector cw = rs_encode(code, message);
        std::size_t agree = 0;
        for (std::size_t i = 0; i < cw.size(); ++i) agree += lists.lists[i].count(cw[i]);
        if (agree >= need) out.words.push_back({message, std::move(cw)});
    }
    return out;
}

}  // namespace insdel
