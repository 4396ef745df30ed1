#include "insdel/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "insdel/error.hpp"
#include "optimize.hpp"

namespace insdel {

namespace {

constexpr std::size_t segment_grid = 2048;

void require(bool ok, ErrorKind kind, const std::string& msg) {
    if (!ok) throw Error(kind, msg);
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

RatePoint make_point(double x, double raw, ListSizeClass c) { return RatePoint{x, raw, clamp01(raw), c}; }

// Unchecked formulas, usable on the closure of their domains.
double q3_raw(double q, double gamma, double kappa) {
    const auto qq = static_cast<std::uint64_t>(q);
    const double span = 2.0 * gamma - kappa + 1.0;
    return 1.0 - span * entropy_q(qq, gamma / span) + gamma * log_q(q, q - 1.0) - entropy_q(qq, kappa);
}

double binary_raw(double gamma, double kappa) {
    const double theta = theta_binary(gamma, kappa);
    const double a = 2.0 * theta + gamma;
    const double b = 1.0 + gamma - kappa;
    const double arg = std::min(1.0, 2.0 * theta / b);
    return 1.0 - a * entropy_q(2, gamma / a) - entropy_q(2, kappa) + b - b * entropy_q(2, arg);
}

void check_q3_domain(std::uint64_t q, double gamma, double kappa) {
    const double qd = static_cast<double>(q);
    require(q >= 3, ErrorKind::domain, "this formula needs q >= 3; use the binary variant for q = 2");
    require(gamma >= 0.0 && gamma < qd - 1.0, ErrorKind::domain, "insertion fraction outside [0, q-1)");
    require(kappa >= 0.0 && kappa < (qd - 1.0) / qd, ErrorKind::domain, "deletion fraction outside [0, (q-1)/q)");
}

void check_binary_domain(double gamma, double kappa) {
    require(gamma >= 0.0 && gamma < 1.0, ErrorKind::domain, "insertion fraction outside [0, 1)");
    require(kappa >= 0.0 && kappa < 0.5, ErrorKind::domain, "deletion fraction outside [0, 1/2)");
    const double ratio = 2.0 * theta_binary(gamma, kappa) / (1.0 + gamma - kappa);
    require(ratio <= 1.0 + 1e-12, ErrorKind::out_of_regime, "entropy argument 2*theta/(1+gamma-kappa) exceeds 1");
}

// Largest tau for which the segment gamma + kappa = tau meets the domain.
double segment_limit(std::uint64_t q) {
    if (q == 2) return 1.0;  // beyond this the binary entropy argument leaves [0, 1]
    const double qd = static_cast<double>(q);
    return (qd - 1.0) + (qd - 1.0) / qd;
}

SegmentOptimum minimize_segment(std::uint64_t q, double tau, double epsilon, const std::function<double(double, double)>& raw) {
    const double qd = static_cast<double>(q);
    const double lo = std::max(0.0, tau - (qd - 1.0) / qd);
    const double hi = std::min(tau, q == 2 ? 1.0 : qd - 1.0);
    auto e = detail::grid_minimize([&](double g) { return raw(g, tau - g); }, lo, hi, segment_grid);
    SegmentOptimum out;
    out.gamma = e.x;
    out.kappa = tau - e.x;
    out.point = make_point(tau, e.value - epsilon, ListSizeClass::constant);
    return out;
}

// Tabulated decreasing function on [0, hi] with an exact inverse by bisection.
class MonotoneInverse {
public:
    MonotoneInverse(std::function<double(double)> f, double hi, std::size_t grid) : f_(std::move(f)) {
        grid = std::max<std::size_t>(grid, 2);
        xs_.reserve(grid);
        ys_.reserve(grid);
        for (std::size_t k = 0; k < grid; ++k) {
            double x = k + 1 == grid ? hi : hi * static_cast<double>(k) / static_cast<double>(grid - 1);
            double y = f_(x);
            // keep only the strictly decreasing prefix
            if (!ys_.empty() && !(y < ys_.back())) break;
            xs_.push_back(x);
            ys_.push_back(y);
        }
    }

    double eval(double x) const { return f_(x); }
    double top() const { return ys_.front(); }
    double bottom() const { return ys_.back(); }
    double last_x() const { return xs_.back(); }

    std::optional<std::size_t> bracket(double y) const {
        if (xs_.size() < 2 || y > ys_.front() || y < ys_.back()) return std::nullopt;
        auto it = std::lower_bound(ys_.begin(), ys_.end(), y, std::greater<double>());
        std::size_t k = static_cast<std::size_t>(it - ys_.begin());
        return std::max<std::size_t>(k, 1);
    }

    std::optional<double> interpolated(double y) const {
        auto k = bracket(y);
        if (!k) return std::nullopt;
        const double x0 = xs_[*k - 1], x1 = xs_[*k], y0 = ys_[*k - 1], y1 = ys_[*k];
        return x0 + (x1 - x0) * (y0 - y) / (y0 - y1);
    }

    std::optional<double> exact(double y) const {
        auto k = bracket(y);
        if (!k) return std::nullopt;
        double a = xs_[*k - 1], b = xs_[*k];
        for (int i = 0; i < 60 && b - a > 1e-13; ++i) {
            double mid = 0.5 * (a + b);
            if (f_(mid) > y) a = mid; else b = mid;
        }
        return 0.5 * (a + b);
    }

private:
    std::function<double(double)> f_;
    std::vector<double> xs_;
    std::vector<double> ys_;
};

// Maximizes (1 - R_out) * t(R / R_out) over R_out in (R, 1).
struct OuterOptimum {
    double value = 0.0;
    double R_out = 0.0;
};

OuterOptimum optimize_outer(double R, const MonotoneInverse& inv, std::size_t grid) {
    const double lowest = -std::numeric_limits<double>::infinity();
    auto coarse = [&](double r_out) {
        auto t = inv.interpolated(R / r_out);
        return t ? (1.0 - r_out) * *t : lowest;
    };
    auto fine = [&](double r_out) {
        auto t = inv.exact(R / r_out);
        return t ? (1.0 - r_out) * *t : lowest;
    };
    const double step = (1.0 - R) / static_cast<double>(grid + 1);
    std::size_t best_k = 0;
    double best = lowest;
    for (std::size_t k = 1; k <= grid; ++k) {
        double v = coarse(R + step * static_cast<double>(k));
        if (v > best) {
            best = v;
            best_k = k;
        }
    }
    require(best_k != 0, ErrorKind::infeasible, "no outer rate admits an inner rate in the range of the inner curve");
    // refine on the interpolated curve, then evaluate the chosen point exactly
    double a = R + step * static_cast<double>(best_k - 1);
    double b = R + step * static_cast<double>(best_k + 1);
    auto e = detail::golden_minimize([&](double r) { return -coarse(r); }, a, b, 60);
    OuterOptimum out{fine(e.x), e.x};
    const double at_grid = fine(R + step * static_cast<double>(best_k));
    if (at_grid > out.value) out = {at_grid, R + step * static_cast<double>(best_k)};
    return out;
}

}  // namespace

const char* to_string(ListSizeClass c) noexcept {
    switch (c) {
        case ListSizeClass::constant: return "constant";
        case ListSizeClass::exponential: return "exponential";
        case ListSizeClass::polynomial: return "polynomial";
    }
    return "constant";
}

double log_q(double q, double x) { return std::log(x) / std::log(q); }

double entropy_q(std::uint64_t q, double x) {
    require(q >= 2, ErrorKind::domain, "alphabet size must be at least 2");
    if (x < 0.0 && x > -1e-12) x = 0.0;
    if (x > 1.0 && x < 1.0 + 1e-12) x = 1.0;
    require(x >= 0.0 && x <= 1.0, ErrorKind::domain, "entropy argument outside [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    const double qd = static_cast<double>(q);
    return x * log_q(qd, qd - 1.0) - x * log_q(qd, x) - (1.0 - x) * log_q(qd, 1.0 - x);
}

BigInt singleton_max_size(std::uint64_t n, std::uint64_t d, std::uint64_t q) {
    require(q >= 2, ErrorKind::domain, "alphabet size must be at least 2");
    require(d <= 2 * n, ErrorKind::domain, "distance exceeds 2n");
    const std::uint64_t twice_exp = 2 * n + 2 - d;
    BigInt bound = (twice_exp % 2 == 0) ? big_pow(q, twice_exp / 2) : BigInt(boost::multiprecision::sqrt(big_pow(q, twice_exp)));
    BigInt space = big_pow(q, n);
    return bound < space ? bound : space;
}

double gv_lower_rate_raw(std::uint64_t q, double delta) {
    require(q >= 2, ErrorKind::domain, "alphabet size must be at least 2");
    require(delta >= 0.0 && delta < 1.0, ErrorKind::domain, "relative distance outside [0, 1)");
    const double qd = static_cast<double>(q);
    return 1.0 - (1.0 + delta) * entropy_q(q, delta / (1.0 + delta)) + delta * log_q(qd, qd - 1.0) -
           entropy_q(q, delta);
}

double gv_lower_rate(std::uint64_t q, double delta) {
    const double raw = gv_lower_rate_raw(q, delta);
    const double qd = static_cast<double>(q);
    if (delta > (qd - 1.0) / qd) return 0.0;  // only the q repetition words survive
    return clamp01(raw);
}

RatePoint random_rate_q3(std::uint64_t q, double gamma, double kappa, double epsilon) {
    check_q3_domain(q, gamma, kappa);
    return make_point(gamma + kappa, q3_raw(static_cast<double>(q), gamma, kappa) - epsilon, ListSizeClass::constant);
}

double theta_binary(double gamma, double kappa) {
    const double b = 1.0 + gamma - kappa;
    return (1.0 + 2.0 * gamma - kappa) / 8.0 + std::sqrt(b * b + 10.0 * gamma * b + gamma * gamma) / 8.0;
}

RatePoint random_rate_binary(double gamma, double kappa, double epsilon) {
    check_binary_domain(gamma, kappa);
    return make_point(gamma + kappa, binary_raw(gamma, kappa) - epsilon, ListSizeClass::constant);
}

SegmentOptimum worst_split_q3(std::uint64_t q, double tau, double epsilon) {
    require(q >= 3, ErrorKind::domain, "this formula needs q >= 3; use the binary variant for q = 2");
    require(tau >= 0.0 && tau < segment_limit(q), ErrorKind::domain, "no split of tau fits the channel domain");
    const double qd = static_cast<double>(q);
    return minimize_segment(q, tau, epsilon, [qd](double g, double k) { return q3_raw(qd, g, k); });
}

SegmentOptimum worst_split_binary(double tau, double epsilon) {
    require(tau >= 0.0, ErrorKind::domain, "tau must be nonnegative");
    require(tau <= 1.0, ErrorKind::out_of_regime, "binary formula needs tau <= 1");
    return minimize_segment(2, tau, epsilon, binary_raw);
}

RatePoint random_rate_tau_q3(std::uint64_t q, double tau, double epsilon) {
    return worst_split_q3(q, tau, epsilon).point;
}

RatePoint random_rate_tau_binary(double tau, double epsilon) { return worst_split_binary(tau, epsilon).point; }

RatePoint fixed_rate(std::uint64_t q, double gamma, double kappa, double epsilon) {
    return q == 2 ? random_rate_binary(gamma, kappa, epsilon) : random_rate_q3(q, gamma, kappa, epsilon);
}

RatePoint rate_insertion_only(std::uint64_t q, double gamma, double epsilon) {
    RatePoint p = fixed_rate(q, gamma, 0.0, epsilon);
    p.x = gamma;
    return p;
}

RatePoint rate_deletion_only(std::uint64_t q, double kappa, double epsilon) {
    require(q >= 2, ErrorKind::domain, "alphabet size must be at least 2");
    require(kappa >= 0.0 && kappa < 1.0, ErrorKind::domain, "deletion fraction outside [0, 1)");
    return make_point(kappa, 1.0 - entropy_q(q, kappa) - epsilon, ListSizeClass::constant);
}

RatePoint linear_rate_variants(std::uint64_t q, double gamma, double kappa, double epsilon) {
    RatePoint p = fixed_rate(q, gamma, kappa, epsilon);
    p.list_size_class = ListSizeClass::exponential;
    return p;
}

RatePoint large_q_rate(double kappa, double epsilon) {
    require(kappa >= 0.0 && kappa < 1.0, ErrorKind::domain, "deletion fraction outside [0, 1)");
    return make_point(kappa, 1.0 - kappa - epsilon, ListSizeClass::constant);
}

struct ZyablovSolver::Impl {
    std::uint64_t q;
    std::size_t grid;
    MonotoneInverse inverse;

    static double tau_rate(std::uint64_t q, double tau) {
        return q == 2 ? worst_split_binary(tau, 0.0).point.rate_raw : worst_split_q3(q, tau, 0.0).point.rate_raw;
    }

    // f is nonpositive once tau reaches (q-1)/q, so [0, 1] covers every inner rate in (0, 1)
    Impl(std::uint64_t q_, std::size_t grid_)
        : q(q_), grid(grid_), inverse([q_](double t) { return tau_rate(q_, t); }, 1.0, grid_) {}
};

ZyablovSolver::ZyablovSolver(std::uint64_t q, std::size_t grid) {
    require(q >= 2, ErrorKind::domain, "alphabet size must be at least 2");
    impl_ = std::make_unique<Impl>(q, grid);
}
ZyablovSolver::~ZyablovSolver() = default;
ZyablovSolver::ZyablovSolver(ZyablovSolver&&) noexcept = default;
ZyablovSolver& ZyablovSolver::operator=(ZyablovSolver&&) noexcept = default;

std::uint64_t ZyablovSolver::q() const noexcept { return impl_->q; }
double ZyablovSolver::inner_rate(double tau) const { return impl_->inverse.eval(tau); }
std::optional<double> ZyablovSolver::inverse(double rate) const { return impl_->inverse.exact(rate); }
double ZyablovSolver::max_tau() const noexcept { return impl_->inverse.last_x(); }

ZyablovResult ZyablovSolver::solve(double R, double epsilon) const {
    require(R > 0.0 && R < 1.0, ErrorKind::domain, "target rate outside (0, 1)");
    OuterOptimum best = optimize_outer(R, impl_->inverse, impl_->grid);
    ZyablovResult out;
    out.R_out = best.R_out;
    out.R_in = R / best.R_out;
    out.tau_raw = best.value - epsilon;
    out.tau = std::max(0.0, out.tau_raw);
    const double inner_tau = best.value / (1.0 - best.R_out);
    if (inner_tau > 0.0) {
        SegmentOptimum split = impl_->q == 2 ? worst_split_binary(inner_tau, 0.0) : worst_split_q3(impl_->q, inner_tau, 0.0);
        out.worst_gamma_share = split.gamma / inner_tau;
    }
    return out;
}

ZyablovSplit ZyablovSolver::solve_split(double R, double epsilon, std::optional<double> gamma_share) const {
    require(R > 0.0 && R < 1.0, ErrorKind::domain, "target rate outside (0, 1)");
    const double rho = gamma_share ? *gamma_share : solve(R, 0.0).worst_gamma_share;
    require(rho >= 0.0 && rho <= 1.0, ErrorKind::domain, "insertion share outside [0, 1]");
    const std::uint64_t q = impl_->q;
    const double qd = static_cast<double>(q);
    // total inner fraction t with gamma = rho t, kappa = (1 - rho) t kept inside the domain closure
    double t_hi = 1.0;
    if (rho > 0.0) t_hi = std::min(t_hi, (q == 2 ? 1.0 : qd - 1.0) / rho);
    if (rho < 1.0) t_hi = std::min(t_hi, ((qd - 1.0) / qd) / (1.0 - rho));
    auto rate_at = [q, qd, rho](double t) {
        return q == 2 ? binary_raw(rho * t, (1.0 - rho) * t) : q3_raw(qd, rho * t, (1.0 - rho) * t);
    };
    MonotoneInverse inv(rate_at, t_hi, impl_->grid);
    OuterOptimum best = optimize_outer(R, inv, impl_->grid);
    const double t = best.value / (1.0 - best.R_out);
    ZyablovSplit out;
    out.R_out = best.R_out;
    out.R_in = R / best.R_out;
    out.gamma_share = rho;
    out.gamma = (1.0 - best.R_out) * rho * t - epsilon;
    out.kappa = (1.0 - best.R_out) * (1.0 - rho) * t - epsilon;
    return out;
}

ZyablovResult zyablov_tau(const ZyablovQuery& query) {
    return ZyablovSolver(query.q, query.grid).solve(query.R, query.epsilon);
}

ZyablovSplit zyablov_gamma_kappa(std::uint64_t q, double R, double epsilon, std::optional<double> gamma_share) {
    return ZyablovSolver(q).solve_split(R, epsilon, gamma_share);
}

}  // namespace insdel
