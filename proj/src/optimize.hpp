#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

namespace insdel::detail {

struct Extremum {
    double x = 0.0;
    double value = 0.0;
};

/// Golden-section search for the minimum of f on [a, b].
inline Extremum golden_minimize(const std::function<double(double)>& f, double a, double b, int iterations = 80) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iterations && b - a > 1e-13; ++i) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc <= fd ? Extremum{c, fc} : Extremum{d, fd};
}

/// Grid scan of [lo, hi] with `points` samples (endpoints included), then a
/// golden-section pass on the bracket around the best sample.
inline Extremum grid_minimize(const std::function<double(double)>& f, double lo, double hi, std::size_t points) {
    if (hi <= lo || points < 2) return {lo, f(lo)};
    const double step = (hi - lo) / static_cast<double>(points - 1);
    Extremum best{lo, f(lo)};
    std::size_t best_k = 0;
    for (std::size_t k = 1; k < points; ++k) {
        double x = k + 1 == points ? hi : lo + step * static_cast<double>(k);
        double v = f(x);
        if (v < best.value) {
            best = {x, v};
            best_k = k;
        }
    }
    double a = best_k == 0 ? lo : lo + step * static_cast<double>(best_k - 1);
    double b = best_k + 1 >= points ? hi : lo + step * static_cast<double>(best_k + 1);
    Extremum refined = golden_minimize(f, a, b);
    return refined.value < best.value ? refined : best;
}

inline Extremum grid_maximize(const std::function<double(double)>& f, double lo, double hi, std::size_t points) {
    Extremum e = grid_minimize([&](double x) { return -f(x); }, lo, hi, points);
    return {e.x, -e.value};
}

}  // namespace insdel::detail
