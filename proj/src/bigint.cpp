#include "insdel/bigint.hpp"

#include <cmath>
#include <limits>

namespace insdel {

BigInt binomial(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp) {
        if (exp & 1) r *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return r;
}

double big_log(const BigInt& x, double base) {
    if (x <= 0) return -std::numeric_limits<double>::infinity();
    // shift down to a double-representable mantissa
    std::size_t bits = boost::multiprecision::msb(x) + 1;
    std::size_t shift = bits > 900 ? bits - 900 : 0;
    BigInt top = x >> shift;
    double v = std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
    return v / std::log(base);
}

}  // namespace insdel
