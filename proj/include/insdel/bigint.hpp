#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace insdel {

using BigInt = boost::multiprecision::cpp_int;

/// C(a, b), taken as 0 when a < 0, b < 0 or a < b.
BigInt binomial(std::int64_t a, std::int64_t b);

BigInt big_pow(std::uint64_t base, std::uint64_t exp);

/// log of a nonnegative big integer in the given base; -inf for zero.
double big_log(const BigInt& x, double base);

}  // namespace insdel
