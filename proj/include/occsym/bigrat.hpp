#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace occsym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k) over arbitrary-precision integers; 0 whenever k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// base^exp for exp >= 0, with the 0^0 = 1 convention. Negative bases allowed.
BigInt int_pow(const BigInt& base, std::int64_t exp);

double to_double(const Rational& r);

}  // namespace occsym
