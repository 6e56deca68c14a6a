#include "occsym/bigrat.hpp"

#include <stdexcept>

namespace occsym {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

BigInt int_pow(const BigInt& base, std::int64_t exp) {
    if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
    BigInt result = 1;
    BigInt b = base;
    std::int64_t e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace occsym
