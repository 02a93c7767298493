#ifndef EMLAB_BIGINT_HPP
#define EMLAB_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace emlab {

// Exact coefficients. All polynomial arithmetic stays in Z; rational
// prefactors are handled by cross-multiplication plus exact divisibility.
using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt int_pow(const BigInt& base, unsigned e) {
    BigInt out = 1;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace emlab

#endif
