#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "tforge/errors.hpp"

namespace tforge {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt factorial(std::int64_t n) {
    if (n < 0) throw InvalidParameters("factorial of negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Phi(n) = prod_{i=1}^{n-1} i!, the superfactorial; Phi(0) = Phi(1) = 1.
inline BigInt phi(std::int64_t n) {
    if (n < 0) throw InvalidParameters("phi of negative argument");
    BigInt r = 1;
    for (std::int64_t i = 1; i <= n - 1; ++i) r *= factorial(i);
    return r;
}

// gimel(n) = prod_{i=1}^{floor(n/2)} (n-2i)!; gimel(0) = gimel(1) = 1.
inline BigInt gimel(std::int64_t n) {
    if (n < 0) throw InvalidParameters("gimel of negative argument");
    BigInt r = 1;
    for (std::int64_t i = 1; i <= n / 2; ++i) r *= factorial(n - 2 * i);
    return r;
}

// (2n-1)!! = 1 * 3 * ... * (2n-1); equals 1 for n <= 0 parts of the range.
inline BigInt odd_double_factorial(std::int64_t n) {
    if (n < 0) throw InvalidParameters("odd_double_factorial of negative argument");
    BigInt r = 1;
    for (std::int64_t k = 1; k <= 2 * n - 1; k += 2) r *= k;
    return r;
}

inline BigInt pow_int(const BigInt& base, std::int64_t e) {
    if (e < 0) throw InvalidParameters("negative integer power");
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline BigRat pow_rat(const BigRat& base, std::int64_t e) {
    if (e == 0) return BigRat(1);
    if (base == 0 && e < 0) throw InvalidParameters("zero to a negative power");
    BigRat b = e > 0 ? base : BigRat(1) / base;
    std::int64_t k = e > 0 ? e : -e;
    BigRat r(1);
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// Canonicalized rational num/den (mpq_class's two-argument constructor
// does not reduce on its own).
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidParameters("zero denominator");
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

// The exact integer a rational must be; throws otherwise.
inline BigInt as_integer(const BigRat& r, const char* what = "value") {
    if (r.get_den() != 1)
        throw NonIntegerResult(std::string(what) + " is not an integer: " + r.get_str());
    return r.get_num();
}

} // namespace tforge
