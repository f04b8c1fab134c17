#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tforge/bigint.hpp"
#include "tforge/errors.hpp"

namespace tforge {

/// Truncated Laurent series in q with exact coefficients.
///
/// Every series carries its exactness horizon: all coefficients of q^e with
/// e <= trunc() are exact; nothing is claimed beyond it. Binary operations
/// propagate the tightest horizon that the operands justify, and reading a
/// coefficient past the horizon is an error rather than a silent zero.
/// A horizon of QSeries::kExact marks an exact Laurent polynomial.
class QSeries {
public:
    static constexpr std::int64_t kExact = INT64_MAX / 4;

    QSeries() = default; // exact zero
    explicit QSeries(const BigRat& constant, std::int64_t trunc = kExact);
    static QSeries zero(std::int64_t trunc) { return QSeries(BigRat(0), trunc); }
    static QSeries monomial(const BigRat& coeff, std::int64_t exponent,
                            std::int64_t trunc = kExact);
    static QSeries from_coeffs(std::int64_t lowest_exponent, std::vector<BigRat> coeffs,
                               std::int64_t trunc = kExact);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_exact() const { return trunc_ == kExact; }
    std::int64_t trunc() const { return trunc_; }
    /// Exponent of the lowest stored term (0 for the zero series).
    std::int64_t low() const { return coeffs_.empty() ? 0 : lo_; }
    /// Exponent of the highest stored term; only meaningful when exact or nonzero.
    std::int64_t degree() const { return coeffs_.empty() ? 0 : lo_ + std::int64_t(coeffs_.size()) - 1; }

    /// Coefficient of q^e. Throws TruncationError past the horizon.
    const BigRat& coeff(std::int64_t e) const;

    QSeries truncated(std::int64_t T) const;
    /// Same coefficients, declared exact. Only valid when the caller knows
    /// the series is a complete polynomial.
    QSeries declared_exact() const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
    QSeries& operator*=(const BigRat& c);
    /// Multiply by the monomial c * q^e.
    QSeries shifted(std::int64_t e) const;

    /// Multiply by 1/(1 - q^k), k >= 1, exact through the current horizon.
    QSeries times_inv_one_minus_qk(std::int64_t k) const;
    /// Exact division by (1 - q^k); requires an exact polynomial and an
    /// exact quotient, otherwise throws NonIntegerResult.
    QSeries exact_div_one_minus_qk(std::int64_t k) const;

    /// Multiplicative inverse through T; requires an invertible lowest
    /// coefficient (the result picks up Laurent shift -low()).
    QSeries inverse(std::int64_t T) const;

    /// Exact division of Laurent polynomials; throws NonIntegerResult when
    /// the remainder is nonzero. Both operands must be exact.
    QSeries exact_div(const QSeries& d) const;

    /// Equality of every coefficient through min(trunc, o.trunc); throws if
    /// both are truncated and T would exceed what either knows.
    bool equal_through(const QSeries& o, std::int64_t T) const;
    /// Coefficientwise equality through the common horizon.
    friend bool operator==(const QSeries& a, const QSeries& b);

    /// Evaluate an exact polynomial at a rational point.
    BigRat eval(const BigRat& x) const;

    /// All (exponent, coefficient) pairs of stored nonzero terms.
    std::vector<std::pair<std::int64_t, BigRat>> terms() const;

    /// Canonical text form, e.g. "1 + q + q^2 (+O(q^3))".
    std::string str() const;

private:
    void normalize();

    std::int64_t lo_ = 0;
    std::vector<BigRat> coeffs_; // coeffs_[i] is the coefficient of q^(lo_+i)
    std::int64_t trunc_ = kExact;
};

} // namespace tforge
