#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tforge/qseries.hpp"

namespace tforge {

/// Polynomial in x whose coefficients are QSeries sharing one q-horizon.
/// Exact in x (the q-horizon bounds the reachable x-degrees).
class XQSeries {
public:
    explicit XQSeries(std::int64_t trunc = QSeries::kExact) : trunc_(std::min(trunc, QSeries::kExact)) {}
    static XQSeries term(std::int64_t x_degree, QSeries coeff);

    std::int64_t trunc() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::int64_t, QSeries>& terms() const { return terms_; }
    QSeries coeff_x(std::int64_t d) const;

    XQSeries& operator+=(const XQSeries& o);
    friend XQSeries operator+(XQSeries a, const XQSeries& b) { return a += b; }
    friend XQSeries operator*(const XQSeries& a, const XQSeries& b);
    XQSeries& operator*=(const XQSeries& o) { return *this = *this * o; }
    XQSeries& operator*=(const QSeries& s);
    /// Multiply by x^d * q^e.
    XQSeries shifted(std::int64_t x_degree, std::int64_t q_exponent) const;

    /// Multiply by 1/(1 - x^j q^k), k >= 1, exact through the q-horizon.
    XQSeries times_inv_one_minus_xq(std::int64_t j, std::int64_t k) const;

    /// Substitute x = 1.
    QSeries at_x1() const;

    bool equal_through(const XQSeries& o, std::int64_t T) const;

    /// Canonical text form ordered by q-exponent then x-degree,
    /// e.g. "1 + x q + x^2 q^2 (+O(q^3))".
    std::string str() const;

private:
    void normalize();

    std::map<std::int64_t, QSeries> terms_; // x-degree -> q-series, no zero entries
    std::int64_t trunc_;
};

} // namespace tforge
