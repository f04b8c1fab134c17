#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tforge/bigint.hpp"
#include "tforge/qseries.hpp"

namespace tforge {

/// Formal product r * q^e * prod_k (1 - q^k)^{m_k} with rational r and
/// integer multiplicities m_k over k >= 1.
///
/// This is the currency for exact product formulas: multiplication merges
/// multiplicities, expansion to a QSeries is exact through any horizon, and
/// the q -> 1 limit of a degree-balanced product is evaluated exactly via
/// lim (1-q^k)/(1-q) = k.
class QFactored {
public:
    QFactored() : pref_(1) {}
    explicit QFactored(const BigRat& prefactor) : pref_(prefactor) { normalize(); }
    QFactored(const BigRat& prefactor, std::int64_t q_exponent)
        : pref_(prefactor), qexp_(q_exponent) {
        normalize();
    }

    static QFactored zero() { return QFactored(BigRat(0)); }
    /// The single factor (1 - q^k)^m; k may be any nonzero integer and is
    /// rewritten into canonical k >= 1 form. k == 0 yields the zero element.
    static QFactored one_minus_qk(std::int64_t k, std::int64_t m = 1);
    /// Assemble from parts; every key must be >= 1 and multiplicities nonzero.
    static QFactored from_parts(BigRat prefactor, std::int64_t q_exponent,
                                std::map<std::int64_t, std::int64_t> mult);

    bool is_zero() const { return pref_ == 0; }
    const BigRat& prefactor() const { return pref_; }
    std::int64_t q_exponent() const { return qexp_; }
    const std::map<std::int64_t, std::int64_t>& factors() const { return mult_; }
    /// Net cyclotomic degree sum(m_k).
    std::int64_t net_multiplicity() const;

    QFactored& operator*=(const QFactored& o);
    friend QFactored operator*(QFactored a, const QFactored& b) { return a *= b; }
    QFactored& operator/=(const QFactored& o);
    friend QFactored operator/(QFactored a, const QFactored& b) { return a /= b; }
    QFactored pow(std::int64_t e) const;
    QFactored& scale(const BigRat& c) {
        pref_ *= c;
        normalize();
        return *this;
    }
    QFactored& shift_q(std::int64_t e) {
        if (!is_zero()) qexp_ += e;
        return *this;
    }

    friend bool operator==(const QFactored&, const QFactored&) = default;

    /// Exact coefficients through q^T; negative multiplicities expand through
    /// geometric series.
    QSeries expand(std::int64_t T) const;
    /// The product as an exact Laurent polynomial; every negative power of
    /// (1 - q^k) must divide out exactly (NonIntegerResult otherwise).
    QSeries to_polynomial() const;

    /// Substitute a rational 0 < q < 1 (or any q avoiding poles).
    BigRat eval(const BigRat& q) const;

    /// Canonical text form "r * q^e * (1-q^k)^m ...", k ascending.
    std::string str() const;

private:
    void normalize() {
        if (pref_ == 0) {
            qexp_ = 0;
            mult_.clear();
        }
    }

    BigRat pref_;
    std::int64_t qexp_ = 0;
    std::map<std::int64_t, std::int64_t> mult_; // k >= 1 -> m_k, no zero entries
};

/// (q^s; q)_k = prod_{i=0}^{k-1} (1 - q^{s+i}). A factor q^0 makes it zero;
/// factors with negative exponent are rewritten via 1-q^-j = -q^-j(1-q^j).
QFactored poch(std::int64_t s, std::int64_t k);

/// (q; q)_n.
QFactored qq(std::int64_t n);

/// Phi_q(n) = prod_{i=1}^{n-1} (q;q)_i.
QFactored phi_q(std::int64_t n);

/// gimel_q(n) = prod_{i=1}^{floor(n/2)} (q;q)_{n-2i}.
QFactored gimel_q(std::int64_t n);

/// lim_{q->1} (q;q)_m * f(q). Exact: requires the multiplicities of
/// (q;q)_m * f to balance to net degree zero; returns 0 on positive net
/// degree and throws DivergentLimit on negative.
BigRat limit_q1(const QFactored& f, std::int64_t m);

} // namespace tforge
