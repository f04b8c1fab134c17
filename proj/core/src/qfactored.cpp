#include "tforge/qfactored.hpp"

#include <sstream>

namespace tforge {

QFactored QFactored::one_minus_qk(std::int64_t k, std::int64_t m) {
    QFactored f;
    if (m == 0) return f;
    if (k == 0) return zero();
    if (k < 0) {
        // (1 - q^-j)^m = (-1)^m q^{-jm} (1 - q^j)^m
        if (m % 2 != 0) f.pref_ = -f.pref_;
        f.qexp_ = k * m;
        k = -k;
    }
    f.mult_[k] = m;
    return f;
}

QFactored QFactored::from_parts(BigRat prefactor, std::int64_t q_exponent,
                                std::map<std::int64_t, std::int64_t> mult) {
    QFactored f;
    f.pref_ = std::move(prefactor);
    f.qexp_ = q_exponent;
    f.mult_ = std::move(mult);
    for (auto it = f.mult_.begin(); it != f.mult_.end();) {
        if (it->first < 1) throw InvalidParameters("factor exponents must be positive");
        if (it->second == 0)
            it = f.mult_.erase(it);
        else
            ++it;
    }
    f.normalize();
    return f;
}

std::int64_t QFactored::net_multiplicity() const {
    std::int64_t s = 0;
    for (const auto& [k, m] : mult_) s += m;
    return s;
}

QFactored& QFactored::operator*=(const QFactored& o) {
    if (is_zero() || o.is_zero()) return *this = zero();
    pref_ *= o.pref_;
    qexp_ += o.qexp_;
    for (const auto& [k, m] : o.mult_) {
        auto it = mult_.find(k);
        if (it == mult_.end()) {
            mult_.emplace(k, m);
        } else if ((it->second += m) == 0) {
            mult_.erase(it);
        }
    }
    return *this;
}

QFactored& QFactored::operator/=(const QFactored& o) {
    if (o.is_zero()) throw InvalidParameters("division by the zero q-product");
    if (is_zero()) return *this;
    pref_ /= o.pref_;
    qexp_ -= o.qexp_;
    for (const auto& [k, m] : o.mult_) {
        auto it = mult_.find(k);
        if (it == mult_.end()) {
            mult_.emplace(k, -m);
        } else if ((it->second -= m) == 0) {
            mult_.erase(it);
        }
    }
    return *this;
}

QFactored QFactored::pow(std::int64_t e) const {
    if (e == 0) return QFactored();
    if (is_zero()) {
        if (e < 0) throw InvalidParameters("negative power of the zero q-product");
        return zero();
    }
    QFactored f;
    f.pref_ = pow_rat(pref_, e);
    f.qexp_ = qexp_ * e;
    for (const auto& [k, m] : mult_) f.mult_[k] = m * e;
    return f;
}

QSeries QFactored::expand(std::int64_t T) const {
    if (is_zero()) return QSeries::zero(T);
    QSeries s = QSeries::monomial(pref_, qexp_, T);
    for (const auto& [k, m] : mult_) {
        if (m > 0) {
            QSeries factor = QSeries(BigRat(1), T) - QSeries::monomial(BigRat(1), k, T);
            for (std::int64_t i = 0; i < m; ++i) s = s * factor;
        } else {
            for (std::int64_t i = 0; i < -m; ++i) s = s.times_inv_one_minus_qk(k);
        }
    }
    return s.truncated(T);
}

QSeries QFactored::to_polynomial() const {
    if (is_zero()) return QSeries();
    QSeries s = QSeries::monomial(pref_, qexp_);
    for (const auto& [k, m] : mult_) {
        if (m <= 0) continue;
        QSeries factor = QSeries(BigRat(1)) - QSeries::monomial(BigRat(1), k);
        for (std::int64_t i = 0; i < m; ++i) s = s * factor;
    }
    for (const auto& [k, m] : mult_)
        for (std::int64_t i = 0; i < -m; ++i) s = s.exact_div_one_minus_qk(k);
    return s;
}

BigRat QFactored::eval(const BigRat& q) const {
    if (is_zero()) return BigRat(0);
    BigRat v = pref_ * pow_rat(q, qexp_);
    for (const auto& [k, m] : mult_) v *= pow_rat(BigRat(1) - pow_rat(q, k), m);
    return v;
}

std::string QFactored::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << pref_.get_str();
    if (qexp_ != 0) os << " * q^" << qexp_;
    for (const auto& [k, m] : mult_) {
        os << " * (1-q^" << k << ")";
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

QFactored poch(std::int64_t s, std::int64_t k) {
    if (k < 0) throw InvalidParameters("Pochhammer length must be nonnegative");
    QFactored f;
    for (std::int64_t i = 0; i < k; ++i) {
        f *= QFactored::one_minus_qk(s + i);
        if (f.is_zero()) break;
    }
    return f;
}

QFactored qq(std::int64_t n) { return poch(1, n); }

QFactored phi_q(std::int64_t n) {
    if (n < 0) throw InvalidParameters("phi_q of negative argument");
    QFactored f;
    for (std::int64_t i = 1; i <= n - 1; ++i) f *= qq(i);
    return f;
}

QFactored gimel_q(std::int64_t n) {
    if (n < 0) throw InvalidParameters("gimel_q of negative argument");
    QFactored f;
    for (std::int64_t i = 1; i <= n / 2; ++i) f *= qq(n - 2 * i);
    return f;
}

BigRat limit_q1(const QFactored& f, std::int64_t m) {
    if (m < 0) throw InvalidParameters("limit_q1 needs m >= 0");
    if (f.is_zero()) return BigRat(0);
    // (q;q)_m * f ~ (1-q)^{m + net} * m! * prod k^{m_k} as q -> 1.
    std::int64_t net = f.net_multiplicity() + m;
    if (net > 0) return BigRat(0);
    if (net < 0)
        throw DivergentLimit("q->1 limit diverges: net cyclotomic degree " + std::to_string(net));
    BigRat v = f.prefactor() * BigRat(factorial(m));
    for (const auto& [k, mk] : f.factors()) v *= pow_rat(BigRat(k), mk);
    return v;
}

} // namespace tforge
