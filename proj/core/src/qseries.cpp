#include "tforge/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace tforge {

namespace {
std::int64_t add_sat(std::int64_t a, std::int64_t b) {
    if (a >= QSeries::kExact / 2 || b >= QSeries::kExact / 2) return QSeries::kExact;
    return a + b;
}
} // namespace

QSeries::QSeries(const BigRat& constant, std::int64_t trunc)
    : trunc_(std::min(trunc, kExact)) {
    if (constant != 0 && 0 <= trunc_) coeffs_.push_back(constant);
}

QSeries QSeries::monomial(const BigRat& coeff, std::int64_t exponent, std::int64_t trunc) {
    QSeries s;
    s.trunc_ = std::min(trunc, kExact);
    if (coeff != 0 && exponent <= s.trunc_) {
        s.lo_ = exponent;
        s.coeffs_.push_back(coeff);
    }
    return s;
}

QSeries QSeries::from_coeffs(std::int64_t lowest, std::vector<BigRat> coeffs, std::int64_t trunc) {
    QSeries s;
    s.lo_ = lowest;
    s.coeffs_ = std::move(coeffs);
    s.trunc_ = std::min(trunc, kExact);
    s.normalize();
    return s;
}

void QSeries::normalize() {
    // Drop terms past the horizon, then strip zero fringes.
    if (!coeffs_.empty() && lo_ + std::int64_t(coeffs_.size()) - 1 > trunc_) {
        std::int64_t keep = trunc_ - lo_ + 1;
        if (keep <= 0)
            coeffs_.clear();
        else
            coeffs_.resize(std::size_t(keep));
    }
    std::size_t front = 0;
    while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
    if (front == coeffs_.size()) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    std::size_t back = coeffs_.size();
    while (back > front && coeffs_[back - 1] == 0) --back;
    if (front > 0 || back < coeffs_.size()) {
        coeffs_ = std::vector<BigRat>(coeffs_.begin() + front, coeffs_.begin() + back);
        lo_ += std::int64_t(front);
    }
}

const BigRat& QSeries::coeff(std::int64_t e) const {
    static const BigRat zero(0);
    if (e > trunc_)
        throw TruncationError("coefficient of q^" + std::to_string(e) +
                              " requested beyond horizon q^" + std::to_string(trunc_));
    if (coeffs_.empty() || e < lo_ || e > lo_ + std::int64_t(coeffs_.size()) - 1) return zero;
    return coeffs_[std::size_t(e - lo_)];
}

QSeries QSeries::truncated(std::int64_t T) const {
    QSeries s = *this;
    s.trunc_ = std::min(trunc_, T);
    s.normalize();
    return s;
}

QSeries QSeries::declared_exact() const {
    QSeries s = *this;
    s.trunc_ = kExact;
    return s;
}

QSeries QSeries::operator-() const {
    QSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    std::int64_t t = std::min(trunc_, o.trunc_);
    if (coeffs_.empty() && o.coeffs_.empty()) {
        trunc_ = t;
        lo_ = 0;
        return *this;
    }
    std::int64_t lo = coeffs_.empty() ? o.lo_ : (o.coeffs_.empty() ? lo_ : std::min(lo_, o.lo_));
    std::int64_t hi_a = coeffs_.empty() ? lo - 1 : lo_ + std::int64_t(coeffs_.size()) - 1;
    std::int64_t hi_b = o.coeffs_.empty() ? lo - 1 : o.lo_ + std::int64_t(o.coeffs_.size()) - 1;
    std::int64_t hi = std::min(std::max(hi_a, hi_b), t);
    std::vector<BigRat> out;
    if (hi >= lo) {
        out.assign(std::size_t(hi - lo + 1), BigRat(0));
        for (std::int64_t e = lo; e <= hi; ++e) {
            BigRat v(0);
            if (!coeffs_.empty() && e >= lo_ && e <= hi_a) v += coeffs_[std::size_t(e - lo_)];
            if (!o.coeffs_.empty() && e >= o.lo_ && e <= hi_b) v += o.coeffs_[std::size_t(e - o.lo_)];
            out[std::size_t(e - lo)] = v;
        }
    }
    lo_ = lo;
    coeffs_ = std::move(out);
    trunc_ = t;
    normalize();
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries operator*(const QSeries& a, const QSeries& b) {
    // The product coefficient at q^e is exact iff every contribution is
    // known: e <= min(a.trunc + b.low, b.trunc + a.low).
    std::int64_t t = std::min(a.is_exact() ? QSeries::kExact : add_sat(a.trunc_, b.low()),
                              b.is_exact() ? QSeries::kExact : add_sat(b.trunc_, a.low()));
    QSeries s;
    s.trunc_ = std::min(t, QSeries::kExact);
    if (a.coeffs_.empty() || b.coeffs_.empty()) return s;
    std::int64_t lo = a.lo_ + b.lo_;
    if (lo > s.trunc_) return s;
    std::int64_t full_hi = a.degree() + b.degree();
    std::int64_t hi = std::min(full_hi, s.trunc_);
    s.lo_ = lo;
    s.coeffs_.assign(std::size_t(hi - lo + 1), BigRat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        std::int64_t base = a.lo_ + std::int64_t(i) + b.lo_;
        if (base > hi) break;
        std::size_t jmax = std::min(b.coeffs_.size(), std::size_t(hi - base + 1));
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b.coeffs_[j] == 0) continue;
            s.coeffs_[std::size_t(base - lo) + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    s.normalize();
    return s;
}

QSeries& QSeries::operator*=(const BigRat& c) {
    if (c == 0) {
        coeffs_.clear();
        lo_ = 0;
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QSeries QSeries::shifted(std::int64_t e) const {
    QSeries s = *this;
    if (!s.is_exact()) s.trunc_ = add_sat(s.trunc_, e);
    s.lo_ += e;
    s.normalize();
    return s;
}

QSeries QSeries::times_inv_one_minus_qk(std::int64_t k) const {
    if (k < 1) throw InvalidParameters("geometric factor needs k >= 1");
    if (trunc_ == kExact)
        throw TruncationError("expanding 1/(1-q^k) requires a finite horizon");
    QSeries s = *this;
    if (s.coeffs_.empty()) return s;
    std::int64_t hi = s.trunc_;
    std::int64_t n = hi - s.lo_ + 1;
    if (n <= 0) return s;
    s.coeffs_.resize(std::size_t(n), BigRat(0));
    for (std::size_t i = std::size_t(k); i < s.coeffs_.size(); ++i)
        s.coeffs_[i] += s.coeffs_[i - std::size_t(k)];
    s.normalize();
    return s;
}

QSeries QSeries::exact_div_one_minus_qk(std::int64_t k) const {
    if (!is_exact()) throw NonIntegerResult("exact division requires an exact polynomial");
    if (coeffs_.empty()) return *this;
    QSeries s = *this;
    for (std::size_t i = std::size_t(k); i < s.coeffs_.size(); ++i)
        s.coeffs_[i] += s.coeffs_[i - std::size_t(k)];
    // The cumulative sums of an exact multiple vanish on the top k slots.
    std::size_t n = s.coeffs_.size();
    for (std::size_t i = n > std::size_t(k) ? n - std::size_t(k) : 0; i < n; ++i)
        if (s.coeffs_[i] != 0)
            throw NonIntegerResult("division by (1-q^" + std::to_string(k) + ") is not exact");
    s.coeffs_.resize(n > std::size_t(k) ? n - std::size_t(k) : 0);
    s.normalize();
    return s;
}

QSeries QSeries::inverse(std::int64_t T) const {
    // Write this = q^lo * A(q) with A(0) != 0; the inverse is q^-lo / A.
    // The result exponent e needs A through degree e + 2*lo.
    if (coeffs_.empty()) throw InvalidParameters("inverse of the zero series");
    std::int64_t need = T + lo_; // highest degree of 1/A required
    if (need < 0) throw TruncationError("inverse horizon below its lowest term");
    if (!is_exact() && need > trunc_ - lo_)
        throw TruncationError("inverse requested beyond what the operand horizon supports");
    const BigRat& a0 = coeffs_[0];
    std::vector<BigRat> b(static_cast<std::size_t>(need) + 1, BigRat(0));
    b[0] = BigRat(1) / a0;
    for (std::size_t e = 1; e < b.size(); ++e) {
        BigRat acc(0);
        for (std::size_t j = 1; j <= e && j < coeffs_.size(); ++j)
            acc += coeffs_[j] * b[e - j];
        b[e] = -acc / a0;
    }
    return from_coeffs(-lo_, std::move(b), T);
}

QSeries QSeries::exact_div(const QSeries& d) const {
    if (!is_exact() || !d.is_exact())
        throw NonIntegerResult("exact division requires exact polynomials");
    if (d.coeffs_.empty()) throw InvalidParameters("division by the zero polynomial");
    if (coeffs_.empty()) return QSeries();
    std::int64_t qdeg = degree() - d.degree();
    std::int64_t qlo = lo_ - d.lo_;
    if (qdeg < qlo) throw NonIntegerResult("polynomial division is not exact (degree)");
    std::vector<BigRat> rem = coeffs_;
    std::vector<BigRat> quot(static_cast<std::size_t>(qdeg - qlo + 1), BigRat(0));
    const BigRat& lead = d.coeffs_.back();
    // Descending long division on the shifted coefficient arrays.
    for (std::int64_t k = qdeg - qlo; k >= 0; --k) {
        std::size_t top = std::size_t(k) + d.coeffs_.size() - 1;
        if (top >= rem.size() || rem[top] == 0) continue;
        BigRat f = rem[top] / lead;
        quot[std::size_t(k)] = f;
        for (std::size_t j = 0; j < d.coeffs_.size(); ++j)
            rem[std::size_t(k) + j] -= f * d.coeffs_[j];
    }
    for (const BigRat& r : rem)
        if (r != 0) throw NonIntegerResult("polynomial division is not exact (remainder)");
    return from_coeffs(qlo, std::move(quot));
}

bool QSeries::equal_through(const QSeries& o, std::int64_t T) const {
    if (T > trunc_ || T > o.trunc_)
        throw TruncationError("equality requested beyond a horizon");
    std::int64_t lo = std::min(low(), o.low());
    std::int64_t hi = std::min(T, std::max(degree(), o.degree()));
    for (std::int64_t e = lo; e <= hi; ++e)
        if (coeff(e) != o.coeff(e)) return false;
    return true;
}

bool operator==(const QSeries& a, const QSeries& b) {
    std::int64_t t = std::min(a.trunc_, b.trunc_);
    if (t == QSeries::kExact) return a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
    return a.equal_through(b, t);
}

BigRat QSeries::eval(const BigRat& x) const {
    if (!is_exact()) throw TruncationError("evaluating a truncated series");
    BigRat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc * pow_rat(x, lo_);
}

std::vector<std::pair<std::int64_t, BigRat>> QSeries::terms() const {
    std::vector<std::pair<std::int64_t, BigRat>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(lo_ + std::int64_t(i), coeffs_[i]);
    return out;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms()) {
        BigRat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << " ";
            if (e == 1)
                os << "q";
            else
                os << "q^" << e;
        }
    }
    if (first) os << "0";
    if (!is_exact()) os << " (+O(q^" << (trunc_ + 1) << "))";
    return os.str();
}

} // namespace tforge
