#include "tforge/xqseries.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace tforge {

XQSeries XQSeries::term(std::int64_t x_degree, QSeries coeff) {
    XQSeries s(coeff.trunc());
    if (!coeff.is_zero()) s.terms_.emplace(x_degree, std::move(coeff));
    return s;
}

QSeries XQSeries::coeff_x(std::int64_t d) const {
    auto it = terms_.find(d);
    if (it != terms_.end()) return it->second;
    return QSeries::zero(trunc_);
}

void XQSeries::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = it->second.truncated(trunc_);
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

XQSeries& XQSeries::operator+=(const XQSeries& o) {
    trunc_ = std::min(trunc_, o.trunc_);
    for (const auto& [d, s] : o.terms_) {
        auto it = terms_.find(d);
        if (it == terms_.end())
            terms_.emplace(d, s);
        else
            it->second += s;
    }
    normalize();
    return *this;
}

XQSeries operator*(const XQSeries& a, const XQSeries& b) {
    XQSeries out(std::min(a.trunc_, b.trunc_));
    for (const auto& [da, sa] : a.terms_)
        for (const auto& [db, sb] : b.terms_) {
            QSeries prod = sa * sb;
            if (prod.is_zero()) continue;
            auto it = out.terms_.find(da + db);
            if (it == out.terms_.end())
                out.terms_.emplace(da + db, std::move(prod));
            else
                it->second += prod;
        }
    out.normalize();
    return out;
}

XQSeries& XQSeries::operator*=(const QSeries& s) {
    trunc_ = std::min(trunc_, s.trunc());
    for (auto& [d, c] : terms_) c = c * s;
    normalize();
    return *this;
}

XQSeries XQSeries::shifted(std::int64_t x_degree, std::int64_t q_exponent) const {
    XQSeries out(trunc_);
    for (const auto& [d, s] : terms_) out.terms_.emplace(d + x_degree, s.shifted(q_exponent));
    out.normalize();
    return out;
}

XQSeries XQSeries::times_inv_one_minus_xq(std::int64_t j, std::int64_t k) const {
    if (k < 1) throw InvalidParameters("bivariate geometric factor needs q-exponent >= 1");
    if (trunc_ == QSeries::kExact)
        throw TruncationError("expanding 1/(1 - x^j q^k) requires a finite horizon");
    // 1/(1 - x^j q^k) = sum_i x^{ji} q^{ki}, truncated at q^trunc_.
    XQSeries out(trunc_);
    for (std::int64_t i = 0; i * k <= trunc_; ++i) {
        XQSeries shift = shifted(j * i, k * i);
        out += shift;
    }
    return out;
}

QSeries XQSeries::at_x1() const {
    QSeries s = QSeries::zero(trunc_);
    for (const auto& [d, c] : terms_) s += c;
    return s;
}

bool XQSeries::equal_through(const XQSeries& o, std::int64_t T) const {
    if (T > trunc_ || T > o.trunc_)
        throw TruncationError("equality requested beyond a horizon");
    auto degrees = [](const XQSeries& s) {
        std::vector<std::int64_t> d;
        for (const auto& [k, v] : s.terms_) d.push_back(k);
        return d;
    };
    std::vector<std::int64_t> all = degrees(*this), od = degrees(o);
    all.insert(all.end(), od.begin(), od.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::int64_t d : all)
        if (!coeff_x(d).truncated(T).equal_through(o.coeff_x(d).truncated(T), T)) return false;
    return true;
}

std::string XQSeries::str() const {
    // Flatten to (q-exponent, x-degree, coefficient) monomials.
    struct Mono {
        std::int64_t e, d;
        BigRat c;
    };
    std::vector<Mono> monos;
    for (const auto& [d, s] : terms_)
        for (const auto& [e, c] : s.terms()) monos.push_back({e, d, c});
    std::sort(monos.begin(), monos.end(), [](const Mono& a, const Mono& b) {
        return a.e != b.e ? a.e < b.e : a.d < b.d;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& m : monos) {
        BigRat a = m.c;
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
        std::vector<std::string> parts;
        if (a != 1 || (m.d == 0 && m.e == 0)) parts.push_back(BigRat(a).get_str());
        if (m.d == 1)
            parts.push_back("x");
        else if (m.d != 0)
            parts.push_back("x^" + std::to_string(m.d));
        if (m.e == 1)
            parts.push_back("q");
        else if (m.e != 0)
            parts.push_back("q^" + std::to_string(m.e));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << " ";
            os << parts[i];
        }
    }
    if (first) os << "0";
    if (trunc_ != QSeries::kExact) os << " (+O(q^" << (trunc_ + 1) << "))";
    return os.str();
}

} // namespace tforge
