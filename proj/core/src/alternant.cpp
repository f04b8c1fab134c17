#include "tforge/alternant.hpp"

#include <algorithm>
#include <numeric>

namespace tforge {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

QSeries det_permutation(const std::vector<std::vector<std::int64_t>>& expo) {
    int n = int(expo.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    QSeries det;
    do {
        std::int64_t e = 0;
        for (int i = 0; i < n; ++i) e += expo[std::size_t(i)][std::size_t(perm[std::size_t(i)])];
        det += QSeries::monomial(BigRat(permutation_sign(perm)), e);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Fraction-free Gaussian elimination (Bareiss) over Laurent polynomials;
// every division is exact.
QSeries det_bareiss(const std::vector<std::vector<std::int64_t>>& expo) {
    int n = int(expo.size());
    std::vector<std::vector<QSeries>> m(static_cast<std::size_t>(n), std::vector<QSeries>(std::size_t(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[std::size_t(i)][std::size_t(j)] =
                QSeries::monomial(BigRat(1), expo[std::size_t(i)][std::size_t(j)]);
    QSeries prev = QSeries(BigRat(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[std::size_t(k)][std::size_t(k)].is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[std::size_t(i)][std::size_t(k)].is_zero()) {
                    swap = i;
                    break;
                }
            if (swap < 0) return QSeries();
            std::swap(m[std::size_t(k)], m[std::size_t(swap)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                QSeries num = m[std::size_t(k)][std::size_t(k)] * m[std::size_t(i)][std::size_t(j)] -
                              m[std::size_t(i)][std::size_t(k)] * m[std::size_t(k)][std::size_t(j)];
                m[std::size_t(i)][std::size_t(j)] = num.exact_div(prev);
            }
        prev = m[std::size_t(k)][std::size_t(k)];
    }
    QSeries det = m[std::size_t(n - 1)][std::size_t(n - 1)];
    if (sign < 0) det = -det;
    return det;
}

} // namespace

QSeries alternant(const Partition& lambda, const std::vector<std::int64_t>& nu) {
    int n = int(nu.size());
    if (lambda.length() > n)
        throw InvalidParameters("alternant: partition has more parts than variables");
    if (n == 0) return QSeries(BigRat(1));
    std::vector<std::vector<std::int64_t>> expo(static_cast<std::size_t>(n),
                                                std::vector<std::int64_t>(std::size_t(n)));
    for (int i = 1; i <= n; ++i) {
        std::int64_t row_exp = lambda.part(i) + n - i;
        for (int j = 1; j <= n; ++j)
            expo[std::size_t(i - 1)][std::size_t(j - 1)] = nu[std::size_t(n - j)] * row_exp;
    }
    return n <= 8 ? det_permutation(expo) : det_bareiss(expo);
}

} // namespace tforge
