#include "tforge/formulas.hpp"

#include <set>

#include "tforge/alternant.hpp"

namespace tforge::formulas {

namespace {

// Cells of the a x c block sitting in rows n+1 .. n+a, the part of the
// hook product that the M-shape formulas omit.
bool in_low_rectangle(Cell cell, std::int64_t n, std::int64_t a, std::int64_t c) {
    return cell.row > n && cell.row <= n + a && cell.col <= c;
}

std::int64_t skew_exponent(const SkewShape& shape) {
    // sum over the skew cells of (outer'_col - row)
    Partition conj = shape.outer().conjugate();
    std::int64_t e = 0;
    for (const Cell& cell : shape.cells()) e += conj.part(int(cell.col)) - cell.row;
    return e;
}

QFactored hook_denominator(const Partition& outer, std::int64_t n, std::int64_t a,
                           std::int64_t c) {
    QFactored f;
    for (const Cell& cell : outer.cells()) {
        if (in_low_rectangle(cell, n, a, c)) continue;
        f *= QFactored::one_minus_qk(hook_length(outer, cell), -1);
    }
    return f;
}

QFactored triple_product(std::int64_t n, std::int64_t a, std::int64_t c, std::int64_t m) {
    QFactored f;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = 1; j <= a; ++j)
            for (std::int64_t k = 1; k <= c; ++k) {
                f *= QFactored::one_minus_qk(m * (i + j + k - 1));
                f *= QFactored::one_minus_qk(m * (i + j + k - 2), -1);
            }
    return f;
}

} // namespace

BigInt f_rho(const RhoParams& p) {
    const auto [n, a, b, c, d] = p;
    if (a < 1 || c < 1) throw InvalidParameters("f_rho requires a >= 1 and c >= 1");
    SkewShape shape = build_rho(n, a, b, c, d);
    BigRat v(factorial(shape.size()));
    v *= BigRat(phi(n) * phi(a) * phi(b) * phi(c) * phi(d));
    v *= BigRat(phi(n + a + c) * phi(n + b + d) * phi(n + a + b + c + d));
    v /= BigRat(phi(a + c) * phi(b + d) * phi(n + a + b) * phi(n + c + d) *
                phi(2 * n + a + b + c + d));
    std::int64_t s = n + a + b + c + d;
    BigInt poly = BigInt(n) * s * (BigInt(n) * s + (a + c) * (b + d)) +
                  BigInt(b) * d * (a + c - 1) * (a + c + 1);
    v *= make_rat(BigInt(a) * c * poly, BigInt(a + c - 1) * (a + c + 1));
    return as_integer(v, "f_rho");
}

BigInt f_rho_alt(const RhoParams& p) { return f_rho({p.n, p.a, p.c, p.b, p.d}); }

BigInt f_rho_conjecture11(std::int64_t a, std::int64_t n) {
    if (a < 1) throw InvalidParameters("f_rho_conjecture11 requires a >= 1");
    SkewShape shape = build_rho(n, a, a, a, a);
    BigRat v(factorial(shape.size()));
    v *= BigRat(pow_int(phi(a), 4) * phi(n) * phi(n + 4 * a));
    v /= BigRat(pow_int(phi(2 * a), 2) * phi(2 * n + 4 * a));
    BigInt u = BigInt(n) * n + 4 * a * n + 2 * a * a;
    v *= make_rat(BigInt(a) * a * (u * u - BigInt(a) * a), BigInt(4) * a * a - 1);
    return as_integer(v, "f_rho_conjecture11");
}

BigInt g_v_hook(const VParams& p) {
    const auto [n, a, b, m] = p;
    ShiftedSkewShape shape = build_v(n, a, b, m);
    const StrictPartition& outer = shape.outer();
    // The excluded region is the inner staircase pushed n columns right,
    // the fully excited image of delta_{a+1}*. At n = 0 it swallows
    // diagonal cells, each of which cancels one factor of 2.
    std::vector<Cell> dcells;
    for (std::int64_t i = 1; i <= a; ++i)
        for (std::int64_t j = i; j <= a; ++j) dcells.push_back({i, n + j});
    CellSet d{std::move(dcells)};
    std::int64_t diagonal_in_d = 0;
    for (const Cell& cell : d.cells())
        if (cell.row == cell.col && outer.has_cell(cell)) ++diagonal_in_d;
    BigRat v = make_rat(factorial(shape.size()), pow_int(BigInt(2), a - diagonal_in_d));
    v *= make_rat(phi(n + 2 * a) * phi(a), phi(2 * a) * phi(n + a));
    v *= make_rat(gimel(2 * a) * gimel(n), gimel(n + 2 * a));
    for (const Cell& cell : outer.cells()) {
        if (d.contains(cell)) continue;
        v /= BigRat(shifted_hook_length(outer, cell));
    }
    return as_integer(v, "g_v_hook");
}

BigInt g_v_closed(const VParams& p) {
    const auto [n, a, b, m] = p;
    ShiftedSkewShape shape = build_v(n, a, b, m);
    BigRat v = make_rat(factorial(shape.size()), pow_int(BigInt(2), a));
    v *= make_rat(phi(n + 2 * a) * phi(a), phi(2 * a) * phi(n + a));
    v *= make_rat(gimel(2 * a) * gimel(n), gimel(n + 2 * a));
    BigRat num(pow_int(BigInt(m), (n + a) * (n + a - 1) / 2) * phi(n + a));
    for (std::int64_t i = 1; i <= a; ++i)
        for (std::int64_t j = 0; j <= i - 1; ++j)
            num *= BigRat(2 * (b + 1) + (n + i + j - 1) * m);
    BigRat den(1);
    for (std::int64_t i = 0; i <= n + a - 1; ++i) den *= BigRat(factorial(b + m * i));
    for (std::int64_t i = 0; i <= n + a - 1; ++i) den *= BigRat(b + 1 + m * i);
    for (std::int64_t i = 1; i <= n + a - 1; ++i)
        for (std::int64_t j = 0; j <= i - 1; ++j) den *= BigRat(2 * (b + 1) + (i + j) * m);
    v *= num / den;
    return as_integer(v, "g_v_closed");
}

QSeries s_m_bounded(const MParams& p, std::int64_t N) {
    const auto [n, a, b, c, d, m] = p;
    if (m != 1) throw InvalidParameters("the bounded-entry product requires m = 1");
    if (N < 0) throw InvalidParameters("entry bound must be nonnegative");
    SkewShape shape = build_m(n, a, b, c, d, 1);
    QFactored f(BigRat(1), skew_exponent(shape));
    for (std::int64_t i = 1; i <= b; ++i) f *= poch(N - a + 1 + i, a);
    for (std::int64_t i = 1; i <= d; ++i) f *= poch(N + 2 - i, c);
    for (std::int64_t i = 1; i <= n; ++i) f *= poch(N - n - a - d + 1 + i, n + a + b + c + d);
    f *= triple_product(n, a, c, 1);
    f *= hook_denominator(shape.outer(), n, a, c);
    return f.to_polynomial();
}

QFactored s_m_gf_factored(const MParams& p) {
    const auto [n, a, b, c, d, m] = p;
    SkewShape shape = build_m(n, a, b, c, d, m);
    QFactored f(BigRat(1), skew_exponent(shape));
    f *= triple_product(n, a, c, m);
    f *= hook_denominator(shape.outer(), n, a, c);
    return f;
}

QSeries s_m_gf(const MParams& p, std::int64_t T) { return s_m_gf_factored(p).expand(T); }

XQSeries trace_gf_formula(const MParams& p, std::int64_t T) {
    const auto [n, a, b, c, d, m] = p;
    SkewShape shape = build_m(n, a, b, c, d, m);
    const Partition& outer = shape.outer();
    XQSeries out = XQSeries::term(n * a + n * (n - 1) / 2,
                                  QSeries::monomial(BigRat(1), skew_exponent(shape), T));
    out *= triple_product(n, a, c, m).expand(T);
    for (const Cell& cell : outer.cells()) {
        if (in_low_rectangle(cell, n, a, c)) continue;
        std::int64_t h = hook_length(outer, cell);
        bool chi = cell.row <= n + a && cell.col <= n + c;
        if (chi)
            out = out.times_inv_one_minus_xq(1, h);
        else
            out *= QSeries(BigRat(1), T).times_inv_one_minus_qk(h);
    }
    return out;
}

QSeries fixed_diag_rhs(oracle::Kind kind, int n, const Partition& lam, const Partition& diag,
                       std::int64_t T) {
    if (n < 0) throw InvalidParameters("fixed_diag_rhs needs n >= 0");
    if (lam.length() > n || diag.length() > n)
        throw InvalidParameters("lam and diag must have at most n parts");
    if (n == 0) return QSeries(BigRat(1), T);

    std::vector<std::int64_t> nu(static_cast<std::size_t>(n));
    std::int64_t exponent = 0;
    switch (kind) {
        case oracle::Kind::RPP: {
            // pinning the reverse diagonal of the RPP to diag
            Partition staircase = add(lam, delta(std::int64_t(n) + 1));
            exponent -= nn(staircase);
            for (int i = 1; i <= n; ++i) nu[std::size_t(i - 1)] = diag.part(i) + (n - i);
            for (std::int64_t e : nu) exponent += e;
            break;
        }
        case oracle::Kind::SSYT: {
            for (int i = 1; i <= n; ++i) nu[std::size_t(i - 1)] = diag.part(i);
            exponent += diag.size();
            break;
        }
        case oracle::Kind::RST: {
            for (int i = 1; i <= n; ++i) nu[std::size_t(i - 1)] = diag.part(i);
            exponent += diag.size() + nn(lam.conjugate()) - nn(lam) + std::int64_t(n) * lam.size();
            std::int64_t nn1 = n + 1;
            exponent += nn1 * (nn1 - 1) * (nn1 - 2) / 6; // binom(n+1, 3)
            break;
        }
    }
    QSeries a = alternant(lam, nu);
    if (a.is_zero()) return QSeries::zero(T);

    QFactored denom;
    for (int j = 1; j <= n; ++j) denom *= qq(lam.part(j) + n - j);
    std::int64_t t_inv = T - exponent - a.low();
    if (t_inv < 0) return QSeries::zero(T);
    QSeries inv = (QFactored() / denom).expand(t_inv);
    return (a * inv).shifted(exponent).truncated(T);
}

QFactored macmahon_box(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 0 || b < 0 || c < 0) throw InvalidParameters("box dimensions must be nonnegative");
    QFactored f;
    for (std::int64_t i = 1; i <= a; ++i)
        for (std::int64_t j = 1; j <= b; ++j)
            for (std::int64_t k = 1; k <= c; ++k) {
                f *= QFactored::one_minus_qk(i + j + k - 1);
                f *= QFactored::one_minus_qk(i + j + k - 2, -1);
            }
    return f;
}

QFactored ssyt_box(std::int64_t a, std::int64_t b, std::int64_t c) {
    QFactored f = macmahon_box(a, b, c);
    f.shift_q(b * (a * (a - 1) / 2));
    return f;
}

} // namespace tforge::formulas
