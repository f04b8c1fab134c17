#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tforge/bigint.hpp"
#include "tforge/shapes.hpp"

namespace tforge::qcalc {

/// Rational lattice base 0 < q < 1 and the truncation depth of every
/// geometric sum.
struct QPoint {
    BigRat q;
    int depth = 40;
};

/// A truncated lattice sum together with a bound on the discarded tail.
struct QIntegralResult {
    BigRat value;
    BigRat tail_bound;
};

using Fn1 = std::function<BigRat(const BigRat&)>;
using FnN = std::function<BigRat(const std::vector<BigRat>&)>;

/// Jackson sum (1-q) sum_i (f(b q^i) b q^i - f(a q^i) a q^i) to the point's
/// depth. Terms must decay geometrically past the burn-in or
/// DivergenceSuspected is thrown.
QIntegralResult q_integral(const Fn1& f, const BigRat& a, const BigRat& b, const QPoint& pt);

/// Iterated q-integral over a <= x_1 <= ... <= x_n <= b.
QIntegralResult q_integral_ordered(const FnN& f, int n, const BigRat& a, const BigRat& b,
                                   const QPoint& pt);

/// Iterated q-integral over 0 <= x_1 <= ... <= x_n <= 1.
QIntegralResult q_integral_simplex(const FnN& f, int n, const QPoint& pt);

/// Partial sum of sum_{mu in Par_n, mu_1 <= depth} q^{|mu+delta_n|}
/// f(q^{mu+delta_n}); for f vanishing on coincident coordinates this is the
/// (1-q)^{-n}-normalized simplex integral.
BigRat parn_lattice_sum(const FnN& f, int n, const QPoint& pt);

/// prod_{t=0}^{k-1} (1 - x q^t).
BigRat numeric_poch(const BigRat& x, const BigRat& q, std::int64_t k);

/// Closed form of the n-dimensional q-Selberg integral
/// int_{a<=X<=b} Delta(X)^2 prod (q x/a; q)_{alpha-1} (q x/b; q)_{beta-1} d_qX
/// for positive integers alpha, beta. Throws PoleError when a == b.
BigRat q_selberg_rhs(int n, std::int64_t alpha, std::int64_t beta, const BigRat& a,
                     const BigRat& b, const BigRat& q);

/// Exact element of the ring Q[sqrt(pi), 1/sqrt(pi)]: coef * sqrt(pi)^pow.
struct SqrtPiValue {
    BigRat coef;
    int sqrtpi_pow = 0;
    friend bool operator==(const SqrtPiValue& x, const SqrtPiValue& y) {
        if (x.coef == 0 && y.coef == 0) return true;
        return x.coef == y.coef && x.sqrtpi_pow == y.sqrtpi_pow;
    }
    SqrtPiValue& operator*=(const SqrtPiValue& o) {
        coef *= o.coef;
        sqrtpi_pow += o.sqrtpi_pow;
        return *this;
    }
    SqrtPiValue& operator/=(const SqrtPiValue& o) {
        coef /= o.coef;
        sqrtpi_pow -= o.sqrtpi_pow;
        return *this;
    }
};

/// Gamma(t/2) for positive t, exactly: integer arguments give factorials,
/// half-integers give rational multiples of sqrt(pi).
SqrtPiValue gamma_half(std::int64_t twice_argument);

/// Both printed evaluations of the ordered Selberg moment integral
/// int prod x^{(b+1)/m - 1} (1-x)^a Delta-bar dx: the Gamma-product line and
/// the parity-split factored line. (b+1)/m must be a half-integer.
std::pair<SqrtPiValue, SqrtPiValue> selberg_gamma_forms(int n, std::int64_t a, std::int64_t b,
                                                        std::int64_t m);

/// The Schur-weighted Selberg evaluation
/// prod_{(i,j) in lam} (n-i+j)/h(i,j) *
/// prod_i (alpha+n-i+lam_i-1)! (beta+i-2)! i! / (alpha+beta+2n-i-2+lam_i)!.
BigRat warnaar_rhs(const Partition& lam, std::int64_t alpha, std::int64_t beta, int n);

/// The four Selberg-moment addends behind the rho count, their sum, and the
/// combined closed form; the constructor-level identity sum == combined is
/// asserted (MismatchError otherwise).
struct RhoIntegralLedger {
    BigRat i1, i2, i3, i4, sum, combined;
};
RhoIntegralLedger rho_integral_identity(std::int64_t n, std::int64_t a, std::int64_t b,
                                        std::int64_t c, std::int64_t d);

} // namespace tforge::qcalc
