#include "tforge/qcalculus.hpp"

#include <algorithm>

namespace tforge::qcalc {

namespace {

BigRat rat_abs(const BigRat& x) { return x < 0 ? BigRat(-x) : x; }

void check_point(const QPoint& pt) {
    if (pt.q <= 0 || pt.q >= 1) throw InvalidParameters("q must satisfy 0 < q < 1");
    if (pt.depth < 10) throw InvalidParameters("lattice depth too small");
}

// Decay watchdog for a truncated geometric-type sum: compares the largest
// |term| of the final window against the window before it. Window maxima
// are robust against isolated dips where a factor crosses zero.
struct TailMonitor {
    BigRat final_max{0}, earlier_max{0};
    void observe(int i, int depth, const BigRat& magnitude) {
        if (i >= depth - 4) {
            if (magnitude > final_max) final_max = magnitude;
        } else if (i >= depth - 9) {
            if (magnitude > earlier_max) earlier_max = magnitude;
        }
    }
    // Tail of sum |t_i| for i past the depth, assuming |t| <= q * previous
    // once the terms have stabilized.
    BigRat bound(const BigRat& q) const {
        if (final_max > earlier_max)
            throw DivergenceSuspected(
                "lattice terms failed to decrease near the truncation depth");
        return final_max * q / (BigRat(1) - q);
    }
};

// One truncated branch (1-q) * sum_i g(p q^i) p q^i with a geometric bound
// on the dropped tail.
struct Branch {
    BigRat value{0};
    BigRat tail{0};
};

template <class Eval>
Branch branch_sum(const Eval& g, const BigRat& p, const QPoint& pt) {
    Branch out;
    if (p == 0) return out;
    const BigRat one_minus_q = BigRat(1) - pt.q;
    BigRat x = p;
    TailMonitor monitor;
    for (int i = 0; i <= pt.depth; ++i) {
        BigRat term = one_minus_q * x * g(x);
        out.value += term;
        monitor.observe(i, pt.depth, rat_abs(term));
        x *= pt.q;
    }
    out.tail = monitor.bound(pt.q);
    return out;
}

} // namespace

QIntegralResult q_integral(const Fn1& f, const BigRat& a, const BigRat& b, const QPoint& pt) {
    check_point(pt);
    Branch up = branch_sum([&](const BigRat& x) { return f(x); }, b, pt);
    Branch lo = branch_sum([&](const BigRat& x) { return f(x); }, a, pt);
    return {up.value - lo.value, up.tail + lo.tail};
}

namespace {

// Iterated signed lattice for a <= x_1 <= ... <= x_level <= upper; fills
// xs[level-1] downward and calls f when level == 0.
QIntegralResult ordered_rec(const FnN& f, int level, const BigRat& lower, const BigRat& upper,
                            std::vector<BigRat>& xs, const QPoint& pt) {
    if (level == 0) return {f(xs), BigRat(0)};
    auto eval_at = [&](const BigRat& x) -> QIntegralResult {
        xs[std::size_t(level - 1)] = x;
        return ordered_rec(f, level - 1, lower, x, xs, pt);
    };
    QIntegralResult out{BigRat(0), BigRat(0)};
    const BigRat one_minus_q = BigRat(1) - pt.q;
    for (int branch = 0; branch < 2; ++branch) {
        const BigRat& p = branch == 0 ? upper : lower;
        if (p == 0) continue;
        BigRat x = p;
        TailMonitor monitor;
        for (int i = 0; i <= pt.depth; ++i) {
            QIntegralResult inner = eval_at(x);
            BigRat term = one_minus_q * x * inner.value;
            out.tail_bound += one_minus_q * rat_abs(x) * inner.tail_bound;
            if (branch == 0)
                out.value += term;
            else
                out.value -= term;
            monitor.observe(i, pt.depth, rat_abs(term));
            x *= pt.q;
        }
        out.tail_bound += monitor.bound(pt.q);
    }
    return out;
}

} // namespace

QIntegralResult q_integral_ordered(const FnN& f, int n, const BigRat& a, const BigRat& b,
                                   const QPoint& pt) {
    check_point(pt);
    if (n < 1) throw InvalidParameters("dimension must be at least 1");
    std::vector<BigRat> xs(static_cast<std::size_t>(n));
    return ordered_rec(f, n, a, b, xs, pt);
}

QIntegralResult q_integral_simplex(const FnN& f, int n, const QPoint& pt) {
    return q_integral_ordered(f, n, BigRat(0), BigRat(1), pt);
}

BigRat parn_lattice_sum(const FnN& f, int n, const QPoint& pt) {
    check_point(pt);
    if (n < 0) throw InvalidParameters("dimension must be nonnegative");
    // x_k = q^{mu_k + n - k} listed ascending in value, i.e. xs[0] carries
    // the largest exponent mu_1 + n - 1.
    std::vector<std::int64_t> mu(std::size_t(n), 0);
    std::vector<BigRat> xs(static_cast<std::size_t>(n));
    BigRat total(0);
    auto rec = [&](auto&& self, int k, std::int64_t hi) -> void {
        if (k == n) {
            std::int64_t weight = 0;
            for (int i = 0; i < n; ++i) {
                std::int64_t e = mu[std::size_t(i)] + (n - 1 - i);
                weight += e;
                xs[std::size_t(i)] = pow_rat(pt.q, e);
            }
            total += pow_rat(pt.q, weight) * f(xs);
            return;
        }
        for (std::int64_t v = 0; v <= hi; ++v) {
            mu[std::size_t(k)] = v;
            self(self, k + 1, v);
        }
    };
    // mu is enumerated weakly decreasing with mu_1 <= depth.
    auto outer = [&]() {
        for (std::int64_t v = 0; v <= pt.depth; ++v) {
            if (n == 0) break;
            mu[0] = v;
            rec(rec, 1, v);
        }
        if (n == 0) total += f(xs);
    };
    outer();
    return total;
}

BigRat numeric_poch(const BigRat& x, const BigRat& q, std::int64_t k) {
    BigRat v(1), p(1);
    for (std::int64_t t = 0; t < k; ++t) {
        v *= BigRat(1) - x * p;
        p *= q;
    }
    return v;
}

BigRat q_selberg_rhs(int n, std::int64_t alpha, std::int64_t beta, const BigRat& a,
                     const BigRat& b, const BigRat& q) {
    if (n < 1) throw InvalidParameters("q-Selberg needs n >= 1");
    if (alpha < 1 || beta < 1) throw InvalidParameters("q-Selberg needs alpha, beta >= 1");
    if (a == b) throw PoleError("q-Selberg closed form has a pole at a == b");
    auto qq_num = [&](std::int64_t k) { return numeric_poch(q, q, k); };
    BigRat v = pow_rat(q, std::int64_t(n) * (n - 1) * (n - 2) / 6); // q^binom(n,3)
    if ((std::int64_t(n) * (n - 1) / 2) % 2 != 0) v = -v;
    for (std::int64_t i = 0; i <= n - 1; ++i) {
        v *= pow_rat(BigRat(1) - q, n - 2 * i);
        v *= qq_num(alpha + i - 1) * qq_num(beta + i - 1) * qq_num(i);
        v *= numeric_poch(a / b, q, beta + i) * numeric_poch(b / a, q, alpha + i);
        v *= pow_rat(a * b, i + 1);
        v /= (a - b) * qq_num(alpha + beta + n + i - 2);
    }
    return v;
}

SqrtPiValue gamma_half(std::int64_t twice) {
    if (twice <= 0) throw InvalidParameters("Gamma argument must be positive");
    if (twice % 2 == 0) return {BigRat(factorial(twice / 2 - 1)), 0};
    std::int64_t m = (twice - 1) / 2;
    return {make_rat(factorial(2 * m), pow_int(BigInt(4), m) * factorial(m)), 1};
}

std::pair<SqrtPiValue, SqrtPiValue> selberg_gamma_forms(int n, std::int64_t a, std::int64_t b,
                                                        std::int64_t m) {
    if (n < 0 || a < 0 || b < 0 || m < 1) throw InvalidParameters("bad Selberg moment parameters");
    if ((2 * (b + 1)) % m != 0)
        throw InvalidParameters("(b+1)/m must be a half-integer for the Gamma form");
    std::int64_t twice_beta0 = 2 * (b + 1) / m;

    SqrtPiValue gamma_form{make_rat(BigInt(1), factorial(n)), 0};
    for (std::int64_t j = 1; j <= n; ++j) {
        gamma_form *= gamma_half(twice_beta0 + (j - 1));
        gamma_form *= gamma_half(2 * (a + 1) + (j - 1));
        gamma_form *= gamma_half(2 + j);
        gamma_form /= gamma_half(twice_beta0 + 2 * (a + 1) + (n + j - 2));
        gamma_form /= gamma_half(3);
    }

    SqrtPiValue cases{BigRat(0), 0};
    if (n % 2 == 0) {
        std::int64_t N = n / 2;
        BigRat num = BigRat(pow_int(BigInt(m), N + 2 * N * (N + a)) * pow_int(BigInt(2), N));
        num *= BigRat(phi(2 * N + 2 * a) * gimel(2 * a) * gimel(2 * N));
        BigRat den = BigRat(phi(2 * a) * gimel(2 * N + 2 * a));
        for (std::int64_t i = 0; i <= N - 1; ++i) den *= BigRat(b + 1 + m * i);
        for (std::int64_t j = 1; j <= 2 * N; ++j)
            for (std::int64_t i = 0; i <= N + a - 1; ++i)
                den *= BigRat(2 * (b + 1) + (2 * i + j) * m);
        cases = {num / den, 0};
    } else {
        std::int64_t N = (n - 1) / 2;
        BigRat num =
            BigRat(pow_int(BigInt(m), (2 * N + 1) * (N + a + 1)) * pow_int(BigInt(2), 2 * N + 1));
        num *= BigRat(phi(2 * N + 2 * a + 1) * gimel(2 * a) * gimel(2 * N + 1));
        BigRat den = BigRat(phi(2 * a) * gimel(2 * N + 2 * a + 1));
        for (std::int64_t j = 1; j <= 2 * N + 1; ++j)
            for (std::int64_t i = 0; i <= N + a; ++i)
                den *= BigRat(2 * (b + 1) + (2 * i + j - 1) * m);
        cases = {num / den, 0};
    }
    return {gamma_form, cases};
}

BigRat warnaar_rhs(const Partition& lam, std::int64_t alpha, std::int64_t beta, int n) {
    if (lam.length() > n) throw InvalidParameters("partition has more parts than variables");
    BigRat v(1);
    for (const Cell& cell : lam.cells()) {
        v *= BigRat(n - cell.row + cell.col);
        v /= BigRat(hook_length(lam, cell));
    }
    for (int i = 1; i <= n; ++i) {
        std::int64_t top1 = alpha + n - i + lam.part(i) - 1;
        std::int64_t top2 = beta + i - 2;
        std::int64_t bot = alpha + beta + 2 * n - i - 2 + lam.part(i);
        if (top1 < 0 || top2 < 0 || bot < 0)
            throw InvalidParameters("factorial argument out of range in Warnaar product");
        v *= make_rat(factorial(top1) * factorial(top2) * factorial(i), factorial(bot));
    }
    return v;
}

RhoIntegralLedger rho_integral_identity(std::int64_t n, std::int64_t a, std::int64_t b,
                                        std::int64_t c, std::int64_t d) {
    if (n < 0 || a < 1 || b < 0 || c < 1 || d < 0)
        throw InvalidParameters("integral ledger needs a, c >= 1 and nonnegative parameters");
    std::int64_t s = n + a + b + c + d;
    const BigRat phis_low = BigRat(phi(n + 1) * phi(n + a + c) * phi(n + b + d));
    const BigRat ac_bd = BigRat(BigInt(a) * c);

    RhoIntegralLedger L;
    // binom(n,2) s_{(2^{n-2},1,1)} moment
    L.i1 = ac_bd * BigRat(binomial(n, 2)) *
           make_rat(factorial(s + 1), factorial(a + c + 1)) * phis_low *
           make_rat(phi(s - 1), phi(a + c - 1) * phi(b + d) * phi(n + s));
    // binom(n+1,2) s_{(2^{n-1})} moment
    L.i2 = ac_bd * BigRat(binomial(n + 1, 2)) *
           make_rat(factorial(a + c - 2), factorial(s - 2)) * phis_low *
           make_rat(phi(s + 1), phi(a + c + 1) * phi(b + d) * phi(n + s));
    // n(b+d) s_{(1^{n-1})} moment
    L.i3 = ac_bd * BigRat(BigInt(n) * (b + d)) *
           make_rat(factorial(a + c - 1), factorial(s - 1)) * phis_low *
           make_rat(phi(s + 1), phi(a + c + 1) * phi(b + d) * phi(n + s));
    // plain moment
    L.i4 = BigRat(BigInt(a) * b * c * d) * phis_low *
           make_rat(phi(s), phi(a + c) * phi(b + d) * phi(n + s));
    L.sum = L.i1 + L.i2 + L.i3 + L.i4;

    BigInt poly = BigInt(n) * s * (BigInt(n) * s + (a + c) * (b + d)) +
                  BigInt(b) * d * (a + c - 1) * (a + c + 1);
    L.combined = ac_bd / BigRat(BigInt(a + c - 1) * (a + c + 1)) * phis_low *
                 make_rat(phi(s), phi(a + c) * phi(b + d) * phi(n + s)) * BigRat(poly);
    if (L.sum != L.combined)
        throw MismatchError("Selberg moment addends do not sum to the combined closed form");
    return L;
}

} // namespace tforge::qcalc
