// Acceptance gate: every closed form in the library is checked against the
// brute-force oracles, exactly, at desk scale. One line per criterion.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <thread>
#include <iostream>
#include <string>
#include <vector>

#include "tforge/config.hpp"
#include "tforge/excited.hpp"
#include "tforge/formulas.hpp"
#include "tforge/oracle.hpp"
#include "tforge/qcalculus.hpp"
#include "tforge/verify.hpp"

using namespace tforge;
using oracle::Kind;

namespace {

std::vector<Partition> partitions_up_to(std::int64_t max) {
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::int64_t remaining, std::int64_t maxpart) -> void {
        out.emplace_back(Partition(std::vector<std::int64_t>(cur)));
        for (std::int64_t v = std::min(remaining, maxpart); v >= 1; --v) {
            cur.push_back(v);
            self(self, remaining - v, v);
            cur.pop_back();
        }
    };
    rec(rec, max, max);
    return out;
}

std::vector<Partition> subshapes(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, int row, std::int64_t hi) -> void {
        if (row > outer.length()) {
            out.emplace_back(Partition(std::vector<std::int64_t>(cur)));
            return;
        }
        for (std::int64_t v = std::min(hi, outer.part(row)); v >= 0; --v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 1, outer.length() ? outer.part(1) : 0);
    return out;
}

std::vector<Partition> partitions_in_box(int n, std::int64_t maxpart) {
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, int slots, std::int64_t hi) -> void {
        out.emplace_back(Partition(std::vector<std::int64_t>(cur)));
        if (slots == 0) return;
        for (std::int64_t v = hi; v >= 1; --v) {
            cur.push_back(v);
            self(self, slots - 1, v);
            cur.pop_back();
        }
    };
    rec(rec, n, maxpart);
    return out;
}

std::int64_t rho_size(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c,
                      std::int64_t d) {
    return (n + a) * (n + b + c) + d * (n + c) - (a * c + 2);
}

std::vector<formulas::RhoParams> rho_grid(std::int64_t max_cells) {
    std::vector<formulas::RhoParams> grid;
    for (std::int64_t n = 0; n <= max_cells; ++n)
        for (std::int64_t a = 1; a <= max_cells; ++a)
            for (std::int64_t b = 0; b <= max_cells; ++b)
                for (std::int64_t c = 1; c <= max_cells; ++c)
                    for (std::int64_t d = 0; d <= max_cells; ++d) {
                        if ((n + a) * (n + b + c) > max_cells + a * c + 2) break;
                        std::int64_t size = rho_size(n, a, b, c, d);
                        if (size < 0 || size > max_cells) continue;
                        try {
                            (void)build_rho(n, a, b, c, d);
                        } catch (const InvalidParameters&) {
                            continue;
                        }
                        grid.push_back({n, a, b, c, d});
                    }
    return grid;
}

std::vector<formulas::VParams> v_grid(std::int64_t max_cells, std::int64_t max_m) {
    std::vector<formulas::VParams> grid;
    for (std::int64_t m = 1; m <= max_m; ++m)
        for (std::int64_t n = 0; n <= max_cells; ++n)
            for (std::int64_t a = 0; a <= max_cells; ++a)
                for (std::int64_t b = 0; b <= max_cells; ++b) {
                    ShiftedSkewShape shape = build_v(n, a, b, m);
                    if (shape.size() > max_cells) break;
                    grid.push_back({n, a, b, m});
                }
    return grid;
}

std::vector<formulas::MParams> m_grid(std::int64_t max_sum, std::int64_t max_m) {
    std::vector<formulas::MParams> grid;
    for (std::int64_t n = 0; n <= max_sum; ++n)
        for (std::int64_t a = 0; a + n <= max_sum; ++a)
            for (std::int64_t b = 0; a + b + n <= max_sum; ++b)
                for (std::int64_t c = 0; a + b + c + n <= max_sum; ++c)
                    for (std::int64_t d = 0; a + b + c + d + n <= max_sum; ++d)
                        for (std::int64_t m = 1; m <= max_m; ++m)
                            grid.push_back({n, a, b, c, d, m});
    return grid;
}

struct Criterion {
    int id;
    std::string label;
    std::function<bool(std::string&)> run;
};

bool expect(bool ok, std::string& detail, const std::string& what) {
    if (!ok && detail.empty()) detail = what;
    return ok;
}

// Run fn(i) over [0, n) on a small pool; the first failure message wins.
bool parallel_all(std::size_t n, std::string& detail,
                  const std::function<bool(std::size_t, std::string&)>& fn) {
    unsigned jobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> ok{true};
    std::mutex detail_mutex;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n || !ok.load()) break;
            std::string local;
            bool good = false;
            try {
                good = fn(i, local);
            } catch (const std::exception& e) {
                local = e.what();
            }
            if (!good) {
                std::lock_guard<std::mutex> lock(detail_mutex);
                if (detail.empty()) detail = local.empty() ? "failed" : local;
                ok.store(false);
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return ok.load();
}

} // namespace

int main() {
    config::Caps caps;
    caps.cells = 128;
    caps.weight = 64;
    config::set_caps(caps);

    std::vector<Criterion> criteria;

    criteria.push_back({1, "hook length formula baseline (all |lambda| <= 10)",
                        [](std::string& detail) {
        bool ok = true;
        int checked = 0;
        for (const Partition& lam : partitions_up_to(10)) {
            BigRat v(factorial(lam.size()));
            for (const Cell& c : lam.cells()) v /= BigRat(hook_length(lam, c));
            BigInt predicted = as_integer(v, "hook product");
            BigInt counted = oracle::count_syt(SkewShape{lam, Partition{}});
            ++checked;
            ok &= expect(predicted == counted, detail,
                         "hook formula off at " + lam.str());
        }
        Partition spec_case{{4, 3, 1}};
        ok &= expect(oracle::count_syt(SkewShape{spec_case, Partition{}}) == 70, detail,
                     "f(4,3,1) != 70");
        ok &= expect(checked >= 42, detail, "grid unexpectedly small");
        return ok;
    }});

    criteria.push_back({2, "excited hook sum = SYT count (all skew, |outer| <= 8)",
                        [](std::string& detail) {
        bool ok = true;
        long cases = 0;
        for (const Partition& outer : partitions_up_to(8)) {
            if (outer.size() == 0) continue;
            for (const Partition& inner : subshapes(outer)) {
                SkewShape shape{outer, inner};
                ++cases;
                ok &= expect(excited::naruse_count(shape) == oracle::count_syt(shape), detail,
                             "disagreement at " + shape.str());
                if (!ok) return ok;
            }
        }
        ok &= expect(cases > 500, detail, "sweep unexpectedly small");
        return ok;
    }});

    criteria.push_back({3, "excited q-analog = SSYT series through q^12 (|outer| <= 6)",
                        [](std::string& detail) {
        const std::int64_t T = 12;
        for (const Partition& outer : partitions_up_to(6)) {
            if (outer.size() == 0) continue;
            for (const Partition& inner : subshapes(outer)) {
                SkewShape shape{outer, inner};
                QSeries lhs = excited::naruse_q_series(shape, T);
                QSeries rhs = oracle::gf_tableaux(shape, Kind::SSYT, T);
                if (!lhs.equal_through(rhs, T)) {
                    detail = "series differ at " + shape.str();
                    return false;
                }
            }
        }
        return true;
    }});

    criteria.push_back({4, "rho product formula = SYT count (|rho| <= 22, a,c >= 1)",
                        [](std::string& detail) {
        auto grid = rho_grid(22);
        bool ok = expect(!grid.empty(), detail, "empty grid");
        bool saw16 = false, saw5 = false;
        for (const auto& p : grid) {
            BigInt f = formulas::f_rho(p);
            BigInt o = oracle::count_syt(build_rho(p.n, p.a, p.b, p.c, p.d));
            if (f != o) {
                detail = "mismatch at n=" + std::to_string(p.n) + ",a=" + std::to_string(p.a) +
                         ",b=" + std::to_string(p.b) + ",c=" + std::to_string(p.c) +
                         ",d=" + std::to_string(p.d);
                return false;
            }
            if (p.n == 1 && p.a == 1 && p.b == 1 && p.c == 1 && p.d == 1) saw16 = (f == 16);
            if (p.n == 1 && p.a == 1 && p.b == 2 && p.c == 1 && p.d == 0) saw5 = (f == 5);
        }
        ok &= expect(saw16, detail, "(1,1,1,1,1) -> 16 not covered");
        ok &= expect(saw5, detail, "(1,1,2,1,0) -> 5 not covered");
        return ok;
    }});

    criteria.push_back({5, "single-parameter form matches the rho formula (a <= 3, n <= 4)",
                        [](std::string& detail) {
        for (std::int64_t a = 1; a <= 3; ++a)
            for (std::int64_t n = 1; n <= 4; ++n)
                if (formulas::f_rho_conjecture11(a, n) != formulas::f_rho({n, a, a, a, a})) {
                    detail = "a=" + std::to_string(a) + ", n=" + std::to_string(n);
                    return false;
                }
        return true;
    }});

    criteria.push_back({6, "V hook and closed forms = shifted SYT count (|pi| <= 16, m <= 3)",
                        [](std::string& detail) {
        auto grid = v_grid(16, 3);
        for (const auto& p : grid) {
            BigInt hook = formulas::g_v_hook(p);
            BigInt closed = formulas::g_v_closed(p);
            BigInt o = oracle::count_syt(build_v(p.n, p.a, p.b, p.m));
            if (hook != closed || hook != o) {
                detail = "mismatch at n=" + std::to_string(p.n) + ",a=" + std::to_string(p.a) +
                         ",b=" + std::to_string(p.b) + ",m=" + std::to_string(p.m) + ": hook " +
                         hook.get_str() + ", closed " + closed.get_str() + ", oracle " +
                         o.get_str();
                return false;
            }
        }
        return expect(grid.size() > 50, detail, "grid unexpectedly small");
    }});

    criteria.push_back({7, "bounded-entry product = bounded SSYT polynomial (sum <= 5, N <= 5)",
                        [](std::string& detail) {
        for (const auto& p : m_grid(5, 1))
            for (std::int64_t N = 0; N <= 5; ++N) {
                QSeries f = formulas::s_m_bounded(p, N);
                QSeries o = oracle::bounded_polynomial(build_m(p.n, p.a, p.b, p.c, p.d, 1),
                                                       Kind::SSYT, N);
                if (!(f == o)) {
                    detail = "mismatch at n=" + std::to_string(p.n) + ",a=" + std::to_string(p.a) +
                             ",b=" + std::to_string(p.b) + ",c=" + std::to_string(p.c) +
                             ",d=" + std::to_string(p.d) + ",N=" + std::to_string(N);
                    return false;
                }
            }
        return true;
    }});

    criteria.push_back({8, "SSYT product and trace formula through q^8 (sum <= 5, m <= 3)",
                        [](std::string& detail) {
        const std::int64_t T = 8;
        for (const auto& p : m_grid(5, 3)) {
            SkewShape shape = build_m(p.n, p.a, p.b, p.c, p.d, p.m);
            QSeries f = formulas::s_m_gf(p, T);
            if (!f.equal_through(oracle::gf_tableaux(shape, Kind::SSYT, T), T)) {
                detail = "plain series mismatch at m=" + std::to_string(p.m) +
                         " shape " + shape.str();
                return false;
            }
            XQSeries tf = formulas::trace_gf_formula(p, T);
            if (!tf.at_x1().equal_through(f, T)) {
                detail = "trace formula at x=1 differs from the plain series";
                return false;
            }
            if (!tf.equal_through(oracle::gf_trace(p.n, p.a, p.b, p.c, p.d, p.m, T), T)) {
                detail = "trace series mismatch at shape " + shape.str();
                return false;
            }
        }
        return true;
    }});

    criteria.push_back({9, "fixed-diagonal closed forms through q^10 and the box reduction",
                        [](std::string& detail) {
        const std::int64_t T = 10;
        for (int n = 1; n <= 3; ++n)
            for (const Partition& lam : partitions_in_box(n, 3))
                for (const Partition& diag : partitions_in_box(n, 3))
                    for (Kind kind : {Kind::RPP, Kind::SSYT, Kind::RST}) {
                        QSeries f = formulas::fixed_diag_rhs(kind, n, lam, diag, T);
                        std::vector<std::int64_t> parts(static_cast<std::size_t>(n));
                        std::vector<std::int64_t> rdiag(static_cast<std::size_t>(n));
                        for (int i = 1; i <= n; ++i) {
                            parts[std::size_t(i - 1)] = lam.part(i) + (n + 1 - i);
                            rdiag[std::size_t(i - 1)] = diag.part(i);
                        }
                        QSeries o = oracle::gf_fixed_diag(StrictPartition{std::move(parts)}, kind,
                                                          rdiag, T);
                        if (!f.equal_through(o, T)) {
                            detail = "kind mismatch at n=" + std::to_string(n) + " lam=" +
                                     lam.str() + " diag=" + diag.str();
                            return false;
                        }
                    }
        for (std::int64_t a = 1; a <= 3; ++a)
            for (std::int64_t b = 1; b <= 3; ++b)
                for (std::int64_t c = 0; c <= 3; ++c) {
                    int n = int(a + b);
                    std::vector<std::int64_t> diag_parts(std::size_t(b), c);
                    std::int64_t shift = c * (b * (b + 1) / 2);
                    std::int64_t horizon = a * b * c + shift;
                    QSeries rhs = formulas::fixed_diag_rhs(
                        Kind::RPP, n, Partition{}, Partition{std::move(diag_parts)}, horizon);
                    QSeries box = oracle::count_box_rpp(a, b, c).shifted(shift);
                    if (!rhs.equal_through(box.truncated(horizon), horizon)) {
                        detail = "box reduction fails at a=" + std::to_string(a) +
                                 ",b=" + std::to_string(b) + ",c=" + std::to_string(c);
                        return false;
                    }
                }
        return true;
    }});

    criteria.push_back({10, "box product expands to the boxed RPP polynomial (a,b,c <= 4)",
                        [](std::string& detail) {
        for (std::int64_t a = 0; a <= 4; ++a)
            for (std::int64_t b = 0; b <= 4; ++b)
                for (std::int64_t c = 0; c <= 4; ++c)
                    if (!(formulas::macmahon_box(a, b, c).to_polynomial() ==
                          oracle::count_box_rpp(a, b, c))) {
                        detail = "box mismatch at " + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c);
                        return false;
                    }
        return expect(limit_q1(formulas::macmahon_box(2, 2, 2), 0) == 20, detail,
                      "2x2x2 box does not total 20 at q -> 1");
    }});

    criteria.push_back({11, "q-Selberg lattice sum within its tail bound (depth 40, q = 1/2)",
                        [](std::string& detail) {
        BigRat q(1, 2);
        qcalc::QPoint pt{q, 40};
        BigRat b = pow_rat(q, 1), a = pow_rat(q, 3);
        bool ok = expect(qcalc::q_selberg_rhs(1, 1, 1, a, b, q) == b - a, detail,
                         "n=1, alpha=beta=1 closed form is not b-a");
        BigRat budget(1, 100000000); // 1e-8
        for (int n : {1, 2})
            for (std::int64_t alpha = 1; alpha <= 3; ++alpha)
                for (std::int64_t beta = 1; beta <= 3; ++beta) {
                    auto integrand = [&](const std::vector<BigRat>& xs) {
                        BigRat v(1);
                        for (std::size_t i = 0; i < xs.size(); ++i)
                            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                                BigRat dd = xs[j] - xs[i];
                                v *= dd * dd;
                            }
                        for (const BigRat& x : xs)
                            v *= qcalc::numeric_poch(q * x / a, q, alpha - 1) *
                                 qcalc::numeric_poch(q * x / b, q, beta - 1);
                        return v;
                    };
                    auto lhs = qcalc::q_integral_ordered(integrand, n, a, b, pt);
                    BigRat rhs = qcalc::q_selberg_rhs(n, alpha, beta, a, b, q);
                    BigRat diff = lhs.value - rhs;
                    if (diff < 0) diff = -diff;
                    ok &= expect(diff <= lhs.tail_bound, detail,
                                 "lattice sum beyond its tail bound at n=" + std::to_string(n));
                    ok &= expect(lhs.tail_bound <= budget, detail,
                                 "tail bound above 1e-8 at depth 40");
                }
        return ok;
    }});

    criteria.push_back({12, "Selberg moment ledger and the paired Gamma evaluations",
                        [](std::string& detail) {
        for (std::int64_t n = 0; n <= 8; ++n)
            for (std::int64_t a = 1; a <= 8; ++a)
                for (std::int64_t b = 0; b <= 8; ++b)
                    for (std::int64_t c = 1; c <= 8; ++c)
                        for (std::int64_t d = 0; d <= 8; ++d) {
                            if (n + a + b + c + d > 8) continue;
                            try {
                                (void)qcalc::rho_integral_identity(n, a, b, c, d);
                            } catch (const std::exception& e) {
                                detail = std::string("ledger failed: ") + e.what();
                                return false;
                            }
                        }
        for (int n = 0; n <= 4; ++n)
            for (std::int64_t m = 1; m <= 3; ++m)
                for (std::int64_t a = 0; a <= 2; ++a)
                    for (std::int64_t b = 0; b <= 3; ++b) {
                        if ((2 * (b + 1)) % m != 0) continue;
                        auto [gamma_form, cases] = qcalc::selberg_gamma_forms(n, a, b, m);
                        if (!(gamma_form == cases)) {
                            detail = "Gamma pair differs at n=" + std::to_string(n) +
                                     ",a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                                     ",m=" + std::to_string(m);
                            return false;
                        }
                    }
        return true;
    }});

    criteria.push_back({13, "q -> 1 limit bridge reproduces the SYT counts of criteria 4 and 6",
                        [](std::string& detail) {
        // rho instances: the excited-diagram product form, term by term
        auto rhos = rho_grid(22);
        bool ok = parallel_all(rhos.size(), detail, [&](std::size_t i, std::string& local) {
            const auto& p = rhos[i];
            SkewShape shape = build_rho(p.n, p.a, p.b, p.c, p.d);
            BigRat sum(0);
            for (const QFactored& term : excited::naruse_terms(shape))
                sum += limit_q1(term, shape.size());
            if (as_integer(sum, "limit bridge") != formulas::f_rho(p)) {
                local = "rho bridge off at " + shape.str();
                return false;
            }
            return true;
        });
        if (!ok) return false;
        // V instances: the linear-extension numerator over (q;q)_N,
        // monomial by monomial
        auto vs = v_grid(16, 3);
        return parallel_all(vs.size(), detail, [&](std::size_t i, std::string& local) {
            const auto& p = vs[i];
            ShiftedSkewShape shape = build_v(p.n, p.a, p.b, p.m);
            QSeries numerator = oracle::maj_polynomial(shape);
            QFactored inv_qq = QFactored() / qq(shape.size());
            BigRat sum(0);
            for (const auto& [e, coeff] : numerator.terms()) {
                QFactored term = inv_qq;
                term.scale(coeff);
                term.shift_q(e);
                sum += limit_q1(term, shape.size());
            }
            if (as_integer(sum, "limit bridge") != formulas::g_v_hook(p)) {
                local = "V bridge off at n=" + std::to_string(p.n) + ",a=" + std::to_string(p.a) +
                        ",b=" + std::to_string(p.b) + ",m=" + std::to_string(p.m);
                return false;
            }
            return true;
        });
    }});

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2d [%s] %s (%.1fs)%s%s\n", criterion.id, ok ? "PASS" : "FAIL",
                    criterion.label.c_str(), secs, detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
