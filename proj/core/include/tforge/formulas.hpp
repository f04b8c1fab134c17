#pragma once

#include <cstdint>

#include "tforge/bigint.hpp"
#include "tforge/oracle.hpp"
#include "tforge/qfactored.hpp"
#include "tforge/qseries.hpp"
#include "tforge/shapes.hpp"
#include "tforge/xqseries.hpp"

namespace tforge::formulas {

struct RhoParams {
    std::int64_t n, a, b, c, d;
};
struct VParams {
    std::int64_t n, a, b, m;
};
struct MParams {
    std::int64_t n, a, b, c, d, m;
};

/// Number of standard Young tableaux of rho(n,a,b,c,d), as a closed
/// superfactorial product. Requires a, c >= 1.
BigInt f_rho(const RhoParams& p);

/// The same family under the relabeling that pairs (a,b) and (c,d) instead
/// of (a,c) and (b,d); equals f_rho(n, a, c, b, d).
BigInt f_rho_alt(const RhoParams& p);

/// The rho count at b = c = d = a, in its compact single-parameter form.
BigInt f_rho_conjecture11(std::int64_t a, std::int64_t n);

/// SYT count of the shifted skew shape V(n,a,b,m) via shifted hooks over
/// outer* minus the D(n) region.
BigInt g_v_hook(const VParams& p);

/// The same count in fully factored closed form; must equal g_v_hook.
BigInt g_v_closed(const VParams& p);

/// Bounded-entry SSYT generating polynomial of M(n,a,b,c,d,1) with entries
/// at most N; exact polynomial (every pole cancels).
QSeries s_m_bounded(const MParams& p, std::int64_t N);

/// The SSYT generating function of M(n,a,b,c,d,m) as a factored product.
QFactored s_m_gf_factored(const MParams& p);

/// The product expanded through q^T.
QSeries s_m_gf(const MParams& p, std::int64_t T);

/// Trace generating function sum x^{tr} q^{|T|} of M(n,a,b,c,d,m), expanded
/// through q^T; at x = 1 it equals s_m_gf.
XQSeries trace_gf_formula(const MParams& p, std::int64_t T);

/// Fixed-diagonal generating function of the shifted shape
/// (delta_{n+1}+lam)*: the alternant-over-Pochhammer closed forms for the
/// three weak/strict filling kinds, expanded through q^T. For RPP the diag
/// partition pins the reverse diagonal itself; for SSYT/RST it pins rdiag
/// directly (feasible diagonals are diag = mu + delta_n).
QSeries fixed_diag_rhs(oracle::Kind kind, int n, const Partition& lam, const Partition& diag,
                       std::int64_t T);

/// prod_{i<=a, j<=b, k<=c} (1-q^{i+j+k-1})/(1-q^{i+j+k-2}), the boxed
/// reverse-plane-partition generating polynomial in factored form.
QFactored macmahon_box(std::int64_t a, std::int64_t b, std::int64_t c);

/// q^{b*binom(a,2)} * macmahon_box(a,b,c): bounded SSYT of the rectangle.
QFactored ssyt_box(std::int64_t a, std::int64_t b, std::int64_t c);

} // namespace tforge::formulas
