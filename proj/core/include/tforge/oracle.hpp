#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tforge/bigint.hpp"
#include "tforge/qseries.hpp"
#include "tforge/shapes.hpp"
#include "tforge/xqseries.hpp"

namespace tforge::oracle {

enum class Kind { SSYT, RST, RPP };

/// Number of standard Young tableaux (linear extensions of the cell poset),
/// by downset dynamic programming. For unshifted skew shapes an independent
/// corner-removal recursion is run as well and must agree.
BigInt count_syt(const SkewShape& shape);
BigInt count_syt(const ShiftedSkewShape& shape);

/// sum q^|T| over fillings of the given kind with entries in [0, max_entry],
/// exact through q^T. The default max_entry = T loses nothing: a filling
/// with an entry above T weighs more than T.
QSeries gf_tableaux(const SkewShape& shape, Kind kind, std::int64_t T,
                    std::optional<std::int64_t> max_entry = std::nullopt);
QSeries gf_tableaux(const ShiftedSkewShape& shape, Kind kind, std::int64_t T,
                    std::optional<std::int64_t> max_entry = std::nullopt);

/// The full bounded-entry generating polynomial (exact, degree max_entry*size).
QSeries bounded_polynomial(const SkewShape& shape, Kind kind, std::int64_t max_entry);
QSeries bounded_polynomial(const ShiftedSkewShape& shape, Kind kind, std::int64_t max_entry);

/// sum q^|T| over fillings of the shifted diagram outer* with the diagonal
/// cell (i,i) pinned to rdiag[length-i] (rdiag lists the diagonal bottom-up).
/// Infeasible pinnings yield the zero series.
QSeries gf_fixed_diag(const StrictPartition& outer, Kind kind,
                      const std::vector<std::int64_t>& rdiag, std::int64_t T);

/// sum x^{tr(T)} q^|T| over SSYT of M(n,a,b,c,d,m), where tr(T) adds the
/// entries on the n cells with col - row = c - a. Exact in x, through q^T in q.
XQSeries gf_trace(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                  std::int64_t m, std::int64_t T);

/// sum q^|T| over reverse plane partitions of the a x b rectangle with
/// entries at most c; exact polynomial of degree abc.
QSeries count_box_rpp(std::int64_t a, std::int64_t b, std::int64_t c);

/// The linear-extension descent polynomial (descents weighted by the
/// number of cells still to be placed): the exact numerator of the RPP
/// generating function, gf_RPP = maj_polynomial / (q;q)_size.
QSeries maj_polynomial(const SkewShape& shape);
QSeries maj_polynomial(const ShiftedSkewShape& shape);

} // namespace tforge::oracle
