#pragma once

#include <cstdint>
#include <vector>

#include "tforge/bigint.hpp"
#include "tforge/qfactored.hpp"
#include "tforge/qseries.hpp"
#include "tforge/shapes.hpp"

namespace tforge::excited {

struct ExcitedFamily {
    SkewShape shape;
    std::vector<CellSet> diagrams; // canonically ordered, deduplicated
};

/// All excited diagrams of outer/inner: the closure of the inner diagram
/// under moves (i,j) -> (i+1,j+1), legal when (i+1,j+1) lies in outer and
/// none of (i,j+1), (i+1,j), (i+1,j+1) is occupied.
ExcitedFamily excited_diagrams(const SkewShape& shape);

/// |shape|! * sum_D prod_{(i,j) in outer \ D} 1/h(i,j); exact, asserts
/// integrality.
BigInt naruse_count(const SkewShape& shape);

/// One factored summand q^{sum (outer'_j - i)} * prod 1/(1-q^{h}) per
/// excited diagram; their sum is the SSYT generating function.
std::vector<QFactored> naruse_terms(const SkewShape& shape);

/// sum of the factored summands expanded through q^T.
QSeries naruse_q_series(const SkewShape& shape, std::int64_t T);

} // namespace tforge::excited
