#pragma once

#include <cstdint>
#include <vector>

#include "tforge/qseries.hpp"
#include "tforge/shapes.hpp"

namespace tforge {

/// The alternant det(q^{nu_{n+1-j} * (lambda_i + n - i)})_{i,j=1..n} as an
/// exact Laurent polynomial in q, where n = nu.size(). Entries of nu may be
/// negative. lambda must have at most n parts.
///
/// With lambda empty this is the reversed-variable Vandermonde
/// prod_{i<j} (q^{nu_j} - q^{nu_i}).
QSeries alternant(const Partition& lambda, const std::vector<std::int64_t>& nu);

} // namespace tforge
