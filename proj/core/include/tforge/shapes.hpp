#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "tforge/errors.hpp"

namespace tforge {

/// 1-based (row, col) matrix coordinates.
struct Cell {
    std::int64_t row = 1;
    std::int64_t col = 1;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of nonnegative integers; trailing zeros are
/// normalized away. parts(i) is 1-based and 0 beyond the length.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::int64_t> parts);
    static Partition parse(const std::string& text); // "4,3,1"; "" is empty

    int length() const { return int(parts_.size()); }
    std::int64_t size() const;
    std::int64_t part(int i) const { // 1-based
        return (i >= 1 && i <= length()) ? parts_[std::size_t(i - 1)] : 0;
    }
    const std::vector<std::int64_t>& parts() const { return parts_; }

    bool has_cell(Cell c) const {
        return c.row >= 1 && c.col >= 1 && c.col <= part(int(c.row));
    }
    bool contains(const Partition& inner) const;
    std::vector<Cell> cells() const;

    Partition conjugate() const;
    std::string str() const;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

/// Strictly decreasing positive integers. Decomposes uniquely as
/// delta_{n+1} + mu with n parts and mu a partition with at most n parts.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<std::int64_t> parts);
    static StrictPartition parse(const std::string& text);

    int length() const { return int(parts_.size()); }
    std::int64_t part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[std::size_t(i - 1)] : 0;
    }
    const std::vector<std::int64_t>& parts() const { return parts_; }
    /// Total number of cells of the shifted diagram.
    std::int64_t size() const;

    /// The mu of the decomposition delta_{n+1} + mu.
    Partition staircase_complement() const;

    /// Shifted diagram membership: row i spans columns i .. part(i)+i-1.
    bool has_cell(Cell c) const {
        return c.row >= 1 && c.row <= length() && c.col >= c.row &&
               c.col <= part(int(c.row)) + c.row - 1;
    }
    std::vector<Cell> cells() const;

    std::string str() const;
    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

/// Finite set of cells in canonical (row, col) order.
class CellSet {
public:
    CellSet() = default;
    explicit CellSet(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool contains(Cell c) const;
    CellSet with(Cell c) const;
    CellSet without(Cell c) const;

    std::string str() const; // "(1,1) (2,2)"
    friend auto operator<=>(const CellSet&, const CellSet&) = default;

private:
    std::vector<Cell> cells_;
};

/// Skew shape outer/inner with cellwise containment.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner);
    static SkewShape parse(const std::string& text); // "outer/inner"

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    std::int64_t size() const { return outer_.size() - inner_.size(); }
    bool has_cell(Cell c) const { return outer_.has_cell(c) && !inner_.has_cell(c); }
    std::vector<Cell> cells() const;

    std::string str() const;
    friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_, inner_;
};

/// Shifted skew shape outer*/inner* (inner may be empty).
class ShiftedSkewShape {
public:
    ShiftedSkewShape() = default;
    ShiftedSkewShape(StrictPartition outer, StrictPartition inner);
    static ShiftedSkewShape parse(const std::string& text);

    const StrictPartition& outer() const { return outer_; }
    const StrictPartition& inner() const { return inner_; }
    std::int64_t size() const { return outer_.size() - inner_.size(); }
    bool has_cell(Cell c) const { return outer_.has_cell(c) && !inner_.has_cell(c); }
    std::vector<Cell> cells() const;

    std::string str() const;
    friend auto operator<=>(const ShiftedSkewShape&, const ShiftedSkewShape&) = default;

private:
    StrictPartition outer_, inner_;
};

/// Hook length lambda_i + lambda'_j - i - j + 1 of a cell of lambda.
std::int64_t hook_length(const Partition& lambda, Cell c);

/// Shifted hook length of a cell of lambda*. Writing lambda = delta_{n+1}+mu:
/// the diagonal cell (i,i) gets lambda_i, a cell (i,j) with i < j <= n gets
/// mu_i + mu_j + 2(n+1) - i - j, and a cell with j > n gets h_mu(i, j-n).
std::int64_t shifted_hook_length(const StrictPartition& lambda, Cell c);

// Partition algebra.
Partition delta(std::int64_t n); // (n-1, n-2, ..., 1)
Partition add(const Partition& a, const Partition& b);
Partition union_parts(const Partition& a, const Partition& b);
Partition scale(std::int64_t m, const Partition& a);
std::int64_t nn(const Partition& a); // sum (i-1) * lambda_i

// The paper-family constructors.

/// rho(n,a,b,c,d): outer ((n+b+c)^{n+a}, (n+c)^d), inner (c+1, c^{a-1}, 1).
SkewShape build_rho(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c,
                    std::int64_t d);

/// V(n,a,b,m): outer (n+a+b, ..., b+1) + (m-1)delta_{n+a} as a strict
/// partition, inner delta_{a+1}, as a shifted skew shape.
ShiftedSkewShape build_v(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t m);

/// M(n,a,b,c,d,m): outer ((n+c+b)^{n+a} + (m-1)delta_{n+a}) union nu' with
/// nu = (d^{n+c}) + (m-1)delta_{n+c}, inner (c^a).
SkewShape build_m(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c,
                  std::int64_t d, std::int64_t m);

/// D(n) = {(i, n+j) : 1 <= i <= j <= n}.
CellSet d_region(std::int64_t n);

} // namespace tforge
