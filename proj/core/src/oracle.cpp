#include "tforge/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "tforge/config.hpp"

namespace tforge::oracle {

namespace {

// Flattened cell geometry. Rows are contiguous runs, which holds for skew
// and shifted skew diagrams alike.
struct Grid {
    struct Row {
        std::int64_t row, col_begin, col_end; // inclusive; col_end >= col_begin
        int first;                            // index of (row, col_begin) in cells
    };
    std::vector<Cell> cells; // row-major
    std::vector<Row> rows;
    std::vector<int> up, left; // neighbor indices, -1 if absent

    int size() const { return int(cells.size()); }
    int row_of(std::int64_t r) const {
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (rows[k].row == r) return int(k);
        return -1;
    }
    int cell_index(Cell c) const {
        int k = row_of(c.row);
        if (k < 0) return -1;
        const Row& rw = rows[std::size_t(k)];
        if (c.col < rw.col_begin || c.col > rw.col_end) return -1;
        return rw.first + int(c.col - rw.col_begin);
    }

    static Grid from_cells(const std::vector<Cell>& cs) {
        Grid g;
        g.cells = cs;
        for (int i = 0; i < int(cs.size()); ++i) {
            const Cell& c = cs[std::size_t(i)];
            if (g.rows.empty() || g.rows.back().row != c.row) {
                g.rows.push_back({c.row, c.col, c.col, i});
            } else {
                if (c.col != g.rows.back().col_end + 1)
                    throw InvalidParameters("diagram rows must be contiguous");
                g.rows.back().col_end = c.col;
            }
        }
        g.up.assign(cs.size(), -1);
        g.left.assign(cs.size(), -1);
        for (int i = 0; i < int(cs.size()); ++i) {
            const Cell& c = cs[std::size_t(i)];
            g.left[std::size_t(i)] = g.cell_index({c.row, c.col - 1});
            g.up[std::size_t(i)] = g.cell_index({c.row - 1, c.col});
        }
        return g;
    }
};

void check_cell_cap(std::int64_t size) {
    if (size > config::caps().cells)
        throw CapExceeded("diagram size " + std::to_string(size) + " exceeds cell cap " +
                          std::to_string(config::caps().cells));
}

void check_weight_cap(std::int64_t T) {
    if (T > config::caps().weight)
        throw CapExceeded("truncation order " + std::to_string(T) + " exceeds weight cap " +
                          std::to_string(config::caps().weight));
}

// Lower bound for the entry at cell i given the entries of its left/up
// neighbors (or their lower bounds).
std::int64_t lower_from(Kind kind, std::int64_t left_val, bool has_left, std::int64_t up_val,
                        bool has_up) {
    std::int64_t lo = 0;
    if (has_left) lo = std::max(lo, kind == Kind::RST ? left_val + 1 : left_val);
    if (has_up) lo = std::max(lo, kind == Kind::SSYT ? up_val + 1 : up_val);
    return lo;
}

struct EnumOptions {
    std::int64_t max_entry;  // inclusive upper bound for unpinned entries
    std::int64_t max_weight; // total-weight prune
    std::vector<std::int64_t> pinned; // per-cell pinned value or -1
    std::vector<char> diag;           // per-cell trace mask (may be empty)
};

// DFS over fillings in row-major order with static-minimum suffix pruning.
// Calls sink(weight, trace) once per complete filling.
template <class Sink>
void enumerate_fillings(const Grid& g, Kind kind, const EnumOptions& opt, Sink&& sink) {
    int n = g.size();
    std::vector<std::int64_t> smin(std::size_t(n), 0);
    for (int i = 0; i < n; ++i) {
        bool hl = g.left[std::size_t(i)] >= 0, hu = g.up[std::size_t(i)] >= 0;
        std::int64_t lo =
            lower_from(kind, hl ? smin[std::size_t(g.left[std::size_t(i)])] : 0, hl,
                       hu ? smin[std::size_t(g.up[std::size_t(i)])] : 0, hu);
        if (!opt.pinned.empty() && opt.pinned[std::size_t(i)] >= 0) {
            if (opt.pinned[std::size_t(i)] < lo) return; // infeasible pinning
            lo = opt.pinned[std::size_t(i)];
        }
        smin[std::size_t(i)] = lo;
    }
    std::vector<std::int64_t> suffix(std::size_t(n) + 1, 0);
    for (int i = n - 1; i >= 0; --i) suffix[std::size_t(i)] = suffix[std::size_t(i) + 1] + smin[std::size_t(i)];
    if (suffix[0] > opt.max_weight) return;

    std::vector<std::int64_t> val(std::size_t(n), 0);
    auto rec = [&](auto&& self, int i, std::int64_t weight, std::int64_t trace) -> void {
        if (i == n) {
            sink(weight, trace);
            return;
        }
        bool hl = g.left[std::size_t(i)] >= 0, hu = g.up[std::size_t(i)] >= 0;
        std::int64_t lo = lower_from(kind, hl ? val[std::size_t(g.left[std::size_t(i)])] : 0, hl,
                                     hu ? val[std::size_t(g.up[std::size_t(i)])] : 0, hu);
        std::int64_t budget = opt.max_weight - weight - suffix[std::size_t(i) + 1];
        bool on_diag = !opt.diag.empty() && opt.diag[std::size_t(i)];
        if (!opt.pinned.empty() && opt.pinned[std::size_t(i)] >= 0) {
            std::int64_t v = opt.pinned[std::size_t(i)];
            if (v < lo || v > budget) return;
            val[std::size_t(i)] = v;
            self(self, i + 1, weight + v, trace + (on_diag ? v : 0));
            return;
        }
        std::int64_t hi = std::min(opt.max_entry, budget);
        for (std::int64_t v = lo; v <= hi; ++v) {
            val[std::size_t(i)] = v;
            self(self, i + 1, weight + v, trace + (on_diag ? v : 0));
        }
    };
    rec(rec, 0, 0, 0);
}

QSeries gf_core(const Grid& g, Kind kind, std::int64_t T, std::int64_t max_entry, bool exact,
                const std::vector<std::int64_t>& pinned = {}) {
    std::int64_t maxw = exact ? max_entry * std::max<std::int64_t>(g.size(), 1) : T;
    if (!pinned.empty())
        for (std::int64_t p : pinned)
            if (p > 0 && exact) maxw += p; // pinned cells may exceed the entry bound
    std::vector<BigInt> coeffs(static_cast<std::size_t>(maxw) + 1, BigInt(0));
    EnumOptions opt{max_entry, maxw, pinned, {}};
    enumerate_fillings(g, kind, opt, [&](std::int64_t w, std::int64_t) {
        coeffs[std::size_t(w)] += 1;
    });
    std::vector<BigRat> rs(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) rs[i] = BigRat(coeffs[i]);
    return QSeries::from_coeffs(0, std::move(rs), exact ? QSeries::kExact : T);
}

Grid grid_of(const SkewShape& s) { return Grid::from_cells(s.cells()); }
Grid grid_of(const ShiftedSkewShape& s) { return Grid::from_cells(s.cells()); }

// Downset frontier: number of filled cells per grid row. A cell is addable
// when it is the next cell of its row and the cell above it (if any) is
// already filled.
struct Frontier {
    std::string filled; // one byte per grid row

    bool operator<(const Frontier& o) const { return filled < o.filled; }
};

template <class Value, class Step>
Value downset_scan(const Grid& g, Value init_unit, Step&& step) {
    // Generic forward scan over the downset lattice accumulating values of
    // linear extensions; Step merges a transition into the next level.
    std::map<std::string, Value> level;
    level.emplace(std::string(g.rows.size(), '\0'), init_unit);
    int n = g.size();
    for (int k = 0; k < n; ++k) {
        std::map<std::string, Value> next;
        for (const auto& [fr, value] : level) {
            for (std::size_t r = 0; r < g.rows.size(); ++r) {
                const Grid::Row& row = g.rows[r];
                std::int64_t filled = std::int64_t(static_cast<unsigned char>(fr[r]));
                std::int64_t len = row.col_end - row.col_begin + 1;
                if (filled >= len) continue;
                std::int64_t col = row.col_begin + filled;
                int above = g.cell_index({row.row - 1, col});
                if (above >= 0) {
                    // locate the row holding `above`
                    std::size_t ar = r;
                    while (ar > 0 && g.rows[ar].row != row.row - 1) --ar;
                    const Grid::Row& arow = g.rows[ar];
                    std::int64_t afilled = std::int64_t(static_cast<unsigned char>(fr[ar]));
                    if (arow.col_begin + afilled <= col) continue; // support missing
                }
                std::string nf = fr;
                nf[r] = char(filled + 1);
                int cell_idx = row.first + int(filled);
                step(next, nf, value, cell_idx, k);
            }
        }
        level = std::move(next);
    }
    Value total = Value();
    for (auto& [fr, v] : level) total += v;
    return total;
}

BigInt count_linear_extensions(const Grid& g) {
    if (g.size() == 0) return 1;
    return downset_scan<BigInt>(
        g, BigInt(1),
        [](std::map<std::string, BigInt>& next, const std::string& nf, const BigInt& v, int, int) {
            next[nf] += v;
        });
}

BigInt count_corner_removal(const SkewShape& shape) {
    const Partition& inner = shape.inner();
    std::map<std::vector<std::int64_t>, BigInt> memo;
    auto rec = [&](auto&& self, const Partition& outer) -> BigInt {
        if (outer == inner) return 1;
        auto it = memo.find(outer.parts());
        if (it != memo.end()) return it->second;
        BigInt total = 0;
        for (int i = 1; i <= outer.length(); ++i) {
            if (outer.part(i) <= inner.part(i)) continue;
            if (outer.part(i) == outer.part(i + 1)) continue; // not a removable corner
            std::vector<std::int64_t> parts = outer.parts();
            parts[std::size_t(i - 1)] -= 1;
            total += self(self, Partition(std::move(parts)));
        }
        memo.emplace(outer.parts(), total);
        return total;
    };
    return rec(rec, shape.outer());
}

// maj DP value: per last-added-cell polynomial.
struct MajState {
    std::map<int, QSeries> by_last;
    MajState& operator+=(const MajState& o) {
        for (const auto& [last, p] : o.by_last) {
            auto it = by_last.find(last);
            if (it == by_last.end())
                by_last.emplace(last, p);
            else
                it->second += p;
        }
        return *this;
    }
};

QSeries maj_core(const Grid& g) {
    if (g.size() == 0) return QSeries(BigRat(1));
    const int n = g.size();
    MajState init;
    init.by_last.emplace(-1, QSeries(BigRat(1)));
    MajState total = downset_scan<MajState>(
        g, init,
        [n](std::map<std::string, MajState>& next, const std::string& nf, const MajState& v,
            int cell_idx, int k) {
            MajState& slot = next[nf];
            QSeries sum_here;
            for (const auto& [last, p] : v.by_last) {
                // a descent between positions k and k+1 (the previous cell
                // has a larger row-major label) weighs the number of cells
                // still to be placed, n - k
                if (last > cell_idx)
                    sum_here += p.shifted(n - k);
                else
                    sum_here += p;
            }
            auto it = slot.by_last.find(cell_idx);
            if (it == slot.by_last.end())
                slot.by_last.emplace(cell_idx, std::move(sum_here));
            else
                it->second += sum_here;
        });
    QSeries out;
    for (const auto& [last, p] : total.by_last) out += p;
    return out;
}

} // namespace

BigInt count_syt(const SkewShape& shape) {
    check_cell_cap(shape.size());
    BigInt dp = count_linear_extensions(grid_of(shape));
    BigInt corner = count_corner_removal(shape);
    if (dp != corner)
        throw MismatchError("SYT counting methods disagree on " + shape.str() + ": " +
                            dp.get_str() + " vs " + corner.get_str());
    return dp;
}

BigInt count_syt(const ShiftedSkewShape& shape) {
    check_cell_cap(shape.size());
    return count_linear_extensions(grid_of(shape));
}

QSeries gf_tableaux(const SkewShape& shape, Kind kind, std::int64_t T,
                    std::optional<std::int64_t> max_entry) {
    check_cell_cap(shape.size());
    check_weight_cap(T);
    return gf_core(grid_of(shape), kind, T, max_entry.value_or(T), false);
}

QSeries gf_tableaux(const ShiftedSkewShape& shape, Kind kind, std::int64_t T,
                    std::optional<std::int64_t> max_entry) {
    check_cell_cap(shape.size());
    check_weight_cap(T);
    return gf_core(grid_of(shape), kind, T, max_entry.value_or(T), false);
}

QSeries bounded_polynomial(const SkewShape& shape, Kind kind, std::int64_t max_entry) {
    check_cell_cap(shape.size());
    return gf_core(grid_of(shape), kind, 0, max_entry, true);
}

QSeries bounded_polynomial(const ShiftedSkewShape& shape, Kind kind, std::int64_t max_entry) {
    check_cell_cap(shape.size());
    return gf_core(grid_of(shape), kind, 0, max_entry, true);
}

QSeries gf_fixed_diag(const StrictPartition& outer, Kind kind,
                      const std::vector<std::int64_t>& rdiag, std::int64_t T) {
    int n = outer.length();
    if (int(rdiag.size()) != n)
        throw InvalidParameters("rdiag length must equal the number of rows");
    for (std::int64_t v : rdiag)
        if (v < 0) throw InvalidParameters("rdiag entries must be nonnegative");
    ShiftedSkewShape shape{outer, StrictPartition()};
    check_cell_cap(shape.size());
    check_weight_cap(T);
    Grid g = grid_of(shape);
    std::vector<std::int64_t> pinned(std::size_t(g.size()), -1);
    for (int i = 1; i <= n; ++i) {
        int idx = g.cell_index({i, i});
        pinned[std::size_t(idx)] = rdiag[std::size_t(n - i)];
    }
    return gf_core(g, kind, T, T, false, pinned);
}

XQSeries gf_trace(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                  std::int64_t m, std::int64_t T) {
    SkewShape shape = build_m(n, a, b, c, d, m);
    check_cell_cap(shape.size());
    check_weight_cap(T);
    Grid g = Grid::from_cells(shape.cells());
    EnumOptions opt{T, T, {}, std::vector<char>(std::size_t(g.size()), 0)};
    for (int i = 0; i < g.size(); ++i)
        if (g.cells[std::size_t(i)].col - g.cells[std::size_t(i)].row == c - a)
            opt.diag[std::size_t(i)] = 1;
    std::map<std::int64_t, std::vector<BigInt>> acc; // trace -> weight coefficients
    enumerate_fillings(g, Kind::SSYT, opt, [&](std::int64_t w, std::int64_t tr) {
        auto& v = acc[tr];
        if (v.empty()) v.assign(std::size_t(T) + 1, BigInt(0));
        v[std::size_t(w)] += 1;
    });
    XQSeries out(T);
    for (const auto& [tr, coeffs] : acc) {
        std::vector<BigRat> rs(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) rs[i] = BigRat(coeffs[i]);
        out += XQSeries::term(tr, QSeries::from_coeffs(0, std::move(rs), T));
    }
    return out;
}

QSeries count_box_rpp(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 0 || b < 0 || c < 0) throw InvalidParameters("box dimensions must be nonnegative");
    if (a * b * c > config::caps().box)
        throw CapExceeded("box " + std::to_string(a * b * c) + " exceeds cap");
    std::vector<std::int64_t> parts(std::size_t(a), b);
    SkewShape rect{Partition(std::move(parts)), Partition()};
    return gf_core(grid_of(rect), Kind::RPP, 0, c, true);
}

QSeries maj_polynomial(const SkewShape& shape) {
    check_cell_cap(shape.size());
    return maj_core(grid_of(shape));
}

QSeries maj_polynomial(const ShiftedSkewShape& shape) {
    check_cell_cap(shape.size());
    return maj_core(grid_of(shape));
}

} // namespace tforge::oracle
