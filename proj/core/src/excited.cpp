#include "tforge/excited.hpp"

#include <deque>
#include <set>

#include "tforge/config.hpp"

namespace tforge::excited {

namespace {

bool can_move(const Partition& outer, const CellSet& d, Cell c) {
    Cell diag{c.row + 1, c.col + 1};
    if (!outer.has_cell(diag)) return false;
    return !d.contains({c.row, c.col + 1}) && !d.contains({c.row + 1, c.col}) &&
           !d.contains(diag);
}

// Per-cell hooks and column-complement exponents of the outer diagram,
// tabulated once per shape.
struct OuterTables {
    std::vector<Cell> cells;
    std::vector<std::int64_t> hook;
    std::vector<std::int64_t> expo; // outer'_col - row

    explicit OuterTables(const Partition& outer) : cells(outer.cells()) {
        Partition conj = outer.conjugate();
        hook.reserve(cells.size());
        expo.reserve(cells.size());
        for (const Cell& c : cells) {
            hook.push_back(outer.part(int(c.row)) + conj.part(int(c.col)) - c.row - c.col + 1);
            expo.push_back(conj.part(int(c.col)) - c.row);
        }
    }
};

} // namespace

ExcitedFamily excited_diagrams(const SkewShape& shape) {
    CellSet seed{shape.inner().cells()};
    std::set<CellSet> seen;
    std::deque<CellSet> queue;
    seen.insert(seed);
    queue.push_back(seed);
    std::int64_t cap = config::caps().excited;
    while (!queue.empty()) {
        CellSet d = std::move(queue.front());
        queue.pop_front();
        for (const Cell& c : d.cells()) {
            if (!can_move(shape.outer(), d, c)) continue;
            CellSet moved = d.without(c).with({c.row + 1, c.col + 1});
            if (seen.insert(moved).second) {
                if (std::int64_t(seen.size()) > cap)
                    throw CapExceeded("excited diagram family exceeds cap");
                queue.push_back(moved);
            }
        }
    }
    ExcitedFamily fam{shape, {seen.begin(), seen.end()}};
    return fam;
}

BigInt naruse_count(const SkewShape& shape) {
    ExcitedFamily fam = excited_diagrams(shape);
    OuterTables tables(shape.outer());
    BigRat total(0);
    for (const CellSet& d : fam.diagrams) {
        BigInt denom(1);
        for (std::size_t i = 0; i < tables.cells.size(); ++i) {
            if (d.contains(tables.cells[i])) continue;
            denom *= tables.hook[i];
        }
        total += make_rat(BigInt(1), denom);
    }
    total *= BigRat(factorial(shape.size()));
    return as_integer(total, "excited hook sum");
}

std::vector<QFactored> naruse_terms(const SkewShape& shape) {
    ExcitedFamily fam = excited_diagrams(shape);
    OuterTables tables(shape.outer());
    std::vector<QFactored> terms;
    terms.reserve(fam.diagrams.size());
    for (const CellSet& d : fam.diagrams) {
        std::int64_t e = 0;
        std::map<std::int64_t, std::int64_t> mult;
        for (std::size_t i = 0; i < tables.cells.size(); ++i) {
            if (d.contains(tables.cells[i])) continue;
            e += tables.expo[i];
            mult[tables.hook[i]] -= 1;
        }
        terms.push_back(QFactored::from_parts(BigRat(1), e, std::move(mult)));
    }
    return terms;
}

QSeries naruse_q_series(const SkewShape& shape, std::int64_t T) {
    QSeries s = QSeries::zero(T);
    for (const QFactored& t : naruse_terms(shape)) s += t.expand(T);
    return s;
}

} // namespace tforge::excited
