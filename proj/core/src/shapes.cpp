#include "tforge/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tforge {

namespace {

std::vector<std::int64_t> parse_parts(const std::string& text) {
    std::vector<std::int64_t> parts;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw InvalidParameters("empty entry in part list '" + text + "'");
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw InvalidParameters("bad part '" + tok + "'");
        parts.push_back(v);
    }
    return parts;
}

std::string join_parts(const std::vector<std::int64_t>& parts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

} // namespace

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw InvalidParameters("negative part in partition");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidParameters("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    if (text.empty()) return Partition();
    return Partition(parse_parts(text));
}

std::int64_t Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t(0));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= length(); ++i)
        for (std::int64_t j = 1; j <= part(i); ++j) out.push_back({i, j});
    return out;
}

Partition Partition::conjugate() const {
    std::vector<std::int64_t> out;
    if (parts_.empty()) return Partition();
    out.resize(std::size_t(parts_[0]));
    for (std::int64_t j = 1; j <= parts_[0]; ++j) {
        std::int64_t h = 0;
        while (h < length() && part(int(h + 1)) >= j) ++h;
        out[std::size_t(j - 1)] = h;
    }
    return Partition(std::move(out));
}

std::string Partition::str() const { return join_parts(parts_); }

StrictPartition::StrictPartition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidParameters("strict partition parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw InvalidParameters("strict partition parts must strictly decrease");
    }
}

StrictPartition StrictPartition::parse(const std::string& text) {
    if (text.empty()) return StrictPartition();
    return StrictPartition(parse_parts(text));
}

std::int64_t StrictPartition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t(0));
}

Partition StrictPartition::staircase_complement() const {
    int n = length();
    std::vector<std::int64_t> mu(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) mu[std::size_t(i - 1)] = part(i) - (n + 1 - i);
    return Partition(std::move(mu));
}

std::vector<Cell> StrictPartition::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= length(); ++i)
        for (std::int64_t j = i; j <= part(i) + i - 1; ++j) out.push_back({i, j});
    return out;
}

std::string StrictPartition::str() const { return join_parts(parts_); }

CellSet::CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool CellSet::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

CellSet CellSet::with(Cell c) const {
    std::vector<Cell> v = cells_;
    v.push_back(c);
    return CellSet(std::move(v));
}

CellSet CellSet::without(Cell c) const {
    std::vector<Cell> v;
    v.reserve(cells_.size());
    for (const Cell& x : cells_)
        if (!(x == c)) v.push_back(x);
    return CellSet(std::move(v));
}

std::string CellSet::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (i) os << " ";
        os << "(" << cells_[i].row << "," << cells_[i].col << ")";
    }
    if (cells_.empty()) os << "()";
    return os.str();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw InvalidParameters("inner partition " + inner_.str() + " not contained in " +
                                outer_.str());
}

SkewShape SkewShape::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(Partition::parse(text), Partition());
    return SkewShape(Partition::parse(text.substr(0, slash)),
                     Partition::parse(text.substr(slash + 1)));
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= outer_.length(); ++i)
        for (std::int64_t j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
    return out;
}

std::string SkewShape::str() const { return outer_.str() + "/" + inner_.str(); }

ShiftedSkewShape::ShiftedSkewShape(StrictPartition outer, StrictPartition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (inner_.length() > outer_.length())
        throw InvalidParameters("shifted inner longer than outer");
    for (int i = 1; i <= inner_.length(); ++i)
        if (inner_.part(i) > outer_.part(i))
            throw InvalidParameters("shifted inner " + inner_.str() + " not contained in " +
                                    outer_.str());
}

ShiftedSkewShape ShiftedSkewShape::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return ShiftedSkewShape(StrictPartition::parse(text), StrictPartition());
    return ShiftedSkewShape(StrictPartition::parse(text.substr(0, slash)),
                            StrictPartition::parse(text.substr(slash + 1)));
}

std::vector<Cell> ShiftedSkewShape::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= outer_.length(); ++i) {
        std::int64_t from = i;
        if (i <= inner_.length()) from = inner_.part(i) + i;
        for (std::int64_t j = from; j <= outer_.part(i) + i - 1; ++j) out.push_back({i, j});
    }
    return out;
}

std::string ShiftedSkewShape::str() const { return outer_.str() + "/" + inner_.str(); }

std::int64_t hook_length(const Partition& lambda, Cell c) {
    if (!lambda.has_cell(c))
        throw CellOutsideShape("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                               ") outside " + lambda.str());
    Partition conj = lambda.conjugate();
    return lambda.part(int(c.row)) + conj.part(int(c.col)) - c.row - c.col + 1;
}

std::int64_t shifted_hook_length(const StrictPartition& lambda, Cell c) {
    if (!lambda.has_cell(c))
        throw CellOutsideShape("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                               ") outside shifted " + lambda.str());
    int n = lambda.length();
    Partition mu = lambda.staircase_complement();
    if (c.row == c.col) return lambda.part(int(c.row));
    if (c.col <= n) return mu.part(int(c.row)) + mu.part(int(c.col)) + 2 * (n + 1) - c.row - c.col;
    return hook_length(mu, Cell{c.row, c.col - n});
}

Partition delta(std::int64_t n) {
    std::vector<std::int64_t> parts;
    for (std::int64_t v = n - 1; v >= 1; --v) parts.push_back(v);
    return Partition(std::move(parts));
}

Partition add(const Partition& a, const Partition& b) {
    int n = std::max(a.length(), b.length());
    std::vector<std::int64_t> parts(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) parts[std::size_t(i - 1)] = a.part(i) + b.part(i);
    return Partition(std::move(parts));
}

Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<std::int64_t> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition scale(std::int64_t m, const Partition& a) {
    if (m < 0) throw InvalidParameters("negative partition scale");
    std::vector<std::int64_t> parts = a.parts();
    for (auto& p : parts) p *= m;
    return Partition(std::move(parts));
}

std::int64_t nn(const Partition& a) {
    std::int64_t s = 0;
    for (int i = 1; i <= a.length(); ++i) s += std::int64_t(i - 1) * a.part(i);
    return s;
}

SkewShape build_rho(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c,
                    std::int64_t d) {
    if (n < 0 || a < 0 || b < 0 || c < 0 || d < 0)
        throw InvalidParameters("rho parameters must be nonnegative");
    if (a == 0) throw InvalidParameters("rho requires a >= 1 (the inner staircase needs a rows)");
    std::vector<std::int64_t> outer;
    for (std::int64_t i = 0; i < n + a; ++i) outer.push_back(n + b + c);
    for (std::int64_t i = 0; i < d; ++i) outer.push_back(n + c);
    std::vector<std::int64_t> inner;
    inner.push_back(c + 1);
    for (std::int64_t i = 0; i < a - 1; ++i) inner.push_back(c);
    inner.push_back(1);
    Partition po(std::move(outer));
    Partition pi;
    try {
        pi = Partition(std::move(inner));
    } catch (const InvalidParameters&) {
        throw InvalidParameters("rho inner shape (c+1, c^{a-1}, 1) is not a partition for c=" +
                                std::to_string(c) + ", a=" + std::to_string(a));
    }
    if (!po.contains(pi))
        throw InvalidParameters("rho inner shape not contained in outer for these parameters");
    return SkewShape(std::move(po), std::move(pi));
}

ShiftedSkewShape build_v(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t m) {
    if (n < 0 || a < 0 || b < 0) throw InvalidParameters("V parameters must be nonnegative");
    if (m < 1) throw InvalidParameters("V requires m >= 1");
    std::vector<std::int64_t> outer;
    for (std::int64_t i = 1; i <= n + a; ++i)
        outer.push_back((n + a + b + 1 - i) + (m - 1) * (n + a - i));
    std::vector<std::int64_t> inner;
    for (std::int64_t v = a; v >= 1; --v) inner.push_back(v);
    return ShiftedSkewShape(StrictPartition(std::move(outer)), StrictPartition(std::move(inner)));
}

SkewShape build_m(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                  std::int64_t m) {
    if (n < 0 || a < 0 || b < 0 || c < 0 || d < 0)
        throw InvalidParameters("M parameters must be nonnegative");
    if (m < 1) throw InvalidParameters("M requires m >= 1");
    std::vector<std::int64_t> base;
    for (std::int64_t i = 0; i < n + a; ++i) base.push_back(n + c + b);
    Partition lambda = add(Partition(std::move(base)), scale(m - 1, delta(n + a)));
    std::vector<std::int64_t> nubase;
    for (std::int64_t i = 0; i < n + c; ++i) nubase.push_back(d);
    Partition nu = add(Partition(std::move(nubase)), scale(m - 1, delta(n + c)));
    Partition outer = union_parts(lambda, nu.conjugate());
    std::vector<std::int64_t> inner;
    for (std::int64_t i = 0; i < a; ++i) inner.push_back(c);
    Partition pi(std::move(inner));
    if (!outer.contains(pi)) throw InvalidParameters("M inner rectangle not contained in outer");
    return SkewShape(std::move(outer), std::move(pi));
}

CellSet d_region(std::int64_t n) {
    std::vector<Cell> cells;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = i; j <= n; ++j) cells.push_back({i, n + j});
    return CellSet(std::move(cells));
}

} // namespace tforge
