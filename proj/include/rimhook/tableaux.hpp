#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "rimhook/partitions.hpp"

namespace rimhook {

/**
 * A filling of a Ferrers diagram with positive integers, stored row by row.
 * Rows weakly increase and columns strictly increase.
 */
class SemistandardTableau {
public:
    SemistandardTableau() = default;

    explicit SemistandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lens;
        for (const auto& r : rows_) lens.push_back(static_cast<int>(r.size()));
        shape_ = Partition(lens);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (rows_[i][j] < 1)
                    throw std::invalid_argument("tableau entries must be positive");
                if (j > 0 && rows_[i][j - 1] > rows_[i][j])
                    throw std::invalid_argument("tableau rows must weakly increase");
                if (i > 0 && rows_[i - 1][j] >= rows_[i][j])
                    throw std::invalid_argument("tableau columns must strictly increase");
            }
        }
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int at(Cell c) const { return rows_.at(c.row - 1).at(c.col - 1); }

    /// Content vector: entry k-1 counts the cells holding k.
    std::vector<int> content() const {
        std::vector<int> out;
        for (const auto& r : rows_)
            for (int v : r) {
                if (static_cast<std::size_t>(v) > out.size()) out.resize(v, 0);
                ++out[v - 1];
            }
        return out;
    }

    bool is_standard() const {
        const auto c = content();
        return std::all_of(c.begin(), c.end(), [](int m) { return m == 1; });
    }

    /// Cell holding the value v; the first in row-major order if v repeats.
    std::optional<Cell> find(int v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j)
                if (rows_[i][j] == v) return Cell{static_cast<int>(i + 1), static_cast<int>(j + 1)};
        return std::nullopt;
    }

    friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

namespace detail {

inline void ssyt_rec(const Partition& shape, std::vector<int>& remaining,
                     std::vector<std::vector<int>>& rows, std::size_t row, std::size_t col,
                     std::vector<SemistandardTableau>& out) {
    if (row == shape.length()) {
        out.emplace_back(rows);
        return;
    }
    const int len = shape.part(row + 1);
    const std::size_t next_row = col + 1 == static_cast<std::size_t>(len) ? row + 1 : row;
    const std::size_t next_col = col + 1 == static_cast<std::size_t>(len) ? 0 : col + 1;
    int lo = 1;
    if (col > 0) lo = std::max(lo, rows[row][col - 1]);
    if (row > 0) lo = std::max(lo, rows[row - 1][col] + 1);
    for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
        if (remaining[v - 1] == 0) continue;
        --remaining[v - 1];
        rows[row].push_back(v);
        ssyt_rec(shape, remaining, rows, next_row, next_col, out);
        rows[row].pop_back();
        ++remaining[v - 1];
    }
}

} // namespace detail

/// Every semistandard tableau of the given shape and content. The list length
/// is the Kostka number K_{shape,content}.
inline std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape,
                                                       const std::vector<int>& content) {
    int total = 0;
    for (int c : content) {
        if (c < 0) throw std::invalid_argument("content multiplicities must be nonnegative");
        total += c;
    }
    if (total != shape.size())
        throw std::invalid_argument("enumerate_ssyt: shape and content sizes differ");
    std::vector<SemistandardTableau> out;
    std::vector<int> remaining = content;
    std::vector<std::vector<int>> rows(shape.length());
    if (shape.empty()) {
        out.emplace_back(std::vector<std::vector<int>>{});
        return out;
    }
    detail::ssyt_rec(shape, remaining, rows, 0, 0, out);
    return out;
}

inline std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape,
                                                       const Partition& content) {
    return enumerate_ssyt(shape, content.parts());
}

/// Standard Young tableaux of the given shape.
inline std::vector<SemistandardTableau> enumerate_syt(const Partition& shape) {
    return enumerate_ssyt(shape, std::vector<int>(shape.size(), 1));
}

/**
 * A rim hook: a connected skew strip without 2x2 blocks, stored tail to head.
 * Each step from one cell to the next goes one row up or one column right.
 */
class RimHook {
public:
    RimHook() = default;

    explicit RimHook(std::vector<Cell> cells) : cells_(std::move(cells)) {
        if (cells_.empty())
            throw std::invalid_argument("rim hook must be nonempty");
        for (std::size_t k = 1; k < cells_.size(); ++k) {
            const Cell a = cells_[k - 1], b = cells_[k];
            if (b != above(a) && b != right_of(a))
                throw std::invalid_argument("rim hook cells must step up or right");
        }
        for (const Cell& c : cells_)
            if (c.row < 1 || c.col < 1)
                throw std::invalid_argument("rim hook cell out of range");
    }

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    Cell tail() const { return cells_.front(); }
    Cell head() const { return cells_.back(); }
    bool contains(Cell c) const { return std::find(cells_.begin(), cells_.end(), c) != cells_.end(); }
    /// Special hooks meet column 1; for those the tail is the lowest column-1 cell.
    bool is_special() const { return tail().col == 1; }

    /// Leg length: number of vertical edges.
    int leg_length() const {
        int v = 0;
        for (std::size_t k = 1; k < cells_.size(); ++k)
            if (cells_[k].col == cells_[k - 1].col) ++v;
        return v;
    }
    int sign() const { return leg_length() % 2 == 0 ? 1 : -1; }

    bool is_internal_corner(Cell c) const {
        return contains(c) && contains(below(c)) && contains(right_of(c));
    }
    bool is_external_corner(Cell c) const {
        return contains(c) && contains(above(c)) && contains(left_of(c));
    }

    std::set<Cell> internal_corners() const {
        std::set<Cell> out;
        for (const Cell& c : cells_) if (is_internal_corner(c)) out.insert(c);
        return out;
    }
    std::set<Cell> external_corners() const {
        std::set<Cell> out;
        for (const Cell& c : cells_) if (is_external_corner(c)) out.insert(c);
        return out;
    }

    bool is_permissible(Cell c) const {
        return c == head() || c == tail() || is_internal_corner(c) || is_external_corner(c);
    }

    /// Column-1 cells of the hook, tail first (a contiguous vertical run).
    std::vector<Cell> first_column_run() const {
        std::vector<Cell> out;
        for (const Cell& c : cells_) {
            if (c.col != 1) break;
            out.push_back(c);
        }
        return out;
    }

    friend bool operator==(const RimHook&, const RimHook&) = default;
    friend auto operator<=>(const RimHook& a, const RimHook& b) {
        return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(),
                                                      b.cells_.begin(), b.cells_.end());
    }

private:
    std::vector<Cell> cells_;
};

/// Internal corners, external corners, head and tail of the hook.
inline std::set<Cell> permissible_cells(const RimHook& h) {
    std::set<Cell> out = h.internal_corners();
    const auto ext = h.external_corners();
    out.insert(ext.begin(), ext.end());
    out.insert(h.head());
    out.insert(h.tail());
    return out;
}

/// Orders hooks by their cell lists; for disjoint special hooks this is by tail row.
inline void sort_hooks(std::vector<RimHook>& hooks) { std::sort(hooks.begin(), hooks.end()); }

/**
 * A partition of a Ferrers diagram into special rim hooks. Hooks are kept
 * sorted by tail row, top to bottom.
 */
class SpecialRimHookTableau {
public:
    SpecialRimHookTableau() = default;

    SpecialRimHookTableau(Partition shape, std::vector<RimHook> hooks)
        : shape_(std::move(shape)), hooks_(std::move(hooks)) {
        sort_hooks(hooks_);
        std::set<Cell> seen;
        for (const auto& h : hooks_) {
            if (!h.is_special())
                throw std::invalid_argument("every hook must contain a first-column cell");
            for (const Cell& c : h.cells()) {
                if (!shape_.contains(c))
                    throw std::invalid_argument("hook cell outside the shape");
                if (!seen.insert(c).second)
                    throw std::invalid_argument("hooks overlap");
            }
        }
        if (static_cast<int>(seen.size()) != shape_.size())
            throw std::invalid_argument("hooks do not cover the shape");
    }

    const Partition& shape() const { return shape_; }
    const std::vector<RimHook>& hooks() const { return hooks_; }

    /// Hook sizes sorted decreasingly.
    Partition type() const {
        std::vector<int> sizes;
        for (const auto& h : hooks_) sizes.push_back(static_cast<int>(h.size()));
        return Partition::from_unsorted(std::move(sizes));
    }

    int sign() const {
        int s = 1;
        for (const auto& h : hooks_) s *= h.sign();
        return s;
    }

    /// Index of the hook containing c, if any.
    std::optional<std::size_t> hook_of(Cell c) const {
        for (std::size_t k = 0; k < hooks_.size(); ++k)
            if (hooks_[k].contains(c)) return k;
        return std::nullopt;
    }

    friend bool operator==(const SpecialRimHookTableau&, const SpecialRimHookTableau&) = default;

private:
    Partition shape_;
    std::vector<RimHook> hooks_;
};

inline int sign(const SpecialRimHookTableau& s) { return s.sign(); }

namespace detail {

// The first k cells of the outer rim of lambda starting from the bottom of
// column 1, if they form a hook whose removal leaves a partition.
inline std::optional<std::vector<Cell>> peel_rim(const Partition& lambda, int k) {
    std::vector<Cell> path;
    Cell c{static_cast<int>(lambda.length()), 1};
    while (static_cast<int>(path.size()) < k) {
        if (!lambda.contains(c)) return std::nullopt;
        path.push_back(c);
        c = lambda.contains(right_of(c)) ? right_of(c) : above(c);
    }
    std::set<Cell> rest = cells(lambda);
    for (const Cell& p : path) rest.erase(p);
    if (!is_ferrers_diagram(rest)) return std::nullopt;
    return path;
}

inline void srht_rec(const Partition& lambda, std::vector<int>& type_counts,
                     std::vector<RimHook>& hooks, const Partition& shape,
                     std::vector<SpecialRimHookTableau>& out) {
    if (lambda.empty()) {
        out.emplace_back(shape, hooks);
        return;
    }
    for (int k = static_cast<int>(type_counts.size()); k >= 1; --k) {
        if (type_counts[k - 1] == 0) continue;
        auto path = peel_rim(lambda, k);
        if (!path) continue;
        std::vector<int> rows = lambda.parts();
        for (const Cell& p : *path) --rows[p.row - 1];
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
        --type_counts[k - 1];
        hooks.emplace_back(*path);
        srht_rec(Partition(rows), type_counts, hooks, shape, out);
        hooks.pop_back();
        ++type_counts[k - 1];
    }
}

} // namespace detail

/**
 * All special rim-hook tableaux of the given shape and type. The hook holding
 * the bottom cell of column 1 is a strip of the outer rim, so tableaux are
 * built by repeatedly peeling a rim strip from that cell.
 */
inline std::vector<SpecialRimHookTableau> enumerate_srht(const Partition& shape,
                                                         const Partition& type) {
    if (shape.size() != type.size())
        throw std::invalid_argument("enumerate_srht: shape and type sizes differ");
    std::vector<SpecialRimHookTableau> out;
    if (type.length() > shape.length()) return out;
    std::vector<int> counts(type.empty() ? 0 : type.parts().front(), 0);
    for (int p : type.parts()) ++counts[p - 1];
    std::vector<RimHook> hooks;
    detail::srht_rec(shape, counts, hooks, shape, out);
    return out;
}

} // namespace rimhook
