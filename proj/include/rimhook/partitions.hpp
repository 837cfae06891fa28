#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rimhook {

/// A cell (row, col) of a Ferrers diagram in English notation, both 1-based.
struct Cell {
    int row = 1;
    int col = 1;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c) {
    return os << '(' << c.row << ',' << c.col << ')';
}

inline Cell above(Cell c) { return {c.row - 1, c.col}; }
inline Cell below(Cell c) { return {c.row + 1, c.col}; }
inline Cell left_of(Cell c) { return {c.row, c.col - 1}; }
inline Cell right_of(Cell c) { return {c.row, c.col + 1}; }

/**
 * Integer partition stored as its weakly decreasing list of positive parts.
 *
 * The empty partition is the unique partition of 0. Construction validates
 * the ordering and positivity of the parts.
 */
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts arbitrary positive sizes into a partition.
    static Partition from_unsorted(std::vector<int> sizes) {
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        return Partition(std::move(sizes));
    }

    /// Builds the partition whose diagram is the given cell set; throws if the
    /// set is not a Ferrers diagram.
    static Partition from_cells(const std::set<Cell>& cells);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Part i (1-based); zero beyond the length.
    int part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    bool contains(Cell c) const {
        return c.row >= 1 && c.col >= 1 && static_cast<std::size_t>(c.row) <= parts_.size() &&
               c.col <= parts_[c.row - 1];
    }

    /// True when every part equals one, i.e. the partition is (1^n).
    bool is_single_column() const {
        return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
    }

    /// Multiplicity m_k of the part k.
    int multiplicity(int k) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/**
 * Reverse-lexicographic order: lambda precedes mu iff at the first index where
 * the zero-padded part sequences differ, lambda has the larger part. Thus (n)
 * comes first and (1^n) last.
 */
inline bool revlex_less(const Partition& a, const Partition& b) {
    const std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 1; i <= len; ++i) {
        if (a.part(i) != b.part(i))
            return a.part(i) > b.part(i);
    }
    return false;
}

struct RevLexLess {
    bool operator()(const Partition& a, const Partition& b) const { return revlex_less(a, b); }
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// All partitions of n in reverse-lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Trying the largest available part first yields reverse-lex order directly.
    detail::partitions_rec(n, n, cur, out);
    return out;
}

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> parts;
    const int width = lambda.empty() ? 0 : lambda.parts().front();
    for (int j = 1; j <= width; ++j) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= j) ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

/// Cells of the Ferrers diagram, ordered row-major.
inline std::set<Cell> cells(const Partition& lambda) {
    std::set<Cell> out;
    for (std::size_t i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            out.insert({static_cast<int>(i), j});
    return out;
}

inline Partition Partition::from_cells(const std::set<Cell>& cs) {
    std::vector<int> rows;
    for (const Cell& c : cs) {
        if (c.row < 1 || c.col < 1)
            throw std::invalid_argument("cell coordinates must be positive");
        if (static_cast<std::size_t>(c.row) > rows.size())
            rows.resize(c.row, 0);
        ++rows[c.row - 1];
    }
    for (int r : rows)
        if (r == 0)
            throw std::invalid_argument("cell set is not a Ferrers diagram");
    const Partition p = Partition::from_unsorted(rows);
    if (p.parts() != rows || cells(p) != cs)
        throw std::invalid_argument("cell set is not a Ferrers diagram");
    return p;
}

inline bool is_ferrers_diagram(const std::set<Cell>& cs) {
    try {
        Partition::from_cells(cs);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

/// Bracket form, e.g. "[3,2,2,1,1]"; the empty partition prints as "[]".
inline std::string to_string(const Partition& lambda) {
    std::string s = "[";
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(lambda.parts()[i]);
    }
    return s + "]";
}

/// Multiplicity form with increasing parts, e.g. "1^2 2^2 3".
inline std::string to_multiplicity_string(const Partition& lambda) {
    std::string s;
    const int top = lambda.empty() ? 0 : lambda.parts().front();
    for (int k = 1; k <= top; ++k) {
        const int m = lambda.multiplicity(k);
        if (m == 0) continue;
        if (!s.empty()) s += ' ';
        s += std::to_string(k);
        if (m > 1) s += '^' + std::to_string(m);
    }
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

namespace detail {

inline int parse_positive(std::string_view tok) {
    if (tok.empty())
        throw std::invalid_argument("empty number in partition");
    int v = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("bad character in partition: '" + std::string(tok) + "'");
        v = v * 10 + (ch - '0');
        if (v > 1000000)
            throw std::invalid_argument("partition part too large");
    }
    return v;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace detail

/**
 * Parses either the bracket form "[3,2,2,1,1]" or the multiplicity form
 * "1^2 2^2 3" (tokens separated by whitespace, in any order). Bracket form
 * must already be weakly decreasing; the brackets may be left off.
 */
inline Partition parse_partition(std::string_view text) {
    text = detail::trim(text);
    if (!text.empty() && text.front() != '[' && text.find(',') != std::string_view::npos)
        return parse_partition("[" + std::string(text) + "]");
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']')
            throw std::invalid_argument("unterminated partition bracket");
        std::string_view body = detail::trim(text.substr(1, text.size() - 2));
        std::vector<int> parts;
        while (!body.empty()) {
            const auto comma = body.find(',');
            const auto tok = detail::trim(body.substr(0, comma));
            const int v = detail::parse_positive(tok);
            if (v == 0)
                throw std::invalid_argument("partition parts must be positive");
            parts.push_back(v);
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
            if (detail::trim(body).empty())
                throw std::invalid_argument("trailing comma in partition");
        }
        return Partition(std::move(parts));
    }
    std::vector<int> parts;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        const auto caret = tok.find('^');
        const int part = detail::parse_positive(std::string_view(tok).substr(0, caret));
        const int mult = caret == std::string::npos
                             ? 1
                             : detail::parse_positive(std::string_view(tok).substr(caret + 1));
        if (part == 0)
            throw std::invalid_argument("partition parts must be positive");
        parts.insert(parts.end(), mult, part);
    }
    return Partition::from_unsorted(std::move(parts));
}

} // namespace rimhook
