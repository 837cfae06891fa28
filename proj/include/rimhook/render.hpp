#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rimhook/involution.hpp"
#include "rimhook/posets.hpp"
#include "rimhook/symfunc.hpp"
#include "rimhook/tableaux.hpp"

// Plain-text figures. Every cell takes two characters across and two lines
// down: the node itself, then the edge slot to its right or below it.
namespace rimhook {

namespace detail {

using Edge = std::pair<Cell, Cell>;

inline std::set<Edge> hook_edges(const std::vector<RimHook>& hooks) {
    std::set<Edge> out;
    for (const auto& h : hooks)
        for (std::size_t k = 1; k < h.size(); ++k) {
            Cell a = h.cells()[k - 1], b = h.cells()[k];
            if (b < a) std::swap(a, b);
            out.insert({a, b});
        }
    return out;
}

inline std::string rstrip(std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

/// Draws labelled nodes; width is the label width, padded on the right.
inline std::string draw(const std::map<Cell, std::string>& nodes, const std::set<Edge>& edges,
                        std::size_t width) {
    if (nodes.empty()) return "";
    int rows = 0, cols = 0;
    for (const auto& [c, _] : nodes) {
        rows = std::max(rows, c.row);
        cols = std::max(cols, c.col);
    }
    const std::size_t pitch = width + 1;
    std::string out;
    for (int r = 1; r <= rows; ++r) {
        std::string line(cols * pitch, ' ');
        std::string below(cols * pitch, ' ');
        for (int c = 1; c <= cols; ++c) {
            auto it = nodes.find({r, c});
            if (it == nodes.end()) continue;
            const std::size_t at = (c - 1) * pitch;
            line.replace(at, it->second.size(), it->second);
            if (edges.count({Cell{r, c}, Cell{r, c + 1}})) line[at + width] = '-';
            if (edges.count({Cell{r, c}, Cell{r + 1, c}})) below[at] = '|';
        }
        out += rstrip(line) + '\n';
        if (r < rows) out += rstrip(below) + '\n';
    }
    return out;
}

} // namespace detail

/// Nodes print as '*'; edges join consecutive cells of a hook.
inline std::string render(const SpecialRimHookTableau& s) {
    std::map<Cell, std::string> nodes;
    for (const auto& h : s.hooks())
        for (const Cell& c : h.cells()) nodes[c] = "*";
    return detail::draw(nodes, detail::hook_edges(s.hooks()), 1);
}

/// As above, with the active hook drawn as 'O' and the root as '#'.
inline std::string render(const RootedTableau& t) {
    std::map<Cell, std::string> nodes;
    for (std::size_t i = 0; i < t.hooks().size(); ++i)
        for (const Cell& c : t.hooks()[i].cells())
            if (!nodes.count(c) || nodes[c] == "*") nodes[c] = i == t.active() ? "O" : "*";
    nodes[t.root()] = "#";
    return detail::draw(nodes, detail::hook_edges(t.hooks()), 1);
}

inline std::string render(const SemistandardTableau& t) {
    std::size_t width = 1;
    for (const auto& row : t.rows())
        for (int v : row) width = std::max(width, std::to_string(v).size());
    std::ostringstream os;
    for (const auto& row : t.rows()) {
        std::string line;
        for (int v : row) {
            std::string cell = std::to_string(v);
            line += std::string(width - cell.size(), ' ') + cell + ' ';
        }
        os << detail::rstrip(line) << '\n';
    }
    return os.str();
}

inline std::string render(const TableauPair& p) {
    return "S\n" + render(p.srht) + "T\n" + render(p.syt);
}

/// One labelled frame per state; each frame names the rule applied to it.
inline std::string render(const Trace& trace) {
    std::ostringstream os;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& st = trace[i];
        os << "step " << i << "  class " << to_string(st.hook_class);
        if (i + 1 < trace.size()) os << "  rule " << to_string(rule_for(st.hook_class));
        else os << "  final";
        os << "  root (" << st.tableau.root().row << ',' << st.tableau.root().col << ")  sign "
           << (st.tableau.sign() > 0 ? "+" : "-") << '\n';
        os << render(st.tableau) << '\n';
    }
    return os.str();
}

/// Element labels on the grid, hook edges of S between them.
inline std::string render(const Poset& p, const PosetPair& q) {
    std::size_t width = 1;
    for (const auto& l : p.labels()) width = std::max(width, l.size());
    std::map<Cell, std::string> nodes;
    for (std::size_t i = 0; i < q.ptab.rows.size(); ++i)
        for (std::size_t j = 0; j < q.ptab.rows[i].size(); ++j) {
            std::string l = p.label(q.ptab.rows[i][j]);
            l.resize(width, ' ');
            nodes[{static_cast<int>(i + 1), static_cast<int>(j + 1)}] = l;
        }
    return detail::draw(nodes, detail::hook_edges(q.srht.hooks()), width);
}

inline std::string render(const Poset& p, const PairCensus& c) {
    std::ostringstream os;
    os << "pairs " << c.pairs.size() << "  matched " << c.matched.size() << "  fixed "
       << c.fixed_points.size() << '\n';
    for (const auto& [t, k] : c.fixed_by_type()) os << "fixed of type " << to_string(t) << ": " << k << '\n';
    for (std::size_t m = 0; m < c.matched.size(); ++m) {
        const auto [neg, pos] = c.matched[m];
        os << "\nmatch " << m + 1 << "  type " << to_string(c.pairs[neg].srht.type()) << "\n(-)\n"
           << render(p, c.pairs[neg]) << "(+)\n" << render(p, c.pairs[pos]);
    }
    for (std::size_t i : c.fixed_points)
        os << "\nfixed  type " << to_string(c.pairs[i].srht.type()) << '\n' << render(p, c.pairs[i]);
    return os.str();
}

/// Right-aligned table with partition labels on both axes.
inline std::string render(const PartitionMatrix& m) {
    std::vector<std::string> labels;
    std::size_t lw = 0, cw = 1;
    for (const auto& p : m.order()) {
        labels.push_back(to_string(p));
        lw = std::max(lw, labels.back().size());
        cw = std::max(cw, labels.back().size());
    }
    for (std::size_t i = 0; i < m.dimension(); ++i)
        for (std::size_t j = 0; j < m.dimension(); ++j) cw = std::max(cw, m(i, j).str().size());
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
    std::ostringstream os;
    std::string head(lw, ' ');
    for (const auto& l : labels) head += ' ' + pad(l, cw);
    os << head << '\n';
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        os << labels[i] << std::string(lw - labels[i].size(), ' ');
        for (std::size_t j = 0; j < m.dimension(); ++j) os << ' ' << pad(m(i, j).str(), cw);
        os << '\n';
    }
    return os.str();
}

} // namespace rimhook
