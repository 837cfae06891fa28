#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rimhook/involution.hpp"
#include "rimhook/partitions.hpp"
#include "rimhook/symfunc.hpp"
#include "rimhook/tableaux.hpp"

namespace rimhook {

/// Finite poset on elements 0..n-1 with display labels; leq is reflexive,
/// antisymmetric and transitive.
class Poset {
public:
    Poset() = default;

    Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
        : labels_(std::move(labels)), leq_(std::move(leq)) {
        const std::size_t n = labels_.size();
        if (leq_.size() != n) throw std::invalid_argument("relation matrix has the wrong size");
        for (const auto& row : leq_)
            if (row.size() != n) throw std::invalid_argument("relation matrix has the wrong size");
        for (std::size_t a = 0; a < n; ++a) {
            if (!leq_[a][a]) throw std::invalid_argument("poset relation must be reflexive");
            for (std::size_t b = 0; b < n; ++b) {
                if (a != b && leq_[a][b] && leq_[b][a])
                    throw std::invalid_argument("poset relation must be antisymmetric");
                for (std::size_t c = 0; c < n; ++c)
                    if (leq_[a][b] && leq_[b][c] && !leq_[a][c])
                        throw std::invalid_argument("poset relation must be transitive");
            }
        }
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != n) throw std::invalid_argument("poset labels must be distinct");
    }

    /// Reflexive-transitive closure of the given strict relations; rejects cycles.
    static Poset from_relations(std::vector<std::string> labels,
                                const std::vector<std::pair<std::size_t, std::size_t>>& less) {
        const std::size_t n = labels.size();
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        for (std::size_t a = 0; a < n; ++a) leq[a][a] = true;
        for (auto [a, b] : less) {
            if (a >= n || b >= n) throw std::invalid_argument("relation refers to an unknown element");
            if (a == b) throw std::invalid_argument("an element cannot be below itself");
            leq[a][b] = true;
        }
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < n; ++a)
                if (leq[a][k])
                    for (std::size_t b = 0; b < n; ++b)
                        if (leq[k][b]) leq[a][b] = true;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (leq[a][b] && leq[b][a])
                    throw std::invalid_argument("relations contain a cycle through " + labels[a] +
                                                " and " + labels[b]);
        return Poset(std::move(labels), std::move(leq));
    }

    static Poset chain(std::size_t n) {
        std::vector<std::pair<std::size_t, std::size_t>> rel;
        for (std::size_t i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
        return from_relations(default_labels(n), rel);
    }

    static Poset antichain(std::size_t n) { return from_relations(default_labels(n), {}); }

    /// Labels a, b, ..., z, then e26, e27, ...
    static std::vector<std::string> default_labels(std::size_t n) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n; ++i)
            out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
        return out;
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    std::size_t index_of(const std::string& label) const {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) throw std::invalid_argument("unknown poset element " + label);
        return static_cast<std::size_t>(it - labels_.begin());
    }

    bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }
    bool comparable(std::size_t a, std::size_t b) const { return leq_[a][b] || leq_[b][a]; }
    const std::vector<std::vector<bool>>& relation() const { return leq_; }

    /// Pairs (a, b) with b covering a.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t a = 0; a < size(); ++a)
            for (std::size_t b = 0; b < size(); ++b) {
                if (!less(a, b)) continue;
                bool cover = true;
                for (std::size_t c = 0; c < size() && cover; ++c)
                    if (less(a, c) && less(c, b)) cover = false;
                if (cover) out.emplace_back(a, b);
            }
        return out;
    }

    /// Adds a new element above every existing one.
    Poset with_maximum(const std::string& label) const {
        auto labels = labels_;
        labels.push_back(label);
        auto leq = leq_;
        for (auto& row : leq) row.push_back(true);
        leq.emplace_back(size() + 1, false);
        leq.back().back() = true;
        return Poset(std::move(labels), std::move(leq));
    }

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> leq_;
};

/**
 * Parses the poset text format: one relation per line written "x < y"
 * (chains "x < y < z" are accepted), a bare name declares an element, and
 * '#' starts a comment. Elements are numbered in order of first appearance.
 */
inline Poset parse_poset(const std::string& text) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    auto intern = [&](const std::string& name) {
        if (name.empty()) throw std::invalid_argument("empty element name in poset file");
        for (char ch : name)
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == '<')
                throw std::invalid_argument("bad element name '" + name + "'");
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it != labels.end()) return static_cast<std::size_t>(it - labels.begin());
        labels.push_back(name);
        return labels.size() - 1;
    };
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> tokens;
        while (ls >> tok) {
            // Split tokens such as "a<b" around '<'.
            std::string piece;
            for (char ch : tok) {
                if (ch == '<') {
                    if (!piece.empty()) tokens.push_back(piece);
                    tokens.emplace_back("<");
                    piece.clear();
                } else {
                    piece += ch;
                }
            }
            if (!piece.empty()) tokens.push_back(piece);
        }
        if (tokens.empty()) continue;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            const bool want_name = i % 2 == 0;
            if (want_name == (tokens[i] == "<"))
                throw std::invalid_argument("malformed poset line " + std::to_string(lineno) + ": " + line);
        }
        if (tokens.size() % 2 == 0)
            throw std::invalid_argument("malformed poset line " + std::to_string(lineno) + ": " + line);
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < tokens.size(); i += 2) ids.push_back(intern(tokens[i]));
        for (std::size_t i = 0; i + 1 < ids.size(); ++i) rel.emplace_back(ids[i], ids[i + 1]);
    }
    return Poset::from_relations(std::move(labels), rel);
}

/// Writes the cover relations, plus isolated elements on their own lines.
inline std::string to_poset_text(const Poset& p) {
    std::string out;
    std::vector<bool> mentioned(p.size(), false);
    for (auto [a, b] : p.covers()) {
        out += p.label(a) + " < " + p.label(b) + "\n";
        mentioned[a] = mentioned[b] = true;
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!mentioned[i]) out += p.label(i) + "\n";
    return out;
}

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    explicit Graph(std::size_t n = 0) : adj_(n, std::vector<bool>(n, false)) {}

    std::size_t size() const { return adj_.size(); }

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) throw std::invalid_argument("graphs have no loops");
        adj_.at(u).at(v) = adj_.at(v).at(u) = true;
    }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v]; }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t u = 0; u < size(); ++u)
            for (std::size_t v = u + 1; v < size(); ++v)
                if (adj_[u][v]) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<bool>> adj_;
};

inline Graph incomparability_graph(const Poset& p) {
    Graph g(p.size());
    for (std::size_t u = 0; u < p.size(); ++u)
        for (std::size_t v = u + 1; v < p.size(); ++v)
            if (!p.comparable(u, v)) g.add_edge(u, v);
    return g;
}

/// Number of elements in a longest chain.
inline int height(const Poset& p) {
    if (p.size() == 0) throw std::invalid_argument("height of the empty poset is undefined");
    // Longest chain ending at each element; a linear extension orders the DP.
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> below(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p.less(j, i)) ++below[i];
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
    std::vector<int> longest(p.size(), 1);
    int best = 0;
    for (std::size_t x : order) {
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.less(y, x)) longest[x] = std::max(longest[x], longest[y] + 1);
        best = std::max(best, longest[x]);
    }
    return best;
}

namespace detail {

inline void chains_rec(const Poset& p, std::size_t len, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (std::size_t x = 0; x < p.size(); ++x)
        if (cur.empty() || p.less(cur.back(), x)) {
            cur.push_back(x);
            chains_rec(p, len, cur, out);
            cur.pop_back();
        }
}

} // namespace detail

/// All chains x_1 < ... < x_len.
inline std::vector<std::vector<std::size_t>> chains(const Poset& p, std::size_t len) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    detail::chains_rec(p, len, cur, out);
    return out;
}

/// True iff P has no induced subposet isomorphic to an a-chain plus a disjoint,
/// elementwise incomparable b-chain.
inline bool is_ab_free(const Poset& p, int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("is_ab_free: chain lengths must be positive");
    const auto long_chains = chains(p, static_cast<std::size_t>(a));
    const auto short_chains = chains(p, static_cast<std::size_t>(b));
    for (const auto& c1 : long_chains)
        for (const auto& c2 : short_chains) {
            bool separate = true;
            for (std::size_t x : c1)
                for (std::size_t y : c2)
                    if (x == y || p.comparable(x, y)) separate = false;
            if (separate) return false;
        }
    return true;
}

/// A filling of a shape by all elements of P: columns strictly increase in P
/// and no element is greater than its right neighbour.
struct PTableau {
    Partition shape;
    std::vector<std::vector<std::size_t>> rows;

    std::size_t at(Cell c) const { return rows.at(c.row - 1).at(c.col - 1); }
    friend bool operator==(const PTableau&, const PTableau&) = default;
};

inline bool is_p_tableau(const Poset& p, const PTableau& t) {
    std::vector<bool> used(p.size(), false);
    std::size_t count = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (static_cast<int>(t.rows[i].size()) != t.shape.part(i + 1)) return false;
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
            const std::size_t x = t.rows[i][j];
            if (x >= p.size() || used[x]) return false;
            used[x] = true;
            ++count;
            if (j > 0 && p.less(x, t.rows[i][j - 1])) return false;
            if (i > 0 && !p.less(t.rows[i - 1][j], x)) return false;
        }
    }
    return t.rows.size() == t.shape.length() && count == p.size();
}

namespace detail {

inline void p_tableaux_rec(const Poset& p, const Partition& shape, std::size_t row, std::size_t col,
                           std::vector<bool>& used, std::vector<std::vector<std::size_t>>& rows,
                           const std::function<void(const PTableau&)>& emit) {
    if (row == shape.length()) {
        emit(PTableau{shape, rows});
        return;
    }
    const std::size_t len = static_cast<std::size_t>(shape.part(row + 1));
    const std::size_t next_row = col + 1 == len ? row + 1 : row;
    const std::size_t next_col = col + 1 == len ? 0 : col + 1;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (used[x]) continue;
        if (col > 0 && p.less(x, rows[row][col - 1])) continue;
        if (row > 0 && !p.less(rows[row - 1][col], x)) continue;
        used[x] = true;
        rows[row].push_back(x);
        p_tableaux_rec(p, shape, next_row, next_col, used, rows, emit);
        rows[row].pop_back();
        used[x] = false;
    }
}

} // namespace detail

/// P-tableaux of the given shape in lexicographic fill order (row-major,
/// smallest element index first).
inline void for_each_p_tableau(const Poset& p, const Partition& shape,
                               const std::function<void(const PTableau&)>& emit) {
    if (static_cast<std::size_t>(shape.size()) != p.size())
        throw std::invalid_argument("shape size differs from the poset size");
    std::vector<bool> used(p.size(), false);
    std::vector<std::vector<std::size_t>> rows(shape.length());
    if (shape.empty()) {
        emit(PTableau{shape, {}});
        return;
    }
    detail::p_tableaux_rec(p, shape, 0, 0, used, rows, emit);
}

inline std::vector<PTableau> enumerate_p_tableaux(const Poset& p, const Partition& shape) {
    std::vector<PTableau> out;
    for_each_p_tableau(p, shape, [&](const PTableau& t) { out.push_back(t); });
    return out;
}

inline std::size_t count_p_tableaux(const Poset& p, const Partition& shape) {
    std::size_t count = 0;
    for_each_p_tableau(p, shape, [&](const PTableau&) { ++count; });
    return count;
}

/// Proper colorings of G from {1..k}, counted by exhaustive backtracking.
inline Integer chromatic_polynomial_value(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("number of colors must be nonnegative");
    const std::size_t n = g.size();
    std::vector<int> color(n, -1);
    std::function<Integer(std::size_t)> rec = [&](std::size_t v) -> Integer {
        if (v == n) return 1;
        Integer total = 0;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u)
                if (g.adjacent(u, v) && color[u] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            total += rec(v + 1);
        }
        color[v] = -1;
        return total;
    };
    return rec(0);
}

/// The same count by deletion-contraction: P(G) = P(G - e) - P(G / e).
inline Integer chromatic_by_deletion_contraction(const Graph& g, int k) {
    const auto es = g.edges();
    if (es.empty()) {
        Integer r = 1;
        for (std::size_t i = 0; i < g.size(); ++i) r *= k;
        return r;
    }
    const auto [u, v] = es.front();
    Graph deleted(g.size());
    for (auto [a, b] : es)
        if (!(a == u && b == v)) deleted.add_edge(a, b);
    // Contract v into u and drop v, renumbering the vertices after it.
    Graph contracted(g.size() - 1);
    auto relabel = [&](std::size_t x) { return x == v ? u : (x > v ? x - 1 : x); };
    for (auto [a, b] : es) {
        const std::size_t ra = relabel(a), rb = relabel(b);
        if (ra != rb) contracted.add_edge(ra, rb);
    }
    return chromatic_by_deletion_contraction(deleted, k) - chromatic_by_deletion_contraction(contracted, k);
}

/**
 * X_G in the monomial basis, computed straight from colorings: the
 * coefficient of m_lambda counts proper colorings whose colour classes have
 * sizes lambda_1, lambda_2, ... on colours 1, 2, ..., which is the number of
 * stable set partitions of type lambda times prod_i m_i(lambda)!.
 */
inline SymFuncExpansion chromatic_monomial_expansion(const Graph& g) {
    const int n = static_cast<int>(g.size());
    std::map<Partition, Integer, RevLexLess> stable;
    std::vector<std::vector<std::size_t>> blocks;
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == g.size()) {
            std::vector<int> sizes;
            for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
            stable[Partition::from_unsorted(sizes)] += 1;
            return;
        }
        // Index access: the recursion appends to blocks.
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const auto& b = blocks[i];
            if (std::any_of(b.begin(), b.end(), [&](std::size_t u) { return g.adjacent(u, v); })) continue;
            blocks[i].push_back(v);
            rec(v + 1);
            blocks[i].pop_back();
        }
        blocks.push_back({v});
        rec(v + 1);
        blocks.pop_back();
    };
    rec(0);
    SymFuncExpansion out(Basis::m, n);
    for (const auto& [lambda, count] : stable) {
        Integer c = count;
        const int top = lambda.empty() ? 0 : lambda.parts().front();
        for (int k = 1; k <= top; ++k) c *= factorial(lambda.multiplicity(k));
        out.add(lambda, c);
    }
    return out;
}

/// A special rim-hook tableau together with a P-tableau of the same shape.
struct PosetPair {
    SpecialRimHookTableau srht;
    PTableau ptab;

    friend bool operator==(const PosetPair&, const PosetPair&) = default;
};

/// Outcome of the height-two involution on all pairs of a poset.
struct PairCensus {
    std::vector<PosetPair> pairs;
    /// (negative pair index, positive pair index).
    std::vector<std::pair<std::size_t, std::size_t>> matched;
    std::vector<std::size_t> fixed_points;

    std::map<Partition, std::size_t, RevLexLess> fixed_by_type() const {
        std::map<Partition, std::size_t, RevLexLess> out;
        for (std::size_t i : fixed_points) ++out[pairs[i].srht.type()];
        return out;
    }
};

struct CsfResult {
    SymFuncExpansion s_expansion{Basis::s, 0};
    SymFuncExpansion e_expansion{Basis::e, 0};
    std::map<Partition, std::size_t, RevLexLess> p_tableau_counts;
    std::optional<PairCensus> census;
};

/// All pairs (S, T) of a special rim-hook tableau and a P-tableau of the same
/// shape: shapes in reverse-lex order, S in enumeration order, T in fill order.
inline std::vector<PosetPair> chow_pairs(const Poset& p) {
    std::vector<PosetPair> out;
    const int n = static_cast<int>(p.size());
    for (const auto& shape : enumerate_partitions(n)) {
        const auto tabs = enumerate_p_tableaux(p, shape);
        if (tabs.empty()) continue;
        for (const auto& type : enumerate_partitions(n))
            for (const auto& s : enumerate_srht(shape, type))
                for (const auto& t : tabs) out.push_back({s, t});
    }
    return out;
}

/// Raised when the image of the height-two involution differs from the
/// predicted set of positive pairs; carries the offending pair.
class ImageCharacterizationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

inline PTableau move_last(const PTableau& t, std::size_t from_row, std::size_t to_row) {
    auto rows = t.rows;
    const std::size_t x = rows.at(from_row).back();
    rows[from_row].pop_back();
    if (to_row == rows.size()) rows.emplace_back();
    rows.at(to_row).push_back(x);
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    std::vector<int> lens;
    for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
    return PTableau{Partition(lens), rows};
}

// Runs iota from the given corner and forgets the root.
inline SpecialRimHookTableau iota_from(const SpecialRimHookTableau& s, Cell root) {
    return iota(RootedTableau::rooted_at(s, root)).first.forget_root();
}

} // namespace detail

/**
 * The sign-reversing involution on Chow pairs for a poset of height at most
 * two. Negative pairs are rooted at the end of row two and pushed through
 * iota; the element there moves to the end of row one. The image must be
 * exactly the positive pairs of shape (v1, v2), v1 > v2 + 1, whose entries
 * x = T(1, v1) and y = T(1, v2 + 1) satisfy x > y; the rest are fixed.
 */
inline PairCensus stanley_stembridge_involution(const Poset& p) {
    if (p.size() == 0) throw std::invalid_argument("the empty poset has no pairs");
    if (height(p) > 2) throw std::invalid_argument("the involution needs height at most two");
    PairCensus census;
    census.pairs = chow_pairs(p);
    const auto& pairs = census.pairs;
    auto index_of = [&](const PosetPair& q) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i] == q) return i;
        return std::nullopt;
    };
    auto in_predicted_image = [&](const PosetPair& q) {
        const Partition& nu = q.srht.shape();
        if (q.srht.sign() != 1 || nu.length() > 2) return false;
        const int v1 = nu.part(1), v2 = nu.part(2);
        if (!(v1 > v2 + 1)) return false;
        const std::size_t x = q.ptab.at({1, v1}), y = q.ptab.at({1, v2 + 1});
        return p.less(y, x);
    };

    std::vector<bool> matched(pairs.size(), false);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& q = pairs[i];
        if (q.srht.sign() != -1) continue;
        const Partition& lambda = q.srht.shape();
        if (lambda.length() != 2)
            throw ImageCharacterizationError("negative pair without exactly two rows");
        const Cell root{2, lambda.part(2)};
        const auto image_s = detail::iota_from(q.srht, root);
        const auto image_t = detail::move_last(q.ptab, 1, 0);
        const PosetPair image{image_s, image_t};
        if (!is_p_tableau(p, image_t))
            throw ImageCharacterizationError("moved entry breaks the P-tableau conditions");
        const auto j = index_of(image);
        if (!j || !in_predicted_image(image))
            throw ImageCharacterizationError("image pair outside the predicted set");
        if (matched[*j]) throw ImageCharacterizationError("two pairs share an image");
        // The reverse map must recover the preimage.
        const Partition& nu = image_s.shape();
        const PosetPair back{detail::iota_from(image_s, Cell{1, nu.part(1)}),
                             detail::move_last(image_t, 0, 1)};
        if (back != q) throw ImageCharacterizationError("reverse map does not recover the pair");
        matched[i] = matched[*j] = true;
        census.matched.emplace_back(i, *j);
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (in_predicted_image(pairs[i]) != (matched[i] && pairs[i].srht.sign() == 1))
            throw ImageCharacterizationError("predicted image and actual image differ");
        if (!matched[i]) {
            if (pairs[i].srht.sign() != 1) throw ImageCharacterizationError("negative fixed point");
            census.fixed_points.push_back(i);
        }
    }
    return census;
}

/**
 * Chromatic symmetric function of G(P) for a (3+1)-free poset: the Schur
 * coefficient of s_{lambda'} is the number of P-tableaux of shape lambda, and
 * c_mu = sum_lambda K^{-1}_{mu,lambda} f_P^lambda. For height at most two the
 * involution census is attached.
 */
inline CsfResult csf(const Poset& p) {
    if (!is_ab_free(p, 3, 1))
        throw std::invalid_argument("csf needs a (3+1)-free poset");
    const int n = static_cast<int>(p.size());
    CsfResult res;
    res.s_expansion = SymFuncExpansion(Basis::s, n);
    res.e_expansion = SymFuncExpansion(Basis::e, n);
    const auto shapes = enumerate_partitions(n);
    for (const auto& lambda : shapes) {
        const std::size_t f = count_p_tableaux(p, lambda);
        if (f == 0) continue;
        res.p_tableau_counts[lambda] = f;
        res.s_expansion.add(conjugate(lambda), f);
        for (const auto& mu : shapes) res.e_expansion.add(mu, signed_srht_count(lambda, mu) * f);
    }
    if (n > 0 && height(p) <= 2) res.census = stanley_stembridge_involution(p);
    return res;
}

// ---------------------------------------------------------------------------
// Enumeration of posets up to isomorphism.

namespace detail {

// Colour refinement on (down-degree, up-degree); the resulting ranks are
// invariant under isomorphism.
inline std::vector<int> refined_colours(const Poset& p) {
    const std::size_t n = p.size();
    std::vector<std::vector<int>> sig(n);
    std::vector<int> colour(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        int down = 0, up = 0;
        for (std::size_t y = 0; y < n; ++y) {
            down += p.less(y, x);
            up += p.less(x, y);
        }
        sig[x] = {down, up};
    }
    for (std::size_t round = 0; round <= n; ++round) {
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (std::size_t x = 0; x < n; ++x)
            colour[x] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[x]) - uniq.begin());
        std::vector<std::vector<int>> next(n);
        for (std::size_t x = 0; x < n; ++x) {
            std::vector<int> downs, ups;
            for (std::size_t y = 0; y < n; ++y) {
                if (p.less(y, x)) downs.push_back(colour[y]);
                if (p.less(x, y)) ups.push_back(colour[y]);
            }
            std::sort(downs.begin(), downs.end());
            std::sort(ups.begin(), ups.end());
            next[x] = {colour[x], -1};
            next[x].insert(next[x].end(), downs.begin(), downs.end());
            next[x].push_back(-2);
            next[x].insert(next[x].end(), ups.begin(), ups.end());
        }
        sig = std::move(next);
    }
    return colour;
}

} // namespace detail

/**
 * Canonical code of the relation: the lexicographically least strict-order
 * bit string over all orderings that list colour classes in rank order.
 * Two posets are isomorphic iff their codes agree. Sizes up to 8.
 */
inline std::uint64_t canonical_code(const Poset& p) {
    const std::size_t n = p.size();
    if (n > 8) throw std::invalid_argument("canonical_code supports at most 8 elements");
    const auto colour = detail::refined_colours(p);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](auto a, auto b) { return std::pair(colour[a], a) < std::pair(colour[b], b); });
    std::vector<std::pair<std::size_t, std::size_t>> classes;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && colour[order[j]] == colour[order[i]]) ++j;
        classes.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == classes.size()) {
            std::uint64_t code = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    code = (code << 1) | (p.less(order[a], order[b]) ? 1u : 0u);
            best = std::min(best, code);
            return;
        }
        auto [lo, hi] = classes[k];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            rec(k + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
    return best;
}

/**
 * One representative of every isomorphism class of posets with n elements,
 * n <= 8. Each class is reached by adding a new maximal element above an
 * order ideal of a smaller representative.
 */
inline std::vector<Poset> enumerate_posets(std::size_t n) {
    if (n > 8) throw std::invalid_argument("enumerate_posets supports at most 8 elements");
    std::vector<Poset> level{Poset::antichain(0)};
    for (std::size_t size = 1; size <= n; ++size) {
        std::vector<Poset> next;
        std::unordered_set<std::uint64_t> seen;
        for (const Poset& q : level) {
            const std::size_t m = q.size();
            for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
                bool ideal = true;
                for (std::size_t x = 0; x < m && ideal; ++x)
                    if (mask >> x & 1u)
                        for (std::size_t y = 0; y < m; ++y)
                            if (q.less(y, x) && !(mask >> y & 1u)) ideal = false;
                if (!ideal) continue;
                auto leq = q.relation();
                for (std::size_t x = 0; x < m; ++x) leq[x].push_back((mask >> x & 1u) != 0);
                leq.emplace_back(m + 1, false);
                leq.back().back() = true;
                Poset candidate(Poset::default_labels(m + 1), std::move(leq));
                if (seen.insert(canonical_code(candidate)).second) next.push_back(std::move(candidate));
            }
        }
        level = std::move(next);
    }
    return level;
}

} // namespace rimhook
