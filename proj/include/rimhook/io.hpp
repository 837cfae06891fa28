#pragma once

#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rimhook/involution.hpp"
#include "rimhook/partitions.hpp"
#include "rimhook/posets.hpp"
#include "rimhook/symfunc.hpp"
#include "rimhook/tableaux.hpp"

// JSON encodings used by the CLI and the regression fixtures.
namespace rimhook {

using json = nlohmann::json;

inline json to_json(const Partition& p) { return json(p.parts()); }
inline Partition partition_from_json(const json& j) { return Partition(j.get<std::vector<int>>()); }

inline json to_json(Cell c) { return json::array({c.row, c.col}); }
inline Cell cell_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("a cell is a [row, col] pair");
    return {j.at(0).get<int>(), j.at(1).get<int>()};
}

inline json to_json(const RimHook& h) {
    json out = json::array();
    for (const Cell& c : h.cells()) out.push_back(to_json(c));
    return out;
}
inline RimHook hook_from_json(const json& j) {
    std::vector<Cell> cs;
    for (const auto& c : j) cs.push_back(cell_from_json(c));
    return RimHook(std::move(cs));
}

inline json hooks_to_json(const std::vector<RimHook>& hooks) {
    json out = json::array();
    for (const auto& h : hooks) out.push_back(to_json(h));
    return out;
}
inline std::vector<RimHook> hooks_from_json(const json& j) {
    std::vector<RimHook> out;
    for (const auto& h : j) out.push_back(hook_from_json(h));
    return out;
}

/// {"shape":[...],"hooks":[[[i,j],...],...]}, hooks tail to head.
inline json to_json(const SpecialRimHookTableau& s) {
    return {{"shape", to_json(s.shape())}, {"hooks", hooks_to_json(s.hooks())}};
}
inline SpecialRimHookTableau srht_from_json(const json& j) {
    return SpecialRimHookTableau(partition_from_json(j.at("shape")), hooks_from_json(j.at("hooks")));
}

inline json to_json(const SemistandardTableau& t) { return json(t.rows()); }
inline SemistandardTableau ssyt_from_json(const json& j) {
    return SemistandardTableau(j.get<std::vector<std::vector<int>>>());
}

inline json to_json(const TableauPair& p) { return {{"S", to_json(p.srht)}, {"T", to_json(p.syt)}}; }
inline TableauPair pair_from_json(const json& j) {
    return {srht_from_json(j.at("S")), ssyt_from_json(j.at("T"))};
}

inline json to_json(const RootedTableau& t) {
    return {{"shape", to_json(t.shape())},
            {"hooks", hooks_to_json(t.hooks())},
            {"root", to_json(t.root())},
            {"active", t.active()}};
}
inline RootedTableau rooted_from_json(const json& j) {
    RootedTableau t(hooks_from_json(j.at("hooks")), cell_from_json(j.at("root")),
                    j.at("active").get<std::size_t>());
    t.validate();
    return t;
}

/// One element per trace state: {"class","rule","tableau","root","active"}.
/// "rule" names the operation applied to leave the state; it is null on the
/// final state.
inline json to_json(const Trace& trace) {
    json out = json::array();
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& st = trace[i];
        json step;
        step["class"] = std::string(to_string(st.hook_class));
        step["rule"] = i + 1 < trace.size() ? json(std::string(to_string(rule_for(st.hook_class))))
                                            : json(nullptr);
        step["tableau"] = {{"shape", to_json(st.tableau.shape())},
                           {"hooks", hooks_to_json(st.tableau.hooks())}};
        step["root"] = to_json(st.tableau.root());
        step["active"] = st.tableau.active();
        out.push_back(std::move(step));
    }
    return out;
}
inline Trace trace_from_json(const json& j) {
    Trace out;
    for (const auto& step : j) {
        RootedTableau t(hooks_from_json(step.at("tableau").at("hooks")), cell_from_json(step.at("root")),
                        step.at("active").get<std::size_t>());
        out.push_back({std::move(t), parse_hook_class(step.at("class").get<std::string>())});
    }
    return out;
}

/// Integers that fit in 64 bits are written as JSON numbers, larger ones as strings.
inline json to_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(v.convert_to<long long>());
    return json(v.str());
}
inline Integer integer_from_json(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<long long>());
}

/// {"basis":"e","weight":4,"coeffs":{"[2,2]":2,...}}
inline json to_json(const SymFuncExpansion& f) {
    json coeffs = json::object();
    for (const auto& [p, c] : f.coeffs()) coeffs[to_string(p)] = to_json(c);
    return {{"basis", to_string(f.basis())}, {"weight", f.weight()}, {"coeffs", coeffs}};
}
inline SymFuncExpansion expansion_from_json(const json& j) {
    SymFuncExpansion f(parse_basis(j.at("basis").get<std::string>()), j.at("weight").get<int>());
    for (const auto& [key, c] : j.at("coeffs").items()) f.add(parse_partition(key), integer_from_json(c));
    return f;
}

inline json to_json(const PartitionMatrix& m) {
    json order = json::array();
    for (const auto& p : m.order()) order.push_back(to_json(p));
    json rows = json::array();
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dimension(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"n", m.weight()}, {"order", order}, {"entries", rows}};
}
inline PartitionMatrix matrix_from_json(const json& j) {
    PartitionMatrix m(j.at("n").get<int>());
    const auto& rows = j.at("entries");
    if (rows.size() != m.dimension()) throw std::invalid_argument("matrix has the wrong dimension");
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        if (rows[i].size() != m.dimension()) throw std::invalid_argument("matrix row has the wrong length");
        for (std::size_t k = 0; k < m.dimension(); ++k) m(i, k) = integer_from_json(rows[i][k]);
    }
    return m;
}

/// CSV with quoted partition labels heading every row and column.
inline std::string to_csv(const PartitionMatrix& m) {
    std::ostringstream os;
    for (const auto& p : m.order()) os << ",\"" << to_string(p) << '"';
    os << '\n';
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        os << '"' << to_string(m.order()[i]) << '"';
        for (std::size_t j = 0; j < m.dimension(); ++j) os << ',' << m(i, j);
        os << '\n';
    }
    return os.str();
}

/// Combined tableau: element labels on the grid plus the hook edges of S.
inline json combined_to_json(const Poset& p, const PosetPair& q) {
    json grid = json::array();
    for (const auto& row : q.ptab.rows) {
        json r = json::array();
        for (std::size_t x : row) r.push_back(p.label(x));
        grid.push_back(std::move(r));
    }
    json edges = json::array();
    for (const auto& h : q.srht.hooks())
        for (std::size_t k = 1; k < h.size(); ++k)
            edges.push_back(json::array({to_json(h.cells()[k - 1]), to_json(h.cells()[k])}));
    return {{"shape", to_json(q.srht.shape())},
            {"type", to_json(q.srht.type())},
            {"sign", q.srht.sign()},
            {"grid", grid},
            {"edges", edges}};
}

inline json to_json(const Poset& p, const PairCensus& c) {
    json matched = json::array();
    for (auto [neg, pos] : c.matched)
        matched.push_back({{"negative", combined_to_json(p, c.pairs[neg])},
                           {"positive", combined_to_json(p, c.pairs[pos])}});
    json fixed = json::object();
    for (std::size_t i : c.fixed_points)
        fixed[to_string(c.pairs[i].srht.shape())].push_back(combined_to_json(p, c.pairs[i]));
    json by_type = json::object();
    for (const auto& [t, k] : c.fixed_by_type()) by_type[to_string(t)] = k;
    return {{"pairs", c.pairs.size()},
            {"matched", matched},
            {"fixed_points", fixed},
            {"fixed_by_type", by_type}};
}

} // namespace rimhook
