#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rimhook/partitions.hpp"
#include "rimhook/tableaux.hpp"

namespace rimhook {

/// Refined classification of the active hook relative to the root.
enum class HookClass { CE, CI, HH, HV, TV, TH, SI };

/// The five rewrite operations; CI/CE both use CO and HH/HV both use HE.
enum class Rule { CO, SI, HE, TV, TH };

inline Rule rule_for(HookClass c) {
    switch (c) {
    case HookClass::CE:
    case HookClass::CI: return Rule::CO;
    case HookClass::HH:
    case HookClass::HV: return Rule::HE;
    case HookClass::TV: return Rule::TV;
    case HookClass::TH: return Rule::TH;
    case HookClass::SI: return Rule::SI;
    }
    throw std::logic_error("unreachable hook class");
}

inline std::string_view to_string(HookClass c) {
    switch (c) {
    case HookClass::CE: return "CE";
    case HookClass::CI: return "CI";
    case HookClass::HH: return "HH";
    case HookClass::HV: return "HV";
    case HookClass::TV: return "TV";
    case HookClass::TH: return "TH";
    case HookClass::SI: return "SI";
    }
    return "?";
}

inline std::string_view to_string(Rule r) {
    switch (r) {
    case Rule::CO: return "CO";
    case Rule::SI: return "SI";
    case Rule::HE: return "HE";
    case Rule::TV: return "TV";
    case Rule::TH: return "TH";
    }
    return "?";
}

inline HookClass parse_hook_class(std::string_view s) {
    for (HookClass c : {HookClass::CE, HookClass::CI, HookClass::HH, HookClass::HV, HookClass::TV,
                        HookClass::TH, HookClass::SI})
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown hook class: " + std::string(s));
}

/// Raised when a state violates the rooted-tableau invariants; valid inputs
/// never trigger it.
class CorruptStateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * A special rim-hook tableau with a marked root cell and an active hook.
 *
 * In the overlapping case exactly two hooks share the root and nothing else,
 * the root is permissible in both, and the active hook is one of the two.
 * Hooks are kept sorted so that equal states compare equal.
 */
class RootedTableau {
public:
    RootedTableau() = default;

    RootedTableau(std::vector<RimHook> hooks, Cell root, std::size_t active)
        : hooks_(std::move(hooks)), root_(root), active_(active) {
        if (active_ >= hooks_.size())
            throw std::invalid_argument("active hook index out of range");
        std::vector<std::size_t> order(hooks_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return hooks_[a] < hooks_[b]; });
        std::vector<RimHook> sorted;
        sorted.reserve(hooks_.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            sorted.push_back(std::move(hooks_[order[k]]));
            if (order[k] == active) active_ = k;
        }
        hooks_ = std::move(sorted);
    }

    /// Roots S at a cell; the hook containing it becomes active.
    static RootedTableau rooted_at(const SpecialRimHookTableau& s, Cell root) {
        const auto k = s.hook_of(root);
        if (!k) throw std::invalid_argument("root is not a cell of the tableau");
        return RootedTableau(s.hooks(), root, *k);
    }

    const std::vector<RimHook>& hooks() const { return hooks_; }
    Cell root() const { return root_; }
    std::size_t active() const { return active_; }
    const RimHook& active_hook() const { return hooks_.at(active_); }

    std::vector<std::size_t> hooks_containing(Cell c) const {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < hooks_.size(); ++k)
            if (hooks_[k].contains(c)) out.push_back(k);
        return out;
    }

    bool overlapping() const { return hooks_containing(root_).size() == 2; }

    /// The non-active hook sharing the root, when overlapping.
    std::optional<std::size_t> partner() const {
        for (std::size_t k : hooks_containing(root_))
            if (k != active_) return k;
        return std::nullopt;
    }

    /// Union of the hook cells.
    std::set<Cell> cell_set() const {
        std::set<Cell> out;
        for (const auto& h : hooks_) out.insert(h.cells().begin(), h.cells().end());
        return out;
    }

    /// Cells with the root removed when it is not shared, i.e. sh - r.
    std::set<Cell> base_cells() const {
        auto out = cell_set();
        if (!overlapping()) out.erase(root_);
        return out;
    }

    Partition shape() const { return Partition::from_cells(cell_set()); }

    Partition type() const {
        std::vector<int> sizes;
        for (const auto& h : hooks_) sizes.push_back(static_cast<int>(h.size()));
        return Partition::from_unsorted(std::move(sizes));
    }

    /// Product of hook signs; a shared root contributes its edges to both hooks.
    int sign() const {
        int s = 1;
        for (const auto& h : hooks_) s *= h.sign();
        return s;
    }

    SpecialRimHookTableau forget_root() const {
        if (overlapping())
            throw std::logic_error("cannot forget the root of an overlapping tableau");
        return SpecialRimHookTableau(shape(), hooks_);
    }

    /// Throws CorruptStateError unless every invariant holds.
    void validate() const {
        if (hooks_.empty()) throw CorruptStateError("rooted tableau has no hooks");
        std::map<Cell, int> cover;
        for (const auto& h : hooks_) {
            if (!h.is_special()) throw CorruptStateError("hook misses the first column");
            for (const Cell& c : h.cells()) ++cover[c];
        }
        for (const auto& [c, k] : cover) {
            if (k > 2 || (k == 2 && c != root_))
                throw CorruptStateError("hooks overlap away from the root");
        }
        const auto holders = hooks_containing(root_);
        if (holders.empty()) throw CorruptStateError("root lies in no hook");
        if (!active_hook().contains(root_)) throw CorruptStateError("active hook misses the root");
        for (std::size_t k : holders)
            if (!hooks_[k].is_permissible(root_))
                throw CorruptStateError("root is not permissible in a hook containing it");
        std::set<Cell> all;
        for (const auto& [c, k] : cover) all.insert(c);
        if (!is_ferrers_diagram(all)) throw CorruptStateError("hooks do not form a Ferrers diagram");
    }

    friend bool operator==(const RootedTableau&, const RootedTableau&) = default;

private:
    std::vector<RimHook> hooks_;
    Cell root_;
    std::size_t active_ = 0;
};

/// Classifies the active hook; throws if the root is not permissible in it.
inline HookClass classify(const RootedTableau& t) {
    const RimHook& h = t.active_hook();
    const Cell r = t.root();
    if (!h.contains(r) || !h.is_permissible(r))
        throw CorruptStateError("root is not a permissible cell of the active hook");
    if (h.size() == 1) return HookClass::SI;
    if (h.is_internal_corner(r)) return HookClass::CI;
    if (h.is_external_corner(r)) return HookClass::CE;
    const auto& cs = h.cells();
    if (r == h.head()) return cs[cs.size() - 2] == left_of(r) ? HookClass::HH : HookClass::HV;
    return cs[1] == above(r) ? HookClass::TV : HookClass::TH;
}

namespace detail {

// Replaces hook m and moves the root to c. The active designation passes to
// the other hook containing c, or stays on m when c is a fresh cell.
inline RootedTableau move_root(std::vector<RimHook> hooks, std::size_t m, Cell c) {
    std::optional<std::size_t> next;
    for (std::size_t k = 0; k < hooks.size(); ++k)
        if (k != m && hooks[k].contains(c)) next = k;
    return RootedTableau(std::move(hooks), c, next.value_or(m));
}

// A candidate successor is admissible when it satisfies the invariants, keeps
// the base diagram, and leaves a state on which the next rule is defined: a TH
// root must be the tail of both hooks, which differ in size, and an SI root
// must end a first-column run of length at least two.
inline bool is_admissible(const RootedTableau& t, const std::set<Cell>& base) {
    try {
        t.validate();
    } catch (const CorruptStateError&) {
        return false;
    }
    if (t.base_cells() != base) return false;
    const auto other = t.partner();
    if (!other) return true;
    const RimHook& a = t.active_hook();
    const RimHook& b = t.hooks()[*other];
    const Cell r = t.root();
    switch (classify(t)) {
    case HookClass::TH: return b.tail() == r && a.size() != b.size();
    case HookClass::SI: {
        const auto run = b.first_column_run();
        return run.size() >= 2 && (r == run.front() || r == run.back());
    }
    default: return true;
    }
}

inline std::vector<Cell> without_front(const std::vector<Cell>& cs) {
    return {cs.begin() + 1, cs.end()};
}

} // namespace detail

/**
 * One step of the rooted involution. The result always has the same type and
 * its base diagram sh - r equals that of the input.
 */
inline RootedTableau apply_rule(const RootedTableau& t) {
    const HookClass cls = classify(t);
    const std::size_t a = t.active();
    const Cell r = t.root();
    const std::set<Cell> base = t.base_cells();
    std::vector<RimHook> hooks = t.hooks();
    std::vector<Cell> cs = hooks[a].cells();

    RootedTableau next;
    switch (rule_for(cls)) {
    case Rule::CO: {
        const Cell target = cls == HookClass::CI ? Cell{r.row + 1, r.col + 1}
                                                 : Cell{r.row - 1, r.col - 1};
        std::replace(cs.begin(), cs.end(), r, target);
        hooks[a] = RimHook(cs);
        next = detail::move_root(std::move(hooks), a, target);
        break;
    }
    case Rule::SI: {
        const auto other = t.partner();
        if (!other) throw CorruptStateError("singleton active hook without a partner");
        const auto run = hooks[*other].first_column_run();
        if (run.size() < 2) throw CorruptStateError("SI partner has a one-cell first-column run");
        Cell target;
        if (r == run.front()) target = run.back();
        else if (r == run.back()) target = run.front();
        else throw CorruptStateError("singleton is not at an end of the first-column run");
        hooks[a] = RimHook({target});
        next = RootedTableau(std::move(hooks), target, *other);
        break;
    }
    case Rule::HE: {
        const Cell target = below(cs.front());
        cs.pop_back();
        cs.insert(cs.begin(), target);
        hooks[a] = RimHook(cs);
        next = detail::move_root(std::move(hooks), a, target);
        break;
    }
    case Rule::TV: {
        const auto rest = detail::without_front(cs);
        const Cell head = rest.back();
        std::vector<RootedTableau> options;
        for (const Cell target : {above(head), right_of(head)}) {
            if (target.row < 1) continue;
            auto grown = rest;
            grown.push_back(target);
            auto candidate_hooks = hooks;
            candidate_hooks[a] = RimHook(grown);
            auto candidate = detail::move_root(std::move(candidate_hooks), a, target);
            if (detail::is_admissible(candidate, base)) options.push_back(std::move(candidate));
        }
        if (options.size() != 1)
            throw CorruptStateError("TV step admits " + std::to_string(options.size()) +
                                    " attachments, expected exactly one");
        next = std::move(options.front());
        break;
    }
    case Rule::TH: {
        const auto other = t.partner();
        if (!other) throw CorruptStateError("TH step without a partner hook");
        if (hooks[*other].tail() != r) throw CorruptStateError("TH root is not the partner's tail");
        const std::size_t size_a = hooks[a].size(), size_o = hooks[*other].size();
        if (size_a == size_o) throw CorruptStateError("TH hooks have equal sizes");
        const std::size_t big = size_a > size_o ? a : *other;
        const std::size_t small = big == a ? *other : a;
        const std::size_t s = hooks[small].size();
        std::vector<Cell> big_cells = hooks[big].cells();
        std::vector<Cell> small_cells = hooks[small].cells();
        // v is the (s+1)st node from r; everything from v on changes hooks.
        small_cells.insert(small_cells.end(), big_cells.begin() + static_cast<std::ptrdiff_t>(s),
                           big_cells.end());
        big_cells.resize(s);
        hooks[big] = RimHook(big_cells);
        hooks[small] = RimHook(small_cells);
        next = RootedTableau(std::move(hooks), r, *other);
        break;
    }
    }
    next.validate();
    if (next.base_cells() != base)
        throw CorruptStateError("step changed the base diagram sh - r");
    if (next.type() != t.type()) throw CorruptStateError("step changed the type");
    return next;
}

struct TraceStep {
    RootedTableau tableau;
    HookClass hook_class;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// The sequence S_0, ..., S_t; the last entry is non-overlapping.
using Trace = std::vector<TraceStep>;

/// Safety bound on trace length: 4 n p(n).
inline std::size_t step_budget(int n) {
    return 4 * static_cast<std::size_t>(n) * enumerate_partitions(n).size();
}

class StepBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// True when c is at the end of its row and of its column in the diagram.
inline bool is_outer_corner(const std::set<Cell>& diagram, Cell c) {
    return diagram.count(c) && !diagram.count(right_of(c)) && !diagram.count(below(c));
}

/**
 * The rooted involution. The input must be non-overlapping with its root at
 * an outer corner of the shape inside a hook of size at least two. Rules are
 * applied until the tableau stops overlapping.
 */
inline std::pair<RootedTableau, Trace> iota(const RootedTableau& start) {
    start.validate();
    if (start.overlapping()) throw std::invalid_argument("iota: input must be non-overlapping");
    if (start.active_hook().size() < 2)
        throw std::invalid_argument("iota: root must lie in a hook of size at least two");
    if (!is_outer_corner(start.cell_set(), start.root()))
        throw std::invalid_argument("iota: root must end a row and a column");

    const int n = static_cast<int>(start.cell_set().size());
    const std::size_t budget = step_budget(n);
    Trace trace;
    RootedTableau cur = start;
    trace.push_back({cur, classify(cur)});
    do {
        if (trace.size() > budget)
            throw StepBudgetExceeded("iota exceeded its step budget of " + std::to_string(budget));
        cur = apply_rule(cur);
        trace.push_back({cur, classify(cur)});
    } while (cur.overlapping());
    return {cur, std::move(trace)};
}

/// Checks the sign pattern along a trace: CE/HH/TV states keep the starting
/// sign and CI/HV/TH states carry its negative; SI states are unconstrained.
inline bool check_sign_lemma(const Trace& trace, int start_sign) {
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
        const int s = trace[i].tableau.sign();
        switch (trace[i].hook_class) {
        case HookClass::CE:
        case HookClass::HH:
        case HookClass::TV:
            if (s != start_sign) return false;
            break;
        case HookClass::CI:
        case HookClass::HV:
        case HookClass::TH:
            if (s != -start_sign) return false;
            break;
        case HookClass::SI: break;
        }
    }
    return true;
}

/// Structural facts about a finished trace.
struct TraceReport {
    bool nonempty = false;
    bool ends_non_overlapping = false;
    bool intermediates_overlap = false;
    bool base_preserved = false;
    bool type_preserved = false;
    bool sign_reversed = false;
    bool sign_lemma = false;

    bool ok() const {
        return nonempty && ends_non_overlapping && intermediates_overlap && base_preserved &&
               type_preserved && sign_reversed && sign_lemma;
    }
};

inline TraceReport inspect_trace(const Trace& trace) {
    TraceReport rep;
    if (trace.size() < 2) return rep;
    rep.nonempty = true;
    const auto& first = trace.front().tableau;
    const auto& last = trace.back().tableau;
    rep.ends_non_overlapping = !last.overlapping();
    rep.intermediates_overlap = true;
    rep.base_preserved = true;
    rep.type_preserved = true;
    const auto base = first.base_cells();
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& t = trace[i].tableau;
        if (i > 0 && i + 1 < trace.size() && !t.overlapping()) rep.intermediates_overlap = false;
        if (i > 0 && i + 1 < trace.size() && t.cell_set() != base) rep.base_preserved = false;
        if (t.base_cells() != base) rep.base_preserved = false;
        if (t.type() != first.type()) rep.type_preserved = false;
    }
    rep.sign_reversed = last.sign() == -first.sign();
    rep.sign_lemma = check_sign_lemma(trace, first.sign());
    return rep;
}

/// A pair (S, T) with T standard of the same shape as S.
struct TableauPair {
    SpecialRimHookTableau srht;
    SemistandardTableau syt;

    friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

struct InvolutionResult {
    TableauPair image;
    Trace trace;
    /// Values n, n-1, ... stripped because they sat in singleton hooks.
    int stripped = 0;
};

namespace detail {

inline SemistandardTableau tableau_from_positions(const Partition& shape,
                                                  const std::vector<Cell>& position_of) {
    std::vector<std::vector<int>> rows(shape.length());
    for (std::size_t i = 0; i < shape.length(); ++i) rows[i].assign(shape.part(i + 1), 0);
    for (std::size_t v = 1; v < position_of.size(); ++v) {
        const Cell c = position_of[v];
        if (!shape.contains(c)) throw CorruptStateError("tableau entry outside the shape");
        rows[c.row - 1][c.col - 1] = static_cast<int>(v);
    }
    return SemistandardTableau(std::move(rows));
}

} // namespace detail

/**
 * The involution I on pairs (S, T) with T standard and t(S) != (1^n).
 * Values sitting in singleton hooks are stripped from the bottom of column 1
 * and re-appended afterwards; the remaining largest value roots S for iota.
 */
inline InvolutionResult outer_involution_traced(const SpecialRimHookTableau& s,
                                                const SemistandardTableau& t) {
    if (s.shape() != t.shape()) throw std::invalid_argument("S and T have different shapes");
    if (!t.is_standard()) throw std::invalid_argument("T must be standard");
    if (s.type().is_single_column())
        throw std::invalid_argument("type (1^n) is handled separately and has no partner");

    const int n = s.shape().size();
    std::vector<Cell> position_of(n + 1);
    for (int v = 1; v <= n; ++v) position_of[v] = *t.find(v);

    std::vector<RimHook> hooks = s.hooks();
    int m = n;
    for (;; --m) {
        const Cell c = position_of[m];
        auto it = std::find_if(hooks.begin(), hooks.end(),
                               [&](const RimHook& h) { return h.contains(c); });
        if (it->size() != 1) break;
        hooks.erase(it);
    }
    std::set<Cell> reduced;
    for (const auto& h : hooks) reduced.insert(h.cells().begin(), h.cells().end());
    const SpecialRimHookTableau core(Partition::from_cells(reduced), hooks);

    auto [image, trace] = iota(RootedTableau::rooted_at(core, position_of[m]));
    const SpecialRimHookTableau core_image = image.forget_root();

    std::vector<Cell> new_pos(position_of.begin(), position_of.begin() + m + 1);
    new_pos[m] = image.root();

    std::vector<RimHook> out_hooks = core_image.hooks();
    int rows = static_cast<int>(core_image.shape().length());
    for (int v = m + 1; v <= n; ++v) {
        const Cell c{++rows, 1};
        out_hooks.emplace_back(std::vector<Cell>{c});
        new_pos.push_back(c);
    }
    std::set<Cell> all;
    for (const auto& h : out_hooks) all.insert(h.cells().begin(), h.cells().end());
    const Partition shape = Partition::from_cells(all);
    InvolutionResult res{
        {SpecialRimHookTableau(shape, std::move(out_hooks)),
         detail::tableau_from_positions(shape, new_pos)},
        std::move(trace),
        n - m};
    return res;
}

inline TableauPair outer_involution(const SpecialRimHookTableau& s, const SemistandardTableau& t) {
    return outer_involution_traced(s, t).image;
}

} // namespace rimhook
