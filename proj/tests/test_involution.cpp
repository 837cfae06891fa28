#include <fstream>

#include <gtest/gtest.h>

#include "rimhook/involution.hpp"
#include "rimhook/io.hpp"
#include "rimhook/symfunc.hpp"

using namespace rimhook;

namespace {

json load(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    return json::parse(in);
}

// Every pair (S, T) with T standard and t(S) != (1^n).
std::vector<TableauPair> movable_pairs(int n) {
    std::vector<TableauPair> out;
    for (const auto& mu : enumerate_partitions(n)) {
        if (mu.is_single_column()) continue;
        auto ps = standard_pairs(mu);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

RootedTableau six_step_start() {
    const SpecialRimHookTableau s(Partition{5, 3, 3, 3},
                                  {RimHook({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}}),
                                   RimHook({{3, 1}, {3, 2}, {2, 2}}), RimHook({{2, 1}}),
                                   RimHook({{4, 1}, {4, 2}, {4, 3}, {3, 3}, {2, 3}})});
    return RootedTableau::rooted_at(s, {1, 5});
}

} // namespace

TEST(Classify, StatesAlongTheSixStepTrace) {
    const auto [image, trace] = iota(six_step_start());
    ASSERT_EQ(trace.size(), 7u);
    EXPECT_EQ(classify(trace[0].tableau), HookClass::HH);
    EXPECT_EQ(classify(trace[2].tableau), HookClass::CI);
    EXPECT_EQ(classify(trace[3].tableau), HookClass::HV);
    std::vector<Rule> rules;
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) rules.push_back(rule_for(trace[i].hook_class));
    EXPECT_EQ(rules, (std::vector<Rule>{Rule::HE, Rule::SI, Rule::CO, Rule::HE, Rule::TH, Rule::TV}));
}

TEST(Iota, SixStepTraceMatchesFixture) {
    const json fx = load("six_step_trace.json");
    const RootedTableau start = rooted_from_json(fx.at("start"));
    EXPECT_EQ(start, six_step_start());
    const auto [image, trace] = iota(start);
    EXPECT_EQ(trace, trace_from_json(fx.at("trace")));
    EXPECT_EQ(to_json(trace), fx.at("trace"));
    EXPECT_TRUE(check_sign_lemma(trace, start.sign()));
    EXPECT_TRUE(inspect_trace(trace).ok());
}

TEST(Iota, SixStepTraceFrames) {
    const auto [image, trace] = iota(six_step_start());
    auto has_hook = [](const RootedTableau& t, std::vector<Cell> cs) {
        const RimHook h(std::move(cs));
        return std::find(t.hooks().begin(), t.hooks().end(), h) != t.hooks().end();
    };
    // Head of the top row moves below its tail, onto the singleton.
    EXPECT_TRUE(has_hook(trace[1].tableau, {{2, 1}, {1, 1}, {1, 2}, {1, 3}, {1, 4}}));
    EXPECT_EQ(trace[1].tableau.root(), (Cell{2, 1}));
    EXPECT_EQ(trace[1].tableau.active_hook(), RimHook({{2, 1}}));
    // The singleton moves to the other end of the column-1 run.
    EXPECT_EQ(trace[2].tableau.root(), (Cell{1, 1}));
    EXPECT_TRUE(has_hook(trace[2].tableau, {{1, 1}}));
    // Internal corner reflected.
    EXPECT_TRUE(has_hook(trace[3].tableau, {{2, 1}, {2, 2}, {1, 2}, {1, 3}, {1, 4}}));
    EXPECT_EQ(trace[3].tableau.root(), (Cell{2, 2}));
    EXPECT_EQ(trace[3].tableau.active_hook(), RimHook({{3, 1}, {3, 2}, {2, 2}}));
    // Head below the tail again.
    EXPECT_TRUE(has_hook(trace[4].tableau, {{4, 1}, {3, 1}, {3, 2}}));
    EXPECT_EQ(trace[4].tableau.root(), (Cell{4, 1}));
    // Two tails share the root; the bigger hook is cut at (3,3).
    EXPECT_TRUE(has_hook(trace[5].tableau, {{4, 1}, {3, 1}, {3, 2}, {3, 3}, {2, 3}}));
    EXPECT_TRUE(has_hook(trace[5].tableau, {{4, 1}, {4, 2}, {4, 3}}));
    EXPECT_EQ(trace[5].tableau.active_hook(), RimHook({{4, 1}, {3, 1}, {3, 2}, {3, 3}, {2, 3}}));
    // Tail removed and attached to the right of the head.
    EXPECT_TRUE(has_hook(image, {{3, 1}, {3, 2}, {3, 3}, {2, 3}, {2, 4}}));
    EXPECT_EQ(image.root(), (Cell{2, 4}));
    EXPECT_FALSE(image.overlapping());
    EXPECT_EQ(image.shape(), Partition({4, 4, 3, 3}));
    EXPECT_EQ(image.sign(), -six_step_start().sign());
}

TEST(Iota, SixStepSigns) {
    const auto [image, trace] = iota(six_step_start());
    std::vector<int> signs;
    for (const auto& st : trace) signs.push_back(st.tableau.sign());
    EXPECT_EQ(signs, (std::vector<int>{-1, 1, 1, 1, 1, -1, 1}));
}

TEST(Iota, IsAnInvolution) {
    const auto start = six_step_start();
    const auto [image, trace] = iota(start);
    EXPECT_EQ(iota(image).first, start);
}

TEST(Iota, RejectsBadInput) {
    const SpecialRimHookTableau s(Partition{2, 1}, {RimHook({{2, 1}, {1, 1}, {1, 2}})});
    EXPECT_THROW(iota(RootedTableau::rooted_at(s, {1, 1})), std::invalid_argument);
    const SpecialRimHookTableau t(Partition{1, 1}, {RimHook({{1, 1}}), RimHook({{2, 1}})});
    EXPECT_THROW(iota(RootedTableau::rooted_at(t, {2, 1})), std::invalid_argument);
}

TEST(ApplyRule, TwoTailsCutTheBiggerHook) {
    // Tails share the root (2,1); the smaller hook has size 2, so the bigger
    // one is cut at its third node (1,2) and the rest moves over.
    const RimHook big({{2, 1}, {2, 2}, {1, 2}, {1, 3}});
    const RimHook small({{2, 1}, {1, 1}});
    const RootedTableau t({big, small}, {2, 1}, 0);
    ASSERT_EQ(t.active_hook(), big);
    ASSERT_EQ(classify(t), HookClass::TH);
    const RootedTableau next = apply_rule(t);
    EXPECT_EQ(next.root(), (Cell{2, 1}));
    std::set<RimHook> hooks(next.hooks().begin(), next.hooks().end());
    EXPECT_EQ(hooks, (std::set<RimHook>{RimHook({{2, 1}, {2, 2}}), RimHook({{2, 1}, {1, 1}, {1, 2}, {1, 3}})}));
    EXPECT_EQ(next.active_hook(), RimHook({{2, 1}, {1, 1}, {1, 2}, {1, 3}}));
    EXPECT_EQ(next.type(), t.type());
}

TEST(OuterInvolution, SamplePairMatchesFixture) {
    const json fx = load("sample_pair.json");
    const TableauPair in = pair_from_json(fx.at("input"));
    const auto res = outer_involution_traced(in.srht, in.syt);
    EXPECT_EQ(res.image, pair_from_json(fx.at("image")));
    EXPECT_EQ(res.trace, trace_from_json(fx.at("trace")));

    const SpecialRimHookTableau s_image(Partition{2, 2, 2}, {RimHook({{2, 1}, {1, 1}}),
                                                             RimHook({{3, 1}, {3, 2}, {2, 2}, {1, 2}})});
    EXPECT_EQ(res.image.srht, s_image);
    EXPECT_EQ(res.image.syt, SemistandardTableau({{1, 3}, {2, 5}, {4, 6}}));
    EXPECT_EQ(res.trace.back().tableau.root(), (Cell{3, 2}));
    EXPECT_EQ(res.image.srht.sign(), -in.srht.sign());
    EXPECT_EQ(outer_involution(res.image.srht, res.image.syt), in);
}

TEST(OuterInvolution, RejectsUnmovablePairs) {
    const SpecialRimHookTableau col(Partition{1, 1}, {RimHook({{1, 1}}), RimHook({{2, 1}})});
    EXPECT_THROW(outer_involution(col, SemistandardTableau({{1}, {2}})), std::invalid_argument);
    const SpecialRimHookTableau row(Partition{2}, {RimHook({{1, 1}, {1, 2}})});
    EXPECT_THROW(outer_involution(row, SemistandardTableau({{1, 1}})), std::invalid_argument);
    EXPECT_THROW(outer_involution(row, SemistandardTableau({{1}, {2}})), std::invalid_argument);
}

// Exhaustive properties over every movable pair with n <= 6.
class InvolutionSweep : public ::testing::TestWithParam<int> {};

TEST_P(InvolutionSweep, InvolutionSignTypeAndShape) {
    const int n = GetParam();
    for (const auto& p : movable_pairs(n)) {
        const auto res = outer_involution_traced(p.srht, p.syt);
        const auto& q = res.image;
        ASSERT_NE(q, p);
        EXPECT_EQ(outer_involution(q.srht, q.syt), p);
        EXPECT_EQ(q.srht.sign(), -p.srht.sign());
        EXPECT_EQ(q.srht.type(), p.srht.type());
        EXPECT_TRUE(q.syt.is_standard());
        EXPECT_EQ(q.syt.shape(), q.srht.shape());
        // Values below the root value keep their cells.
        const int m = n - res.stripped;
        auto below_root = [&](const TableauPair& x) {
            std::map<int, Cell> out;
            for (int v = 1; v < m; ++v) out[v] = *x.syt.find(v);
            return out;
        };
        EXPECT_EQ(below_root(p), below_root(q));
    }
}

TEST_P(InvolutionSweep, TracesAreWellFormed) {
    const int n = GetParam();
    for (const auto& p : movable_pairs(n)) {
        const auto res = outer_involution_traced(p.srht, p.syt);
        const auto rep = inspect_trace(res.trace);
        EXPECT_TRUE(rep.ok());
        EXPECT_TRUE(check_sign_lemma(res.trace, res.trace.front().tableau.sign()));
        EXPECT_LE(res.trace.size(), step_budget(n));
        for (const auto& st : res.trace) {
            EXPECT_EQ(classify(st.tableau), st.hook_class);
            EXPECT_TRUE(st.tableau.active_hook().is_permissible(st.tableau.root()));
        }
    }
}

// A first-column strip sitting directly below the next root keeps its leg
// length when its tail moves up onto that root.
TEST_P(InvolutionSweep, VerticalStripTailMovesKeepLegLength) {
    const int n = GetParam();
    std::size_t checked = 0;
    for (const auto& p : movable_pairs(n)) {
        const auto trace = outer_involution_traced(p.srht, p.syt).trace;
        for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
            if (trace[i].hook_class != HookClass::TV) continue;
            const auto& h = trace[i].tableau.active_hook();
            if (!std::all_of(h.cells().begin(), h.cells().end(), [](Cell c) { return c.col == 1; })) continue;
            const auto& next = trace[i + 1].tableau;
            if (next.root() != above(h.head())) continue;
            const auto holders = next.hooks_containing(h.cells()[1]);
            ASSERT_EQ(holders.size(), 1u);
            const RimHook& moved = next.hooks()[holders.front()];
            EXPECT_EQ(moved.size(), h.size());
            EXPECT_EQ(moved.leg_length(), h.leg_length());
            ++checked;
        }
    }
    if (n == 6) {
        EXPECT_GT(checked, 0u);
    }
}

INSTANTIATE_TEST_SUITE_P(SmallSizes, InvolutionSweep, ::testing::Range(2, 7));

TEST(Iota, SingleStepTracesSatisfyTheSignPattern) {
    std::size_t found = 0;
    for (int n = 2; n <= 5; ++n)
        for (const auto& p : movable_pairs(n)) {
            const auto trace = outer_involution_traced(p.srht, p.syt).trace;
            if (trace.size() != 2) continue;
            ++found;
            EXPECT_TRUE(check_sign_lemma(trace, trace.front().tableau.sign()));
            const auto c = trace.front().hook_class;
            EXPECT_TRUE(c == HookClass::CE || c == HookClass::HH || c == HookClass::TV);
        }
    EXPECT_GT(found, 0u);
}

TEST(Iota, StepBudget) {
    EXPECT_EQ(step_budget(8), 704u);
    EXPECT_EQ(step_budget(1), 4u);
}

TEST(Iota, EveryTraceUpToEightFitsTheBudget) {
    for (int n = 7; n <= 8; ++n)
        for (const auto& p : movable_pairs(n)) {
            const auto res = outer_involution_traced(p.srht, p.syt);
            EXPECT_LE(res.trace.size(), step_budget(n));
            EXPECT_EQ(outer_involution(res.image.srht, res.image.syt), p);
        }
}
