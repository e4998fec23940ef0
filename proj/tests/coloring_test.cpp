#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "dyngraph/coloring.hpp"
#include "dyngraph/error.hpp"
#include "dyngraph/generators.hpp"
#include "dyngraph/registry.hpp"
#include "support.hpp"

using namespace dyngraph;
using testing_support::final_edges;
using testing_support::proper;

namespace {

const std::vector<std::string> kColoring = {"recurse-col", "count-col", "randr-col", "hier-col"};

std::unique_ptr<ColoringAlgorithm> make_coloring(const std::string& id, std::size_t n, std::size_t delta,
                                                 std::uint64_t seed, const AlgorithmOptions& options = {}) {
    auto alg = make_algorithm(id, n, delta, seed, options);
    return std::unique_ptr<ColoringAlgorithm>(static_cast<ColoringAlgorithm*>(alg.release()));
}

/// Colors of 0..k-1 in the palette not held by any of `held`.
std::vector<Color> missing_colors(std::size_t palette, const std::vector<Color>& held) {
    std::vector<bool> seen(palette, false);
    for (Color c : held) {
        seen[c] = true;
    }
    std::vector<Color> out;
    for (Color c = 0; c < palette; ++c) {
        if (!seen[c]) {
            out.push_back(c);
        }
    }
    return out;
}

bool all_distinct(std::vector<Color> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

} // namespace

class EveryColoring : public ::testing::TestWithParam<std::string> {};

INSTANTIATE_TEST_SUITE_P(Coloring, EveryColoring, ::testing::ValuesIn(kColoring),
                         [](const auto& info) {
                             std::string s = info.param;
                             std::replace(s.begin(), s.end(), '-', '_');
                             return s;
                         });

TEST_P(EveryColoring, ProperAfterEveryUpdate) {
    for (double rho : {0.0, 0.5, 0.9}) {
        const std::size_t n = 60;
        const UpdateSequence seq = random_update_sequence(n, gen_er(n, 600, 11), rho, 12);
        auto alg = make_coloring(GetParam(), n, seq.delta_bound, 5);
        std::set<EdgeKey> edges;
        for (const auto& op : seq.ops) {
            alg->apply(op);
            if (op.kind == UpdateKind::Insert) {
                edges.insert(op.edge);
            } else {
                edges.erase(op.edge);
            }
            ASSERT_TRUE(proper(edges, alg->colors(), seq.delta_bound));
        }
        EXPECT_EQ(alg->audit(), "");
        EXPECT_EQ(alg->palette_size(), seq.delta_bound + 1);
    }
}

TEST_P(EveryColoring, DeletionNeverRecolors) {
    const std::size_t n = 30;
    const UpdateSequence seq = random_update_sequence(n, gen_er(n, 200, 3), 0.7, 4);
    auto alg = make_coloring(GetParam(), n, seq.delta_bound, 9);
    for (const auto& op : seq.ops) {
        const auto before = alg->colors();
        alg->apply(op);
        if (op.kind == UpdateKind::Delete) {
            ASSERT_EQ(alg->colors(), before);
        }
    }
}

TEST_P(EveryColoring, NonClashingInsertKeepsColors) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto alg = make_coloring(GetParam(), 3, 2, seed);
        alg->apply(UpdateOp::insert(0, 1));
        alg->apply(UpdateOp::insert(1, 2));
        if (alg->color_of(0) == alg->color_of(2)) {
            continue;
        }
        const auto before = alg->colors();
        alg->apply(UpdateOp::insert(0, 2));
        EXPECT_EQ(alg->colors(), before);
    }
}

TEST_P(EveryColoring, Deterministic) {
    const std::size_t n = 50;
    const UpdateSequence seq = random_update_sequence(n, gen_er(n, 400, 1), 0.5, 2);
    auto a = make_coloring(GetParam(), n, seq.delta_bound, 77);
    auto b = make_coloring(GetParam(), n, seq.delta_bound, 77);
    for (const auto& op : seq.ops) {
        a->apply(op);
        b->apply(op);
    }
    EXPECT_EQ(a->colors(), b->colors());
    EXPECT_EQ(a->counters(), b->counters());
}

TEST(RecurseCol, ClashOnK2GivesBothColors) {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        RecurseCol alg(2, 1, seed);
        if (alg.color_of(0) != 0 || alg.color_of(1) != 0) {
            continue;
        }
        ++hits;
        alg.apply(UpdateOp::insert(0, 1));
        const std::vector<Color> xi = alg.colors();
        EXPECT_TRUE((xi == std::vector<Color>{0, 1}) || (xi == std::vector<Color>{1, 0}));
    }
    EXPECT_GT(hits, 0);
}

TEST(RecurseCol, CascadeCapRaises) {
    AlgorithmOptions options;
    options.cascade_cap = 1;
    int aborted = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = 12;
        const UpdateSequence seq = random_update_sequence(n, gen_er(n, 66, seed), 0.0, seed);
        RecurseCol alg(n, seq.delta_bound, seed, options);
        try {
            for (const auto& op : seq.ops) {
                alg.apply(op);
            }
        } catch (const CascadeError&) {
            ++aborted;
        }
    }
    EXPECT_GT(aborted, 0);
}

TEST(CountCol, CountsFollowInsertAndDelete) {
    for (std::uint64_t seed = 0;; ++seed) {
        CountCol probe(4, 3, seed);
        if (probe.color_of(0) != probe.color_of(1)) {
            probe.apply(UpdateOp::insert(0, 1));
            EXPECT_EQ(probe.neighbor_count(0, probe.color_of(1)), 1u);
            EXPECT_EQ(probe.neighbor_count(1, probe.color_of(0)), 1u);
            EXPECT_EQ(probe.counters().recolors, 0u);
            probe.apply(UpdateOp::remove(0, 1));
            EXPECT_EQ(probe.neighbor_count(0, probe.color_of(1)), 0u);
            EXPECT_EQ(probe.neighbor_count(1, probe.color_of(0)), 0u);
            break;
        }
    }
}

// A star center whose Delta leaves hold Delta distinct colors has exactly
// one free color; recoloring the center must pick it.
TEST(CountCol, StarCenterTakesTheUniqueFreeColor) {
    const std::size_t delta = 3;
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        CountCol alg(delta + 1, delta, seed);
        for (VertexId leaf = 1; leaf <= delta; ++leaf) {
            alg.apply(UpdateOp::insert(0, leaf));
        }
        std::vector<Color> leaves;
        for (VertexId leaf = 1; leaf <= delta; ++leaf) {
            leaves.push_back(alg.color_of(leaf));
        }
        if (!all_distinct(leaves)) {
            continue;
        }
        ++hits;
        const auto free = missing_colors(delta + 1, leaves);
        ASSERT_EQ(free.size(), 1u);
        alg.recolor(0);
        EXPECT_EQ(alg.color_of(0), free[0]);
    }
    EXPECT_GT(hits, 0);
}

TEST(CountCol, RejectsOverBudget) {
    AlgorithmOptions options;
    options.count_budget = 100;
    EXPECT_THROW(CountCol(10, 10, 1, options), BudgetError);
    EXPECT_NO_THROW(CountCol(10, 9, 1, options));
}

TEST(RandRCol, PartitionFollowsRanks) {
    const std::size_t n = 40;
    const UpdateSequence seq = random_update_sequence(n, gen_er(n, 300, 5), 0.4, 6);
    RandRCol alg(n, seq.delta_bound, 3);
    std::set<double> ranks;
    for (VertexId v = 0; v < n; ++v) {
        EXPECT_GT(alg.rank(v), 0.0);
        EXPECT_LT(alg.rank(v), 1.0);
        ranks.insert(alg.rank(v));
        EXPECT_TRUE(alg.higher(v).empty());
    }
    EXPECT_EQ(ranks.size(), n);
    for (const auto& op : seq.ops) {
        alg.apply(op);
    }
    const auto edges = final_edges(seq);
    for (VertexId v = 0; v < n; ++v) {
        std::size_t degree = 0;
        for (const auto& e : edges) {
            if (e.u != v && e.v != v) {
                continue;
            }
            ++degree;
            const VertexId w = e.other(v);
            EXPECT_EQ(alg.higher(v).contains(w), alg.rank(w) > alg.rank(v));
            EXPECT_EQ(alg.lower(v).contains(w), alg.rank(w) < alg.rank(v));
            EXPECT_EQ(alg.higher(v).contains(w), alg.lower(w).contains(v));
        }
        EXPECT_EQ(alg.higher(v).size() + alg.lower(v).size(), degree);
    }
    EXPECT_EQ(alg.audit(), "");
}

TEST(RandRCol, ClashRecolorsTheHigherRankEndpoint) {
    int moved_higher = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        RandRCol alg(2, 4, seed);
        if (alg.color_of(0) != alg.color_of(1)) {
            continue;
        }
        const VertexId hi = alg.rank(0) > alg.rank(1) ? 0 : 1;
        const VertexId lo = 1 - hi;
        const Color old = alg.color_of(0);
        alg.apply(UpdateOp::insert(0, 1));
        ASSERT_NE(alg.color_of(0), alg.color_of(1));
        // Either the higher endpoint moved, or it kept a color held by its
        // single lower neighbor, which then moved.
        if (alg.color_of(hi) != old) {
            ++moved_higher;
            EXPECT_EQ(alg.color_of(lo), old);
        } else {
            EXPECT_NE(alg.color_of(lo), old);
        }
    }
    EXPECT_GT(moved_higher, 0);
}

TEST(RandRCol, RecolorOnEmptyNeighborhoodAlwaysSucceeds) {
    RandRCol alg(3, 2, 8);
    alg.recolor(1);
    EXPECT_LE(alg.color_of(1), 2u);
    EXPECT_EQ(alg.counters().max_cascade_depth, 1u);
}

// The lowest-rank vertex has every neighbor in H; if they hold Delta
// distinct colors the only admissible color is the remaining one.
TEST(RandRCol, FullHigherSetForcesTheLastColor) {
    const std::size_t delta = 3;
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        RandRCol alg(delta + 1, delta, seed);
        VertexId center = 0;
        for (VertexId v = 1; v <= delta; ++v) {
            if (alg.rank(v) < alg.rank(center)) {
                center = v;
            }
        }
        std::vector<Color> leaves;
        for (VertexId v = 0; v <= delta; ++v) {
            if (v != center) {
                alg.apply(UpdateOp::insert(center, v));
            }
        }
        for (VertexId v = 0; v <= delta; ++v) {
            if (v != center) {
                leaves.push_back(alg.color_of(v));
            }
        }
        if (!all_distinct(leaves)) {
            continue;
        }
        ++hits;
        ASSERT_EQ(alg.higher(center).size(), delta);
        const auto free = missing_colors(delta + 1, leaves);
        alg.recolor(center);
        EXPECT_EQ(alg.color_of(center), free[0]);
    }
    EXPECT_GT(hits, 0);
}

TEST(RandRCol, ChainMovesToLowerRank) {
    const std::size_t n = 80;
    const UpdateSequence seq = random_update_sequence(n, gen_er(n, 1500, 2), 0.2, 2);
    RandRCol alg(n, seq.delta_bound, 4);
    for (const auto& op : seq.ops) {
        alg.apply(op);
    }
    // Recolor every vertex; any color it takes from a lower neighbor must be
    // taken away from that neighbor again, leaving the coloring proper.
    const auto edges = final_edges(seq);
    for (VertexId v = 0; v < n; ++v) {
        alg.recolor(v);
        ASSERT_TRUE(proper(edges, alg.colors(), seq.delta_bound));
    }
    EXPECT_EQ(alg.audit(), "");
}

TEST(HierCol, LevelFollowsThresholds) {
    HierCol alg(8, 7, 1);
    alg.apply(UpdateOp::insert(0, 1));
    alg.apply(UpdateOp::insert(0, 2));
    alg.recolor(0);
    EXPECT_EQ(alg.level(0), -1);
    EXPECT_EQ(alg.neighbor_count(0, alg.color_of(0)), 0u);

    for (VertexId leaf = 3; leaf <= 5; ++leaf) {
        alg.apply(UpdateOp::insert(0, leaf));
    }
    for (VertexId leaf = 1; leaf <= 5; ++leaf) {
        ASSERT_EQ(alg.level(leaf), -1);
    }
    alg.recolor(0);
    EXPECT_EQ(alg.level(0), 0);
    EXPECT_EQ(alg.threshold(-1), 3u);
    EXPECT_EQ(alg.threshold(0), 9u);
}

TEST(HierCol, MoreRecentlyRecoloredEndpointMoves) {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        HierCol alg(2, 3, seed);
        alg.recolor(0);
        alg.recolor(1);
        if (alg.color_of(0) != alg.color_of(1)) {
            continue;
        }
        ++hits;
        const auto stamp0 = alg.last_recolored(0);
        const auto stamp1 = alg.last_recolored(1);
        ASSERT_LT(stamp0, stamp1);
        alg.apply(UpdateOp::insert(0, 1));
        EXPECT_EQ(alg.last_recolored(0), stamp0);
        EXPECT_GT(alg.last_recolored(1), stamp1);
        EXPECT_NE(alg.color_of(0), alg.color_of(1));
    }
    EXPECT_GT(hits, 0);
}

TEST(HierCol, RecolorLeavesFewerThanThresholdNeighborsAtOrBelow) {
    const std::size_t n = 120;
    const UpdateSequence seq = random_update_sequence(n, gen_er(n, 3000, 8), 0.3, 8);
    HierCol alg(n, seq.delta_bound, 2);
    for (const auto& op : seq.ops) {
        alg.apply(op);
    }
    for (VertexId v = 0; v < n; ++v) {
        alg.recolor(v);
        const int l = alg.level(v);
        std::size_t at_or_below = 0;
        alg.neighbors(v).for_each([&](VertexId w) { at_or_below += alg.level(w) <= l ? 1 : 0; });
        if (l < alg.max_level()) {
            EXPECT_LT(at_or_below, alg.threshold(l)) << "vertex " << v;
        }
    }
    EXPECT_TRUE(proper(final_edges(seq), alg.colors(), seq.delta_bound));
    EXPECT_EQ(alg.audit(), "");
}
