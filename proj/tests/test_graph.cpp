#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "crnd/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace crnd;
using namespace fixtures;

TEST_CASE("cut_edges on the golden instance") {
    auto g = nolam().inst.graph;
    CHECK(cut_edges(g, ns({S, U, V, W})) == std::vector<int>{WT});
    CHECK(cut_edges(g, NodeSet(5)) == std::vector<int>{});
    CHECK(cut_edges(g, ns({S, U, W})) == std::vector<int>{SV, VW, WT});
    CHECK(cut_edges(g, NodeSet::all(5)) == std::vector<int>{});
}

TEST_CASE("cut symmetry: delta(S) == delta(V-S)") {
    auto g = nolam().inst.graph;
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
        NodeSet s = NodeSet::from_mask(5, mask);
        CHECK(cut_edges(g, s) == cut_edges(g, s.complement()));
    }
}

TEST_CASE("induced subgraphs keep parent edge ids") {
    auto g = nolam().inst.graph;
    auto sub = induced_subgraph(g, ns({S, U, V, W}));
    CHECK(sub.graph.n == 4);
    CHECK(sub.edge_to_parent == std::vector<int>{SU, SV, UW, VW, SW});

    auto identity = induced_subgraph(g, NodeSet::all(5));
    CHECK(identity.graph.n == g.n);
    CHECK(identity.graph.edge_count() == g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) CHECK(identity.edge_to_parent[e] == e);

    auto tiny = induced_subgraph(g, ns({S, T}));
    CHECK(tiny.graph.n == 2);
    CHECK(tiny.graph.edge_count() == 0);

    CHECK_THROWS_AS(induced_subgraph(g, NodeSet(5)), EmptyNodeSetError);
}

TEST_CASE("components") {
    auto g = nolam().inst.graph;
    auto split = components(g, {WT});
    REQUIRE(split.size() == 2);
    CHECK(split[0] == ns({S, U, V, W}));
    CHECK(split[1] == ns({T}));

    CHECK(components(g, {}).size() == 1);
    CHECK(components(g, {SU, SV, UW, VW, SW, WT}).size() == 5);
}

TEST_CASE("components form a partition") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto parsed = oracles::corpus_instance(seed);
        const auto& g = parsed.inst.graph;
        for (std::uint64_t rm = 0; rm < (std::uint64_t(1) << std::min(g.edge_count(), 6)); ++rm) {
            std::vector<int> removed;
            for (int e = 0; e < std::min(g.edge_count(), 6); ++e)
                if ((rm >> e) & 1) removed.push_back(e);
            auto parts = components(g, removed);
            NodeSet seen(g.n);
            int total = 0;
            for (const auto& part : parts) {
                CHECK(!part.intersects(seen));
                seen = seen | part;
                total += part.count();
            }
            CHECK(total == g.n);
        }
    }
}

TEST_CASE("cut_weight") {
    auto g = nolam().inst.graph;
    CHECK(cut_weight(g, ns({S}), unit_weights(6)) == 3);
    CHECK(cut_weight(g, ns({S}), xhat()) == 2);
    CHECK(cut_weight(g, NodeSet(5), xhat()) == 0);
}

TEST_CASE("cut counting is submodular and posimodular (exhaustive, n <= 6)") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto g = oracles::corpus_instance(seed).inst.graph;
        if (g.n > 6) continue;
        for (std::uint64_t a = 0; a < (std::uint64_t(1) << g.n); ++a) {
            for (std::uint64_t b = 0; b < (std::uint64_t(1) << g.n); ++b) {
                auto A = NodeSet::from_mask(g.n, a), B = NodeSet::from_mask(g.n, b);
                long long lhs = cut_size(g, A) + cut_size(g, B);
                CHECK(lhs >= cut_size(g, A & B) + cut_size(g, A | B));
                CHECK(lhs >= cut_size(g, A - B) + cut_size(g, B - A));
            }
        }
    }
}

TEST_CASE("self-loops rejected, parallel edges kept") {
    CHECK_THROWS_AS(Multigraph(3, {{0, 0}}), SelfLoopError);
    Multigraph par(2, {{0, 1}, {0, 1}, {1, 0}});
    CHECK(par.edge_count() == 3);
    NodeSet left = NodeSet::of(2, {0});
    CHECK(cut_size(par, left) == 3);
}

TEST_CASE("node set ordering helpers") {
    CHECK(NodeSet::of(6, {0, 5}).lex_less(NodeSet::of(6, {1, 2})));
    CHECK(NodeSet::of(6, {0, 1}).lex_less(NodeSet::of(6, {0, 1, 5})));
    CHECK(!NodeSet::of(6, {1}).lex_less(NodeSet::of(6, {0, 5})));
    CHECK(NodeSet::of(6, {2, 4}).complement() == NodeSet::of(6, {0, 1, 3, 5}));
}
