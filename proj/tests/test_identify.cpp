#include <doctest.h>

#include <set>

#include "c2kit/identify.hpp"
#include "c2kit/oracle.hpp"
#include "c2kit/refine.hpp"
#include "helpers.hpp"

using namespace c2kit;
using namespace testutil;

TEST_CASE("flip of the small examples") {
    // K5 flips to the empty graph on one class
    Flip k5 = flip(complete(5));
    CHECK(k5.graph.edge_count() == 0);
    CHECK(k5.partition.class_count() == 1);
    CHECK(k5.complemented == std::vector<std::pair<int, int>>{{0, 0}});

    // C5 has as many edges as non-edges inside its class: untouched
    Flip c5 = flip(cycle(5));
    CHECK(c5.graph == cycle(5).graph);
    CHECK(c5.complemented.empty());

    // the complement of C6 flips back to C6
    Flip co = flip(complement_of(cycle(6)));
    CHECK(co.graph == cycle(6).graph);
}

TEST_CASE("flip applies the recorded complement, and is idempotent") {
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 30; ++rep) {
        ColoredGraph g = random_colored_graph(6, 0.7, rng);
        Flip f = flip(g);
        // applying the recorded symmetric difference twice is the identity
        auto apply = [&](const Graph& base) {
            std::set<std::pair<int, int>> edges(base.edges().begin(), base.edges().end());
            for (auto [i, j] : f.complemented)
                for (int u : f.partition.classes[i])
                    for (int v : f.partition.classes[j]) {
                        if (i == j && u >= v)
                            continue;
                        auto key = std::minmax(u, v);
                        if (edges.count(key))
                            edges.erase(key);
                        else
                            edges.insert(key);
                    }
            return Graph(g.vertex_count(),
                         std::vector<std::pair<int, int>>(edges.begin(), edges.end()));
        };
        CHECK(apply(f.graph) == g.graph);

        // flipping the flip (with its coloring fixed) complements nothing
        ColoredGraph flipped(f.graph, f.coloring);
        Flip again = flip(flipped);
        CHECK(again.complemented.empty());
        CHECK(again.graph == f.graph);
    }
}

TEST_CASE("pair relations in flipped graphs") {
    // two color classes, no edges between them after flipping
    ColoredGraph separated(Graph(4, {{0, 1}, {2, 3}}), {0, 0, 1, 1});
    Flip fs = flip(separated);
    CHECK(pair_relation(fs, 0, 1) == PairRel::None);

    // alternately colored C12: (2,2)-biregular between the classes
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 12; ++v)
        edges.emplace_back(v, (v + 1) % 12);
    std::vector<int> colors(12);
    for (int v = 0; v < 12; ++v)
        colors[v] = v % 2;
    Flip fc = flip(ColoredGraph(Graph(12, edges), colors));
    CHECK(pair_relation(fc, 0, 1) == PairRel::Other);

    // fan-out: two centers with two leaves each
    ColoredGraph fan(Graph(6, {{0, 2}, {0, 3}, {1, 4}, {1, 5}}), {0, 0, 1, 1, 1, 1});
    Flip ff = flip(fan);
    int centers = ff.partition.class_of[0];
    int leaves = ff.partition.class_of[2];
    CHECK(pair_relation(ff, centers, leaves) == PairRel::Less);
    CHECK(pair_relation(ff, leaves, centers) == PairRel::Greater);

    // matched classes
    ColoredGraph matched(Graph(4, {{0, 2}, {1, 3}}), {0, 0, 1, 1});
    Flip fm = flip(matched);
    CHECK(pair_relation(fm, 0, 1) == PairRel::Eq);
}

TEST_CASE("identification of the running examples") {
    CHECK(identified_c2_graph(cycle(5)).identified);
    CHECK(identified_c2_graph(star(4)).identified);
    CHECK(identified_c2_graph(complete(5)).identified);

    Verdict c6 = identified_c2_graph(cycle(6));
    CHECK(!c6.identified);
    CHECK(c6.condition == 1);

    Verdict tt = identified_c2_graph(two_triangles());
    CHECK(!tt.identified);

    // all trees on up to 6 vertices are identified
    for (int n = 1; n <= 6; ++n) {
        enumerate_graphs(n, [&](const Graph& g) {
            if (g.edge_count() != n - 1)
                return;
            // connected?
            std::vector<char> seen(n, 0);
            std::vector<int> stack{0};
            seen[0] = 1;
            int visited = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++visited;
                for (int w : g.neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            if (visited != n)
                return;
            CHECK(identified_c2_graph(ColoredGraph(g)).identified);
        });
    }
}

TEST_CASE("bouquet forest checks") {
    auto bouquet = [](int copies) {
        // trees are single edges hanging off the 5-cycle
        std::vector<std::pair<int, int>> edges;
        int per = 10;
        for (int b = 0; b < copies; ++b) {
            int base = b * per;
            for (int i = 0; i < 5; ++i) {
                edges.emplace_back(base + 2 * i, base + 2 * ((i + 1) % 5));
                edges.emplace_back(base + 2 * i, base + 2 * i + 1);
            }
        }
        return ColoredGraph(Graph(10 * copies, std::move(edges)));
    };

    ColoredGraph one = bouquet(1);
    BouquetDecomposition d1 = bouquet_forest_check(one.graph, one.coloring);
    CHECK(d1.is_bouquet_forest);
    CHECK(d1.bouquets.size() == 1);
    CHECK(d1.trees.empty());

    ColoredGraph two = bouquet(2);
    BouquetDecomposition d2 = bouquet_forest_check(two.graph, two.coloring);
    CHECK(!d2.is_bouquet_forest);

    // three colored trees (two of them identical is fine)
    ColoredGraph trees(Graph(7, {{0, 1}, {2, 3}, {4, 5}, {5, 6}}), {0, 1, 0, 1, 0, 1, 2});
    BouquetDecomposition d3 = bouquet_forest_check(trees.graph, trees.coloring);
    CHECK(d3.is_bouquet_forest);
    CHECK(d3.trees.size() == 3);
    CHECK(d3.bouquets.empty());
}

TEST_CASE("classifier agrees with the structural bouquet test") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_graphs(n, [&](const Graph& g) {
            ColoredGraph cg(g);
            Flip f = flip(cg);
            CHECK(identified_c2_graph(cg).identified == bouquet_forest_check(f).is_bouquet_forest);
        });
    }
}

TEST_CASE("a graph and its flip are equally identified") {
    // oracle-level equivalence exhaustively on up to 5 vertices
    for (int n = 1; n <= 5; ++n) {
        enumerate_graphs(n, [&](const Graph& g) {
            ColoredGraph cg(g);
            Flip f = flip(cg);
            CHECK(identified_oracle(cg) == identified_oracle(ColoredGraph(f.graph, f.coloring)));
        });
    }
    // classifier-level equivalence exhaustively on 6 vertices
    enumerate_graphs(6, [&](const Graph& g) {
        ColoredGraph cg(g);
        Flip f = flip(cg);
        CHECK(identified_c2_graph(cg).identified ==
              identified_c2_graph(ColoredGraph(f.graph, f.coloring)).identified);
    });
}

TEST_CASE("classifier agrees with the oracle on up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_graphs(n, [&](const Graph& g) {
            ColoredGraph cg(g);
            CHECK(identified_c2_graph(cg).identified == identified_oracle(cg));
        });
    }
}

TEST_CASE("identified graphs keep identification under coloring refinements (samples)") {
    std::mt19937_64 rng(37);
    auto colorings = all_colorings(5);
    for (int rep = 0; rep < 40; ++rep) {
        ColoredGraph g = random_colored_graph(5, 0.4, rng);
        if (!identified_c2_graph(g).identified)
            continue;
        for (const auto& coloring : colorings)
            CHECK(identified_c2_graph(ColoredGraph(g.graph, coloring)).identified);
    }
}

TEST_CASE("orbit partition of identified graphs equals the refinement (samples)") {
    for (int n = 2; n <= 6; ++n) {
        std::mt19937_64 rng(n);
        for (int rep = 0; rep < 30; ++rep) {
            ColoredGraph g = random_colored_graph(n, 0.5, rng);
            if (!identified_c2_graph(g).identified)
                continue;
            CHECK(same_partition(refine_graph(g), automorphism_orbits(g)));
        }
    }
}
