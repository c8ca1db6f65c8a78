#pragma once

// Shared builders and small enumerators for the test suites.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "c2kit/graph.hpp"
#include "c2kit/oracle.hpp"
#include "c2kit/partition.hpp"

namespace testutil {

using namespace c2kit;

inline Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    return Graph(n, std::move(edges));
}

inline ColoredGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return ColoredGraph(Graph(n, std::move(edges)));
}

inline ColoredGraph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return ColoredGraph(Graph(n, std::move(edges)));
}

inline ColoredGraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return ColoredGraph(Graph(n, std::move(edges)));
}

inline ColoredGraph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return ColoredGraph(Graph(leaves + 1, std::move(edges)));
}

inline ColoredGraph two_triangles() {
    return ColoredGraph(
        Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}));
}

inline ColoredGraph complement_of(const ColoredGraph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.graph.has_edge(u, v))
                edges.emplace_back(u, v);
    return ColoredGraph(Graph(n, std::move(edges)), g.coloring);
}

/// All dense colorings of n vertices, as restricted growth strings.
inline std::vector<std::vector<int>> all_colorings(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> a(n, 0);
    while (true) {
        out.push_back(a);
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = *std::max_element(a.begin(), a.begin() + i) + 1;
            if (a[i] < cap) {
                ++a[i];
                std::fill(a.begin() + i + 1, a.end(), 0);
                break;
            }
            a[i] = 0;
        }
        if (i == 0)
            break;
    }
    return out;
}

/// True when every class of the fine coloring sits inside one coarse class.
inline bool coloring_refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
    std::map<int, int> image;
    for (std::size_t v = 0; v < fine.size(); ++v) {
        auto [it, inserted] = image.try_emplace(fine[v], coarse[v]);
        if (!inserted && it->second != coarse[v])
            return false;
    }
    return true;
}

inline bool same_partition(const OrderedPartition& a, const OrderedPartition& b) {
    auto ca = a.classes;
    auto cb = b.classes;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
}

inline ColoredGraph random_colored_graph(int n, double p, std::mt19937_64& rng,
                                         int colors = 1) {
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng))
                edges.emplace_back(u, v);
    std::vector<int> coloring(n, 0);
    if (colors > 1) {
        std::uniform_int_distribution<int> pick(0, colors - 1);
        for (int v = 0; v < n; ++v)
            coloring[v] = pick(rng);
        // keep the ids dense
        std::map<int, int> remap;
        for (int& c : coloring) {
            auto [it, inserted] = remap.try_emplace(c, static_cast<int>(remap.size()));
            c = it->second;
        }
    }
    return ColoredGraph(Graph(n, std::move(edges)), std::move(coloring));
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace testutil
