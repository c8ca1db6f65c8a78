#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "c2kit/error.hpp"

namespace c2kit {

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built;
/// adjacency is kept in one flat array with per-vertex offsets.
class Graph {
public:
    Graph() = default;

    /// Validates and normalizes: endpoints in range, no loops, no duplicate
    /// edges. Edges are stored sorted with u < v.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Sorted neighbor list of v.
    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offset_[v], offset_[v + 1] - offset_[v]};
    }

    int degree(int v) const { return static_cast<int>(offset_[v + 1] - offset_[v]); }

    bool has_edge(int u, int v) const;

    /// Image under a vertex permutation perm (perm[v] = new label of v).
    Graph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> adj_;
    std::vector<std::size_t> offset_;
};

/// Graph with a total vertex coloring; color ids are dense starting at 0.
struct ColoredGraph {
    Graph graph;
    std::vector<int> coloring;

    ColoredGraph() = default;
    explicit ColoredGraph(Graph g);
    ColoredGraph(Graph g, std::vector<int> colors);

    int vertex_count() const { return graph.vertex_count(); }
    int color_count() const { return color_count_; }

    bool monochromatic() const { return color_count_ <= 1; }

    ColoredGraph relabeled(const std::vector<int>& perm) const;

    bool operator==(const ColoredGraph& other) const {
        return graph == other.graph && coloring == other.coloring;
    }

private:
    int color_count_ = 0;
};

} // namespace c2kit
