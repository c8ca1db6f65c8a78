#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "c2kit/error.hpp"

namespace c2kit {

/// One raw edge entry: endpoints, color, and whether the edge is directed
/// a -> b (directed = true) or undirected (stored once, any endpoint order).
struct EcEdge {
    int a = 0;
    int b = 0;
    int color = 0;
    bool directed = false;
};

/// Complete edge-colored partially oriented graph. Every ordered pair
/// (u, v), u != v, carries a color; an undirected edge carries the same
/// color in both directions, a directed edge has no reverse entry. No color
/// mixes directed and undirected edges.
class EcPog {
public:
    EcPog() = default;

    int vertex_count() const { return n_; }

    /// Color of ordered pair (u, v), or -1 when only (v, u) is present.
    int color(int u, int v) const { return color_[static_cast<std::size_t>(u) * n_ + v]; }

    bool is_undirected(int u, int v) const {
        return color(u, v) >= 0 && color(v, u) == color(u, v);
    }

    /// Colors carrying at least one edge, ascending.
    const std::vector<int>& colors_used() const { return colors_used_; }

    /// True if the color's edges are directed (never mixed per invariant).
    bool color_directed(int c) const;

    /// Edge list in normalized form: undirected edges once with a < b,
    /// directed edges as (a, b) with the actual direction. Sorted by (a, b).
    std::vector<EcEdge> edge_list() const;

    EcPog relabeled(const std::vector<int>& perm) const;

    bool operator==(const EcPog& other) const {
        return n_ == other.n_ && color_ == other.color_;
    }

    friend EcPog validate_ecpog(int n, const std::vector<EcEdge>& entries);
    friend EcPog ecpog_from_matrix(int n, std::vector<std::int32_t> matrix);

private:
    int n_ = 0;
    std::vector<std::int32_t> color_;   // n*n, -1 = absent, diagonal -1
    std::vector<int> colors_used_;
    std::vector<std::uint8_t> directed_flag_; // parallel to colors_used_

    void index_colors();
};

/// Checks all EcPog invariants over raw entries and builds the value.
/// Errors: LoopEdge, IndexOutOfRange, InconsistentUndirectedColor,
/// DuplicateEdge, MixedOrientationColor, IncompleteEcPog.
EcPog validate_ecpog(int n, const std::vector<EcEdge>& entries);

/// Internal constructor from a full ordered-pair color matrix
/// (n*n, -1 absent). Runs the same invariant checks.
EcPog ecpog_from_matrix(int n, std::vector<std::int32_t> matrix);

} // namespace c2kit
