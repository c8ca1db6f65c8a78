#include "c2kit/graph.hpp"

#include <algorithm>
#include <string>

namespace c2kit {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0)
        fail(Errc::MalformedInput, "negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Errc::IndexOutOfRange,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" +
                     std::to_string(n));
        if (u == v)
            fail(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        fail(Errc::DuplicateEdge, "edge (" + std::to_string(dup->first) + "," +
                                      std::to_string(dup->second) + ") repeated");
    edges_ = std::move(edges);
    offset_.assign(n_ + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++offset_[u + 1];
        ++offset_[v + 1];
    }
    for (int v = 0; v < n_; ++v)
        offset_[v + 1] += offset_[v];
    adj_.resize(offset_[n_]);
    std::vector<std::size_t> cursor(offset_.begin(), offset_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < n_; ++v)
        std::sort(adj_.begin() + offset_[v], adj_.begin() + offset_[v + 1]);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v)
        return false;
    auto a = neighbors(u);
    return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edges_.size());
    for (const auto& [u, v] : edges_)
        edges.emplace_back(perm[u], perm[v]);
    return Graph(n_, std::move(edges));
}

namespace {

int checked_color_count(int n, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != n)
        fail(Errc::MalformedInput, "coloring not total over the vertex set");
    if (n == 0)
        return 0;
    int maxc = 0;
    for (int c : colors) {
        if (c < 0)
            fail(Errc::MalformedInput, "negative color id");
        maxc = std::max(maxc, c);
    }
    std::vector<char> seen(maxc + 1, 0);
    for (int c : colors)
        seen[c] = 1;
    for (int c = 0; c <= maxc; ++c)
        if (!seen[c])
            fail(Errc::MalformedInput,
                 "color ids not contiguous: " + std::to_string(c) + " unused");
    return maxc + 1;
}

} // namespace

ColoredGraph::ColoredGraph(Graph g)
    : graph(std::move(g)), coloring(graph.vertex_count(), 0),
      color_count_(graph.vertex_count() > 0 ? 1 : 0) {}

ColoredGraph::ColoredGraph(Graph g, std::vector<int> colors) : graph(std::move(g)) {
    color_count_ = checked_color_count(graph.vertex_count(), colors);
    coloring = std::move(colors);
}

ColoredGraph ColoredGraph::relabeled(const std::vector<int>& perm) const {
    std::vector<int> colors(coloring.size());
    for (int v = 0; v < vertex_count(); ++v)
        colors[perm[v]] = coloring[v];
    return ColoredGraph(graph.relabeled(perm), std::move(colors));
}

} // namespace c2kit
