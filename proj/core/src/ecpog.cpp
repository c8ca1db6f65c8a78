#include "c2kit/ecpog.hpp"

#include <algorithm>
#include <string>

namespace c2kit {

void EcPog::index_colors() {
    colors_used_.clear();
    directed_flag_.clear();
    // A color is directed iff some of its edges lacks the reverse entry;
    // mixing within one color is rejected below.
    std::vector<std::pair<int, bool>> seen; // (color, directed?)
    for (int u = 0; u < n_; ++u) {
        for (int v = 0; v < n_; ++v) {
            if (u == v)
                continue;
            int c = color(u, v);
            if (c < 0)
                continue;
            seen.emplace_back(c, color(v, u) != c);
        }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (i > 0 && seen[i].first == seen[i - 1].first)
            fail(Errc::MixedOrientationColor,
                 "color " + std::to_string(seen[i].first) +
                     " has both directed and undirected edges");
        colors_used_.push_back(seen[i].first);
        directed_flag_.push_back(seen[i].second ? 1 : 0);
    }
}

bool EcPog::color_directed(int c) const {
    auto it = std::lower_bound(colors_used_.begin(), colors_used_.end(), c);
    if (it == colors_used_.end() || *it != c)
        fail(Errc::MalformedInput, "color " + std::to_string(c) + " not present");
    return directed_flag_[it - colors_used_.begin()] != 0;
}

std::vector<EcEdge> EcPog::edge_list() const {
    std::vector<EcEdge> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = 0; v < n_; ++v) {
            if (u == v)
                continue;
            int c = color(u, v);
            if (c < 0)
                continue;
            if (color(v, u) == c) {
                if (u < v)
                    out.push_back({u, v, c, false});
            } else {
                out.push_back({u, v, c, true});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const EcEdge& x, const EcEdge& y) {
        return std::tie(x.a, x.b, x.color) < std::tie(y.a, y.b, y.color);
    });
    return out;
}

EcPog EcPog::relabeled(const std::vector<int>& perm) const {
    std::vector<std::int32_t> m(static_cast<std::size_t>(n_) * n_, -1);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (u != v)
                m[static_cast<std::size_t>(perm[u]) * n_ + perm[v]] = color(u, v);
    return ecpog_from_matrix(n_, std::move(m));
}

EcPog ecpog_from_matrix(int n, std::vector<std::int32_t> matrix) {
    EcPog p;
    p.n_ = n;
    p.color_ = std::move(matrix);
    for (int u = 0; u < n; ++u) {
        if (p.color(u, u) != -1)
            fail(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
        for (int v = 0; v < n; ++v) {
            if (u == v)
                continue;
            int fwd = p.color(u, v);
            int rev = p.color(v, u);
            if (fwd < 0 && rev < 0)
                fail(Errc::IncompleteEcPog, "pair (" + std::to_string(u) + "," +
                                                std::to_string(v) + ") carries no color");
            if (fwd >= 0 && rev >= 0 && fwd != rev)
                fail(Errc::InconsistentUndirectedColor,
                     "pair (" + std::to_string(u) + "," + std::to_string(v) +
                         ") colored differently per direction");
        }
    }
    p.index_colors();
    return p;
}

EcPog validate_ecpog(int n, const std::vector<EcEdge>& entries) {
    if (n < 0)
        fail(Errc::MalformedInput, "negative vertex count");
    std::vector<std::int32_t> m(static_cast<std::size_t>(n) * n, -1);
    auto put = [&](int a, int b, int c) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail(Errc::IndexOutOfRange, "edge endpoint out of range: (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b)
            fail(Errc::LoopEdge, "loop at vertex " + std::to_string(a));
        auto& cell = m[static_cast<std::size_t>(a) * n + b];
        if (cell != -1) {
            if (cell == c)
                fail(Errc::DuplicateEdge, "pair (" + std::to_string(a) + "," +
                                              std::to_string(b) + ") listed twice");
            fail(Errc::InconsistentUndirectedColor,
                 "pair (" + std::to_string(a) + "," + std::to_string(b) +
                     ") assigned two colors");
        }
        cell = c;
    };
    for (const auto& e : entries) {
        if (e.color < 0)
            fail(Errc::MalformedInput, "negative edge color");
        put(e.a, e.b, e.color);
        if (!e.directed)
            put(e.b, e.a, e.color);
    }
    return ecpog_from_matrix(n, std::move(m));
}

} // namespace c2kit
