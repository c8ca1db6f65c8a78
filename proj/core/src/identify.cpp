#include "c2kit/identify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "c2kit/refine.hpp"
#include "forest_rules.hpp"

namespace c2kit {

const char* pair_rel_name(PairRel r) {
    switch (r) {
    case PairRel::None: return "none";
    case PairRel::Eq: return "matched";
    case PairRel::Less: return "fan-out";
    case PairRel::Greater: return "fan-in";
    case PairRel::Other: return "other";
    }
    return "?";
}

Flip flip(const ColoredGraph& g) {
    Flip f;
    f.partition = refine_graph(g);
    int n = g.vertex_count();
    int t = f.partition.class_count();
    f.coloring.resize(n);
    for (int v = 0; v < n; ++v)
        f.coloring[v] = f.partition.class_of[v];

    // edges per class pair (i <= j)
    std::map<std::pair<int, int>, std::int64_t> block_edges;
    for (const auto& [u, v] : g.graph.edges()) {
        int a = f.coloring[u], b = f.coloring[v];
        block_edges[std::minmax(a, b)] += 1;
    }

    auto pair_capacity = [&](int i, int j) -> std::int64_t {
        auto si = static_cast<std::int64_t>(f.partition.classes[i].size());
        auto sj = static_cast<std::int64_t>(f.partition.classes[j].size());
        return i == j ? si * (si - 1) / 2 : si * sj;
    };

    std::vector<std::vector<char>> complement_block(t);
    for (int i = 0; i < t; ++i)
        complement_block[i].assign(t, 0);
    for (const auto& [key, edges] : block_edges)
        if (2 * edges > pair_capacity(key.first, key.second)) {
            complement_block[key.first][key.second] = 1;
            f.complemented.push_back(key);
        }

    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.graph.edges()) {
        auto [a, b] = std::minmax(f.coloring[u], f.coloring[v]);
        if (!complement_block[a][b])
            edges.emplace_back(u, v);
    }
    for (const auto& [i, j] : f.complemented) {
        for (int u : f.partition.classes[i])
            for (int v : f.partition.classes[j]) {
                if (u >= v && i == j)
                    continue;
                if (!g.graph.has_edge(u, v))
                    edges.emplace_back(u, v);
            }
    }
    f.graph = Graph(n, std::move(edges));
    return f;
}

namespace {

// per-vertex degree from class p into class q in the flipped graph
std::pair<std::int64_t, std::int64_t> block_degrees(const Flip& f, int p, int q) {
    std::int64_t edges = 0;
    for (int u : f.partition.classes[p])
        for (int w : f.graph.neighbors(u))
            if (f.coloring[w] == q)
                ++edges;
    auto sp = static_cast<std::int64_t>(f.partition.classes[p].size());
    auto sq = static_cast<std::int64_t>(f.partition.classes[q].size());
    if (edges % sp != 0 || edges % sq != 0)
        fail(Errc::MalformedInput, "flip coloring is not equitable");
    return {edges / sp, edges / sq};
}

PairRel classify_degrees(std::int64_t k, std::int64_t l) {
    if (k == 0 && l == 0)
        return PairRel::None;
    if (k == 1 && l == 1)
        return PairRel::Eq;
    if (k >= 2 && l == 1)
        return PairRel::Less;
    if (k == 1 && l >= 2)
        return PairRel::Greater;
    return PairRel::Other;
}

} // namespace

PairRel pair_relation(const Flip& f, int class_p, int class_q) {
    auto [k, l] = block_degrees(f, class_p, class_q);
    return classify_degrees(k, l);
}

Skeleton skeleton(const Flip& f) {
    Skeleton s;
    int t = f.partition.class_count();
    s.class_count = t;
    s.shape.resize(t);

    std::map<std::pair<int, int>, std::int64_t> block_edges;
    for (const auto& [u, v] : f.graph.edges())
        block_edges[std::minmax(f.coloring[u], f.coloring[v])] += 1;

    for (int i = 0; i < t; ++i) {
        auto size = static_cast<std::int64_t>(f.partition.classes[i].size());
        std::int64_t internal = 0;
        if (auto it = block_edges.find({i, i}); it != block_edges.end())
            internal = it->second;
        if (internal * 2 % size != 0)
            fail(Errc::MalformedInput, "flip coloring is not equitable");
        std::int64_t deg = internal * 2 / size;
        if (deg == 0)
            s.shape[i] = ClassShape::Empty;
        else if (deg == 1)
            s.shape[i] = ClassShape::Matching;
        else if (deg == 2 && size == 5)
            s.shape[i] = ClassShape::FiveCycle;
        else
            s.shape[i] = ClassShape::Other;
    }
    for (const auto& [key, edges] : block_edges) {
        auto [i, j] = key;
        if (i == j)
            continue;
        auto si = static_cast<std::int64_t>(f.partition.classes[i].size());
        auto sj = static_cast<std::int64_t>(f.partition.classes[j].size());
        if (edges % si != 0 || edges % sj != 0)
            fail(Errc::MalformedInput, "flip coloring is not equitable");
        s.edges.emplace_back(i, j, classify_degrees(edges / si, edges / sj));
    }
    return s;
}

namespace {

std::string shape_text(ClassShape s) {
    switch (s) {
    case ClassShape::Empty: return "no edges";
    case ClassShape::Matching: return "a matching";
    case ClassShape::FiveCycle: return "a 5-cycle";
    case ClassShape::Other: return "neither empty, a matching, nor a 5-cycle";
    }
    return "?";
}

} // namespace

Verdict identified_c2_graph(const ColoredGraph& g) {
    Flip f = flip(g);
    Skeleton sk = skeleton(f);
    int t = sk.class_count;

    for (int i = 0; i < t; ++i)
        if (sk.shape[i] == ClassShape::Other)
            return {false, 1,
                    "class P" + std::to_string(i) + " (size " +
                        std::to_string(f.partition.classes[i].size()) + ") induces " +
                        shape_text(sk.shape[i])};

    detail::ForestInput rules;
    rules.t = t;
    rules.class_exception.assign(t, 0);
    for (int i = 0; i < t; ++i)
        rules.class_exception[i] =
            sk.shape[i] == ClassShape::Matching || sk.shape[i] == ClassShape::FiveCycle;
    for (const auto& [i, j, rel] : sk.edges) {
        if (rel == PairRel::Other)
            return {false, 2,
                    "classes P" + std::to_string(i) + ", P" + std::to_string(j) +
                        " are connected with both degrees >= 2"};
        rules.edges.emplace_back(i, j);
        if (rel == PairRel::Less)
            rules.arrows.emplace_back(i, j);
        else if (rel == PairRel::Greater)
            rules.arrows.emplace_back(j, i);
    }
    if (auto failed = detail::check_forest_rules(rules))
        return {false, failed->condition, failed->witness};
    return {true, 0, ""};
}

// ---------------------------------------------------------------------------
// Structural bouquet-forest test.
// ---------------------------------------------------------------------------

namespace {

// canonical code of the colored tree rooted at r, avoiding the block set
std::string rooted_code(const Graph& g, const std::vector<int>& coloring, int r,
                        const std::vector<char>& blocked, std::vector<char>& visited) {
    visited[r] = 1;
    std::vector<std::string> child_codes;
    for (int w : g.neighbors(r))
        if (!blocked[w] && !visited[w])
            child_codes.push_back(rooted_code(g, coloring, w, blocked, visited));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(" + std::to_string(coloring[r]);
    for (const auto& c : child_codes)
        code += c;
    code += ")";
    return code;
}

} // namespace

BouquetDecomposition bouquet_forest_check(const Graph& g, const std::vector<int>& coloring) {
    BouquetDecomposition out;
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1)
            continue;
        std::vector<int> stack{s}, verts;
        comp[s] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            verts.push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(verts.begin(), verts.end());
        comps.push_back(std::move(verts));
    }

    std::vector<std::pair<std::vector<int>, std::string>> bouquets;
    for (const auto& verts : comps) {
        std::int64_t edges = 0;
        for (int v : verts)
            edges += g.degree(v);
        edges /= 2;
        auto size = static_cast<std::int64_t>(verts.size());
        if (edges == size - 1) {
            out.trees.push_back(verts);
            continue;
        }
        if (edges != size) {
            out.reason = "component of vertex " + std::to_string(verts[0]) +
                         " has more than one cycle";
            return out;
        }
        // unicyclic: strip leaves to expose the cycle
        std::vector<int> deg(n, 0);
        for (int v : verts)
            deg[v] = g.degree(v);
        std::vector<int> queue;
        std::vector<char> removed(n, 0);
        for (int v : verts)
            if (deg[v] == 1)
                queue.push_back(v);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            removed[v] = 1;
            for (int w : g.neighbors(v))
                if (!removed[w] && --deg[w] == 1)
                    queue.push_back(w);
        }
        std::vector<int> cycle;
        for (int v : verts)
            if (!removed[v])
                cycle.push_back(v);
        if (cycle.size() != 5) {
            out.reason = "component of vertex " + std::to_string(verts[0]) + " has a " +
            std::to_string(cycle.size()) + "-cycle, not a 5-cycle";
            return out;
        }
        // five rooted colored trees hanging off the cycle
        std::vector<char> blocked(n, 0);
        for (int v : cycle)
            blocked[v] = 1;
        std::vector<std::string> codes;
        std::vector<char> visited(n, 0);
        for (int r : cycle) {
            blocked[r] = 0;
            codes.push_back(rooted_code(g, coloring, r, blocked, visited));
            blocked[r] = 1;
        }
        // walk the 5-cycle to order codes cyclically, then take the dihedral
        // minimum of the code tuple
        std::vector<int> ring{cycle[0]};
        std::vector<char> on_ring(n, 0);
        for (int v : cycle)
            on_ring[v] = 1;
        std::vector<char> used(n, 0);
        used[cycle[0]] = 1;
        while (ring.size() < 5) {
            int v = ring.back();
            for (int w : g.neighbors(v))
                if (on_ring[w] && !used[w]) {
                    ring.push_back(w);
                    used[w] = 1;
                    break;
                }
        }
        std::map<int, std::string> code_of;
        for (std::size_t i = 0; i < cycle.size(); ++i)
            code_of[cycle[i]] = codes[i];
        std::vector<std::string> seq;
        for (int v : ring)
            seq.push_back(code_of[v]);
        std::string best;
        for (int refl = 0; refl < 2; ++refl) {
            for (int rot = 0; rot < 5; ++rot) {
                std::string cand;
                for (int k = 0; k < 5; ++k)
                    cand += seq[(rot + k) % 5] + "|";
                if (best.empty() || cand < best)
                    best = cand;
            }
            std::reverse(seq.begin(), seq.end());
        }
        bool uniform = std::all_of(codes.begin(), codes.end(),
                                   [&](const std::string& c) { return c == codes[0]; });
        if (!uniform) {
            out.reason = "5-cycle of vertex " + std::to_string(cycle[0]) +
                         " carries non-isomorphic trees";
            return out;
        }
        bouquets.emplace_back(cycle, best);
    }

    for (std::size_t i = 0; i < bouquets.size(); ++i)
        for (std::size_t j = i + 1; j < bouquets.size(); ++j)
            if (bouquets[i].second == bouquets[j].second) {
                out.reason = "isomorphic colored bouquets at vertices " +
                             std::to_string(bouquets[i].first[0]) + " and " +
                             std::to_string(bouquets[j].first[0]);
                return out;
            }
    out.bouquets = std::move(bouquets);
    out.is_bouquet_forest = true;
    return out;
}

BouquetDecomposition bouquet_forest_check(const Flip& f) {
    return bouquet_forest_check(f.graph, f.coloring);
}

} // namespace c2kit
