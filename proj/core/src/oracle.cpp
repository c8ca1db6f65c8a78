#include "c2kit/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "c2kit/invariant.hpp"
#include "c2kit/refine.hpp"

namespace c2kit {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return pairs;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    auto pairs = all_pairs(n);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1)
            edges.push_back(pairs[i]);
    return Graph(n, std::move(edges));
}

void enumerate_graphs(int n, const std::function<void(const Graph&)>& yield) {
    if (n > 7)
        fail(Errc::TooLarge, "exhaustive enumeration capped at 7 vertices");
    if (n < 0)
        fail(Errc::MalformedInput, "negative vertex count");
    std::uint64_t total = 1ULL << (static_cast<std::uint64_t>(n) * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        yield(graph_from_mask(n, mask));
}

// ---------------------------------------------------------------------------
// Isomorphism and orbits by individualization and refinement.
// ---------------------------------------------------------------------------

namespace {

// Jointly densifies two colorings; false when the color histograms differ.
bool densify_pair(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& da,
                  std::vector<int>& db) {
    std::map<int, std::pair<int, int>> hist;
    for (int c : a)
        hist[c].first += 1;
    for (int c : b)
        hist[c].second += 1;
    std::map<int, int> id;
    for (const auto& [c, counts] : hist) {
        if (counts.first != counts.second)
            return false;
        id.emplace(c, static_cast<int>(id.size()));
    }
    da.resize(a.size());
    db.resize(b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        da[i] = id.at(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i)
        db[i] = id.at(b[i]);
    return true;
}

bool check_bijection(const Graph& g, const Graph& h, const std::vector<int>& map_to) {
    if (g.edge_count() != h.edge_count())
        return false;
    for (const auto& [u, v] : g.edges())
        if (!h.has_edge(map_to[u], map_to[v]))
            return false;
    return true;
}

// Backtracking over refined classes: returns true iff a color-preserving
// isomorphism g -> h extends the current pair of colorings.
bool iso_search(const Graph& g, const Graph& h, const std::vector<int>& colors_g,
                const std::vector<int>& colors_h, int fresh) {
    std::vector<int> dg, dh;
    if (!densify_pair(colors_g, colors_h, dg, dh))
        return false;
    ColoredGraph cg(g, std::move(dg)), ch(h, std::move(dh));
    OrderedPartition pg = refine_graph(cg);
    OrderedPartition ph = refine_graph(ch);
    if (pg.class_count() != ph.class_count())
        return false;
    for (int c = 0; c < pg.class_count(); ++c)
        if (pg.classes[c].size() != ph.classes[c].size())
            return false;
    if (class_signatures(cg, pg) != class_signatures(ch, ph))
        return false;

    int split = -1;
    for (int c = 0; c < pg.class_count(); ++c)
        if (pg.classes[c].size() >= 2) {
            split = c;
            break;
        }
    if (split == -1) {
        std::vector<int> map_to(g.vertex_count());
        for (int c = 0; c < pg.class_count(); ++c)
            map_to[pg.classes[c][0]] = ph.classes[c][0];
        return check_bijection(g, h, map_to);
    }

    int u = pg.classes[split][0];
    for (int v : ph.classes[split]) {
        std::vector<int> next_g = colors_g, next_h = colors_h;
        next_g[u] = fresh;
        next_h[v] = fresh;
        if (iso_search(g, h, next_g, next_h, fresh + 1))
            return true;
    }
    return false;
}

int fresh_color(const ColoredGraph& g) { return g.color_count() + g.vertex_count() + 1; }

} // namespace

bool are_isomorphic(const ColoredGraph& g, const ColoredGraph& h) {
    if (g.vertex_count() > 64 || h.vertex_count() > 64)
        fail(Errc::TooLarge, "isomorphism search capped at 64 vertices");
    if (g.vertex_count() != h.vertex_count() || g.graph.edge_count() != h.graph.edge_count())
        return false;
    return iso_search(g.graph, h.graph, g.coloring, h.coloring,
                      std::max(fresh_color(g), fresh_color(h)));
}

namespace {

OrderedPartition orbits_from_dsu(int n, std::vector<int>& parent) {
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v)
        groups[find(v)].push_back(v);
    OrderedPartition p;
    p.class_of.assign(n, -1);
    for (auto& [root, members] : groups) {
        for (int v : members)
            p.class_of[v] = static_cast<int>(p.classes.size());
        p.classes.push_back(std::move(members));
    }
    return p;
}

} // namespace

OrderedPartition automorphism_orbits(const ColoredGraph& g) {
    int n = g.vertex_count();
    if (n > 64)
        fail(Errc::TooLarge, "orbit search capped at 64 vertices");
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    if (n <= 7) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool ok = true;
            for (int v = 0; v < n && ok; ++v)
                ok = g.coloring[v] == g.coloring[perm[v]];
            if (ok && check_bijection(g.graph, g.graph, perm))
                for (int v = 0; v < n; ++v)
                    unite(v, perm[v]);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return orbits_from_dsu(n, parent);
    }

    OrderedPartition part = refine_graph(g);
    int fresh = fresh_color(g);
    for (const auto& cls : part.classes) {
        std::vector<int> reps;
        for (int v : cls) {
            bool merged = false;
            for (int r : reps) {
                if (find(r) == find(v)) {
                    merged = true;
                    break;
                }
                std::vector<int> ca = g.coloring, cb = g.coloring;
                ca[r] = fresh;
                cb[v] = fresh;
                if (iso_search(g.graph, g.graph, ca, cb, fresh + 1)) {
                    unite(r, v);
                    merged = true;
                    break;
                }
            }
            if (!merged)
                reps.push_back(v);
        }
    }
    return orbits_from_dsu(n, parent);
}

// ---------------------------------------------------------------------------
// ecPOG isomorphism and orbits (permutation sweeps).
// ---------------------------------------------------------------------------

bool ecpog_isomorphic(const EcPog& p, const EcPog& q) {
    int n = p.vertex_count();
    if (n != q.vertex_count())
        return false;
    if (n > 8)
        fail(Errc::TooLarge, "ecPOG isomorphism sweep capped at 8 vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = 0; v < n && ok; ++v)
                if (u != v)
                    ok = q.color(perm[u], perm[v]) == p.color(u, v);
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

OrderedPartition ecpog_orbits(const EcPog& p, const std::optional<std::vector<int>>& coloring) {
    int n = p.vertex_count();
    if (n > 8)
        fail(Errc::TooLarge, "ecPOG orbit sweep capped at 8 vertices");
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (coloring)
                ok = (*coloring)[v] == (*coloring)[perm[v]];
        for (int u = 0; u < n && ok; ++u)
            for (int v = 0; v < n && ok; ++v)
                if (u != v)
                    ok = p.color(perm[u], perm[v]) == p.color(u, v);
        if (ok)
            for (int v = 0; v < n; ++v)
                parent[find(v)] = find(perm[v]);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return orbits_from_dsu(n, parent);
}

// ---------------------------------------------------------------------------
// C^2 equivalence and generic k-WL.
// ---------------------------------------------------------------------------

bool c2_equivalent(const ColoredGraph& g, const ColoredGraph& h) {
    int n = g.vertex_count();
    if (n != h.vertex_count())
        return false;
    std::vector<std::pair<int, int>> edges(g.graph.edges());
    for (const auto& [u, v] : h.graph.edges())
        edges.emplace_back(n + u, n + v);
    std::vector<int> colors = g.coloring;
    colors.insert(colors.end(), h.coloring.begin(), h.coloring.end());
    std::vector<int> dg, dh;
    if (!densify_pair(g.coloring, h.coloring, dg, dh))
        return false;
    for (int v = 0; v < n; ++v) {
        colors[v] = dg[v];
        colors[n + v] = dh[v];
    }
    ColoredGraph both(Graph(2 * n, std::move(edges)), std::move(colors));
    OrderedPartition part = refine_graph(both);
    for (const auto& cls : part.classes) {
        std::int64_t balance = 0;
        for (int v : cls)
            balance += v < n ? 1 : -1;
        if (balance != 0)
            return false;
    }
    return true;
}

bool kwl_equivalent(const ColoredGraph& g, const ColoredGraph& h, int k) {
    if (k < 1 || k > 3)
        fail(Errc::MalformedInput, "WL dimension must be 1, 2 or 3");
    int n = g.vertex_count();
    if (n != h.vertex_count())
        return false;
    if (k == 1)
        return c2_equivalent(g, h);
    if ((k == 2 && n > 40) || (k == 3 && n > 20))
        fail(Errc::TooLarge, "tuple table too large for dimension " + std::to_string(k));
    if (n == 0)
        return true;

    std::int64_t tuples = 1;
    for (int i = 0; i < k; ++i)
        tuples *= n;

    auto decode = [&](std::int64_t idx, std::array<int, 3>& t) {
        for (int i = k - 1; i >= 0; --i) {
            t[i] = static_cast<int>(idx % n);
            idx /= n;
        }
    };

    // joint atomic types
    std::vector<int> color_g(tuples), color_h(tuples);
    {
        std::map<std::vector<int>, int> ids;
        auto atomic = [&](const ColoredGraph& x, const std::array<int, 3>& t) {
            std::vector<int> key;
            for (int i = 0; i < k; ++i)
                key.push_back(x.coloring[t[i]]);
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) {
                    key.push_back(t[i] == t[j] ? 1 : 0);
                    key.push_back(x.graph.has_edge(t[i], t[j]) ? 1 : 0);
                }
            return key;
        };
        std::array<int, 3> t{};
        for (std::int64_t idx = 0; idx < tuples; ++idx) {
            decode(idx, t);
            auto key = atomic(g, t);
            color_g[idx] = ids.try_emplace(key, static_cast<int>(ids.size())).first->second;
            key = atomic(h, t);
            color_h[idx] = ids.try_emplace(key, static_cast<int>(ids.size())).first->second;
        }
    }

    int distinct = 0;
    {
        std::set<int> seen(color_g.begin(), color_g.end());
        seen.insert(color_h.begin(), color_h.end());
        distinct = static_cast<int>(seen.size());
    }
    std::vector<std::int64_t> pow(k, 1);
    for (int i = k - 2; i >= 0; --i)
        pow[i] = pow[i + 1] * n;

    while (true) {
        std::map<std::vector<int>, int> ids;
        auto signature = [&](const std::vector<int>& colors, std::int64_t idx,
                             const std::array<int, 3>& t) {
            std::vector<std::array<int, 3>> subs(n);
            for (int w = 0; w < n; ++w) {
                std::array<int, 3> block{0, 0, 0};
                for (int i = 0; i < k; ++i) {
                    std::int64_t moved = idx + (static_cast<std::int64_t>(w) - t[i]) * pow[i];
                    block[i] = colors[moved];
                }
                subs[w] = block;
            }
            std::sort(subs.begin(), subs.end());
            std::vector<int> key{colors[idx]};
            for (const auto& block : subs)
                for (int i = 0; i < k; ++i)
                    key.push_back(block[i]);
            return key;
        };
        std::vector<int> next_g(tuples), next_h(tuples);
        std::array<int, 3> t{};
        for (std::int64_t idx = 0; idx < tuples; ++idx) {
            decode(idx, t);
            next_g[idx] = ids.try_emplace(signature(color_g, idx, t), static_cast<int>(ids.size()))
                              .first->second;
        }
        for (std::int64_t idx = 0; idx < tuples; ++idx) {
            decode(idx, t);
            next_h[idx] = ids.try_emplace(signature(color_h, idx, t), static_cast<int>(ids.size()))
                              .first->second;
        }
        color_g = std::move(next_g);
        color_h = std::move(next_h);
        int now = static_cast<int>(ids.size());
        if (now == distinct)
            break;
        distinct = now;
    }

    std::map<int, std::int64_t> balance;
    for (int c : color_g)
        balance[c] += 1;
    for (int c : color_h)
        balance[c] -= 1;
    for (const auto& [c, b] : balance)
        if (b != 0)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// The identification oracle.
// ---------------------------------------------------------------------------

bool identified_oracle(const ColoredGraph& g) {
    int n = g.vertex_count();
    if (n > 7)
        fail(Errc::TooLarge, "identification oracle capped at 7 vertices");
    if (n <= 1)
        return true;

    std::vector<std::pair<int, int>> degcol(n);
    for (int v = 0; v < n; ++v)
        degcol[v] = {g.coloring[v], g.graph.degree(v)};
    std::sort(degcol.begin(), degcol.end());

    bool mono = g.monochromatic();
    C2Invariant inv_g = invariant_graph(g);

    auto pairs = all_pairs(n);
    std::uint64_t total = 1ULL << pairs.size();
    std::vector<int> deg(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        int edges = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) {
                ++deg[pairs[i].first];
                ++deg[pairs[i].second];
                ++edges;
            }
        if (edges != g.graph.edge_count())
            continue;
        std::vector<std::pair<int, int>> cand_degcol(n);
        for (int v = 0; v < n; ++v)
            cand_degcol[v] = {g.coloring[v], deg[v]};
        std::sort(cand_degcol.begin(), cand_degcol.end());
        if (cand_degcol != degcol)
            continue;
        ColoredGraph cand(graph_from_mask(n, mask), g.coloring);
        bool equivalent = mono ? invariants_equal(invariant_graph(cand), inv_g)
                               : c2_equivalent(g, cand);
        if (!equivalent)
            continue;
        if (!are_isomorphic(g, cand))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// CFI gadget graphs.
// ---------------------------------------------------------------------------

namespace {

struct CfiScaffold {
    int base_n = 0;
    std::vector<std::pair<int, int>> base_edges;
    std::vector<int> first;                       // first vertex id of each gadget
    std::vector<std::vector<int>> incident;       // base vertex -> incident edge indices
    std::vector<std::vector<int>> middles;        // gadget -> even-subset masks
    int total = 0;
    std::vector<std::pair<int, int>> fixed_edges; // gadget-internal edges
    std::vector<int> colors;

    // outer pair of gadget v for its local edge slot i
    int a(int v, int i) const {
        return first[v] + static_cast<int>(middles[v].size()) + 2 * i;
    }
    int b(int v, int i) const { return a(v, i) + 1; }
    int local(int v, int edge) const {
        const auto& inc = incident[v];
        return static_cast<int>(std::find(inc.begin(), inc.end(), edge) - inc.begin());
    }
};

CfiScaffold cfi_scaffold(const Graph& base) {
    int bn = base.vertex_count();
    if (bn == 0)
        fail(Errc::MalformedInput, "empty base graph");
    // connectivity
    std::vector<char> seen(bn, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++visited;
        for (int w : base.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    if (visited != bn)
        fail(Errc::DisconnectedBase, "base graph is disconnected");
    for (int v = 0; v < bn; ++v)
        if (base.degree(v) < 2)
            fail(Errc::DegreeTooSmall, "base vertex " + std::to_string(v) + " has degree " +
                                           std::to_string(base.degree(v)));

    CfiScaffold s;
    s.base_n = bn;
    s.base_edges = base.edges();
    s.incident.assign(bn, {});
    for (std::size_t e = 0; e < s.base_edges.size(); ++e) {
        s.incident[s.base_edges[e].first].push_back(static_cast<int>(e));
        s.incident[s.base_edges[e].second].push_back(static_cast<int>(e));
    }
    s.first.resize(bn);
    s.middles.resize(bn);
    int next = 0;
    for (int v = 0; v < bn; ++v) {
        s.first[v] = next;
        int d = base.degree(v);
        for (int mask = 0; mask < (1 << d); ++mask)
            if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 == 0)
                s.middles[v].push_back(mask);
        next += static_cast<int>(s.middles[v].size()) + 2 * d;
    }
    s.total = next;
    s.colors.resize(s.total);
    for (int v = 0; v < bn; ++v) {
        int last = v + 1 < bn ? s.first[v + 1] : s.total;
        for (int x = s.first[v]; x < last; ++x)
            s.colors[x] = v;
    }
    for (int v = 0; v < bn; ++v) {
        int d = base.degree(v);
        for (std::size_t mi = 0; mi < s.middles[v].size(); ++mi) {
            int mid = s.first[v] + static_cast<int>(mi);
            int mask = s.middles[v][mi];
            for (int i = 0; i < d; ++i)
                s.fixed_edges.emplace_back(mid, (mask >> i & 1) ? s.a(v, i) : s.b(v, i));
        }
    }
    return s;
}

ColoredGraph cfi_build(const CfiScaffold& s, const std::vector<char>& twisted) {
    std::vector<std::pair<int, int>> edges = s.fixed_edges;
    for (std::size_t e = 0; e < s.base_edges.size(); ++e) {
        auto [u, w] = s.base_edges[e];
        int iu = s.local(u, static_cast<int>(e));
        int iw = s.local(w, static_cast<int>(e));
        if (twisted[e]) {
            edges.emplace_back(s.a(u, iu), s.b(w, iw));
            edges.emplace_back(s.b(u, iu), s.a(w, iw));
        } else {
            edges.emplace_back(s.a(u, iu), s.a(w, iw));
            edges.emplace_back(s.b(u, iu), s.b(w, iw));
        }
    }
    return ColoredGraph(Graph(s.total, std::move(edges)), s.colors);
}

} // namespace

ColoredGraph cfi_variant(const Graph& base, const std::vector<int>& twisted_edges) {
    CfiScaffold s = cfi_scaffold(base);
    std::vector<char> twisted(s.base_edges.size(), 0);
    for (int e : twisted_edges) {
        if (e < 0 || e >= static_cast<int>(s.base_edges.size()))
            fail(Errc::IndexOutOfRange, "twist index " + std::to_string(e));
        twisted[e] = 1;
    }
    return cfi_build(s, twisted);
}

CfiPair cfi_pair(const Graph& base) {
    CfiScaffold s = cfi_scaffold(base);
    CfiPair out;
    out.base_edges = s.base_edges;
    out.twisted_edge_index = 0;
    std::vector<char> twists(s.base_edges.size(), 0);
    out.g = cfi_build(s, twists);
    twists[0] = 1;
    out.g_twisted = cfi_build(s, twists);
    auto [u, w] = s.base_edges[0];
    out.a = s.a(u, s.local(u, 0));
    out.b = s.b(u, s.local(u, 0));
    out.a_prime = s.a(w, s.local(w, 0));
    out.b_prime = s.b(w, s.local(w, 0));
    return out;
}

SubdividedUnion union_and_subdivide_h(const Graph& base) {
    CfiPair pair = cfi_pair(base);
    int n = pair.g.vertex_count();
    int a = pair.a, b = pair.b, ap = pair.a_prime, bp = pair.b_prime;

    // union of the two edge sets minus the four designated edges
    std::set<std::pair<int, int>> edges;
    for (const auto& e : pair.g.graph.edges())
        edges.insert(e);
    for (const auto& e : pair.g_twisted.graph.edges())
        edges.insert(e);
    auto drop = [&](int x, int y) { edges.erase(std::minmax(x, y)); };
    drop(a, ap);
    drop(b, bp);
    drop(a, bp);
    drop(b, ap);

    int m1 = n, m2 = n + 1, m3 = n + 2, m4 = n + 3;
    int vp = n + 4, vt = n + 5;
    std::vector<std::pair<int, int>> all(edges.begin(), edges.end());
    auto link = [&](int x, int y) { all.emplace_back(x, y); };
    link(a, m1);
    link(m1, ap); // parallel {a, a'}
    link(b, m2);
    link(m2, bp); // parallel {b, b'}
    link(a, m3);
    link(m3, bp); // twisted {a, b'}
    link(b, m4);
    link(m4, ap); // twisted {b, a'}
    link(vp, m1);
    link(vp, m2);
    link(vt, m3);
    link(vt, m4);

    std::vector<int> colors = pair.g.coloring;
    int midpoint_color = *std::max_element(colors.begin(), colors.end()) + 1;
    colors.insert(colors.end(), {midpoint_color, midpoint_color, midpoint_color, midpoint_color,
                                 midpoint_color + 1, midpoint_color + 1});
    SubdividedUnion out;
    out.h = ColoredGraph(Graph(n + 6, std::move(all)), std::move(colors));
    out.v_parallel = vp;
    out.v_twisted = vt;
    return out;
}

} // namespace c2kit
