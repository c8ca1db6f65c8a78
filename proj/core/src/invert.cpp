#include "c2kit/invert.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace c2kit {

int DistanceSet::degree() const {
    int k = 0;
    for (int d : distances)
        k += (2 * d == n) ? 1 : 2;
    return k;
}

Graph DistanceSet::build() const {
    std::vector<std::pair<int, int>> edges;
    for (int d : distances) {
        int limit = (2 * d == n) ? n / 2 : n;
        for (int v = 0; v < limit; ++v)
            edges.emplace_back(v, (v + d) % n);
    }
    return Graph(n, std::move(edges));
}

DistanceSet circulant_distance_set(int n, int k) {
    if (k < 0 || k >= n)
        fail(Errc::DegreeTooLarge, "degree " + std::to_string(k) + " on " + std::to_string(n) +
                                       " vertices");
    if (static_cast<std::int64_t>(k) * n % 2 != 0)
        fail(Errc::ParityInfeasible, "k*n odd for k=" + std::to_string(k) + ", n=" +
                                         std::to_string(n));
    DistanceSet s;
    s.n = n;
    for (int d = 1; d <= k / 2; ++d)
        s.distances.push_back(d);
    if (k % 2 == 1)
        s.distances.push_back(n / 2);
    assert(s.degree() == k);
    return s;
}

Graph circulant(int n, int k) { return circulant_distance_set(n, k).build(); }

namespace {

// Lemma-style lcm-stride insertion between parts of sizes m and n. Buckets
// are consumed in order; bucket b contributes degrees[b] edges per
// P-vertex, a whole number of stride passes each. emit(i, j, b) receives
// P-index, Q-index and bucket.
template <typename Emit>
void doubly_circulant_passes(int m, int n, const std::vector<std::int64_t>& degrees, Emit emit) {
    if (m <= 0 || n <= 0)
        return;
    std::int64_t lcm = std::lcm<std::int64_t>(m, n);
    std::int64_t per_pass = lcm / m; // degree a P-vertex gains per pass
    std::vector<char> covered(n, 0); // neighbors of v_0 so far
    int next_j = 0;
    for (std::size_t b = 0; b < degrees.size(); ++b) {
        assert(degrees[b] % per_pass == 0);
        for (std::int64_t pass = 0; pass < degrees[b] / per_pass; ++pass) {
            while (next_j < n && covered[next_j])
                ++next_j;
            assert(next_j < n);
            int j = next_j;
            for (std::int64_t s = 0; s < lcm; s += m) {
                covered[(j + s) % n] = 1;
                for (int i = 0; i < m; ++i)
                    emit(i, static_cast<int>((i + j + s) % n), static_cast<int>(b));
            }
        }
    }
}

} // namespace

Graph doubly_circulant(int m, int n, int k, int l) {
    if (k < 0 || l < 0 || k > n || l > m)
        fail(Errc::DegreeTooLarge, "degrees (" + std::to_string(k) + "," + std::to_string(l) +
                                       ") on parts of sizes " + std::to_string(m) + "," +
                                       std::to_string(n));
    if (static_cast<std::int64_t>(k) * m != static_cast<std::int64_t>(l) * n)
        fail(Errc::CountMismatch, "k*m != l*n (" + std::to_string(k) + "*" + std::to_string(m) +
                                      " vs " + std::to_string(l) + "*" + std::to_string(n) + ")");
    std::vector<std::pair<int, int>> edges;
    doubly_circulant_passes(m, n, {k}, [&](int i, int j, int) { edges.emplace_back(i, m + j); });
    return Graph(m + n, std::move(edges));
}

MultiCirculant multi_circulant_representative(const C2Invariant& inv) {
    std::string why;
    if (!c2_invariant_consistent(inv, &why))
        fail(Errc::InfeasibleInvariant, why);
    std::int64_t total = inv.vertex_count();
    if (total > 1'000'000'000LL)
        fail(Errc::TooLarge, "invariant describes " + std::to_string(total) + " vertices");

    MultiCirculant out;
    out.offsets.resize(inv.t + 1, 0);
    for (int i = 0; i < inv.t; ++i)
        out.offsets[i + 1] = out.offsets[i] + static_cast<int>(inv.sizes[i]);
    int n = out.offsets[inv.t];

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < inv.t; ++i) {
        int base = out.offsets[i];
        int size = static_cast<int>(inv.sizes[i]);
        DistanceSet ds = circulant_distance_set(size, static_cast<int>(inv.entry(i, i)));
        for (int d : ds.distances) {
            int limit = (2 * d == size) ? size / 2 : size;
            for (int v = 0; v < limit; ++v)
                edges.emplace_back(base + v, base + (v + d) % size);
        }
        for (const auto& [j, kij] : inv.rows[i]) {
            if (j <= i)
                continue;
            int other = out.offsets[j];
            int sj = static_cast<int>(inv.sizes[j]);
            doubly_circulant_passes(size, sj, {kij}, [&](int a, int b, int) {
                edges.emplace_back(base + a, other + b);
            });
        }
    }
    out.graph = Graph(n, std::move(edges));

    out.witness.resize(n);
    for (int i = 0; i < inv.t; ++i) {
        int base = out.offsets[i];
        int size = static_cast<int>(inv.sizes[i]);
        for (int v = 0; v < size; ++v)
            out.witness[base + v] = base + (v + 1) % size;
    }
    return out;
}

Graph canonize_graph(const ColoredGraph& g) {
    return multi_circulant_representative(invariant_graph(g)).graph;
}

Factorization walecki(int n) {
    if (n < 2 || n % 2 != 0)
        fail(Errc::OddOrder, "1-factorization needs even n >= 2, got " + std::to_string(n));
    Factorization f;
    f.n = n;
    int ring = n - 1; // polygon vertices 0..n-2, center n-1
    f.matchings.resize(ring);
    for (int i = 0; i < ring; ++i) {
        auto& m = f.matchings[i];
        m.emplace_back(std::min(i, n - 1), std::max(i, n - 1));
        for (int j = 0; j < ring; ++j) {
            int k = ((2 * i - j) % ring + ring) % ring;
            if (j < k)
                m.emplace_back(j, k);
        }
        std::sort(m.begin(), m.end());
    }
    return f;
}

EcPog circ_psi(int n, const std::vector<int>& degrees) {
    if (n < 1 || n % 2 == 0)
        fail(Errc::MalformedInput, "circulant coloring needs odd n, got " + std::to_string(n));
    std::int64_t sum = 0;
    for (int d : degrees) {
        if (d < 0)
            fail(Errc::MalformedInput, "negative color degree");
        if (d % 2 != 0)
            fail(Errc::OddColorDegree, "color degree " + std::to_string(d) + " odd with odd n");
        sum += d;
    }
    if (sum != n - 1)
        fail(Errc::DegreeSumMismatch, "color degrees sum to " + std::to_string(sum) +
                                          ", need n-1 = " + std::to_string(n - 1));
    std::vector<std::int32_t> matrix(static_cast<std::size_t>(n) * n, -1);
    int d = 1;
    for (std::size_t c = 0; c < degrees.size(); ++c)
        for (int rep = 0; rep < degrees[c] / 2; ++rep, ++d)
            for (int v = 0; v < n; ++v) {
                int w = (v + d) % n;
                matrix[static_cast<std::size_t>(v) * n + w] = static_cast<int>(c);
                matrix[static_cast<std::size_t>(w) * n + v] = static_cast<int>(c);
            }
    return ecpog_from_matrix(n, std::move(matrix));
}

EcPog match_psi(int n, const std::vector<int>& degrees) {
    std::int64_t sum = 0;
    for (int d : degrees) {
        if (d < 0)
            fail(Errc::MalformedInput, "negative color degree");
        sum += d;
    }
    if (sum != n - 1)
        fail(Errc::DegreeSumMismatch, "color degrees sum to " + std::to_string(sum) +
                                          ", need n-1 = " + std::to_string(n - 1));
    Factorization f = walecki(n);
    std::vector<std::int32_t> matrix(static_cast<std::size_t>(n) * n, -1);
    int matching = 0;
    for (std::size_t c = 0; c < degrees.size(); ++c)
        for (int rep = 0; rep < degrees[c]; ++rep, ++matching)
            for (const auto& [a, b] : f.matchings[matching]) {
                matrix[static_cast<std::size_t>(a) * n + b] = static_cast<int>(c);
                matrix[static_cast<std::size_t>(b) * n + a] = static_cast<int>(c);
            }
    return ecpog_from_matrix(n, std::move(matrix));
}

EcPog orient_color_class(const EcPog& p, int color) {
    int n = p.vertex_count();
    const auto& used = p.colors_used();
    if (!std::binary_search(used.begin(), used.end(), color))
        fail(Errc::MalformedInput, "color " + std::to_string(color) + " not present");

    // undirected subgraph of the color
    struct Arc {
        int to;
        int id;
    };
    std::vector<std::vector<Arc>> adj(n);
    int edge_count = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (p.color(u, v) == color && p.color(v, u) == color) {
                adj[u].push_back({v, edge_count});
                adj[v].push_back({u, edge_count});
                ++edge_count;
            }
    for (int v = 0; v < n; ++v)
        if (adj[v].size() % 2 != 0)
            fail(Errc::OddDegreeInColor, "vertex " + std::to_string(v) + " has odd degree " +
                                             std::to_string(adj[v].size()) + " in color " +
                                             std::to_string(color));

    std::vector<std::int32_t> matrix(static_cast<std::size_t>(n) * n, -1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                matrix[static_cast<std::size_t>(u) * n + v] = p.color(u, v);
    auto drop = [&](int u, int v) { matrix[static_cast<std::size_t>(u) * n + v] = -1; };

    // Hierholzer per component, smallest start vertex, ascending neighbors
    std::vector<char> used_edge(edge_count, 0);
    std::vector<std::size_t> next(n, 0);
    for (int start = 0; start < n; ++start) {
        if (adj[start].empty() || next[start] < adj[start].size()) {
            // skip components already consumed
            bool has_unused = false;
            for (std::size_t k = next[start]; k < adj[start].size(); ++k)
                if (!used_edge[adj[start][k].id]) {
                    has_unused = true;
                    break;
                }
            if (!has_unused)
                continue;
        } else {
            continue;
        }
        std::vector<int> stack{start}, circuit;
        while (!stack.empty()) {
            int v = stack.back();
            while (next[v] < adj[v].size() && used_edge[adj[v][next[v]].id])
                ++next[v];
            if (next[v] == adj[v].size()) {
                circuit.push_back(v);
                stack.pop_back();
            } else {
                const Arc& a = adj[v][next[v]];
                used_edge[a.id] = 1;
                stack.push_back(a.to);
            }
        }
        std::reverse(circuit.begin(), circuit.end());
        for (std::size_t i = 0; i + 1 < circuit.size(); ++i)
            drop(circuit[i + 1], circuit[i]); // keep circuit[i] -> circuit[i+1]
    }
    return ecpog_from_matrix(n, std::move(matrix));
}

EcPog invert_ec(const EcInvariant& inv) {
    std::string why;
    if (!ec_invariant_consistent(inv, &why))
        fail(Errc::InfeasibleInvariant, why);
    std::int64_t total = inv.vertex_count();
    if (total > 100'000)
        fail(Errc::TooLarge, "invariant describes " + std::to_string(total) + " vertices");

    std::vector<int> offsets(inv.t + 1, 0);
    for (int i = 0; i < inv.t; ++i)
        offsets[i + 1] = offsets[i] + static_cast<int>(inv.sizes[i]);
    int n = offsets[inv.t];
    std::vector<std::int32_t> matrix(static_cast<std::size_t>(n) * n, -1);

    // diagonal blocks
    for (int i = 0; i < inv.t; ++i) {
        int size = static_cast<int>(inv.sizes[i]);
        if (size <= 1)
            continue;
        const auto* cell = inv.cell(i, i);
        if (!cell)
            fail(Errc::InfeasibleInvariant, "missing diagonal cell " + std::to_string(i));
        std::vector<int> underlying;
        std::vector<int> cell_colors;
        std::vector<char> directed;
        for (const auto& [c, counts] : *cell) {
            underlying.push_back(static_cast<int>(counts.out + counts.in + counts.undirected));
            cell_colors.push_back(c);
            directed.push_back(counts.out > 0 ? 1 : 0);
        }
        EcPog block = (size % 2 == 1) ? circ_psi(size, underlying) : match_psi(size, underlying);
        for (std::size_t k = 0; k < cell_colors.size(); ++k)
            if (directed[k])
                block = orient_color_class(block, static_cast<int>(k));
        int base = offsets[i];
        for (int u = 0; u < size; ++u)
            for (int v = 0; v < size; ++v) {
                if (u == v)
                    continue;
                int c = block.color(u, v);
                matrix[static_cast<std::size_t>(base + u) * n + (base + v)] =
                    c >= 0 ? cell_colors[c] : -1;
            }
    }

    // off-diagonal blocks, one color and direction after the other
    for (int i = 0; i < inv.t; ++i) {
        for (const auto& [j, cell] : inv.rows[i]) {
            if (j <= i)
                continue;
            int m = static_cast<int>(inv.sizes[i]);
            int nn = static_cast<int>(inv.sizes[j]);
            // buckets in ascending (color, role) order; role 0 undirected,
            // 1 forward (P->Q), 2 reverse (Q->P)
            struct Bucket {
                int color;
                int role;
            };
            std::vector<Bucket> buckets;
            std::vector<std::int64_t> degrees;
            for (const auto& [c, counts] : cell) {
                if (counts.undirected > 0) {
                    buckets.push_back({c, 0});
                    degrees.push_back(counts.undirected);
                }
                if (counts.out > 0) {
                    buckets.push_back({c, 1});
                    degrees.push_back(counts.out);
                }
                if (counts.in > 0) {
                    buckets.push_back({c, 2});
                    degrees.push_back(counts.in);
                }
            }
            int pbase = offsets[i], qbase = offsets[j];
            doubly_circulant_passes(m, nn, degrees, [&](int a, int b, int bk) {
                int u = pbase + a, v = qbase + b;
                switch (buckets[bk].role) {
                case 0:
                    matrix[static_cast<std::size_t>(u) * n + v] = buckets[bk].color;
                    matrix[static_cast<std::size_t>(v) * n + u] = buckets[bk].color;
                    break;
                case 1:
                    matrix[static_cast<std::size_t>(u) * n + v] = buckets[bk].color;
                    break;
                default:
                    matrix[static_cast<std::size_t>(v) * n + u] = buckets[bk].color;
                }
            });
        }
    }
    return ecpog_from_matrix(n, std::move(matrix));
}

} // namespace c2kit
