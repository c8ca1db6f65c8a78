#include <doctest.h>

#include "c2kit/invariant.hpp"
#include "c2kit/invert.hpp"
#include "c2kit/io.hpp"
#include "c2kit/oracle.hpp"
#include "c2kit/refine.hpp"
#include "helpers.hpp"

using namespace c2kit;
using namespace testutil;

namespace {

Errc code_of(const std::function<void()>& body) {
    try {
        body();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::MalformedInput;
}

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
    for (const auto& [u, v] : g.edges())
        if (!g.has_edge(perm[u], perm[v]))
            return false;
    return true;
}

} // namespace

TEST_CASE("circulant distance sets") {
    CHECK(circulant_distance_set(12, 7).distances == std::vector<int>{1, 2, 3, 6});
    CHECK(circulant_distance_set(9, 4).distances == std::vector<int>{1, 2});
    CHECK(circulant_distance_set(8, 1).distances == std::vector<int>{4});
    for (int n = 2; n <= 12; ++n)
        for (int k = 0; k < n; ++k) {
            if (k * n % 2 != 0)
                continue;
            DistanceSet s = circulant_distance_set(n, k);
            CHECK(s.degree() == k);
        }
}

TEST_CASE("circulant graphs") {
    Graph c6 = circulant(6, 2);
    CHECK(c6 == cycle(6).graph);

    Graph g = circulant(12, 7);
    for (int v = 0; v < 12; ++v)
        CHECK(g.degree(v) == 7);
    std::vector<int> rot(12);
    for (int v = 0; v < 12; ++v)
        rot[v] = (v + 1) % 12;
    CHECK(is_automorphism(g, rot));

    CHECK(code_of([] { circulant(5, 3); }) == Errc::ParityInfeasible);
    CHECK(code_of([] { circulant(4, 4); }) == Errc::DegreeTooLarge);

    // k >= 2 with distance 1 present means connected
    OrderedPartition orbit_check = refine_graph(ColoredGraph(circulant(9, 4)));
    CHECK(orbit_check.class_count() == 1);
}

TEST_CASE("doubly-circulant graphs") {
    Graph m = doubly_circulant(4, 4, 1, 1);
    CHECK(m.edges() == std::vector<std::pair<int, int>>{{0, 4}, {1, 5}, {2, 6}, {3, 7}});

    Graph b = doubly_circulant(4, 2, 1, 2);
    for (int v = 0; v < 4; ++v)
        CHECK(b.degree(v) == 1);
    for (int v = 4; v < 6; ++v)
        CHECK(b.degree(v) == 2);
    // rotating both parts by one is an automorphism
    std::vector<int> rot{1, 2, 3, 0, 5, 4};
    CHECK(is_automorphism(b, rot));

    CHECK(code_of([] { doubly_circulant(3, 2, 1, 1); }) == Errc::CountMismatch);
    CHECK(code_of([] { doubly_circulant(2, 2, 3, 3); }) == Errc::DegreeTooLarge);

    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        int m_sz = 1 + static_cast<int>(rng() % 6);
        int n_sz = 1 + static_cast<int>(rng() % 6);
        int lcm = std::lcm(m_sz, n_sz);
        int max_k = n_sz * m_sz / lcm;
        int k = static_cast<int>(lcm / m_sz * (1 + rng() % std::max(max_k / (lcm / m_sz), 1)));
        if (k > n_sz)
            continue;
        int l = k * m_sz / n_sz;
        Graph d = doubly_circulant(m_sz, n_sz, k, l);
        for (int v = 0; v < m_sz; ++v)
            CHECK(d.degree(v) == k);
        for (int v = m_sz; v < m_sz + n_sz; ++v)
            CHECK(d.degree(v) == l);
        std::vector<int> perm(m_sz + n_sz);
        for (int v = 0; v < m_sz; ++v)
            perm[v] = (v + 1) % m_sz;
        for (int v = 0; v < n_sz; ++v)
            perm[m_sz + v] = m_sz + (v + 1) % n_sz;
        CHECK(is_automorphism(d, perm));
    }
}

TEST_CASE("multi-circulant representatives") {
    C2Invariant two_reg;
    two_reg.t = 1;
    two_reg.sizes = {6};
    two_reg.rows = {{{0, 2}}};
    MultiCirculant mc = multi_circulant_representative(two_reg);
    CHECK(mc.graph == cycle(6).graph);
    CHECK(is_automorphism(mc.graph, mc.witness));

    C2Invariant star_inv = invariant_graph(star(4));
    MultiCirculant ms = multi_circulant_representative(star_inv);
    CHECK(are_isomorphic(ColoredGraph(ms.graph), star(4)));
    CHECK(is_automorphism(ms.graph, ms.witness));

    C2Invariant bad;
    bad.t = 1;
    bad.sizes = {5};
    bad.rows = {{{0, 3}}};
    CHECK(code_of([&] { multi_circulant_representative(bad); }) == Errc::InfeasibleInvariant);
}

TEST_CASE("witness automorphism has one cycle per class") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 25; ++rep) {
        ColoredGraph g = random_colored_graph(6, 0.5, rng);
        C2Invariant inv = invariant_graph(g);
        MultiCirculant mc = multi_circulant_representative(inv);
        CHECK(is_automorphism(mc.graph, mc.witness));
        // cycles of the witness = the classes, in order
        std::vector<char> seen(mc.graph.vertex_count(), 0);
        std::vector<std::vector<int>> cycles;
        for (int v = 0; v < mc.graph.vertex_count(); ++v) {
            if (seen[v])
                continue;
            std::vector<int> cyc;
            int w = v;
            while (!seen[w]) {
                seen[w] = 1;
                cyc.push_back(w);
                w = mc.witness[w];
            }
            std::sort(cyc.begin(), cyc.end());
            cycles.push_back(std::move(cyc));
        }
        OrderedPartition built = refine_graph(ColoredGraph(mc.graph));
        auto classes = built.classes;
        std::sort(classes.begin(), classes.end());
        std::sort(cycles.begin(), cycles.end());
        CHECK(classes == cycles);
        CHECK(invariants_equal(invariant_graph(ColoredGraph(mc.graph)), inv));
    }
}

TEST_CASE("canonization") {
    Graph canon_c6 = canonize_graph(cycle(6));
    Graph canon_tt = canonize_graph(two_triangles());
    CHECK(serialize_graph(ColoredGraph(canon_c6)) == serialize_graph(ColoredGraph(canon_tt)));

    CHECK(are_isomorphic(ColoredGraph(canonize_graph(cycle(5))), cycle(5)));

    // relabeling invariance, all 6! labelings
    std::mt19937_64 rng(13);
    ColoredGraph g = random_colored_graph(6, 0.5, rng);
    std::string base = serialize_graph(ColoredGraph(canonize_graph(g)));
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    do {
        CHECK(serialize_graph(ColoredGraph(canonize_graph(g.relabeled(perm)))) == base);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // idempotence up to isomorphism
    for (int rep = 0; rep < 10; ++rep) {
        ColoredGraph h = random_colored_graph(6, 0.4, rng);
        Graph once = canonize_graph(h);
        Graph twice = canonize_graph(ColoredGraph(once));
        CHECK(are_isomorphic(ColoredGraph(once), ColoredGraph(twice)));
    }
}

namespace {

bool matchings_form_hamiltonian_cycle(int n, const std::vector<std::pair<int, int>>& m1,
                                      const std::vector<std::pair<int, int>>& m2) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : m1) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (const auto& [a, b] : m2) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    int prev = -1, cur = 0, steps = 0;
    do {
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++steps;
    } while (cur != 0 && steps <= n + 1);
    return cur == 0 && steps == n;
}

void check_factorization(const Factorization& f) {
    int n = f.n;
    REQUIRE(static_cast<int>(f.matchings.size()) == n - 1);
    std::vector<char> covered(static_cast<std::size_t>(n) * n, 0);
    for (const auto& m : f.matchings) {
        REQUIRE(static_cast<int>(m.size()) == n / 2);
        std::vector<char> hit(n, 0);
        for (const auto& [a, b] : m) {
            CHECK(!hit[a]);
            CHECK(!hit[b]);
            hit[a] = hit[b] = 1;
            auto key = static_cast<std::size_t>(std::min(a, b)) * n + std::max(a, b);
            CHECK(!covered[key]);
            covered[key] = 1;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            CHECK(covered[static_cast<std::size_t>(a) * n + b]);

    // Two matchings close into one Hamiltonian cycle exactly when their
    // index distance is coprime to n-1 (always true for consecutive ones);
    // for composite n-1 distant pairs split into shorter cycles.
    for (std::size_t i = 0; i < f.matchings.size(); ++i)
        for (std::size_t j = i + 1; j < f.matchings.size(); ++j) {
            bool ham = matchings_form_hamiltonian_cycle(n, f.matchings[i], f.matchings[j]);
            CHECK(ham == (std::gcd(static_cast<int>(j - i), n - 1) == 1));
        }
}

} // namespace

TEST_CASE("walecki factorization") {
    Factorization f4 = walecki(4);
    CHECK(f4.matchings ==
          std::vector<std::vector<std::pair<int, int>>>{
              {{0, 3}, {1, 2}}, {{0, 2}, {1, 3}}, {{0, 1}, {2, 3}}});

    check_factorization(walecki(6));
    // every pair of K6 matchings closes a Hamiltonian cycle (5 is prime)
    Factorization f6 = walecki(6);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            CHECK(matchings_form_hamiltonian_cycle(6, f6.matchings[i], f6.matchings[j]));

    CHECK(code_of([] { walecki(5); }) == Errc::OddOrder);

    for (int n = 2; n <= 40; n += 2)
        check_factorization(walecki(n));
}

TEST_CASE("colored circulant construction") {
    EcPog p = circ_psi(5, {2, 2});
    // color 0 joins distance-1 pairs, color 1 the complement
    for (int v = 0; v < 5; ++v) {
        CHECK(p.color(v, (v + 1) % 5) == 0);
        CHECK(p.color(v, (v + 2) % 5) == 1);
    }

    EcPog q = circ_psi(7, {2, 4});
    for (int v = 0; v < 7; ++v) {
        int d0 = 0, d1 = 0;
        for (int w = 0; w < 7; ++w) {
            if (w == v)
                continue;
            if (q.color(v, w) == 0)
                ++d0;
            if (q.color(v, w) == 1)
                ++d1;
        }
        CHECK(d0 == 2);
        CHECK(d1 == 4);
    }

    CHECK(code_of([] { circ_psi(7, {3, 3}); }) == Errc::OddColorDegree);
    CHECK(code_of([] { circ_psi(7, {2, 2}); }) == Errc::DegreeSumMismatch);
}

TEST_CASE("matching construction") {
    std::vector<int> ones(5, 1);
    EcPog w = match_psi(6, ones);
    // five colors, each a perfect matching
    CHECK(w.colors_used() == std::vector<int>{0, 1, 2, 3, 4});
    for (int c = 0; c < 5; ++c) {
        for (int v = 0; v < 6; ++v) {
            int deg = 0;
            for (int u = 0; u < 6; ++u)
                if (u != v && w.color(v, u) == c)
                    ++deg;
            CHECK(deg == 1);
        }
    }

    EcPog m = match_psi(4, {1, 2});
    for (int v = 0; v < 4; ++v) {
        int d0 = 0, d1 = 0;
        for (int u = 0; u < 4; ++u) {
            if (u == v)
                continue;
            if (m.color(v, u) == 0)
                ++d0;
            if (m.color(v, u) == 1)
                ++d1;
        }
        CHECK(d0 == 1);
        CHECK(d1 == 2);
    }

    CHECK(code_of([] { match_psi(6, {1, 2}); }) == Errc::DegreeSumMismatch);
    CHECK(code_of([] { match_psi(5, {1, 1, 1, 1}); }) == Errc::OddOrder);
}

TEST_CASE("euler orientation of a color class") {
    // 4-cycle color on four vertices plus a matching color
    EcPog m = match_psi(4, {1, 2});
    EcPog oriented = orient_color_class(m, 1);
    for (int v = 0; v < 4; ++v) {
        int out = 0, in = 0;
        for (int u = 0; u < 4; ++u) {
            if (u == v)
                continue;
            if (oriented.color(v, u) == 1 && oriented.color(u, v) != 1)
                ++out;
            if (oriented.color(u, v) == 1 && oriented.color(v, u) != 1)
                ++in;
        }
        CHECK(out == 1);
        CHECK(in == 1);
    }
    // the matching color is untouched
    for (int v = 0; v < 4; ++v)
        for (int u = 0; u < 4; ++u)
            if (u != v && m.color(v, u) == 0)
                CHECK(oriented.is_undirected(v, u));

    // triangle color class inside K3
    EcPog tri = circ_psi(3, {2});
    EcPog dtri = orient_color_class(tri, 0);
    for (int v = 0; v < 3; ++v) {
        int out = 0;
        for (int u = 0; u < 3; ++u)
            if (u != v && dtri.color(v, u) == 0 && dtri.color(u, v) != 0)
                ++out;
        CHECK(out == 1);
    }

    CHECK(code_of([&] { orient_color_class(m, 0); }) == Errc::OddDegreeInColor);
}

TEST_CASE("ecpog inversion") {
    EcPog tri = validate_ecpog(3, {{0, 1, 0, true}, {1, 2, 0, true}, {2, 0, 0, true}});
    EcInvariant it = invariant_ecpog(tri);
    EcPog back = invert_ec(it);
    CHECK(invariants_equal(invariant_ecpog(back), it));
    CHECK(ecpog_isomorphic(back, tri));

    std::vector<int> ones(5, 1);
    EcPog w = match_psi(6, ones);
    EcInvariant iw = invariant_ecpog(w);
    EcPog wback = invert_ec(iw);
    CHECK(invariants_equal(invariant_ecpog(wback), iw));
    CHECK(ecpog_isomorphic(wback, w)); // the 1-factorization of K6 is unique

    // directed 4-cycle color plus undirected matching color
    EcPog m = orient_color_class(match_psi(4, {1, 2}), 1);
    EcInvariant im = invariant_ecpog(m);
    EcPog mback = invert_ec(im);
    CHECK(invariants_equal(invariant_ecpog(mback), im));

    // a single color may not mix directed and undirected counts
    EcInvariant bad;
    bad.t = 1;
    bad.sizes = {4};
    bad.rows = {{{0, {{0, EcCounts{1, 1, 1}}}}}};
    CHECK(code_of([&] { invert_ec(bad); }) == Errc::InfeasibleInvariant);
}

TEST_CASE("multi-class ecpog inversion round trip") {
    // star-like two-class structures and random colorings at desk scale
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        int n = 4 + static_cast<int>(rng() % 3);
        ColoredGraph g = random_colored_graph(n, 0.5, rng);
        // encode the graph as a two-edge-color complete ecPOG
        std::vector<std::int32_t> matrix(static_cast<std::size_t>(n) * n, -1);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v)
                    matrix[static_cast<std::size_t>(u) * n + v] =
                        g.graph.has_edge(u, v) ? 1 : 0;
        EcPog p = ecpog_from_matrix(n, std::move(matrix));
        EcInvariant inv = invariant_ecpog(p);
        EcPog back = invert_ec(inv);
        CHECK(invariants_equal(invariant_ecpog(back), inv));
    }
}
