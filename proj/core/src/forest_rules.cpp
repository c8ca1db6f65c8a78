#include "forest_rules.hpp"

#include <algorithm>
#include <numeric>

namespace c2kit::detail {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[a] = b;
        return true;
    }
};

std::string cls(int i) { return "P" + std::to_string(i); }

} // namespace

std::optional<ForestFailure> check_forest_rules(const ForestInput& in) {
    int t = in.t;

    // (3) skeleton must be a forest
    Dsu dsu(t);
    for (const auto& [a, b] : in.edges)
        if (!dsu.unite(a, b))
            return ForestFailure{3, "skeleton cycle closed by edge " + cls(a) + "-" + cls(b)};

    // Root every tree, record parents and an Euler tour.
    std::vector<std::vector<int>> adj(t);
    for (const auto& [a, b] : in.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> parent(t, -1), root_of(t, -1), tin(t, 0), tout(t, 0), order;
    order.reserve(t);
    int timer = 0;
    for (int r = 0; r < t; ++r) {
        if (root_of[r] != -1)
            continue;
        std::vector<std::pair<int, bool>> stack{{r, false}};
        while (!stack.empty()) {
            auto [v, done] = stack.back();
            stack.pop_back();
            if (done) {
                tout[v] = timer - 1;
                continue;
            }
            root_of[v] = r;
            tin[v] = timer++;
            order.push_back(v);
            stack.emplace_back(v, true);
            for (int w : adj[v])
                if (w != parent[v]) {
                    parent[w] = v;
                    stack.emplace_back(w, false);
                }
        }
    }
    auto in_subtree = [&](int x, int v) { return tin[v] <= tin[x] && tin[x] <= tout[v]; };
    // side of X w.r.t. tree edge {A, X}: subtree(X) when A is X's parent,
    // complement of subtree(A) otherwise
    auto in_side = [&](int x, int a, int far) {
        if (parent[far] == a)
            return in_subtree(x, far);
        return !in_subtree(x, a);
    };

    // Exclusion counts: an arrow (A -> X) rules out every root on X's side.
    std::vector<int> diff(t + 1, 0);
    std::vector<int> whole(t, 0); // per root: count of arrows excluding the whole component
    for (const auto& [a, x] : in.arrows) {
        if (parent[x] == a) {
            diff[tin[x]] += 1;
            diff[tout[x] + 1] -= 1;
        } else {
            whole[root_of[a]] += 1;
            diff[tin[a]] -= 1;
            diff[tout[a] + 1] += 1;
        }
    }
    std::vector<int> excluded(t, 0);
    int acc = 0;
    for (int i = 0; i < t; ++i) {
        acc += diff[i];
        excluded[order[i]] = acc;
    }
    for (int v = 0; v < t; ++v)
        excluded[v] += whole[root_of[v]];

    // (4) some component has no admissible root iff two arrows face each other
    std::vector<int> best(t, -1); // per root: class with minimum exclusion
    for (int v = 0; v < t; ++v) {
        int r = root_of[v];
        if (best[r] == -1 || excluded[v] < excluded[best[r]])
            best[r] = v;
    }
    for (int r = 0; r < t; ++r) {
        if (root_of[r] != r || best[r] == -1 || excluded[best[r]] == 0)
            continue;
        // locate a facing pair for the witness
        for (const auto& [a1, x1] : in.arrows) {
            if (root_of[a1] != r)
                continue;
            for (const auto& [a2, x2] : in.arrows) {
                if (root_of[a2] != r || (a1 == a2 && x1 == x2))
                    continue;
                if (in_side(a2, a1, x1) && in_side(a1, a2, x2))
                    return ForestFailure{4, "facing fan-outs " + cls(a1) + "<<" + cls(x1) +
                                                " and " + cls(a2) + "<<" + cls(x2)};
            }
        }
        return ForestFailure{4, "no admissible root in component of " + cls(best[r])};
    }

    // (5) every exception must be reachable by no fan-out path
    auto exception_blocked = [&](int v) -> std::optional<ForestFailure> {
        if (excluded[v] == 0)
            return std::nullopt;
        for (const auto& [a, x] : in.arrows)
            if (root_of[a] == root_of[v] && in_side(v, a, x) && !(a == v))
                return ForestFailure{5, "fan-out " + cls(a) + "<<" + cls(x) +
                                            " starts a path ending in exception " + cls(v)};
        return ForestFailure{5, "fan-out path ends in exception " + cls(v)};
    };
    for (int v = 0; v < t; ++v)
        if (in.class_exception[v])
            if (auto fail = exception_blocked(v))
                return fail;
    for (const auto& [a, b] : in.edge_exceptions) {
        if (auto fail = exception_blocked(a))
            return fail;
        if (auto fail = exception_blocked(b))
            return fail;
    }

    // (6) at most one exception per component
    std::vector<std::vector<std::string>> names(t);
    for (int v = 0; v < t; ++v)
        if (in.class_exception[v])
            names[root_of[v]].push_back(cls(v));
    for (const auto& [a, b] : in.edge_exceptions)
        names[root_of[a]].push_back(cls(a) + "~" + cls(b));
    for (int r = 0; r < t; ++r)
        if (names[r].size() > 1)
            return ForestFailure{6, "component with exceptions " + names[r][0] + " and " +
                                        names[r][1]};

    return std::nullopt;
}

} // namespace c2kit::detail
