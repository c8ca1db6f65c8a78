#include "c2kit/invariant.hpp"

#include <algorithm>
#include <sstream>

#include "c2kit/refine.hpp"

namespace c2kit {

std::int64_t C2Invariant::entry(int i, int j) const {
    const auto& row = rows[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    return it != row.end() && it->first == j ? it->second : 0;
}

std::int64_t C2Invariant::vertex_count() const {
    std::int64_t n = 0;
    for (auto s : sizes)
        n += s;
    return n;
}

const std::vector<std::pair<int, EcCounts>>* EcInvariant::cell(int i, int j) const {
    const auto& row = rows[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    return it != row.end() && it->first == j ? &it->second : nullptr;
}

std::int64_t EcInvariant::vertex_count() const {
    std::int64_t n = 0;
    for (auto s : sizes)
        n += s;
    return n;
}

C2Invariant invariant_graph(const ColoredGraph& g, const OrderedPartition& p) {
    int t = p.class_count();
    C2Invariant inv;
    inv.t = t;
    inv.sizes.resize(t);
    for (int i = 0; i < t; ++i)
        inv.sizes[i] = static_cast<std::int64_t>(p.classes[i].size());
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.graph.edges().size() * 2);
    for (const auto& [u, v] : g.graph.edges()) {
        pairs.emplace_back(p.class_of[u], p.class_of[v]);
        pairs.emplace_back(p.class_of[v], p.class_of[u]);
    }
    std::sort(pairs.begin(), pairs.end());
    inv.rows.resize(t);
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j] == pairs[i])
            ++j;
        auto total = static_cast<std::int64_t>(j - i);
        if (total % inv.sizes[pairs[i].first] != 0)
            fail(Errc::MalformedInput, "partition is not equitable");
        inv.rows[pairs[i].first].emplace_back(pairs[i].second, total / inv.sizes[pairs[i].first]);
        i = j;
    }
    return inv;
}

C2Invariant invariant_graph(const ColoredGraph& g) {
    return invariant_graph(g, refine_graph(g));
}

EcInvariant invariant_ecpog(const EcPog& p, const OrderedPartition& partition) {
    int t = partition.class_count();
    int n = p.vertex_count();
    EcInvariant inv;
    inv.t = t;
    inv.sizes.resize(t);
    for (int i = 0; i < t; ++i)
        inv.sizes[i] = static_cast<std::int64_t>(partition.classes[i].size());
    std::vector<std::tuple<int, int, int, int>> events; // (ci, cj, color, role)
    events.reserve(static_cast<std::size_t>(n) * std::max(n - 1, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v)
                continue;
            int fwd = p.color(u, v);
            int rev = p.color(v, u);
            if (fwd >= 0 && rev == fwd)
                events.emplace_back(partition.class_of[u], partition.class_of[v], fwd, 2);
            else if (fwd >= 0)
                events.emplace_back(partition.class_of[u], partition.class_of[v], fwd, 0);
            else
                events.emplace_back(partition.class_of[u], partition.class_of[v], rev, 1);
        }
    std::sort(events.begin(), events.end());
    inv.rows.resize(t);
    std::size_t i = 0;
    while (i < events.size()) {
        int ci = std::get<0>(events[i]);
        int cj = std::get<1>(events[i]);
        std::vector<std::pair<int, EcCounts>> cell;
        while (i < events.size() && std::get<0>(events[i]) == ci && std::get<1>(events[i]) == cj) {
            int c = std::get<2>(events[i]);
            std::int64_t counts[3] = {0, 0, 0};
            while (i < events.size() && std::get<0>(events[i]) == ci &&
                   std::get<1>(events[i]) == cj && std::get<2>(events[i]) == c) {
                counts[std::get<3>(events[i])] += 1;
                ++i;
            }
            EcCounts ec;
            for (int r = 0; r < 3; ++r)
                if (counts[r] % inv.sizes[ci] != 0)
                    fail(Errc::MalformedInput, "partition is not equitable");
            ec.out = counts[0] / inv.sizes[ci];
            ec.in = counts[1] / inv.sizes[ci];
            ec.undirected = counts[2] / inv.sizes[ci];
            cell.emplace_back(c, ec);
        }
        inv.rows[ci].emplace_back(cj, std::move(cell));
    }
    return inv;
}

EcInvariant invariant_ecpog(const EcPog& p) {
    return invariant_ecpog(p, refine_ecpog(p));
}

bool invariants_equal(const C2Invariant& a, const C2Invariant& b) { return a == b; }
bool invariants_equal(const EcInvariant& a, const EcInvariant& b) { return a == b; }

std::string serialize_invariant(const C2Invariant& inv) {
    std::ostringstream out;
    out << "c2inv " << inv.t << '\n' << "s";
    for (auto s : inv.sizes)
        out << ' ' << s;
    out << '\n';
    for (int i = 0; i < inv.t; ++i) {
        out << 'm';
        for (int j = 0; j < inv.t; ++j)
            out << ' ' << inv.entry(i, j);
        out << '\n';
    }
    return out.str();
}

std::string serialize_invariant(const EcInvariant& inv) {
    std::ostringstream out;
    out << "ecinv " << inv.t << '\n' << "s";
    for (auto s : inv.sizes)
        out << ' ' << s;
    out << '\n';
    for (int i = 0; i < inv.t; ++i) {
        out << 'm';
        for (int j = 0; j < inv.t; ++j) {
            const auto* cell = inv.cell(i, j);
            out << ' ';
            if (!cell || cell->empty()) {
                out << '-';
                continue;
            }
            for (const auto& [c, counts] : *cell)
                out << '(' << c << ':' << counts.out << ',' << counts.in << ','
                    << counts.undirected << ')';
        }
        out << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string> header_and_sizes(std::istringstream& in, const char* keyword, int& t,
                                          std::vector<std::int64_t>& sizes) {
    std::string kw;
    in >> kw;
    if (kw != keyword)
        fail(Errc::MalformedInput, std::string("expected '") + keyword + "' header, got '" + kw +
                                       "'");
    if (!(in >> t) || t < 0)
        fail(Errc::MalformedInput, "bad class count");
    std::string s;
    in >> s;
    if (s != "s")
        fail(Errc::MalformedInput, "expected 's' sizes line");
    sizes.resize(t);
    for (int i = 0; i < t; ++i)
        if (!(in >> sizes[i]) || sizes[i] <= 0)
            fail(Errc::MalformedInput, "bad class size");
    return {};
}

} // namespace

C2Invariant parse_c2_invariant(const std::string& text) {
    std::istringstream in(text);
    C2Invariant inv;
    header_and_sizes(in, "c2inv", inv.t, inv.sizes);
    inv.rows.resize(inv.t);
    for (int i = 0; i < inv.t; ++i) {
        std::string m;
        in >> m;
        if (m != "m")
            fail(Errc::MalformedInput, "expected 'm' row " + std::to_string(i));
        for (int j = 0; j < inv.t; ++j) {
            std::int64_t v;
            if (!(in >> v) || v < 0)
                fail(Errc::MalformedInput, "bad matrix entry");
            if (v > 0)
                inv.rows[i].emplace_back(j, v);
        }
    }
    return inv;
}

EcInvariant parse_ec_invariant(const std::string& text) {
    std::istringstream in(text);
    EcInvariant inv;
    header_and_sizes(in, "ecinv", inv.t, inv.sizes);
    inv.rows.resize(inv.t);
    for (int i = 0; i < inv.t; ++i) {
        std::string m;
        in >> m;
        if (m != "m")
            fail(Errc::MalformedInput, "expected 'm' row " + std::to_string(i));
        for (int j = 0; j < inv.t; ++j) {
            std::string cell;
            if (!(in >> cell))
                fail(Errc::MalformedInput, "missing cell");
            if (cell == "-")
                continue;
            std::vector<std::pair<int, EcCounts>> entries;
            std::size_t k = 0;
            while (k < cell.size()) {
                if (cell[k] != '(')
                    fail(Errc::MalformedInput, "bad cell '" + cell + "'");
                auto close = cell.find(')', k);
                if (close == std::string::npos)
                    fail(Errc::MalformedInput, "unterminated cell '" + cell + "'");
                std::string body = cell.substr(k + 1, close - k - 1);
                int color;
                EcCounts counts;
                char colon, c1, c2;
                std::istringstream bs(body);
                if (!(bs >> color >> colon >> counts.out >> c1 >> counts.in >> c2 >>
                      counts.undirected) ||
                    colon != ':' || c1 != ',' || c2 != ',')
                    fail(Errc::MalformedInput, "bad cell entry '(" + body + ")'");
                if (color < 0 || counts.out < 0 || counts.in < 0 || counts.undirected < 0)
                    fail(Errc::MalformedInput, "negative cell entry '(" + body + ")'");
                entries.emplace_back(color, counts);
                k = close + 1;
            }
            if (!std::is_sorted(entries.begin(), entries.end(),
                                [](const auto& a, const auto& b) { return a.first < b.first; }))
                fail(Errc::MalformedInput, "cell colors not ascending");
            inv.rows[i].emplace_back(j, std::move(entries));
        }
    }
    return inv;
}

bool c2_invariant_consistent(const C2Invariant& inv, std::string* why) {
    auto bad = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    if (static_cast<int>(inv.sizes.size()) != inv.t || static_cast<int>(inv.rows.size()) != inv.t)
        return bad("shape mismatch");
    for (auto s : inv.sizes)
        if (s <= 0)
            return bad("class size must be positive");
    for (int i = 0; i < inv.t; ++i)
        for (const auto& [j, v] : inv.rows[i]) {
            if (j < 0 || j >= inv.t)
                return bad("column out of range");
            if (v < 0)
                return bad("negative entry");
            if (i == j) {
                if (v > inv.sizes[i] - 1)
                    return bad("diagonal entry " + std::to_string(v) + " exceeds size-1 in class " +
                               std::to_string(i));
                if (v * inv.sizes[i] % 2 != 0)
                    return bad("odd handshake in class " + std::to_string(i));
            } else {
                if (v > inv.sizes[j])
                    return bad("entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") exceeds target class size");
                if (v * inv.sizes[i] != inv.entry(j, i) * inv.sizes[j])
                    return bad("double counting fails for classes " + std::to_string(i) + "," +
                               std::to_string(j));
            }
        }
    // symmetry of the support: entry(j,i) nonzero wherever entry(i,j) is
    for (int i = 0; i < inv.t; ++i)
        for (const auto& [j, v] : inv.rows[i])
            if (i != j && v > 0 && inv.entry(j, i) == 0)
                return bad("one-sided entry between classes " + std::to_string(i) + "," +
                           std::to_string(j));
    return true;
}

bool ec_invariant_consistent(const EcInvariant& inv, std::string* why) {
    auto bad = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    if (static_cast<int>(inv.sizes.size()) != inv.t || static_cast<int>(inv.rows.size()) != inv.t)
        return bad("shape mismatch");
    for (auto s : inv.sizes)
        if (s <= 0)
            return bad("class size must be positive");
    // per-color orientation must not mix anywhere
    std::map<int, std::pair<bool, bool>> color_kind; // color -> (directed seen, undirected seen)
    for (int i = 0; i < inv.t; ++i) {
        std::vector<char> seen(inv.t, 0);
        for (const auto& [j, cell] : inv.rows[i]) {
            if (j < 0 || j >= inv.t)
                return bad("column out of range");
            seen[j] = 1;
            std::int64_t total = 0;
            int prev_color = -1;
            for (const auto& [c, counts] : cell) {
                if (c <= prev_color)
                    return bad("cell colors not strictly ascending");
                prev_color = c;
                if (counts.out < 0 || counts.in < 0 || counts.undirected < 0)
                    return bad("negative count");
                total += counts.out + counts.in + counts.undirected;
                auto& kind = color_kind[c];
                kind.first = kind.first || counts.out > 0 || counts.in > 0;
                kind.second = kind.second || counts.undirected > 0;
                const auto* back = inv.cell(j, i);
                EcCounts rev;
                if (back) {
                    for (const auto& [c2, counts2] : *back)
                        if (c2 == c)
                            rev = counts2;
                }
                if (counts.out * inv.sizes[i] != rev.in * inv.sizes[j])
                    return bad("out/in transpose fails for color " + std::to_string(c) +
                               " between classes " + std::to_string(i) + "," + std::to_string(j));
                if (counts.in * inv.sizes[i] != rev.out * inv.sizes[j])
                    return bad("in/out transpose fails for color " + std::to_string(c));
                if (counts.undirected * inv.sizes[i] != rev.undirected * inv.sizes[j])
                    return bad("undirected transpose fails for color " + std::to_string(c));
                if (i == j) {
                    if (counts.out != counts.in)
                        return bad("diagonal out != in for color " + std::to_string(c));
                    if (counts.undirected * inv.sizes[i] % 2 != 0)
                        return bad("odd undirected handshake for color " + std::to_string(c));
                }
            }
            std::int64_t expected = inv.sizes[j] - (i == j ? 1 : 0);
            if (total != expected)
                return bad("cell (" + std::to_string(i) + "," + std::to_string(j) + ") sums to " +
                           std::to_string(total) + ", expected " + std::to_string(expected));
        }
        // completeness: every cell with a positive expected total must exist
        for (int j = 0; j < inv.t; ++j) {
            std::int64_t expected = inv.sizes[j] - (i == j ? 1 : 0);
            if (expected > 0 && !seen[j])
                return bad("missing cell (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    for (const auto& [c, kind] : color_kind)
        if (kind.first && kind.second)
            return bad("color " + std::to_string(c) + " both directed and undirected");
    return true;
}

} // namespace c2kit
