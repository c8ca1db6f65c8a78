#include "c2kit/identify_ecpog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "c2kit/refine.hpp"
#include "forest_rules.hpp"

namespace c2kit {

const char* regular_case_name(RegularCase c) {
    switch (c) {
    case RegularCase::MonochromeComplete: return "monochrome-complete";
    case RegularCase::MatchingPlusOne: return "matching-plus-one";
    case RegularCase::Directed3Cycle: return "directed-3-cycle";
    case RegularCase::ThreeMatchingsK4: return "three-matchings-k4";
    case RegularCase::Cycle4PlusMatching: return "4-cycle-plus-matching";
    case RegularCase::RegularTournament5: return "regular-tournament-5";
    case RegularCase::TwoFiveCycles: return "two-5-cycles";
    case RegularCase::FiveMatchingsK6: return "five-matchings-k6";
    case RegularCase::CoC6PlusTwoMatchings: return "co-6-cycle-plus-two-matchings";
    case RegularCase::NotIdentified: return "not-identified";
    }
    return "?";
}

const char* pair_rel_ec_name(PairRelEc r) {
    switch (r) {
    case PairRelEc::None: return "monochromatic";
    case PairRelEc::Eq: return "matched";
    case PairRelEc::Less: return "fan-out";
    case PairRelEc::Greater: return "fan-in";
    case PairRelEc::K33: return "three-matchings";
    case PairRelEc::Other: return "other";
    }
    return "?";
}

RelationalStructure restrict_arity2(const RelationalStructure& s) {
    RelationalStructure out;
    out.n = s.n;
    out.relations = s.relations;
    for (auto& rel : out.relations) {
        std::vector<std::vector<int>> kept;
        for (auto& tup : rel.tuples) {
            std::set<int> distinct(tup.begin(), tup.end());
            if (distinct.size() <= 2)
                kept.push_back(tup);
        }
        rel.tuples = std::move(kept);
    }
    return out;
}

EncodedStructure ecpog_of(const RelationalStructure& s) {
    int n = s.n;
    int nrel = static_cast<int>(s.relations.size());
    for (const auto& rel : s.relations)
        if (rel.arity > 62)
            fail(Errc::TooLarge, "relation arity " + std::to_string(rel.arity) +
                                     " beyond the encodable range");

    // c-value of an ordered pair: per relation, the sorted pattern ids of
    // tuples over the pair; a pattern bit is 1 where the tuple names the
    // second element.
    using CValue = std::vector<std::vector<std::int64_t>>;
    std::vector<CValue> cval(static_cast<std::size_t>(n) * n);
    auto at = [&](int v, int w) -> CValue& { return cval[static_cast<std::size_t>(v) * n + w]; };
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            at(v, w).assign(nrel, {});

    for (int ri = 0; ri < nrel; ++ri) {
        const Relation& rel = s.relations[ri];
        std::int64_t all_ones = 0;                                    // pattern 1...1
        std::int64_t all_twos = (1LL << rel.arity) - 1;               // pattern 2...2
        for (const auto& tup : rel.tuples) {
            std::set<int> distinct(tup.begin(), tup.end());
            if (distinct.size() > 2)
                continue; // invisible to two variables
            if (distinct.size() == 1) {
                int x = tup[0];
                for (int w = 0; w < n; ++w) {
                    if (w == x)
                        continue;
                    at(x, w)[ri].push_back(all_ones);
                    at(w, x)[ri].push_back(all_twos);
                }
            } else {
                auto it = distinct.begin();
                int x = *it++;
                int y = *it;
                std::int64_t pattern_xy = 0;
                for (int k = 0; k < rel.arity; ++k)
                    pattern_xy = pattern_xy * 2 + (tup[k] == y ? 1 : 0);
                at(x, y)[ri].push_back(pattern_xy);
                at(y, x)[ri].push_back(all_twos ^ pattern_xy);
            }
        }
    }
    for (auto& value : cval)
        for (auto& patterns : value)
            std::sort(patterns.begin(), patterns.end());

    // keep the direction with the lexicographically smaller c-value
    std::map<CValue, int> color_of;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
            color_of[std::min(at(v, w), at(w, v))] = 0;
        }
    {
        int next = 0;
        for (auto& [value, id] : color_of)
            id = next++;
    }
    std::vector<std::int32_t> matrix(static_cast<std::size_t>(n) * n, -1);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
            if (v == w)
                continue;
            if (at(v, w) <= at(w, v))
                matrix[static_cast<std::size_t>(v) * n + w] = color_of.at(at(v, w));
        }

    // atomic single-element types
    std::vector<std::vector<char>> unary(n, std::vector<char>(nrel, 0));
    for (int ri = 0; ri < nrel; ++ri)
        for (const auto& tup : s.relations[ri].tuples) {
            std::set<int> distinct(tup.begin(), tup.end());
            if (distinct.size() == 1)
                unary[tup[0]][ri] = 1;
        }
    std::map<std::vector<char>, int> type_of;
    for (int v = 0; v < n; ++v)
        type_of[unary[v]] = 0;
    {
        int next = 0;
        for (auto& [value, id] : type_of)
            id = next++;
    }
    EncodedStructure out;
    out.pog = ecpog_from_matrix(n, std::move(matrix));
    out.coloring.resize(n);
    for (int v = 0; v < n; ++v)
        out.coloring[v] = type_of.at(unary[v]);
    return out;
}

// ---------------------------------------------------------------------------
// Classification of one color-regular class.
// ---------------------------------------------------------------------------

namespace {

struct InducedPog {
    int n = 0;
    std::vector<std::int32_t> matrix; // ordered-pair colors, original ids
    int color(int u, int v) const { return matrix[static_cast<std::size_t>(u) * n + v]; }
};

InducedPog induced(const EcPog& p, const std::vector<int>& clazz) {
    InducedPog out;
    out.n = static_cast<int>(clazz.size());
    out.matrix.assign(static_cast<std::size_t>(out.n) * out.n, -1);
    for (int a = 0; a < out.n; ++a)
        for (int b = 0; b < out.n; ++b)
            if (a != b)
                out.matrix[static_cast<std::size_t>(a) * out.n + b] =
                    p.color(clazz[a], clazz[b]);
    return out;
}

// Canonical form modulo vertex order and color names: minimum over all
// vertex permutations of the pair scan with colors renamed by first use.
std::vector<int> canon_form(const InducedPog& g) {
    int s = g.n;
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    std::vector<int> code;
    std::vector<int> rank_of; // color -> rank along this scan
    do {
        code.clear();
        std::map<int, int> rank;
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b) {
                int u = perm[a], v = perm[b];
                int fwd = g.color(u, v), rev = g.color(v, u);
                int role, c;
                if (fwd >= 0 && rev == fwd) {
                    role = 0;
                    c = fwd;
                } else if (fwd >= 0) {
                    role = 1;
                    c = fwd;
                } else {
                    role = 2;
                    c = rev;
                }
                auto [it, inserted] = rank.try_emplace(c, static_cast<int>(rank.size()));
                code.push_back(role);
                code.push_back(it->second);
            }
        if (best.empty() || code < best)
            best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

InducedPog reference_pog(int n, const std::vector<EcEdge>& entries) {
    EcPog p = validate_ecpog(n, entries);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return induced(p, all);
}

// Literal instances of the special cases, sizes 3..6.
const std::vector<std::pair<RegularCase, std::vector<int>>>& reference_canons(int size) {
    static const std::map<int, std::vector<std::pair<RegularCase, std::vector<int>>>> refs = [] {
        std::map<int, std::vector<std::pair<RegularCase, std::vector<int>>>> m;
        auto add = [&](int n, RegularCase c, const std::vector<EcEdge>& entries) {
            m[n].emplace_back(c, canon_form(reference_pog(n, entries)));
        };
        // directed 3-cycle
        add(3, RegularCase::Directed3Cycle,
            {{0, 1, 0, true}, {1, 2, 0, true}, {2, 0, 0, true}});
        // K4 as three perfect matchings
        add(4, RegularCase::ThreeMatchingsK4,
            {{0, 1, 0, false}, {2, 3, 0, false}, {0, 2, 1, false}, {1, 3, 1, false},
             {0, 3, 2, false}, {1, 2, 2, false}});
        // undirected 4-cycle plus matching, and its directed variant
        add(4, RegularCase::Cycle4PlusMatching,
            {{0, 1, 0, false}, {1, 2, 0, false}, {2, 3, 0, false}, {3, 0, 0, false},
             {0, 2, 1, false}, {1, 3, 1, false}});
        add(4, RegularCase::Cycle4PlusMatching,
            {{0, 1, 0, true}, {1, 2, 0, true}, {2, 3, 0, true}, {3, 0, 0, true},
             {0, 2, 1, false}, {1, 3, 1, false}});
        // the regular tournament on five vertices
        add(5, RegularCase::RegularTournament5,
            {{0, 1, 0, true}, {1, 2, 0, true}, {2, 3, 0, true}, {3, 4, 0, true},
             {4, 0, 0, true}, {0, 2, 0, true}, {1, 3, 0, true}, {2, 4, 0, true},
             {3, 0, 0, true}, {4, 1, 0, true}});
        // two 5-cycles, at most one directed
        add(5, RegularCase::TwoFiveCycles,
            {{0, 1, 0, false}, {1, 2, 0, false}, {2, 3, 0, false}, {3, 4, 0, false},
             {4, 0, 0, false}, {0, 2, 1, false}, {2, 4, 1, false}, {4, 1, 1, false},
             {1, 3, 1, false}, {3, 0, 1, false}});
        add(5, RegularCase::TwoFiveCycles,
            {{0, 1, 0, true}, {1, 2, 0, true}, {2, 3, 0, true}, {3, 4, 0, true},
             {4, 0, 0, true}, {0, 2, 1, false}, {2, 4, 1, false}, {4, 1, 1, false},
             {1, 3, 1, false}, {3, 0, 1, false}});
        // K6 as five perfect matchings (any 1-factorization of K6 matches)
        {
            std::vector<EcEdge> entries;
            // factorization via the polygon construction on 5 ring vertices
            for (int i = 0; i < 5; ++i) {
                entries.push_back({i, 5, i, false});
                for (int j = 0; j < 5; ++j) {
                    int k = ((2 * i - j) % 5 + 5) % 5;
                    if (j < k)
                        entries.push_back({j, k, i, false});
                }
            }
            m[6].emplace_back(RegularCase::FiveMatchingsK6, canon_form(reference_pog(6, entries)));
        }
        // complement of a 6-cycle plus the two matchings splitting the cycle
        add(6, RegularCase::CoC6PlusTwoMatchings,
            {{0, 2, 0, false}, {1, 3, 0, false}, {2, 4, 0, false}, {3, 5, 0, false},
             {4, 0, 0, false}, {5, 1, 0, false}, {0, 3, 0, false}, {1, 4, 0, false},
             {2, 5, 0, false},
             {0, 1, 1, false}, {2, 3, 1, false}, {4, 5, 1, false},
             {1, 2, 2, false}, {3, 4, 2, false}, {5, 0, 2, false}});
        return m;
    }();
    static const std::vector<std::pair<RegularCase, std::vector<int>>> empty;
    auto it = refs.find(size);
    return it == refs.end() ? empty : it->second;
}

} // namespace

RegularCase classify_class(const EcPog& p, const std::vector<int>& clazz) {
    InducedPog g = induced(p, clazz);
    int s = g.n;
    if (s <= 1)
        return RegularCase::MonochromeComplete;

    // color census of the induced block
    std::map<int, std::pair<std::int64_t, bool>> colors; // color -> (pair count, any directed)
    bool any_directed = false;
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b) {
            int fwd = g.color(a, b), rev = g.color(b, a);
            int c = fwd >= 0 ? fwd : rev;
            bool directed = fwd < 0 || rev != fwd;
            auto& entry = colors[c];
            entry.first += 1;
            entry.second = entry.second || directed;
            any_directed = any_directed || directed;
        }

    if (colors.size() == 1 && !any_directed)
        return RegularCase::MonochromeComplete;
    if (colors.size() == 2 && !any_directed) {
        // one of the two colors a perfect matching
        for (const auto& [c, entry] : colors) {
            if (entry.first * 2 != s)
                continue;
            std::vector<int> deg(s, 0);
            for (int a = 0; a < s; ++a)
                for (int b = a + 1; b < s; ++b)
                    if (g.color(a, b) == c && g.color(b, a) == c) {
                        ++deg[a];
                        ++deg[b];
                    }
            if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; }))
                return RegularCase::MatchingPlusOne;
        }
    }
    if (s >= 3 && s <= 6) {
        std::vector<int> canon = canon_form(g);
        for (const auto& [tag, ref] : reference_canons(s))
            if (canon == ref)
                return tag;
    }
    return RegularCase::NotIdentified;
}

// ---------------------------------------------------------------------------
// Pair relations between classes.
// ---------------------------------------------------------------------------

namespace {

PairRelEc classify_ec_degrees(std::int64_t k, std::int64_t l) {
    if (k == 1 && l == 1)
        return PairRelEc::Eq;
    if (k >= 2 && l == 1)
        return PairRelEc::Less;
    if (k == 1 && l >= 2)
        return PairRelEc::Greater;
    return PairRelEc::Other;
}

} // namespace

PairRelEc pair_relation_ec(const EcPog& p, const std::vector<int>& class_p,
                           const std::vector<int>& class_q) {
    // split directed colors by direction: buckets keyed (color, role) with
    // role 0 undirected, 1 P->Q, 2 Q->P
    std::map<std::pair<int, int>, std::int64_t> buckets;
    for (int u : class_p)
        for (int v : class_q) {
            int fwd = p.color(u, v), rev = p.color(v, u);
            if (fwd >= 0 && rev == fwd)
                buckets[{fwd, 0}] += 1;
            else if (fwd >= 0)
                buckets[{fwd, 1}] += 1;
            else
                buckets[{rev, 2}] += 1;
        }
    auto sp = static_cast<std::int64_t>(class_p.size());
    auto sq = static_cast<std::int64_t>(class_q.size());
    if (buckets.size() == 1)
        return PairRelEc::None;
    if (sp == 3 && sq == 3 && buckets.size() == 3) {
        bool all_matchings = true;
        for (const auto& [key, count] : buckets)
            all_matchings = all_matchings && count == 3;
        // three edge sets of three pairs each are perfect matchings exactly
        // when each vertex meets each set once, which equitability grants
        if (all_matchings) {
            bool ok = true;
            for (int u : class_p)
                for (const auto& [key, count] : buckets) {
                    int deg = 0;
                    for (int v : class_q) {
                        int fwd = p.color(u, v), rev = p.color(v, u);
                        int role = fwd >= 0 && rev == fwd ? 0 : (fwd >= 0 ? 1 : 2);
                        int c = fwd >= 0 ? fwd : rev;
                        if (std::pair(c, role) == key)
                            ++deg;
                    }
                    ok = ok && deg == 1;
                }
            if (ok)
                return PairRelEc::K33;
        }
        return PairRelEc::Other;
    }
    if (buckets.size() == 2) {
        auto smaller = buckets.begin();
        auto second = std::next(buckets.begin());
        if (second->second < smaller->second)
            smaller = second;
        std::int64_t edges = smaller->second;
        if (edges % sp != 0 || edges % sq != 0)
            return PairRelEc::Other;
        return classify_ec_degrees(edges / sp, edges / sq);
    }
    return PairRelEc::Other;
}

// ---------------------------------------------------------------------------
// The decision procedure.
// ---------------------------------------------------------------------------

Verdict identified_c2_ecpog(const EcPog& p, const std::optional<std::vector<int>>& coloring) {
    OrderedPartition part = refine_ecpog(p, coloring);
    int t = part.class_count();

    std::vector<RegularCase> cases(t);
    for (int i = 0; i < t; ++i) {
        cases[i] = classify_class(p, part.classes[i]);
        if (cases[i] == RegularCase::NotIdentified)
            return {false, 1,
                    "class P" + std::to_string(i) + " (size " +
                        std::to_string(part.classes[i].size()) +
                        ") induces a color-regular graph outside the identified cases"};
    }

    detail::ForestInput rules;
    rules.t = t;
    rules.class_exception.assign(t, 0);
    for (int i = 0; i < t; ++i)
        rules.class_exception[i] = cases[i] != RegularCase::MonochromeComplete;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            PairRelEc rel = pair_relation_ec(p, part.classes[i], part.classes[j]);
            if (rel == PairRelEc::Other)
                return {false, 2,
                        "classes P" + std::to_string(i) + ", P" + std::to_string(j) +
                            " are joined by an inadmissible pattern"};
            if (rel == PairRelEc::None)
                continue;
            rules.edges.emplace_back(i, j);
            if (rel == PairRelEc::Less)
                rules.arrows.emplace_back(i, j);
            else if (rel == PairRelEc::Greater)
                rules.arrows.emplace_back(j, i);
            else if (rel == PairRelEc::K33)
                rules.edge_exceptions.emplace_back(i, j);
        }
    if (auto failed = detail::check_forest_rules(rules))
        return {false, failed->condition, failed->witness};
    return {true, 0, ""};
}

Verdict identified_c2_structure(const RelationalStructure& s) {
    if (s.n >= 3 && s.max_arity() >= 3)
        return {false, 7,
                "signature holds a relation of arity >= 3 on a universe of size >= 3"};
    EncodedStructure enc = ecpog_of(restrict_arity2(s));
    return identified_c2_ecpog(enc.pog, enc.coloring);
}

} // namespace c2kit
