#include "c2kit/refine.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <numeric>
#include <thread>

namespace c2kit {

namespace {

// Splits [0, n) into two halves on two workers when worthwhile. Callers
// guarantee the halves touch disjoint data, so results stay bit-identical
// to the sequential run.
template <typename Fn>
void split_work(std::size_t n, std::size_t grain, Fn&& fn) {
    if (n < grain || std::thread::hardware_concurrency() < 2) {
        fn(std::size_t{0}, n);
        return;
    }
    std::size_t mid = n / 2;
    std::thread worker([&] { fn(std::size_t{0}, mid); });
    fn(mid, n);
    worker.join();
}

template <typename It>
void small_sort(It first, It last) {
    if (last - first <= 32) {
        for (It i = first + (first == last ? 0 : 1); i < last; ++i) {
            auto v = *i;
            It j = i;
            while (j > first && v < *(j - 1)) {
                *j = *(j - 1);
                --j;
            }
            *j = v;
        }
    } else {
        std::sort(first, last);
    }
}

// Vertices live in one array, contiguous per class; ranges index into it.
struct RawPartition {
    std::vector<int> class_of; // dense ids 0..t-1
    std::vector<int> order;
    std::vector<std::pair<int, int>> range; // per class: [begin, end) in order

    int t() const { return static_cast<int>(range.size()); }
    int size(int c) const { return range[c].second - range[c].first; }
    int rep(int c) const { return order[range[c].first]; }
};

// ---------------------------------------------------------------------------
// Worklist refinement for graphs: split classes by neighbor counts into the
// splitter, keep the largest fragment out of the queue unless the parent was
// queued.
// ---------------------------------------------------------------------------

RawPartition refine_graph_raw(const ColoredGraph& g) {
    int n = g.vertex_count();
    // seed classes with (color, degree): both are constant on every class
    // of the coarsest equitable partition, so this never over-splits
    std::vector<int> class_of(n, 0);
    int nclasses = 0;
    std::vector<int> order(n), pos(n);
    std::vector<int> begin, end;
    {
        int ncolors = g.color_count();
        std::vector<int> color_count(std::max(ncolors, 1), 0);
        for (int v = 0; v < n; ++v)
            ++color_count[g.coloring[v]];
        std::vector<int> color_begin(ncolors + 1, 0);
        for (int c = 0; c < ncolors; ++c)
            color_begin[c + 1] = color_begin[c] + color_count[c];
        std::vector<int> cursor(color_begin.begin(), color_begin.end() - 1);
        std::vector<int> by_color(n);
        for (int v = 0; v < n; ++v)
            by_color[cursor[g.coloring[v]]++] = v;
        std::vector<int> deg_count;
        for (int c = 0; c < ncolors; ++c) {
            int lo = color_begin[c], hi = color_begin[c + 1];
            int maxdeg = 0;
            for (int i = lo; i < hi; ++i)
                maxdeg = std::max(maxdeg, g.graph.degree(by_color[i]));
            deg_count.assign(maxdeg + 2, 0);
            for (int i = lo; i < hi; ++i)
                ++deg_count[g.graph.degree(by_color[i]) + 1];
            for (int d = 0; d <= maxdeg; ++d)
                deg_count[d + 1] += deg_count[d];
            for (int i = lo; i < hi; ++i) {
                int v = by_color[i];
                order[lo + deg_count[g.graph.degree(v)]++] = v;
            }
            for (int i = lo; i < hi;) {
                int j = i;
                while (j < hi && g.graph.degree(order[j]) == g.graph.degree(order[i]))
                    ++j;
                begin.push_back(i);
                end.push_back(j);
                for (int k = i; k < j; ++k) {
                    class_of[order[k]] = nclasses;
                    pos[order[k]] = k;
                }
                ++nclasses;
                i = j;
            }
        }
    }

    std::vector<int> queue;
    std::size_t queue_head = 0;
    std::vector<char> in_queue(nclasses, 1);
    for (int c = 0; c < nclasses; ++c)
        queue.push_back(c);

    std::vector<std::int32_t> cnt(n, 0);
    std::vector<int> touched, affected, marked(nclasses, 0);
    touched.reserve(n);
    std::vector<char> is_affected(nclasses, 0);
    std::vector<int> bucket_scratch, bucket_count;
    // per-vertex flag for members of singleton classes; those never split
    std::vector<std::uint64_t> lone((n + 63) / 64, 0);
    auto set_lone = [&](int v) { lone[v >> 6] |= 1ULL << (v & 63); };
    auto is_lone = [&](int v) { return (lone[v >> 6] >> (v & 63)) & 1; };
    for (int c = 0; c < nclasses; ++c)
        if (end[c] - begin[c] == 1)
            set_lone(order[begin[c]]);

    // sorts order[from, to) by cnt value, counting style when the value
    // range is narrow
    auto sort_marked = [&](int from, int to) {
        if (to - from <= 64) {
            std::sort(order.begin() + from, order.begin() + to,
                      [&](int a, int b) { return cnt[a] < cnt[b]; });
            return;
        }
        std::int32_t lo = cnt[order[from]], hi = lo;
        for (int i = from; i < to; ++i) {
            lo = std::min(lo, cnt[order[i]]);
            hi = std::max(hi, cnt[order[i]]);
        }
        std::int64_t range = static_cast<std::int64_t>(hi) - lo + 1;
        if (range > 4LL * (to - from) + 64) {
            std::sort(order.begin() + from, order.begin() + to,
                      [&](int a, int b) { return cnt[a] < cnt[b]; });
            return;
        }
        bucket_count.assign(static_cast<std::size_t>(range) + 1, 0);
        for (int i = from; i < to; ++i)
            ++bucket_count[cnt[order[i]] - lo + 1];
        for (std::size_t k = 1; k < bucket_count.size(); ++k)
            bucket_count[k] += bucket_count[k - 1];
        bucket_scratch.resize(to - from);
        for (int i = from; i < to; ++i)
            bucket_scratch[bucket_count[cnt[order[i]] - lo]++] = order[i];
        std::copy(bucket_scratch.begin(), bucket_scratch.end(), order.begin() + from);
    };

    while (queue_head < queue.size()) {
        int s = queue[queue_head++];
        in_queue[s] = 0;

        touched.clear();
        for (int i = begin[s]; i < end[s]; ++i) {
            auto nbrs = g.graph.neighbors(order[i]);
            for (std::size_t k = 0; k < nbrs.size(); ++k) {
                if (k + 8 < nbrs.size())
                    __builtin_prefetch(&lone[nbrs[k + 8] >> 6]);
                int w = nbrs[k];
                if (is_lone(w))
                    continue; // singletons can never split
                if (cnt[w] == 0)
                    touched.push_back(w);
                ++cnt[w];
            }
        }
        if (touched.empty())
            continue;

        affected.clear();
        for (int w : touched) {
            int c = class_of[w];
            if (!is_affected[c]) {
                is_affected[c] = 1;
                affected.push_back(c);
            }
        }
        std::sort(affected.begin(), affected.end());

        for (int w : touched) {
            int c = class_of[w];
            int target = begin[c] + marked[c]++;
            int other = order[target];
            std::swap(order[pos[w]], order[target]);
            pos[other] = pos[w];
            pos[w] = target;
        }

        for (int c : affected) {
            is_affected[c] = 0;
            int mk = marked[c];
            marked[c] = 0;
            int untouched = (end[c] - begin[c]) - mk;
            sort_marked(begin[c], begin[c] + mk);
            for (int i = begin[c]; i < begin[c] + mk; ++i)
                pos[order[i]] = i;
            if (untouched == 0 && cnt[order[begin[c]]] == cnt[order[begin[c] + mk - 1]])
                continue; // counts uniform, no split

            // count groups become new classes; the tail keeps id c
            int carve_end = begin[c] + mk;
            if (untouched == 0) {
                int j = carve_end - 1;
                std::int32_t last = cnt[order[j]];
                while (j > begin[c] && cnt[order[j - 1]] == last)
                    --j;
                carve_end = j;
            }
            struct Part {
                int id, size;
            };
            std::vector<Part> parts;
            int i = begin[c];
            while (i < carve_end) {
                int j = i;
                std::int32_t v = cnt[order[i]];
                while (j < carve_end && cnt[order[j]] == v)
                    ++j;
                int id = nclasses++;
                begin.push_back(i);
                end.push_back(j);
                in_queue.push_back(0);
                marked.push_back(0);
                is_affected.push_back(0);
                for (int k = i; k < j; ++k)
                    class_of[order[k]] = id;
                parts.push_back({id, j - i});
                i = j;
            }
            parts.push_back({c, end[c] - carve_end});
            begin[c] = carve_end;

            int largest = 0;
            for (std::size_t k = 1; k < parts.size(); ++k)
                if (parts[k].size > parts[largest].size)
                    largest = static_cast<int>(k);
            for (const auto& part : parts)
                if (part.size == 1)
                    set_lone(order[begin[part.id]]);
            bool parent_queued = in_queue[c] != 0;
            for (std::size_t k = 0; k < parts.size(); ++k) {
                int id = parts[k].id;
                if (in_queue[id])
                    continue;
                if (static_cast<int>(k) == largest && !parent_queued)
                    continue;
                in_queue[id] = 1;
                queue.push_back(id);
            }
        }
        for (int w : touched)
            cnt[w] = 0;
    }

    // renumber class ids densely, ascending by old id
    RawPartition raw;
    raw.order = std::move(order);
    raw.class_of.assign(n, -1);
    raw.range.reserve(nclasses);
    std::vector<int> remap(nclasses, -1);
    for (int c = 0; c < nclasses; ++c) {
        if (begin[c] == end[c])
            continue;
        remap[c] = static_cast<int>(raw.range.size());
        raw.range.emplace_back(begin[c], end[c]);
    }
    for (int v = 0; v < n; ++v)
        raw.class_of[v] = remap[class_of[v]];
    return raw;
}

// ---------------------------------------------------------------------------
// Full-round refinement for complete ecPOGs: every round recolors all
// vertices by (previous color, sorted profile over the other n-1 vertices).
// ---------------------------------------------------------------------------

RawPartition refine_ecpog_raw(const EcPog& p, const std::optional<std::vector<int>>& init) {
    int n = p.vertex_count();
    if (init && static_cast<int>(init->size()) != n)
        fail(Errc::MalformedInput, "initial coloring not total over the vertex set");
    std::vector<int> class_of(n, 0);
    int distinct = n > 0 ? 1 : 0;
    if (init) {
        std::vector<std::pair<int, int>> keyed(n);
        for (int v = 0; v < n; ++v)
            keyed[v] = {(*init)[v], v};
        std::sort(keyed.begin(), keyed.end());
        distinct = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && keyed[i].first != keyed[i - 1].first)
                ++distinct;
            class_of[keyed[i].second] = distinct;
        }
        distinct = n > 0 ? distinct + 1 : 0;
    }

    std::size_t stride = n > 0 ? static_cast<std::size_t>(n - 1) : 0;
    std::vector<std::array<std::int64_t, 3>> entries(static_cast<std::size_t>(n) * stride);
    std::vector<int> idx(n);
    for (int round = 0; round < std::max(n, 1); ++round) {
        for (int u = 0; u < n; ++u) {
            std::size_t k = static_cast<std::size_t>(u) * stride;
            for (int v = 0; v < n; ++v) {
                if (v == u)
                    continue;
                int fwd = p.color(u, v);
                int rev = p.color(v, u);
                std::int64_t color, role;
                if (fwd >= 0 && rev == fwd) {
                    color = fwd;
                    role = 0;
                } else if (fwd >= 0) {
                    color = fwd;
                    role = 1;
                } else {
                    color = rev;
                    role = 2;
                }
                entries[k++] = {static_cast<std::int64_t>(class_of[v]), color, role};
            }
            auto first = entries.begin() + static_cast<std::ptrdiff_t>(u * stride);
            std::sort(first, first + static_cast<std::ptrdiff_t>(stride));
        }
        std::iota(idx.begin(), idx.end(), 0);
        auto slice = [&](int v) {
            return entries.begin() + static_cast<std::ptrdiff_t>(v * stride);
        };
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            if (class_of[a] != class_of[b])
                return class_of[a] < class_of[b];
            return std::lexicographical_compare(slice(a), slice(a) + stride, slice(b),
                                                slice(b) + stride);
        });
        std::vector<int> next(n, 0);
        int next_distinct = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && (class_of[idx[i]] != class_of[idx[i - 1]] ||
                          !std::equal(slice(idx[i]), slice(idx[i]) + stride, slice(idx[i - 1]))))
                ++next_distinct;
            next[idx[i]] = next_distinct;
        }
        next_distinct = n > 0 ? next_distinct + 1 : 0;
        class_of = std::move(next);
        if (next_distinct == distinct)
            break;
        distinct = next_distinct;
    }

    RawPartition raw;
    raw.class_of = std::move(class_of);
    raw.order.resize(n);
    std::vector<int> count(std::max(distinct, 1), 0);
    for (int v = 0; v < n; ++v)
        ++count[raw.class_of[v]];
    raw.range.resize(distinct);
    int acc = 0;
    for (int c = 0; c < distinct; ++c) {
        raw.range[c] = {acc, acc};
        acc += count[c];
    }
    for (int v = 0; v < n; ++v)
        raw.order[raw.range[raw.class_of[v]].second++] = v;
    return raw;
}

// ---------------------------------------------------------------------------
// Canonical class order. Ranks start from (initial color, size) and are
// refined by sorted profiles of (target rank, payload) entries until they
// stop changing; stable classes must end up pairwise separated.
// ---------------------------------------------------------------------------

// Fast path for graphs: payload is a single neighbor count per target class;
// a row entry packs (target, count) into one 64-bit word.
struct FlatQuotient {
    std::vector<std::int32_t> sizes;
    std::vector<int> init_color;
    std::vector<std::size_t> row_begin; // size t+1, offsets into tc
    std::vector<std::uint64_t> tc;      // (target << 32) | count

    int t() const { return static_cast<int>(sizes.size()); }
};

FlatQuotient graph_quotient(const ColoredGraph& g, const RawPartition& raw) {
    int t = raw.t();
    FlatQuotient q;
    q.sizes.resize(t);
    q.init_color.resize(t);
    for (int i = 0; i < t; ++i) {
        q.sizes[i] = raw.size(i);
        q.init_color[i] = g.coloring[raw.rep(i)];
    }
    // gather neighbor classes per class into a scratch row, aggregate runs
    q.row_begin.assign(t + 1, 0);
    q.tc.reserve(static_cast<std::size_t>(g.graph.edge_count()) * 2);
    std::vector<std::int32_t> scratch;
    for (int i = 0; i < t; ++i) {
        scratch.clear();
        for (int k = raw.range[i].first; k < raw.range[i].second; ++k)
            for (int w : g.graph.neighbors(raw.order[k]))
                scratch.push_back(raw.class_of[w]);
        small_sort(scratch.begin(), scratch.end());
        for (auto it = scratch.begin(); it != scratch.end();) {
            auto run = it;
            while (run != scratch.end() && *run == *it)
                ++run;
            auto group = static_cast<std::int64_t>(run - it);
            if (group % q.sizes[i] != 0)
                fail(Errc::MalformedInput, "partition is not equitable");
            q.tc.push_back(
                (static_cast<std::uint64_t>(static_cast<std::uint32_t>(*it)) << 32) |
                static_cast<std::uint32_t>(group / q.sizes[i]));
            ++q.row_begin[i + 1];
            it = run;
        }
    }
    for (int i = 0; i < t; ++i)
        q.row_begin[i + 1] += q.row_begin[i];
    return q;
}

// Position-based ranks: the rank of a class is the start index of its group
// in the sorted class order; only non-singleton groups keep being processed.
std::vector<int> rank_iteration_graph(const FlatQuotient& q) {
    int t = q.t();
    std::vector<int> rank(t, 0);
    if (t == 0)
        return rank;
    std::vector<int> order(t);
    std::iota(order.begin(), order.end(), 0);
    auto init_key = [&](int c) { return std::pair(q.init_color[c], q.sizes[c]); };
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return init_key(a) < init_key(b); });
    std::vector<std::pair<int, int>> active; // [start, end) runs of size >= 2
    for (int i = 0; i < t;) {
        int j = i;
        while (j < t && init_key(order[j]) == init_key(order[i]))
            ++j;
        for (int k = i; k < j; ++k)
            rank[order[k]] = i;
        if (j - i >= 2)
            active.emplace_back(i, j);
        i = j;
    }

    // entry = (target rank << 32) | count, both nonnegative 31-bit values
    std::vector<std::uint64_t> entries(q.tc.size());
    std::vector<char> in_active(t, 0);
    auto row_begin = [&](int c) { return static_cast<std::ptrdiff_t>(q.row_begin[c]); };
    auto row_end = [&](int c) { return static_cast<std::ptrdiff_t>(q.row_begin[c + 1]); };
    bool first_round = true;
    while (!active.empty()) {
        // rebuild rows of active-group members in class id order
        for (const auto& [s, e] : active)
            for (int i = s; i < e; ++i)
                in_active[order[i]] = 1;
        split_work(static_cast<std::size_t>(t), 4096, [&](std::size_t from, std::size_t to) {
            for (std::size_t c = from; c < to; ++c) {
                if (!in_active[c])
                    continue;
                in_active[c] = 0;
                auto re = row_end(static_cast<int>(c));
                for (auto k = row_begin(static_cast<int>(c)); k < re; ++k) {
                    if (k + 8 < re)
                        __builtin_prefetch(&rank[q.tc[k + 8] >> 32]);
                    std::uint64_t packed = q.tc[k];
                    entries[k] = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(
                                      rank[packed >> 32]))
                                  << 32) |
                                 (packed & 0xffffffffULL);
                }
                small_sort(entries.begin() + row_begin(static_cast<int>(c)),
                           entries.begin() + re);
            }
        });
        auto row_eq = [&](int a, int b) {
            return row_end(a) - row_begin(a) == row_end(b) - row_begin(b) &&
                   std::equal(entries.begin() + row_begin(a), entries.begin() + row_end(a),
                              entries.begin() + row_begin(b));
        };
        // lexicographic sort of the rows, one key position at a time over
        // tie runs: length first, then packed entries. Keys are pulled into
        // a dense scratch per run and grouped by three-way quicksort, which
        // stays near-linear on the few distinct values per level.
        std::vector<std::pair<std::uint64_t, int>> keyed;
        std::vector<std::tuple<int, int, int>> work; // (begin, end, key index)
        auto three_way = [&](auto&& self, int a, int b) -> void {
            while (b - a > 24) {
                std::uint64_t pivot = keyed[a + (b - a) / 2].first;
                int lt = a, gt = b, i = a;
                while (i < gt) {
                    if (keyed[i].first < pivot)
                        std::swap(keyed[i++], keyed[lt++]);
                    else if (keyed[i].first > pivot)
                        std::swap(keyed[i], keyed[--gt]);
                    else
                        ++i;
                }
                if (lt - a < b - gt) {
                    self(self, a, lt);
                    a = gt;
                } else {
                    self(self, gt, b);
                    b = lt;
                }
            }
            std::sort(keyed.begin() + a, keyed.begin() + b);
        };
        auto sort_group = [&](int gs, int ge, int start_depth) {
            work.clear();
            work.emplace_back(gs, ge, start_depth);
            while (!work.empty()) {
                auto [a, b, depth] = work.back();
                work.pop_back();
                if (depth >= 0 && depth >= row_end(order[a]) - row_begin(order[a]))
                    continue; // rows exhausted (lengths agree within the run)
                keyed.resize(b - a);
                bool uniform = true;
                for (int i = a; i < b; ++i) {
                    int c = order[i];
                    std::uint64_t key =
                        depth < 0 ? static_cast<std::uint64_t>(row_end(c) - row_begin(c))
                                  : entries[row_begin(c) + depth];
                    keyed[i - a] = {key, c};
                    uniform = uniform && key == keyed[0].first;
                }
                auto common_len =
                    row_end(keyed[0].second) - row_begin(keyed[0].second);
                if (uniform) {
                    if (depth + 1 < common_len)
                        work.emplace_back(a, b, depth + 1);
                    continue;
                }
                three_way(three_way, 0, b - a);
                for (int i = a; i < b; ++i)
                    order[i] = keyed[i - a].second;
                int i = a;
                while (i < b) {
                    int j = i;
                    while (j < b && keyed[j - a].first == keyed[i - a].first)
                        ++j;
                    if (j - i >= 2) {
                        auto run_len =
                            depth < 0
                                ? static_cast<std::ptrdiff_t>(keyed[i - a].first)
                                : common_len;
                        if (depth + 1 < run_len)
                            work.emplace_back(i, j, depth + 1);
                    }
                    i = j;
                }
            }
        };
        std::vector<std::pair<int, int>> next_active;
        bool any_split = false;
        for (const auto& [s, e] : active) {
            // groups born from row splits share their row length already
            sort_group(s, e, first_round ? -1 : 0);
            int i = s;
            while (i < e) {
                int j = i;
                while (j < e && row_eq(order[j], order[i]))
                    ++j;
                for (int k = i; k < j; ++k)
                    rank[order[k]] = i;
                if (i != s || j != e)
                    any_split = true;
                if (j - i >= 2)
                    next_active.emplace_back(i, j);
                i = j;
            }
        }
        first_round = false;
        if (!any_split)
            break;
        active = std::move(next_active);
    }
    if (!active.empty())
        fail(Errc::SignatureCollision, "stable classes not separated");
    // position ranks now form a permutation of 0..t-1
    return rank;
}

// Generic path with variable-width payloads, used for ecPOGs and whenever
// the full token sequences are requested.
struct Quotient {
    std::vector<std::int64_t> sizes;
    std::vector<int> init_color;
    std::vector<std::vector<std::pair<int, std::vector<std::int64_t>>>> rows;

    int t() const { return static_cast<int>(sizes.size()); }
};

struct SignatureOrder {
    std::vector<int> rank;
    std::vector<ClassSignature> signatures;
};

SignatureOrder signature_order(const Quotient& q, bool record_tokens) {
    int t = q.t();
    SignatureOrder out;
    out.rank.assign(t, 0);
    if (record_tokens)
        out.signatures.assign(t, {});
    if (t == 0)
        return out;

    std::vector<int> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return std::pair(q.init_color[a], q.sizes[a]) < std::pair(q.init_color[b], q.sizes[b]);
    });
    int distinct = 0;
    for (int i = 0; i < t; ++i) {
        if (i > 0 && std::pair(q.init_color[idx[i]], q.sizes[idx[i]]) !=
                         std::pair(q.init_color[idx[i - 1]], q.sizes[idx[i - 1]]))
            ++distinct;
        out.rank[idx[i]] = distinct;
    }
    ++distinct;
    if (record_tokens)
        for (int i = 0; i < t; ++i)
            out.signatures[i].tokens = {0, q.init_color[i], q.sizes[i]};

    std::vector<std::vector<std::int64_t>> block(t);
    for (int round = 1; round <= t + 1; ++round) {
        for (int i = 0; i < t; ++i) {
            std::vector<std::vector<std::int64_t>> row_entries;
            row_entries.reserve(q.rows[i].size());
            for (const auto& [j, payload] : q.rows[i]) {
                std::vector<std::int64_t> e;
                e.reserve(payload.size() + 2);
                e.push_back(out.rank[j]);
                e.push_back(static_cast<std::int64_t>(payload.size()));
                e.insert(e.end(), payload.begin(), payload.end());
                row_entries.push_back(std::move(e));
            }
            std::sort(row_entries.begin(), row_entries.end());
            auto& b = block[i];
            b.clear();
            b.push_back(static_cast<std::int64_t>(row_entries.size()));
            for (const auto& e : row_entries)
                b.insert(b.end(), e.begin(), e.end());
        }
        if (record_tokens)
            for (int i = 0; i < t; ++i) {
                out.signatures[i].tokens.push_back(round);
                out.signatures[i].tokens.insert(out.signatures[i].tokens.end(), block[i].begin(),
                                                block[i].end());
            }
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            if (out.rank[a] != out.rank[b])
                return out.rank[a] < out.rank[b];
            return block[a] < block[b];
        });
        std::vector<int> next(t, 0);
        int next_distinct = 0;
        for (int i = 0; i < t; ++i) {
            if (i > 0 &&
                (out.rank[idx[i]] != out.rank[idx[i - 1]] || block[idx[i]] != block[idx[i - 1]]))
                ++next_distinct;
            next[idx[i]] = next_distinct;
        }
        ++next_distinct;
        bool stable = next_distinct == distinct;
        out.rank = std::move(next);
        distinct = next_distinct;
        if (stable || distinct == t)
            break;
    }
    if (distinct != t)
        fail(Errc::SignatureCollision,
             "stable classes not separated (" + std::to_string(distinct) + " of " +
                 std::to_string(t) + " signatures distinct)");
    return out;
}

RawPartition raw_from_partition(const OrderedPartition& p) {
    RawPartition raw;
    raw.class_of = p.class_of;
    raw.order.reserve(p.class_of.size());
    raw.range.reserve(p.classes.size());
    for (const auto& cls : p.classes) {
        int b = static_cast<int>(raw.order.size());
        raw.order.insert(raw.order.end(), cls.begin(), cls.end());
        raw.range.emplace_back(b, static_cast<int>(raw.order.size()));
    }
    return raw;
}

Quotient generic_graph_quotient(const ColoredGraph& g, const RawPartition& raw) {
    FlatQuotient fq = graph_quotient(g, raw);
    Quotient q;
    q.sizes.assign(fq.sizes.begin(), fq.sizes.end());
    q.init_color = fq.init_color;
    q.rows.resize(fq.t());
    for (int i = 0; i < fq.t(); ++i)
        for (std::size_t k = fq.row_begin[i]; k < fq.row_begin[i + 1]; ++k)
            q.rows[i].emplace_back(
                static_cast<int>(fq.tc[k] >> 32),
                std::vector<std::int64_t>{static_cast<std::int64_t>(fq.tc[k] & 0xffffffffULL)});
    return q;
}

Quotient ecpog_quotient(const EcPog& p, const std::optional<std::vector<int>>& init,
                        const RawPartition& raw) {
    int t = raw.t();
    int n = p.vertex_count();
    Quotient q;
    q.sizes.resize(t);
    q.init_color.resize(t);
    for (int i = 0; i < t; ++i) {
        q.sizes[i] = raw.size(i);
        q.init_color[i] = init ? (*init)[raw.rep(i)] : 0;
    }
    std::vector<std::tuple<int, int, int, int>> events; // (ci, cj, color, role)
    events.reserve(static_cast<std::size_t>(n) * std::max(n - 1, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v)
                continue;
            int fwd = p.color(u, v);
            int rev = p.color(v, u);
            if (fwd >= 0 && rev == fwd)
                events.emplace_back(raw.class_of[u], raw.class_of[v], fwd, 2);
            else if (fwd >= 0)
                events.emplace_back(raw.class_of[u], raw.class_of[v], fwd, 0);
            else
                events.emplace_back(raw.class_of[u], raw.class_of[v], rev, 1);
        }
    std::sort(events.begin(), events.end());
    q.rows.resize(t);
    std::size_t i = 0;
    while (i < events.size()) {
        int ci = std::get<0>(events[i]);
        int cj = std::get<1>(events[i]);
        std::vector<std::int64_t> payload;
        std::size_t j = i;
        while (j < events.size() && std::get<0>(events[j]) == ci &&
               std::get<1>(events[j]) == cj) {
            int c = std::get<2>(events[j]);
            std::array<std::int64_t, 3> triple{0, 0, 0};
            while (j < events.size() && std::get<0>(events[j]) == ci &&
                   std::get<1>(events[j]) == cj && std::get<2>(events[j]) == c) {
                triple[std::get<3>(events[j])] += 1;
                ++j;
            }
            payload.push_back(c);
            // order: out, in, undirected (roles 0, 1, 2 as encoded above)
            for (auto v : triple) {
                if (v % q.sizes[ci] != 0)
                    fail(Errc::MalformedInput, "partition is not equitable");
                payload.push_back(v / q.sizes[ci]);
            }
        }
        q.rows[ci].emplace_back(cj, std::move(payload));
        i = j;
    }
    return q;
}

OrderedPartition ordered_from_ranks(const RawPartition& raw, const std::vector<int>& rank) {
    int t = raw.t();
    OrderedPartition p;
    p.classes.resize(t);
    p.class_of.assign(raw.class_of.size(), -1);
    // ranks are distinct values in [0, t): slots follow by inverting their
    // order without a comparison sort
    std::vector<int> seen_at(t, -1);
    for (int c = 0; c < t; ++c)
        seen_at[rank[c]] = c;
    int slot = 0;
    for (int r = 0; r < t; ++r) {
        if (seen_at[r] < 0)
            continue;
        int c = seen_at[r];
        auto [b, e] = raw.range[c];
        p.classes[slot].assign(raw.order.begin() + b, raw.order.begin() + e);
        small_sort(p.classes[slot].begin(), p.classes[slot].end());
        for (int v : p.classes[slot])
            p.class_of[v] = slot;
        ++slot;
    }
    return p;
}

} // namespace

OrderedPartition refine_graph(const ColoredGraph& g) {
    RawPartition raw = refine_graph_raw(g);
    FlatQuotient q = graph_quotient(g, raw);
    std::vector<int> rank = rank_iteration_graph(q);
    return ordered_from_ranks(raw, rank);
}

OrderedPartition refine_ecpog(const EcPog& p, const std::optional<std::vector<int>>& init) {
    RawPartition raw = refine_ecpog_raw(p, init);
    Quotient q = ecpog_quotient(p, init, raw);
    SignatureOrder ord = signature_order(q, false);
    return ordered_from_ranks(raw, ord.rank);
}

std::vector<ClassSignature> class_signatures(const ColoredGraph& g, const OrderedPartition& p) {
    RawPartition raw = raw_from_partition(p);
    Quotient q = generic_graph_quotient(g, raw);
    SignatureOrder ord = signature_order(q, true);
    std::vector<ClassSignature> out(q.t());
    std::vector<int> by_rank(q.t());
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](int a, int b) { return ord.rank[a] < ord.rank[b]; });
    for (int slot = 0; slot < q.t(); ++slot)
        out[slot] = std::move(ord.signatures[by_rank[slot]]);
    return out;
}

std::vector<ClassSignature> class_signatures(const EcPog& p,
                                             const std::optional<std::vector<int>>& init,
                                             const OrderedPartition& partition) {
    RawPartition raw = raw_from_partition(partition);
    Quotient q = ecpog_quotient(p, init, raw);
    SignatureOrder ord = signature_order(q, true);
    std::vector<ClassSignature> out(q.t());
    std::vector<int> by_rank(q.t());
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(),
              [&](int a, int b) { return ord.rank[a] < ord.rank[b]; });
    for (int slot = 0; slot < q.t(); ++slot)
        out[slot] = std::move(ord.signatures[by_rank[slot]]);
    return out;
}

bool is_equitable(const ColoredGraph& g, const OrderedPartition& p) {
    int t = p.class_count();
    for (int i = 0; i < t; ++i) {
        std::vector<std::int64_t> expected;
        for (std::size_t k = 0; k < p.classes[i].size(); ++k) {
            std::vector<std::int64_t> counts(t, 0);
            for (int w : g.graph.neighbors(p.classes[i][k]))
                ++counts[p.class_of[w]];
            if (k == 0)
                expected = counts;
            else if (counts != expected)
                return false;
        }
    }
    return true;
}

bool is_equitable(const EcPog& p, const OrderedPartition& partition) {
    int n = p.vertex_count();
    int t = partition.class_count();
    for (int i = 0; i < t; ++i) {
        std::map<std::tuple<int, int, int>, std::int64_t> expected;
        for (std::size_t k = 0; k < partition.classes[i].size(); ++k) {
            int u = partition.classes[i][k];
            std::map<std::tuple<int, int, int>, std::int64_t> counts;
            for (int v = 0; v < n; ++v) {
                if (v == u)
                    continue;
                int fwd = p.color(u, v);
                int rev = p.color(v, u);
                if (fwd >= 0 && rev == fwd)
                    counts[{partition.class_of[v], fwd, 2}] += 1;
                else if (fwd >= 0)
                    counts[{partition.class_of[v], fwd, 0}] += 1;
                else
                    counts[{partition.class_of[v], rev, 1}] += 1;
            }
            if (k == 0)
                expected = std::move(counts);
            else if (counts != expected)
                return false;
        }
    }
    return true;
}

} // namespace c2kit
