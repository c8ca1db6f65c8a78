// c2kit command line: refinement, invariants, identification, inversion and
// the desk-scale oracles behind one entry point. Results go to stdout,
// diagnostics to stderr; exit 0 on success/affirmative verdicts, 1 on
// negative verdicts, 2 on usage or input errors.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "c2kit/identify.hpp"
#include "c2kit/identify_ecpog.hpp"
#include "c2kit/invariant.hpp"
#include "c2kit/invert.hpp"
#include "c2kit/io.hpp"
#include "c2kit/oracle.hpp"
#include "c2kit/refine.hpp"

namespace {

using namespace c2kit;

void print_partition(const OrderedPartition& p) {
    for (const auto& cls : p.classes) {
        for (std::size_t i = 0; i < cls.size(); ++i)
            std::cout << (i ? " " : "") << cls[i];
        std::cout << '\n';
    }
}

int run_refine(const std::string& path) {
    std::string kind = sniff_format(path);
    if (kind == "graph") {
        print_partition(refine_graph(load_graph(path)));
    } else if (kind == "ecpog") {
        ParsedEcPog in = load_ecpog(path);
        print_partition(refine_ecpog(in.pog, in.coloring));
    } else if (kind == "sig") {
        EncodedStructure enc = ecpog_of(restrict_arity2(load_structure(path)));
        print_partition(refine_ecpog(enc.pog, enc.coloring));
    } else {
        fail(Errc::MalformedInput, "unsupported input kind '" + kind + "'");
    }
    return 0;
}

int run_invariant(const std::string& path) {
    std::string kind = sniff_format(path);
    if (kind == "graph") {
        std::cout << serialize_invariant(invariant_graph(load_graph(path)));
    } else if (kind == "ecpog") {
        ParsedEcPog in = load_ecpog(path);
        std::cout << serialize_invariant(invariant_ecpog(in.pog, refine_ecpog(in.pog, in.coloring)));
    } else if (kind == "sig") {
        EncodedStructure enc = ecpog_of(restrict_arity2(load_structure(path)));
        std::cout << serialize_invariant(
            invariant_ecpog(enc.pog, refine_ecpog(enc.pog, enc.coloring)));
    } else {
        fail(Errc::MalformedInput, "unsupported input kind '" + kind + "'");
    }
    return 0;
}

int report_verdict(const Verdict& v) {
    if (v.identified) {
        std::cout << "identified\n";
        return 0;
    }
    static const char* names[] = {"",
                                  "class-shape",
                                  "pair-relation",
                                  "skeleton-cycle",
                                  "facing-fan-outs",
                                  "fan-out-into-exception",
                                  "multiple-exceptions",
                                  "arity"};
    std::cout << "not-identified: " << names[v.condition] << " " << v.reason << '\n';
    return 1;
}

int run_identify(const std::string& path) { return report_verdict(identified_c2_graph(load_graph(path))); }

int run_identify_structure(const std::string& path) {
    return report_verdict(identified_c2_structure(load_structure(path)));
}

int run_identify_ecpog(const std::string& path) {
    ParsedEcPog in = load_ecpog(path);
    return report_verdict(identified_c2_ecpog(in.pog, in.coloring));
}

int run_invert(const std::string& path) {
    std::string kind = sniff_format(path);
    if (kind == "c2inv") {
        C2Invariant inv = parse_c2_invariant(read_file(path));
        MultiCirculant mc = multi_circulant_representative(inv);
        std::cout << serialize_graph(ColoredGraph(mc.graph));
    } else if (kind == "ecinv") {
        EcInvariant inv = parse_ec_invariant(read_file(path));
        std::cout << serialize_ecpog(invert_ec(inv));
    } else {
        fail(Errc::MalformedInput, "expected a c2inv or ecinv file, got '" + kind + "'");
    }
    return 0;
}

int run_canon(const std::string& path) {
    std::cout << serialize_graph(ColoredGraph(canonize_graph(load_graph(path))));
    return 0;
}

ColoredGraph bouquet_graph(int depth, int count) {
    // five path-trees of the given depth hanging from a 5-cycle, repeated
    std::vector<std::pair<int, int>> edges;
    int per_bouquet = 5 * (depth + 1);
    int n = per_bouquet * count;
    for (int b = 0; b < count; ++b) {
        int base = b * per_bouquet;
        for (int i = 0; i < 5; ++i) {
            int root = base + i * (depth + 1);
            int next_root = base + ((i + 1) % 5) * (depth + 1);
            edges.emplace_back(root, next_root);
            for (int d = 0; d < depth; ++d)
                edges.emplace_back(root + d, root + d + 1);
        }
    }
    return ColoredGraph(Graph(n, std::move(edges)));
}

// ---------------------------------------------------------------------------
// Benchmarks: seeded random inputs, wall-clock table, fitted exponent.
// ---------------------------------------------------------------------------

Graph random_graph(int n, std::int64_t m, std::mt19937_64& rng) {
    std::set<std::pair<int, int>> picked;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<std::pair<int, int>> edges;
    while (static_cast<std::int64_t>(edges.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u == v)
            continue;
        auto e = std::minmax(u, v);
        if (picked.insert(e).second)
            edges.push_back(e);
    }
    return Graph(n, std::move(edges));
}

RelationalStructure random_digraph_structure(int n, std::int64_t m, std::mt19937_64& rng) {
    std::set<std::pair<int, int>> picked;
    std::uniform_int_distribution<int> pick(0, n - 1);
    Relation rel;
    rel.name = "E";
    rel.arity = 2;
    while (static_cast<std::int64_t>(rel.tuples.size()) < m) {
        int u = pick(rng), v = pick(rng);
        if (u == v)
            continue;
        if (picked.emplace(u, v).second)
            rel.tuples.push_back({u, v});
    }
    return RelationalStructure::make(n, {rel});
}

double time_once(const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

double time_best(const std::function<void()>& body, int reps) {
    double best = time_once(body);
    for (int r = 1; r < reps; ++r)
        best = std::min(best, time_once(body));
    return best;
}

int run_bench(const std::string& kind, std::vector<std::int64_t> sizes, std::uint64_t seed,
              int density) {
    if (sizes.empty()) {
        if (kind == "identify-structure")
            sizes = {100, 200, 400};
        else
            sizes = {10'000, 100'000, 1'000'000};
    }
    std::cout << "# c2kit bench " << kind << "\n";
    std::cout << "# model: Erdos-Renyi G(n,m) with m = " << density
              << "*n, uniform distinct pairs, mt19937_64 seed " << seed << "\n";
    std::cout << "# n m millis\n";
    std::vector<double> logs_n, logs_t;
    for (std::int64_t n : sizes) {
        std::mt19937_64 rng(seed);
        int reps = n <= 200'000 ? 3 : 1;
        std::int64_t m = density * n;
        double ms = 0;
        if (kind == "refine") {
            ColoredGraph g(random_graph(static_cast<int>(n), m, rng));
            ms = time_best([&] { refine_graph(g); }, reps);
        } else if (kind == "identify") {
            ColoredGraph g(random_graph(static_cast<int>(n), m, rng));
            ms = time_best([&] { identified_c2_graph(g); }, reps);
        } else if (kind == "invert") {
            ColoredGraph g(random_graph(static_cast<int>(n), m, rng));
            C2Invariant inv = invariant_graph(g);
            ms = time_best([&] { multi_circulant_representative(inv); }, reps);
        } else if (kind == "identify-structure") {
            RelationalStructure s =
                random_digraph_structure(static_cast<int>(n), m, rng);
            ms = time_best([&] { identified_c2_structure(s); }, reps);
        } else {
            fail(Errc::MalformedInput, "unknown bench kind '" + kind + "'");
        }
        std::cout << n << ' ' << m << ' ' << ms << '\n';
        logs_n.push_back(std::log(static_cast<double>(n)));
        logs_t.push_back(std::log(std::max(ms, 1e-3)));
    }
    if (sizes.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        auto k = static_cast<double>(sizes.size());
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            sx += logs_n[i];
            sy += logs_t[i];
            sxx += logs_n[i] * logs_n[i];
            sxy += logs_n[i] * logs_t[i];
        }
        double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        std::cout << "# fitted growth exponent: " << slope << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"c2kit: two-variable counting logic toolkit"};
    app.require_subcommand(1);

    std::string path, path2, out_g, out_gp, out_h;
    int gen_n = 0, gen_k = 0, gen_m = 0, gen_l = 0, depth = 1, count = 1, kwl_k = 1;
    std::vector<int> degrees;
    std::vector<std::int64_t> sizes;
    std::uint64_t seed = 1;
    int density = 4;

    auto* refine_cmd = app.add_subcommand("refine", "canonical coarsest equitable partition");
    refine_cmd->add_option("file", path)->required();

    auto* inv_cmd = app.add_subcommand("invariant", "canonical invariant text form");
    inv_cmd->add_option("file", path)->required();

    auto* id_cmd = app.add_subcommand("identify", "decide identification of a graph");
    id_cmd->add_option("file", path)->required();

    auto* ids_cmd = app.add_subcommand("identify-structure", "decide identification of a structure");
    ids_cmd->add_option("file", path)->required();

    auto* ide_cmd = app.add_subcommand("identify-ecpog", "decide identification of an ecPOG");
    ide_cmd->add_option("file", path)->required();

    auto* invert_cmd = app.add_subcommand("invert", "construct an object realizing an invariant");
    invert_cmd->add_option("file", path)->required();

    auto* canon_cmd = app.add_subcommand("canon", "canonical form of a graph");
    canon_cmd->add_option("file", path)->required();

    auto* gen = app.add_subcommand("gen", "generators");
    gen->require_subcommand(1);
    auto* g_circ = gen->add_subcommand("circulant", "k-regular circulant graph");
    g_circ->add_option("n", gen_n)->required();
    g_circ->add_option("k", gen_k)->required();
    auto* g_doubly = gen->add_subcommand("doubly", "doubly-circulant biregular graph");
    g_doubly->add_option("m", gen_m)->required();
    g_doubly->add_option("n", gen_n)->required();
    g_doubly->add_option("k", gen_k)->required();
    g_doubly->add_option("l", gen_l)->required();
    auto* g_walecki = gen->add_subcommand("walecki", "1-factorization of K_n as an ecPOG");
    g_walecki->add_option("n", gen_n)->required();
    auto* g_circpsi = gen->add_subcommand("circpsi", "edge-colored circulant (odd n)");
    g_circpsi->add_option("n", gen_n)->required();
    g_circpsi->add_option("degrees", degrees)->required();
    auto* g_matchpsi = gen->add_subcommand("matchpsi", "matching-construction coloring (even n)");
    g_matchpsi->add_option("n", gen_n)->required();
    g_matchpsi->add_option("degrees", degrees)->required();
    auto* g_cfi = gen->add_subcommand("cfi", "CFI pair over a base graph");
    g_cfi->add_option("base", path)->required();
    g_cfi->add_option("out-g", out_g)->required();
    g_cfi->add_option("out-gprime", out_gp)->required();
    g_cfi->add_option("--union-h", out_h, "also write the subdivided union");
    auto* g_bouquet = gen->add_subcommand("bouquet", "bouquets with path trees");
    g_bouquet->add_option("depth", depth)->required();
    g_bouquet->add_option("count", count);

    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    oracle->require_subcommand(1);
    auto* o_id = oracle->add_subcommand("identify", "exhaustive identification check");
    o_id->add_option("file", path)->required();
    auto* o_iso = oracle->add_subcommand("iso", "isomorphism test");
    o_iso->add_option("file1", path)->required();
    o_iso->add_option("file2", path2)->required();
    auto* o_orbits = oracle->add_subcommand("orbits", "automorphism orbit partition");
    o_orbits->add_option("file", path)->required();
    auto* o_kwl = oracle->add_subcommand("kwl", "k-WL equivalence");
    o_kwl->add_option("k", kwl_k)->required();
    o_kwl->add_option("file1", path)->required();
    o_kwl->add_option("file2", path2)->required();

    auto* bench = app.add_subcommand("bench", "scaling measurements on seeded random inputs");
    std::string bench_kind;
    bench->add_option("kind", bench_kind, "refine|identify|invert|identify-structure")->required();
    bench->add_option("--sizes", sizes, "input sizes");
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--density", density, "edges per vertex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << '\n';
        std::cerr << app.help() << '\n';
        return 2;
    }

    try {
        if (*refine_cmd)
            return run_refine(path);
        if (*inv_cmd)
            return run_invariant(path);
        if (*id_cmd)
            return run_identify(path);
        if (*ids_cmd)
            return run_identify_structure(path);
        if (*ide_cmd)
            return run_identify_ecpog(path);
        if (*invert_cmd)
            return run_invert(path);
        if (*canon_cmd)
            return run_canon(path);
        if (*g_circ) {
            std::cout << serialize_graph(ColoredGraph(circulant(gen_n, gen_k)));
            return 0;
        }
        if (*g_doubly) {
            std::cout << serialize_graph(ColoredGraph(doubly_circulant(gen_m, gen_n, gen_k, gen_l)));
            return 0;
        }
        if (*g_walecki) {
            std::vector<int> ones(std::max(gen_n - 1, 0), 1);
            std::cout << serialize_ecpog(match_psi(gen_n, ones));
            return 0;
        }
        if (*g_circpsi) {
            std::cout << serialize_ecpog(circ_psi(gen_n, degrees));
            return 0;
        }
        if (*g_matchpsi) {
            std::cout << serialize_ecpog(match_psi(gen_n, degrees));
            return 0;
        }
        if (*g_cfi) {
            CfiPair pair = cfi_pair(load_graph(path).graph);
            write_file(out_g, serialize_graph(pair.g));
            write_file(out_gp, serialize_graph(pair.g_twisted));
            if (!out_h.empty()) {
                SubdividedUnion u = union_and_subdivide_h(load_graph(path).graph);
                write_file(out_h, serialize_graph(u.h));
                std::cout << "v_p " << u.v_parallel << "\nv_t " << u.v_twisted << '\n';
            }
            return 0;
        }
        if (*g_bouquet) {
            std::cout << serialize_graph(bouquet_graph(depth, count));
            return 0;
        }
        if (*o_id) {
            bool ok = identified_oracle(load_graph(path));
            std::cout << (ok ? "identified\n" : "not-identified\n");
            return ok ? 0 : 1;
        }
        if (*o_iso) {
            bool ok = are_isomorphic(load_graph(path), load_graph(path2));
            std::cout << (ok ? "isomorphic\n" : "non-isomorphic\n");
            return ok ? 0 : 1;
        }
        if (*o_orbits) {
            print_partition(automorphism_orbits(load_graph(path)));
            return 0;
        }
        if (*o_kwl) {
            bool ok = kwl_equivalent(load_graph(path), load_graph(path2), kwl_k);
            std::cout << (ok ? "equivalent\n" : "distinguished\n");
            return ok ? 0 : 1;
        }
        if (*bench)
            return run_bench(bench_kind, sizes, seed, density);
    } catch (const c2kit::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
