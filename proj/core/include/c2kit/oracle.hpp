#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "c2kit/ecpog.hpp"
#include "c2kit/graph.hpp"
#include "c2kit/partition.hpp"

namespace c2kit {

// Independent ground truth at desk scale: exhaustive enumeration,
// backtracking isomorphism and orbit search, generic k-WL, CFI pairs.

/// All 2^(n choose 2) labeled graphs on n vertices in mask order; pair
/// (u, v), u < v, is bit u*n+v... fixed lexicographic bit layout.
/// Errors: TooLarge (n > 7).
void enumerate_graphs(int n, const std::function<void(const Graph&)>& yield);

std::vector<std::pair<int, int>> all_pairs(int n);
Graph graph_from_mask(int n, std::uint64_t mask);

/// Color-preserving isomorphism test by individualization and refinement.
/// Exact for any size it accepts; TooLarge beyond n = 64. (The documented
/// envelope is n <= 10 for arbitrary graphs; larger colored instances such
/// as CFI pairs are within reach because colors bound the search.)
bool are_isomorphic(const ColoredGraph& g, const ColoredGraph& h);

/// Orbit partition of the automorphism group, classes in canonical order
/// of the underlying refinement, vertices ascending. Uses exhaustive
/// permutation sweep for n <= 7 and complete backtracking search above.
OrderedPartition automorphism_orbits(const ColoredGraph& g);

/// Same for ecPOGs (color- and direction-preserving automorphisms),
/// permutation sweep only. Errors: TooLarge (n > 8).
OrderedPartition ecpog_orbits(const EcPog& p,
                              const std::optional<std::vector<int>>& coloring = std::nullopt);
bool ecpog_isomorphic(const EcPog& p, const EcPog& q);

/// C^2-equivalence of colored graphs: color refinement of the disjoint
/// union with shared color ids, equal per-class counts on both sides.
bool c2_equivalent(const ColoredGraph& g, const ColoredGraph& h);

/// Stable k-dimensional WL tuple colorings have equal histograms; k is the
/// WL dimension, so this decides C^(k+1)-equivalence. k in {1,2,3}; guards
/// n <= 40 for k = 2 and n <= 20 for k = 3.
bool kwl_equivalent(const ColoredGraph& g, const ColoredGraph& h, int k);

/// True iff no non-isomorphic graph on the same vertices has an equal
/// invariant (equal colored refinement data when g is colored). Exhaustive
/// for n <= 6; n = 7 enumerates with degree-sequence pruning.
bool identified_oracle(const ColoredGraph& g);

/// The two CFI-style graphs over a base graph: one gadget per base vertex
/// (2^(d-1) middle vertices joined to even subsets of d outer pairs),
/// connections parallel everywhere in g, with the first base edge twisted
/// in g_twisted. Gadgets carry pairwise distinct vertex colors.
struct CfiPair {
    ColoredGraph g;
    ColoredGraph g_twisted;
    int a = 0, b = 0, a_prime = 0, b_prime = 0;
    std::vector<std::pair<int, int>> base_edges;
    int twisted_edge_index = 0;
};

/// Errors: DisconnectedBase, DegreeTooSmall (min degree < 2).
CfiPair cfi_pair(const Graph& base);

/// CFI graph over base with an arbitrary set of twisted base edges; its
/// isomorphism type depends only on the parity of that set.
ColoredGraph cfi_variant(const Graph& base, const std::vector<int>& twisted_edges);

struct SubdividedUnion {
    ColoredGraph h;
    int v_parallel = 0;
    int v_twisted = 0;
};

/// Union of the CFI pair with the four designated edges subdivided and the
/// parallel/twisted midpoints joined to fresh vertices v_parallel and
/// v_twisted: they share a refinement class but lie in different orbits.
SubdividedUnion union_and_subdivide_h(const Graph& base);

} // namespace c2kit
