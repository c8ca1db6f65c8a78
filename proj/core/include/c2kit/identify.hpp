#pragma once

#include <string>
#include <utility>
#include <vector>

#include "c2kit/graph.hpp"
#include "c2kit/partition.hpp"

namespace c2kit {

/// Flip of a graph: for every class pair with strictly more edges than
/// non-edges the edges are complemented; the coloring is the canonical
/// class index of the input's coarsest equitable partition.
struct Flip {
    Graph graph;
    std::vector<int> coloring;
    OrderedPartition partition;
    /// Class index pairs (i <= j) whose edge sets were complemented.
    std::vector<std::pair<int, int>> complemented;
};

Flip flip(const ColoredGraph& g);

/// Relation between two distinct classes of a flipped graph, read off the
/// biregular degrees (k from P into Q, l from Q into P):
///   None (no edges), Eq (k = l = 1), Less (k >= 2, l = 1; P is the
///   smaller, fanning side), Greater (mirror image), Other (k, l >= 2).
enum class PairRel { None, Eq, Less, Greater, Other };

const char* pair_rel_name(PairRel r);

PairRel pair_relation(const Flip& f, int class_p, int class_q);

enum class ClassShape { Empty, Matching, FiveCycle, Other };

/// Skeleton of a flipped graph: one vertex per class, edges for Eq/Less
/// pairs, plus the induced-subgraph tag of every class.
struct Skeleton {
    int class_count = 0;
    std::vector<ClassShape> shape;
    /// (p, q, rel) with p < q and rel the relation of (p, q), rel != None.
    std::vector<std::tuple<int, int, PairRel>> edges;
};

Skeleton skeleton(const Flip& f);

/// Decision outcome. condition = 0 when identified; 1..6 names the first
/// violated condition: (1) class shape, (2) pair relation, (3) skeleton
/// cycle, (4) facing fan-out paths, (5) fan-out path into an exception,
/// (6) more than one exception in a component. For structures, condition 7
/// flags a relation of arity >= 3 on a universe of size >= 3.
struct Verdict {
    bool identified = false;
    int condition = 0;
    std::string reason;
};

Verdict identified_c2_graph(const ColoredGraph& g);

/// Structural bouquet-forest test of a flipped colored graph, independent
/// of the condition list: components must be colored trees or bouquets
/// (a 5-cycle of roots carrying five isomorphic colored trees), and
/// bouquets must be pairwise non-isomorphic.
struct BouquetDecomposition {
    bool is_bouquet_forest = false;
    std::string reason; // set when the test fails
    /// Vertex sets of tree components.
    std::vector<std::vector<int>> trees;
    /// For each bouquet: the 5-cycle vertices and the canonical code of the
    /// colored rooted tree repeated around it.
    std::vector<std::pair<std::vector<int>, std::string>> bouquets;
};

BouquetDecomposition bouquet_forest_check(const Graph& g, const std::vector<int>& coloring);
BouquetDecomposition bouquet_forest_check(const Flip& f);

} // namespace c2kit
