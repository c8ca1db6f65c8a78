#pragma once

#include <optional>
#include <vector>

#include "c2kit/ecpog.hpp"
#include "c2kit/graph.hpp"
#include "c2kit/partition.hpp"

namespace c2kit {

/// Coarsest equitable partition refining the vertex coloring, classes in
/// canonical order. Worklist refinement over smaller halves, O((m+n) log n).
OrderedPartition refine_graph(const ColoredGraph& g);

/// Coarsest equitable partition of a complete ecPOG (per color and
/// direction), optionally refining an initial vertex coloring. Full-round
/// recoloring over all n^2 ordered pairs, O(n^2 log n) per round.
OrderedPartition refine_ecpog(const EcPog& p,
                              const std::optional<std::vector<int>>& init = std::nullopt);

/// Canonical signatures of the stable classes, in partition order.
/// Signatures are pairwise distinct and invariant under vertex relabeling;
/// a duplicate at the fixed point raises SignatureCollision (internal bug).
std::vector<ClassSignature> class_signatures(const ColoredGraph& g,
                                             const OrderedPartition& p);
std::vector<ClassSignature> class_signatures(const EcPog& p,
                                             const std::optional<std::vector<int>>& init,
                                             const OrderedPartition& partition);

/// True if the partition is equitable for g (checked directly, all vertices).
bool is_equitable(const ColoredGraph& g, const OrderedPartition& p);
bool is_equitable(const EcPog& p, const OrderedPartition& partition);

} // namespace c2kit
