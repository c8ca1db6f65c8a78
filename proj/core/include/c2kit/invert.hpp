#pragma once

#include <utility>
#include <vector>

#include "c2kit/ecpog.hpp"
#include "c2kit/graph.hpp"
#include "c2kit/invariant.hpp"

namespace c2kit {

/// Distance set defining a circulant graph on n vertices: edges join
/// vertices at circular index distance d for each d in distances.
struct DistanceSet {
    int n = 0;
    std::vector<int> distances; // ascending, subset of {1..n/2}

    int degree() const;
    Graph build() const;
};

/// Smallest-distances-first set realizing a k-regular circulant on n
/// vertices: {1..k/2} for even k, {1..(k-1)/2} + {n/2} for odd k.
DistanceSet circulant_distance_set(int n, int k);

/// k-regular circulant graph on n vertices; contains distance 1 whenever
/// k >= 2, hence connected. Errors: DegreeTooLarge (k >= n or k < 0),
/// ParityInfeasible (k*n odd).
Graph circulant(int n, int k);

/// (k,l)-biregular graph on parts of sizes m and n (vertices 0..m-1 and
/// m..m+n-1) for which rotating both parts by +1 simultaneously is an
/// automorphism. Errors: DegreeTooLarge, CountMismatch (k*m != l*n).
Graph doubly_circulant(int m, int n, int k, int l);

struct MultiCirculant {
    Graph graph;
    /// Witness automorphism with exactly one cycle per class, in canonical
    /// class order; witness[v] is the image of v.
    std::vector<int> witness;
    /// Vertex ranges of the classes: class i occupies [offsets[i], offsets[i+1]).
    std::vector<int> offsets;
};

/// Graph realizing the given invariant, multi-circulant with respect to its
/// classes: circulant blocks on the diagonal, doubly-circulant connections
/// between class pairs in ascending order. Errors: InfeasibleInvariant.
MultiCirculant multi_circulant_representative(const C2Invariant& inv);

/// Canonical form: multi_circulant_representative(invariant_graph(g)).
/// Two graphs get byte-identical serializations iff their invariants agree.
Graph canonize_graph(const ColoredGraph& g);

/// Walecki 1-factorization of K_n (n even): n-1 perfect matchings, any two
/// of which form a Hamiltonian cycle. Vertices 0..n-2 on a regular
/// (n-1)-gon, vertex n-1 in the center; matching i is the spoke {i, n-1}
/// plus all chords {j, k} with j + k = 2i (mod n-1).
struct Factorization {
    int n = 0;
    std::vector<std::vector<std::pair<int, int>>> matchings;
};

/// Errors: OddOrder (n odd or n < 2).
Factorization walecki(int n);

/// Complete edge-colored circulant on odd n: distances 1..(n-1)/2 ascending
/// get color 0 for the first d0/2 of them, color 1 for the next d1/2, ...
/// Errors: OddColorDegree, DegreeSumMismatch (sum != n-1).
EcPog circ_psi(int n, const std::vector<int>& degrees);

/// Complete edge-colored K_n on even n: Walecki matchings 0..n-2 in order,
/// the first d0 colored 0, the next d1 colored 1, ...
/// Errors: OddOrder, DegreeSumMismatch.
EcPog match_psi(int n, const std::vector<int>& degrees);

/// Directs one undirected color class along Euler circuits (components
/// traversed from their smallest vertex, neighbors ascending), leaving all
/// other colors untouched. In-degree equals out-degree everywhere.
/// Errors: OddDegreeInColor.
EcPog orient_color_class(const EcPog& p, int color);

/// ecPOG realizing the given invariant: diagonal blocks via circ_psi or
/// match_psi plus orient_color_class, off-diagonal blocks via the colored
/// doubly-circulant, one color and direction after the other.
/// Errors: InfeasibleInvariant.
EcPog invert_ec(const EcInvariant& inv);

} // namespace c2kit
