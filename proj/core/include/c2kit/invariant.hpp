#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "c2kit/ecpog.hpp"
#include "c2kit/graph.hpp"
#include "c2kit/partition.hpp"

namespace c2kit {

/// Complete C^2 invariant of a graph: canonically ordered class sizes plus
/// the inter-class degree matrix. Rows are stored sparsely as sorted
/// (column, count) pairs; absent entries are zero.
struct C2Invariant {
    int t = 0;
    std::vector<std::int64_t> sizes;
    std::vector<std::vector<std::pair<int, std::int64_t>>> rows;

    std::int64_t entry(int i, int j) const;
    std::int64_t vertex_count() const;

    bool operator==(const C2Invariant& other) const = default;
};

/// Per-color degree counts from one class into another.
struct EcCounts {
    std::int64_t out = 0;
    std::int64_t in = 0;
    std::int64_t undirected = 0;

    bool operator==(const EcCounts&) const = default;
};

/// The graph invariant with the matrix entry replaced by per-color
/// (out, in, undirected) count triples.
struct EcInvariant {
    int t = 0;
    std::vector<std::int64_t> sizes;
    /// rows[i] = sorted (column, cell) pairs; a cell maps colors ascending
    /// to their count triples. Empty cells are omitted.
    std::vector<std::vector<std::pair<int, std::vector<std::pair<int, EcCounts>>>>> rows;

    const std::vector<std::pair<int, EcCounts>>* cell(int i, int j) const;
    std::int64_t vertex_count() const;

    bool operator==(const EcInvariant& other) const = default;
};

C2Invariant invariant_graph(const ColoredGraph& g);
C2Invariant invariant_graph(const ColoredGraph& g, const OrderedPartition& p);

EcInvariant invariant_ecpog(const EcPog& p);
EcInvariant invariant_ecpog(const EcPog& p, const OrderedPartition& partition);

/// Structural equality: same t, sizes and entries. Class order is canonical,
/// so no reordering is ever attempted.
bool invariants_equal(const C2Invariant& a, const C2Invariant& b);
bool invariants_equal(const EcInvariant& a, const EcInvariant& b);

// Canonical text forms.
//   c2inv <t>  /  s <sizes...>  /  m <row>... (dense rows)
//   ecinv <t>  /  s <sizes...>  /  m <cell>... with cell "(c:o,i,u)..." or "-"
std::string serialize_invariant(const C2Invariant& inv);
std::string serialize_invariant(const EcInvariant& inv);
C2Invariant parse_c2_invariant(const std::string& text);
EcInvariant parse_ec_invariant(const std::string& text);

/// Arithmetic consistency required of any realizable graph invariant:
/// symmetry |Pi|*Mij = |Pj|*Mji, Mii*|Pi| even, Mij <= |Pj|, Mii <= |Pi|-1,
/// non-negative sizes. Returns an explanation for the first violation.
bool c2_invariant_consistent(const C2Invariant& inv, std::string* why = nullptr);

/// Same role for ecPOG invariants: per-color transpose identities, full
/// cells (sum of counts = |Pj| - [i==j]), even handshakes on the diagonal,
/// no color both directed and undirected.
bool ec_invariant_consistent(const EcInvariant& inv, std::string* why = nullptr);

} // namespace c2kit
