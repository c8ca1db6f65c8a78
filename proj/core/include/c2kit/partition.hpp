#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace c2kit {

/// Vertex partition with a canonical linear order on its classes.
/// classes[i] is sorted ascending; class_of[v] is the index of v's class.
struct OrderedPartition {
    std::vector<std::vector<int>> classes;
    std::vector<int> class_of;

    int class_count() const { return static_cast<int>(classes.size()); }
    int vertex_count() const { return static_cast<int>(class_of.size()); }

    bool operator==(const OrderedPartition& other) const = default;

    /// True if every class of *this is contained in one class of coarser.
    bool refines(const OrderedPartition& coarser) const;
};

/// Canonical, relabeling-invariant description of one stable class.
/// Tokens accumulate round by round: round 0 contributes
/// (0, initial color, size); round r appends the sorted profile of
/// (previous rank of target class, counts) pairs. Lexicographic order on
/// token sequences defines the canonical class order.
struct ClassSignature {
    std::vector<std::int64_t> tokens;

    auto operator<=>(const ClassSignature&) const = default;

    std::string to_string() const;
};

} // namespace c2kit
