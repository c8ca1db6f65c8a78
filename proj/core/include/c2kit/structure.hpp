#pragma once

#include <string>
#include <vector>

#include "c2kit/error.hpp"

namespace c2kit {

struct Relation {
    std::string name;
    int arity = 0;
    /// Sorted, duplicate-free tuple set; each tuple has length == arity.
    std::vector<std::vector<int>> tuples;

    bool operator==(const Relation& other) const = default;
};

/// Finite relational structure: universe {0..n-1} plus named relations.
/// Absent tuples are false (closed world).
struct RelationalStructure {
    int n = 0;
    std::vector<Relation> relations;

    /// Validates arities and index ranges, sorts and dedupes tuples.
    static RelationalStructure make(int n, std::vector<Relation> relations);

    int max_arity() const;

    bool operator==(const RelationalStructure& other) const = default;
};

} // namespace c2kit
