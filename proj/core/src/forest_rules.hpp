#pragma once

// Shared evaluation of the skeleton conditions (3)-(6): forest check,
// no facing fan-out paths, no fan-out path ending in an exception, at most
// one exception per component. Used by both identification modules.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace c2kit::detail {

struct ForestInput {
    int t = 0;
    /// Skeleton edges (a, b), a < b.
    std::vector<std::pair<int, int>> edges;
    /// Fan-out relations as (hub, big): each hub vertex sends >= 2 edges to
    /// the big class, each big vertex exactly one back.
    std::vector<std::pair<int, int>> arrows;
    std::vector<char> class_exception;
    /// Exceptional pairs (both endpoints count as path targets).
    std::vector<std::pair<int, int>> edge_exceptions;
};

struct ForestFailure {
    int condition; // 3..6
    std::string witness;
};

/// Returns the first violated condition in order (3)..(6), or nothing.
std::optional<ForestFailure> check_forest_rules(const ForestInput& in);

} // namespace c2kit::detail
