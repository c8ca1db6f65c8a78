#pragma once

#include <optional>
#include <string>
#include <vector>

#include "c2kit/ecpog.hpp"
#include "c2kit/identify.hpp"
#include "c2kit/partition.hpp"
#include "c2kit/structure.hpp"

namespace c2kit {

/// The color-regular single-class cases that can appear in an identified
/// ecPOG, in classification order; everything else is NotIdentified.
enum class RegularCase {
    MonochromeComplete,
    MatchingPlusOne,
    Directed3Cycle,
    ThreeMatchingsK4,
    Cycle4PlusMatching,
    RegularTournament5,
    TwoFiveCycles,
    FiveMatchingsK6,
    CoC6PlusTwoMatchings,
    NotIdentified,
};

const char* regular_case_name(RegularCase c);

/// Relation between two distinct classes of an ecPOG. Directed colors
/// between the classes are first split by direction into separate edge
/// sets; None means a single such set covers all pairs. K33 is the
/// three-matching pattern between classes of size 3.
enum class PairRelEc { None, Eq, Less, Greater, K33, Other };

const char* pair_rel_ec_name(PairRelEc r);

/// Drops every tuple whose entry set has more than two distinct elements.
RelationalStructure restrict_arity2(const RelationalStructure& s);

struct EncodedStructure {
    EcPog pog;
    std::vector<int> coloring; // atomic single-element types, dense ids
};

/// Arity-2 encoding: each ordered pair's color encodes the satisfied
/// relation patterns over the pair, stored in the direction with the
/// lexicographically smaller value (equal values give an undirected edge).
/// Color ids are assigned by sorted order of the distinct values. Expects
/// an arity-2-restricted input.
EncodedStructure ecpog_of(const RelationalStructure& s);

/// Classifies the sub-ecPOG induced by one class of a stable partition.
RegularCase classify_class(const EcPog& p, const std::vector<int>& clazz);

PairRelEc pair_relation_ec(const EcPog& p, const std::vector<int>& class_p,
                           const std::vector<int>& class_q);

Verdict identified_c2_ecpog(const EcPog& p,
                            const std::optional<std::vector<int>>& coloring = std::nullopt);

/// Not identified outright when the universe has >= 3 elements and the
/// signature contains a relation of arity >= 3 (two variables cannot pin
/// such relations down); otherwise decides via the ecPOG encoding.
Verdict identified_c2_structure(const RelationalStructure& s);

} // namespace c2kit
