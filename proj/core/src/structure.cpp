#include "c2kit/structure.hpp"

#include <algorithm>

namespace c2kit {

RelationalStructure RelationalStructure::make(int n, std::vector<Relation> relations) {
    if (n < 0)
        fail(Errc::MalformedInput, "negative universe size");
    for (auto& rel : relations) {
        if (rel.arity <= 0)
            fail(Errc::MalformedInput, "relation " + rel.name + " has arity " +
                                           std::to_string(rel.arity));
        for (const auto& tup : rel.tuples) {
            if (static_cast<int>(tup.size()) != rel.arity)
                fail(Errc::ArityMismatch, "tuple of length " + std::to_string(tup.size()) +
                                              " in relation " + rel.name + "/" +
                                              std::to_string(rel.arity));
            for (int x : tup)
                if (x < 0 || x >= n)
                    fail(Errc::IndexOutOfRange,
                         "element " + std::to_string(x) + " in relation " + rel.name);
        }
        std::sort(rel.tuples.begin(), rel.tuples.end());
        rel.tuples.erase(std::unique(rel.tuples.begin(), rel.tuples.end()), rel.tuples.end());
    }
    RelationalStructure s;
    s.n = n;
    s.relations = std::move(relations);
    return s;
}

int RelationalStructure::max_arity() const {
    int m = 0;
    for (const auto& rel : relations)
        m = std::max(m, rel.arity);
    return m;
}

} // namespace c2kit
