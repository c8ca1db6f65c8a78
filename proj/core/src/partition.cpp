#include "c2kit/partition.hpp"

#include <sstream>

namespace c2kit {

bool OrderedPartition::refines(const OrderedPartition& coarser) const {
    if (class_of.size() != coarser.class_of.size())
        return false;
    for (const auto& cls : classes) {
        if (cls.empty())
            continue;
        int target = coarser.class_of[cls[0]];
        for (int v : cls)
            if (coarser.class_of[v] != target)
                return false;
    }
    return true;
}

std::string ClassSignature::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0)
            out << ' ';
        out << tokens[i];
    }
    out << ']';
    return out.str();
}

} // namespace c2kit
