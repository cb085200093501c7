#pragma once

#include <string>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat::testing {

inline std::vector<std::string> names(const ResiduatedLattice& l, const std::vector<int>& xs) {
    std::vector<std::string> out;
    for (int x : xs) out.push_back(l.name_of(x));
    return out;
}

inline std::vector<int> indices(const ResiduatedLattice& l,
                                const std::vector<std::string>& xs) {
    std::vector<int> out;
    for (const auto& x : xs) out.push_back(l.index_of(x));
    return out;
}

} // namespace reslat::testing
