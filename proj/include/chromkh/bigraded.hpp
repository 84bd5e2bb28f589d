#pragma once

#include <map>
#include <string>
#include <utility>

#include "chromkh/linalg.hpp"

namespace chromkh {

// (i, j) -> group. Trivial groups are not stored.
using Bidegree = std::pair<int, int>;
using BigradedGroups = std::map<Bidegree, AbelianGroup>;

inline AbelianGroup group_at(const BigradedGroups& h, int i, int j) {
    auto it = h.find({i, j});
    return it == h.end() ? AbelianGroup() : it->second;
}

inline void set_group(BigradedGroups& h, int i, int j, AbelianGroup g) {
    if (g.is_trivial())
        h.erase({i, j});
    else
        h[{i, j}] = std::move(g);
}

// Bigraded ranks over F_p, (i, j) -> dimension. Zeros are not stored.
using BigradedRanks = std::map<Bidegree, std::size_t>;

}  // namespace chromkh
