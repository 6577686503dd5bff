#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace mpg {

// Vertex subsets (winning regions, attractors, targets) are bitsets over the
// dense vertex ids of one game.
using RegionSet = boost::dynamic_bitset<>;

// Edge subsets use the game's flat edge indexing (Game::edge_index).
using EdgeSet = boost::dynamic_bitset<>;

inline RegionSet region_of(std::size_t n, std::initializer_list<int> ids) {
    RegionSet r(n);
    for (int v : ids) r.set(static_cast<std::size_t>(v));
    return r;
}

inline RegionSet region_of(std::size_t n, const std::vector<int>& ids) {
    RegionSet r(n);
    for (int v : ids) r.set(static_cast<std::size_t>(v));
    return r;
}

inline std::vector<int> region_ids(const RegionSet& r) {
    std::vector<int> out;
    for (auto v = r.find_first(); v != RegionSet::npos; v = r.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

inline std::string region_str(const RegionSet& r) {
    std::string out = "{";
    bool first = true;
    for (auto v = r.find_first(); v != RegionSet::npos; v = r.find_next(v)) {
        if (!first) out += ", ";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

} // namespace mpg
