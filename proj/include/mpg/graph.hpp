#pragma once

#include <vector>

#include "mpg/game.hpp"
#include "mpg/region.hpp"

namespace mpg {

// Strongly connected components of a successor graph restricted to `alive`,
// iterative Tarjan. Component ids are assigned in reverse topological order:
// an edge u -> v between different components satisfies comp[u] > comp[v].
struct SccResult {
    std::vector<int> comp;                 // -1 for vertices outside `alive`
    int count = 0;
    std::vector<std::vector<int>> members; // per component, ascending ids
};

SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj, const RegionSet& alive);
SccResult strongly_connected_components(const Game& g, const RegionSet& alive);

std::vector<std::vector<int>> adjacency_of(const Game& g);

// Predecessor lists of the successor graph.
std::vector<std::vector<int>> predecessor_lists(const Game& g);

// Vertices with a path (of any ownership) to `target` within `alive`.
RegionSet can_reach(const Game& g, const RegionSet& target, const RegionSet& alive);

// Positive-probability attractor of `target` for `player` within `alive`:
// least fixpoint adding v when v is the player's and some successor is inside,
// v is the opponent's and all (alive) successors are inside, or v is random
// and some successor is inside. Opponent successors that leave `alive` block
// the all-quantifier. `choice`, when given, receives a successor for each
// attracted vertex of the player (and for random vertices, untouched) that
// decreases the attractor rank; it is sized to the game and filled with -1
// elsewhere only for newly attracted player vertices.
RegionSet positive_attractor(const Game& g, Player player, const RegionSet& target,
                             const RegionSet& alive, std::vector<int>* choice = nullptr);

// Convenience overload over the full vertex set.
RegionSet positive_attractor(const Game& g, Player player, const RegionSet& target);

struct AlmostSureReach {
    RegionSet region;
    std::vector<int> choice;   // witness successor for `player` vertices in region \ target
};

// Almost-sure reachability for `player` against the other player within the
// universe `alive`: the largest S with (a) the opponent and random vertices of
// S keep all successors in S, the player's keep one, and (b) the positive
// attractor of target inside S covers S. Escaping `alive` counts as losing.
// Works unchanged when the opponent has no vertices (MDPs) or none are
// controlled (MCs). Target vertices are included regardless of their edges.
AlmostSureReach almost_sure_reach(const Game& g, Player player, const RegionSet& target,
                                  const RegionSet& alive);

} // namespace mpg
