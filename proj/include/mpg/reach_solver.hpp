#pragma once

#include "mpg/game.hpp"
#include "mpg/mdp_eval.hpp"
#include "mpg/region.hpp"

namespace mpg {

struct ReachSolveResult {
    ValueVector values;
    Strategy strategy0;
    Strategy strategy1;        // Player 1's final best response
    int iterations = 0;        // outer improvement rounds
    std::vector<ValueVector> value_history;   // only when requested
};

struct ReachOptions {
    bool record_values = false;
};

// Vertices with game value exactly 0 for reaching `target`: the complement of
// Player 0's positive-probability attractor of the target.
RegionSet zero_value_region(const Game& g, const RegionSet& target);

// Strategy improvement for 2.5-player reachability games. Parity priorities,
// if any, are ignored. Target is made absorbing, the zero region is pinned,
// Player 0 starts from a positive-path-aware strategy and greedily applies all
// profitable switches against exact Player-1 best responses until none exist.
ReachSolveResult reach_solve(const Game& g, const RegionSet& target, const ReachOptions& opts = {});

} // namespace mpg
