#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mpg/game.hpp"
#include "mpg/rational.hpp"
#include "mpg/region.hpp"

namespace mpg {

// End components / bottom SCCs: disjoint vertex sets, each closed under random
// edges and strongly connected through internal edges.
struct ECDecomposition {
    std::vector<std::vector<int>> components;
};

// A fully resolved chain: one distribution per vertex. Vertices with an empty
// distribution only appear pinned. This is the common evaluation substrate for
// induced MCs and for policy evaluation inside the MDP solvers.
struct Chain {
    std::vector<std::vector<std::pair<int, Rational>>> dist;

    int size() const { return static_cast<int>(dist.size()); }
};

Chain chain_of(const Game& mc);

// Exact expected pinned value reached: pinned vertices are absorbing with the
// given constant, runs that never reach a pinned vertex contribute 0. Values
// are computed per SCC of the transient part in reverse topological order, so
// only genuinely coupled states ever enter a linear solve.
ValueVector chain_values(const Chain& chain, const std::vector<std::optional<Rational>>& pins);

// Bottom strongly connected components of a Markov chain (only Random
// vertices; throws NotAnMC otherwise).
ECDecomposition mc_bsccs(const Game& mc);

// Exact probability of absorption into `target` (made absorbing first).
ValueVector mc_reach_value(const Game& mc, const RegionSet& target);

// Min-parity value of an MC: a BSCC is accepting iff its minimum priority is
// even; the value is the exact absorption probability into accepting BSCCs.
ValueVector mc_parity_value(const Game& mc);

} // namespace mpg
