#pragma once

#include <optional>

#include "mpg/game.hpp"
#include "mpg/mc_eval.hpp"
#include "mpg/region.hpp"

namespace mpg {

enum class OptMode { Maximize, Minimize };

struct MdpSolution {
    ValueVector values;
    Strategy strategy;          // total over the controller's vertices
    int policy_iterations = 0;
};

// The single controlled player of g, if any (MCs have none). Throws
// TwoControlledPlayers when both players own vertices.
std::optional<Player> mdp_controller(const Game& g);

// Maximal end components: vertex sets closed under random edges in which
// every vertex keeps an internal move, strongly connected internally.
// Degenerates to BSCCs on Markov chains. At most one controlled player.
ECDecomposition mec_decomposition(const Game& g);

// Target vertices re-owned to Random with a probability-1 self-loop.
Game make_target_absorbing(const Game& g, const RegionSet& target);

// All vertices lying in some end component whose minimum priority has the
// requested parity. Computed per priority c on the random-closed part of
// {pri >= c}, so sub-ECs of differently-coloured MECs are found too.
struct ParityEcs {
    RegionSet states;
    std::vector<std::vector<int>> components;   // may overlap across priorities
    std::vector<int> component_priority;
};
ParityEcs parity_ec_states(const Game& g, bool even_min);

// Optimal reachability values and a memoryless optimal policy, exact.
// Qualitative preprocessing pins the value-0 and value-1 regions; exact
// policy iteration with greedy switching runs on the rest, each policy
// evaluated by a linear solve over rationals.
MdpSolution mdp_reach(const Game& g, const RegionSet& target, OptMode mode);

Game shift_priorities(const Game& g, int delta);

// Optimal min-parity values of a 1.5-player game. Maximize reduces to
// reachability of the even-minimum end components; minimize shifts every
// priority by one, maximizes the complemented condition and returns the
// complement values together with the adversary's optimal strategy.
MdpSolution mdp_parity_value(const Game& g, OptMode mode);

} // namespace mpg
