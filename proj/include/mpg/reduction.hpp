#pragma once

#include <unordered_map>

#include "mpg/game.hpp"
#include "mpg/report.hpp"

namespace mpg {

// The reachability game obtained by splicing a primed random copy behind
// every vertex: each original edge (v,w) is rerouted to w', and w' moves on
// to w, or terminates in the won/lost sink with a probability depending on
// delta and the priority of w. Zero-probability edges are never created.
struct GadgetGame {
    Game game;                   // reachability kind, target {won}
    std::vector<int> primed_of;  // original vertex -> its primed copy
    int won = -1;
    int lost = -1;
    Rational delta;
};

GadgetGame build_gadget(const Game& g, const Rational& delta);

// The termination-probability bound (n!^2 * 2^(2n+3) * M^(2n^2))^{-1}, with
// n = |V| and M = max(2, largest numerator or denominator over all edge
// probabilities in lowest terms).
Rational andersson_delta(const Game& g);

// Strips the primed indirection: a gadget strategy choosing w' maps to the
// similar original strategy choosing w.
Strategy lift_strategy(const GadgetGame& gg, const Strategy& f);

struct ReductionOptions {
    int vertex_cap = 12;
    std::optional<Rational> delta;   // override andersson_delta
};

// End-to-end exact oracle: solve the gadget reachability game, lift both
// strategies, evaluate them exactly on the original game, and certify mutual
// optimality by exact best-response checks in both directions. Values are
// always recomputed on the original game, never read off the gadget.
SolveReport oracle_solve_via_reduction(const Game& g, const ReductionOptions& opts = {});

} // namespace mpg
