#include "mpg/reach_solver.hpp"

#include "mpg/graph.hpp"

namespace mpg {

RegionSet zero_value_region(const Game& g, const RegionSet& target) {
    if (target.size() != static_cast<std::size_t>(g.num_vertices()))
        throw DimensionMismatchError("zero_value_region: target has wrong dimension");
    return ~positive_attractor(g, Player::P0, target);
}

namespace {

int smallest_successor_outside(const Game& g, int v, const RegionSet& avoid) {
    int best = -1;
    for (int u : g.successors(v)) {
        if (avoid.test(static_cast<std::size_t>(u))) continue;
        if (best < 0 || u < best) best = u;
    }
    return best;
}

int smallest_successor(const Game& g, int v) {
    int best = -1;
    for (int u : g.successors(v))
        if (best < 0 || u < best) best = u;
    return best;
}

} // namespace

ReachSolveResult reach_solve(const Game& g, const RegionSet& target, const ReachOptions& opts) {
    validate_game(g);
    if (target.size() != static_cast<std::size_t>(g.num_vertices()))
        throw DimensionMismatchError("reach_solve: target has wrong dimension");
    const std::size_t n = static_cast<std::size_t>(g.num_vertices());

    const Game abs = make_target_absorbing(g, target);
    const RegionSet zero = zero_value_region(abs, target);

    // Initial strategy: inside the zero region any successor works (they all
    // stay inside); elsewhere pick the smallest successor that still has a
    // positive-probability route to the target.
    Strategy f0(Player::P0, n);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.owner(v) != Owner::P0) continue;
        if (zero.test(static_cast<std::size_t>(v)) || target.test(static_cast<std::size_t>(v)))
            f0.at(v) = smallest_successor(g, v);
        else
            f0.at(v) = smallest_successor_outside(abs, v, zero);
    }

    ReachSolveResult res;
    for (;;) {
        ++res.iterations;
        MdpSolution response = mdp_reach(induced_mdp(abs, f0), target, OptMode::Minimize);
        if (opts.record_values) res.value_history.push_back(response.values);

        bool switched = false;
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (abs.owner(v) != Owner::P0) continue;   // target vertices are re-owned in abs
            int best = f0[v];
            Rational best_val = response.values[static_cast<std::size_t>(best)];
            for (int u : abs.successors(v)) {
                const int c = cmp(response.values[static_cast<std::size_t>(u)], best_val);
                if (c > 0 || (c == 0 && u < best)) {
                    best = u;
                    best_val = response.values[static_cast<std::size_t>(u)];
                }
            }
            if (best != f0[v] && best_val > response.values[static_cast<std::size_t>(v)]) {
                f0.at(v) = best;
                switched = true;
            }
        }
        if (!switched) {
            res.values = std::move(response.values);
            res.strategy1 = std::move(response.strategy);
            res.strategy1.player = Player::P1;
            break;
        }
    }
    // Player-1 vertices inside the target were re-owned in the absorbing view;
    // complete the best response over the original game.
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.owner(v) == Owner::P1 && res.strategy1[v] < 0)
            res.strategy1.at(v) = smallest_successor(g, v);
    res.strategy0 = std::move(f0);
    return res;
}

} // namespace mpg
