#include "mpg/mdp_eval.hpp"

#include <algorithm>

#include "mpg/graph.hpp"

namespace mpg {

std::optional<Player> mdp_controller(const Game& g) {
    const bool has0 = g.count_owned(Owner::P0) > 0;
    const bool has1 = g.count_owned(Owner::P1) > 0;
    if (has0 && has1)
        throw TwoControlledPlayersError("TwoControlledPlayers: both players own vertices");
    if (has0) return Player::P0;
    if (has1) return Player::P1;
    return std::nullopt;
}

ECDecomposition mec_decomposition(const Game& g) {
    (void)mdp_controller(g);   // at most one controlled player

    const std::size_t n = static_cast<std::size_t>(g.num_vertices());
    RegionSet alive(n);
    alive.set();

    // Prune vertices that cannot belong to an end component of the current
    // SCC structure, until stable.
    for (;;) {
        SccResult scc = strongly_connected_components(g, alive);
        bool removed = false;
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (!alive.test(static_cast<std::size_t>(v))) continue;
            const int cv = scc.comp[static_cast<std::size_t>(v)];
            bool bad;
            if (g.owner(v) == Owner::Random) {
                bad = false;
                for (int u : g.successors(v)) {
                    if (!alive.test(static_cast<std::size_t>(u)) || scc.comp[static_cast<std::size_t>(u)] != cv) {
                        bad = true;
                        break;
                    }
                }
            } else {
                bad = true;
                for (int u : g.successors(v)) {
                    if (u != v && alive.test(static_cast<std::size_t>(u)) && scc.comp[static_cast<std::size_t>(u)] == cv) {
                        bad = false;
                        break;
                    }
                    if (u == v) { bad = false; break; }
                }
            }
            // Trivial SCC without a self-loop is not an end component.
            if (!bad && scc.members[static_cast<std::size_t>(cv)].size() == 1 && !g.has_edge(v, v))
                bad = true;
            if (bad) {
                alive.reset(static_cast<std::size_t>(v));
                removed = true;
            }
        }
        if (!removed) {
            ECDecomposition out;
            for (const auto& members : scc.members)
                out.components.push_back(members);
            std::sort(out.components.begin(), out.components.end(),
                      [](const auto& a, const auto& b) { return a.front() < b.front(); });
            return out;
        }
    }
}

Game make_target_absorbing(const Game& g, const RegionSet& target) {
    std::vector<VertexRecord> verts;
    std::vector<std::vector<int>> succ;
    std::vector<std::vector<Rational>> w;
    verts.reserve(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        VertexRecord rec = g.vertex(v);
        if (target.test(static_cast<std::size_t>(v))) {
            rec.owner = Owner::Random;
            succ.push_back({v});
            w.push_back({Rational(1)});
        } else {
            succ.push_back(g.successors(v));
            w.push_back(g.weights(v));
        }
        verts.push_back(std::move(rec));
    }
    return Game(g.kind(), std::move(verts), std::move(succ), std::move(w), g.target());
}

ParityEcs parity_ec_states(const Game& g, bool even_min) {
    const std::size_t n = static_cast<std::size_t>(g.num_vertices());
    ParityEcs out;
    out.states.resize(n);

    for (int c : g.priorities()) {
        if ((c % 2 == 0) != even_min) continue;

        RegionSet mask(n);
        for (int v = 0; v < g.num_vertices(); ++v)
            if (g.priority(v) >= c) mask.set(static_cast<std::size_t>(v));

        // End components must be closed under the original random edges, so
        // shed random vertices whose distribution leaves the mask.
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g.num_vertices(); ++v) {
                if (!mask.test(static_cast<std::size_t>(v)) || g.owner(v) != Owner::Random) continue;
                for (int u : g.successors(v)) {
                    if (!mask.test(static_cast<std::size_t>(u))) {
                        mask.reset(static_cast<std::size_t>(v));
                        changed = true;
                        break;
                    }
                }
            }
        }
        if (!mask.any()) continue;

        SubGame sub = restrict_vertices_mapped(g, mask);
        ECDecomposition mecs = mec_decomposition(sub.game);
        for (const auto& comp : mecs.components) {
            bool has_c = false;
            for (int v : comp)
                if (sub.game.priority(v) == c) { has_c = true; break; }
            if (!has_c) continue;
            std::vector<int> mapped;
            mapped.reserve(comp.size());
            for (int v : comp) {
                const int pv = sub.to_parent[static_cast<std::size_t>(v)];
                mapped.push_back(pv);
                out.states.set(static_cast<std::size_t>(pv));
            }
            out.components.push_back(std::move(mapped));
            out.component_priority.push_back(c);
        }
    }
    return out;
}

namespace {

int smallest_successor(const Game& g, int v) {
    int best = -1;
    for (int u : g.successors(v))
        if (best < 0 || u < best) best = u;
    return best;
}

int smallest_successor_in(const Game& g, int v, const RegionSet& inside) {
    int best = -1;
    for (int u : g.successors(v))
        if (inside.test(static_cast<std::size_t>(u)) && (best < 0 || u < best)) best = u;
    return best;
}

} // namespace

MdpSolution mdp_reach(const Game& g, const RegionSet& target, OptMode mode) {
    if (target.size() != static_cast<std::size_t>(g.num_vertices()))
        throw DimensionMismatchError("mdp_reach: target has wrong dimension");
    const std::optional<Player> ctrl = mdp_controller(g);
    const Player who = ctrl.value_or(Player::P0);
    const Owner mine = to_owner(who);
    const std::size_t n = static_cast<std::size_t>(g.num_vertices());

    const Game abs = make_target_absorbing(g, target);
    RegionSet all(n);
    all.set();

    RegionSet zero(n), one(n);
    std::vector<int> one_choice(n, -1);
    if (mode == OptMode::Maximize) {
        zero = ~can_reach(abs, target, all);
        AlmostSureReach asr = almost_sure_reach(abs, who, target, all);
        one = asr.region;
        one_choice = asr.choice;
    } else {
        // Largest closed target-free region the controller can stay in...
        RegionSet forced = positive_attractor(abs, other(who), target, all);
        zero = ~forced;
        // ...and value 1 exactly where it is positively unreachable.
        one = ~positive_attractor(abs, who, zero, all);
    }

    RegionSet fringe = all - (zero | one);

    std::vector<std::optional<Rational>> pins(n);
    for (auto v = zero.find_first(); v != RegionSet::npos; v = zero.find_next(v)) pins[v] = Rational(0);
    for (auto v = one.find_first(); v != RegionSet::npos; v = one.find_next(v)) pins[v] = Rational(1);

    std::vector<int> policy(n, -1);
    std::vector<int> fringe_ctrl;
    for (auto v = fringe.find_first(); v != RegionSet::npos; v = fringe.find_next(v))
        if (abs.owner(static_cast<int>(v)) == mine) fringe_ctrl.push_back(static_cast<int>(v));

    const RegionSet reach_positive = ~zero;
    for (int v : fringe_ctrl)
        policy[static_cast<std::size_t>(v)] = mode == OptMode::Maximize
                                                  ? smallest_successor_in(abs, v, reach_positive)
                                                  : smallest_successor(abs, v);

    ValueVector val;
    int iterations = 0;
    if (fringe.any()) {
        for (;;) {
            ++iterations;
            Chain chain;
            chain.dist.resize(n);
            for (auto v = fringe.find_first(); v != RegionSet::npos; v = fringe.find_next(v)) {
                auto& d = chain.dist[v];
                const int vi = static_cast<int>(v);
                if (abs.owner(vi) == mine) {
                    d.emplace_back(policy[v], Rational(1));
                } else {
                    const auto& succ = abs.successors(vi);
                    for (std::size_t i = 0; i < succ.size(); ++i)
                        d.emplace_back(succ[i], abs.weight(vi, static_cast<int>(i)));
                }
            }
            val = chain_values(chain, pins);

            bool switched = false;
            for (int v : fringe_ctrl) {
                int best = policy[static_cast<std::size_t>(v)];
                Rational best_val = val[static_cast<std::size_t>(best)];
                for (int u : abs.successors(v)) {
                    const Rational& q = val[static_cast<std::size_t>(u)];
                    const int c = cmp(q, best_val);
                    const bool better = mode == OptMode::Maximize ? c > 0 : c < 0;
                    if (better || (c == 0 && u < best)) {
                        best = u;
                        best_val = q;
                    }
                }
                if (best != policy[static_cast<std::size_t>(v)] &&
                    val[static_cast<std::size_t>(best)] != val[static_cast<std::size_t>(v)]) {
                    policy[static_cast<std::size_t>(v)] = best;
                    switched = true;
                }
            }
            if (!switched) break;
        }
    } else {
        val.assign(n, Rational(0));
        for (std::size_t v = 0; v < n; ++v)
            if (pins[v]) val[v] = *pins[v];
    }

    MdpSolution sol;
    sol.values = std::move(val);
    sol.policy_iterations = iterations;
    sol.strategy = Strategy(who, n);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.owner(v) != mine) continue;
        int choice;
        if (fringe.test(static_cast<std::size_t>(v))) {
            choice = policy[static_cast<std::size_t>(v)];
        } else if (mode == OptMode::Maximize && one.test(static_cast<std::size_t>(v)) &&
                   one_choice[static_cast<std::size_t>(v)] >= 0) {
            choice = one_choice[static_cast<std::size_t>(v)];
        } else if (mode == OptMode::Minimize && zero.test(static_cast<std::size_t>(v))) {
            choice = smallest_successor_in(g, v, zero);
        } else {
            choice = smallest_successor(g, v);
        }
        sol.strategy.at(v) = choice;
    }
    return sol;
}

Game shift_priorities(const Game& g, int delta) {
    std::vector<VertexRecord> verts;
    std::vector<std::vector<int>> succ;
    std::vector<std::vector<Rational>> w;
    verts.reserve(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        VertexRecord rec = g.vertex(v);
        if (rec.priority >= 0) rec.priority += delta;
        verts.push_back(std::move(rec));
        succ.push_back(g.successors(v));
        w.push_back(g.weights(v));
    }
    return Game(g.kind(), std::move(verts), std::move(succ), std::move(w), g.target());
}

MdpSolution mdp_parity_value(const Game& g, OptMode mode) {
    if (!g.is_parity())
        throw NotAnMdpError("mdp_parity_value: not a parity game");

    if (mode == OptMode::Minimize) {
        MdpSolution sub = mdp_parity_value(shift_priorities(g, 1), OptMode::Maximize);
        for (Rational& q : sub.values) {
            q = Rational(1) - q;
            q.canonicalize();
        }
        return sub;
    }

    const std::optional<Player> ctrl = mdp_controller(g);
    const Player who = ctrl.value_or(Player::P0);
    const Owner mine = to_owner(who);
    const std::size_t n = static_cast<std::size_t>(g.num_vertices());

    ParityEcs good = parity_ec_states(g, /*even_min=*/true);
    MdpSolution sol = mdp_reach(g, good.states, OptMode::Maximize);
    // The controller's strategy must be spelled out with the correct player.
    sol.strategy.player = who;

    // Inside a good end component, rotate towards its minimum-priority
    // vertices so they are visited infinitely often almost surely.
    for (std::size_t k = 0; k < good.components.size(); ++k) {
        const auto& comp = good.components[k];
        const int c = good.component_priority[k];
        RegionSet inside(n);
        RegionSet heads(n);
        for (int v : comp) {
            inside.set(static_cast<std::size_t>(v));
            if (g.priority(v) == c) heads.set(static_cast<std::size_t>(v));
        }
        std::vector<int> choice(n, -1);
        positive_attractor(g, who, heads, inside, &choice);
        for (int v : comp) {
            if (g.owner(v) != mine) continue;
            if (heads.test(static_cast<std::size_t>(v)))
                sol.strategy.at(v) = smallest_successor_in(g, v, inside);
            else if (choice[static_cast<std::size_t>(v)] >= 0)
                sol.strategy.at(v) = choice[static_cast<std::size_t>(v)];
        }
    }
    return sol;
}

} // namespace mpg
