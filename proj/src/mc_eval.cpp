#include "mpg/mc_eval.hpp"

#include <algorithm>
#include <deque>

#include "mpg/graph.hpp"
#include "mpg/linalg.hpp"

namespace mpg {

Chain chain_of(const Game& mc) {
    Chain c;
    c.dist.resize(static_cast<std::size_t>(mc.num_vertices()));
    for (int v = 0; v < mc.num_vertices(); ++v) {
        if (mc.owner(v) != Owner::Random)
            throw NotAnMcError("NotAnMC: controlled vertex " + mc.display_name(v));
        const auto& succ = mc.successors(v);
        auto& d = c.dist[static_cast<std::size_t>(v)];
        d.reserve(succ.size());
        for (std::size_t i = 0; i < succ.size(); ++i)
            d.emplace_back(succ[i], mc.weight(v, static_cast<int>(i)));
    }
    return c;
}

namespace {

std::vector<std::vector<int>> support_adjacency(const Chain& chain,
                                                const std::vector<std::optional<Rational>>& pins) {
    const std::size_t n = chain.dist.size();
    std::vector<std::vector<int>> adj(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (pins[v]) continue;   // pinned states are absorbing
        adj[v].reserve(chain.dist[v].size());
        for (const auto& [u, w] : chain.dist[v]) {
            (void)w;
            adj[v].push_back(u);
        }
    }
    return adj;
}

RegionSet backward_reachable(const std::vector<std::vector<int>>& adj, const RegionSet& seeds) {
    const std::size_t n = adj.size();
    std::vector<std::vector<int>> pred(n);
    for (std::size_t v = 0; v < n; ++v)
        for (int u : adj[v]) pred[static_cast<std::size_t>(u)].push_back(static_cast<int>(v));
    RegionSet seen = seeds;
    std::deque<int> queue;
    for (auto v = seeds.find_first(); v != RegionSet::npos; v = seeds.find_next(v))
        queue.push_back(static_cast<int>(v));
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int p : pred[static_cast<std::size_t>(v)]) {
            if (seen.test(static_cast<std::size_t>(p))) continue;
            seen.set(static_cast<std::size_t>(p));
            queue.push_back(p);
        }
    }
    return seen;
}

} // namespace

ValueVector chain_values(const Chain& chain, const std::vector<std::optional<Rational>>& pins) {
    const std::size_t n = chain.dist.size();
    if (pins.size() != n)
        throw DimensionMismatchError("chain_values: pin vector has wrong dimension");

    auto adj = support_adjacency(chain, pins);

    RegionSet positive_pins(n), low_pins(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (!pins[v]) continue;
        if (*pins[v] > 0) positive_pins.set(v);
        if (*pins[v] < 1) low_pins.set(v);
    }

    ValueVector val(n, Rational(0));

    // States that cannot reach a positive pin are 0; states that can reach
    // neither a sub-1 pin nor a 0-state are absorbed at value 1 almost surely.
    RegionSet reaches_positive = backward_reachable(adj, positive_pins);
    RegionSet zero(n);
    for (std::size_t v = 0; v < n; ++v)
        if (!pins[v] && !reaches_positive.test(v)) zero.set(v);
    RegionSet reaches_low = backward_reachable(adj, zero | low_pins);
    RegionSet one(n);
    for (std::size_t v = 0; v < n; ++v)
        if (!pins[v] && !reaches_low.test(v)) one.set(v);

    RegionSet fringe(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (pins[v]) {
            val[v] = *pins[v];
        } else if (one.test(v)) {
            val[v] = 1;
        } else if (!zero.test(v)) {
            fringe.set(v);
        }
    }
    if (!fringe.any()) return val;

    // Transient core: solve SCC by SCC in reverse topological order.
    SccResult scc = strongly_connected_components(adj, fringe);
    for (int cidx = 0; cidx < scc.count; ++cidx) {
        const auto& members = scc.members[static_cast<std::size_t>(cidx)];
        std::vector<int> pos(n, -1);
        for (std::size_t i = 0; i < members.size(); ++i)
            pos[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

        const std::size_t k = members.size();
        // Singleton without self-loop: plain back-substitution.
        if (k == 1) {
            const int v = members[0];
            Rational external(0), self(0);
            for (const auto& [u, w] : chain.dist[static_cast<std::size_t>(v)]) {
                if (u == v)
                    self += w;
                else
                    external += w * val[static_cast<std::size_t>(u)];
            }
            if (self == 1)
                throw SingularSystemError("transient state with probability-1 self-loop");
            val[static_cast<std::size_t>(v)] = external / (Rational(1) - self);
            val[static_cast<std::size_t>(v)].canonicalize();
            continue;
        }

        LinearSystem sys;
        sys.a.assign(k, std::vector<Rational>(k, Rational(0)));
        sys.b.assign(k, Rational(0));
        for (std::size_t i = 0; i < k; ++i) {
            const int v = members[i];
            sys.a[i][i] = 1;
            for (const auto& [u, w] : chain.dist[static_cast<std::size_t>(v)]) {
                const int j = pos[static_cast<std::size_t>(u)];
                if (j >= 0)
                    sys.a[i][static_cast<std::size_t>(j)] -= w;
                else
                    sys.b[i] += w * val[static_cast<std::size_t>(u)];
            }
        }
        auto x = solve_linear(sys);
        for (std::size_t i = 0; i < k; ++i)
            val[static_cast<std::size_t>(members[i])] = std::move(x[i]);
    }
    return val;
}

ECDecomposition mc_bsccs(const Game& mc) {
    Chain chain = chain_of(mc);   // also rejects controlled vertices
    (void)chain;
    const std::size_t n = static_cast<std::size_t>(mc.num_vertices());
    RegionSet all(n);
    all.set();
    SccResult scc = strongly_connected_components(mc, all);

    std::vector<char> bottom(static_cast<std::size_t>(scc.count), 1);
    for (int v = 0; v < mc.num_vertices(); ++v)
        for (int u : mc.successors(v))
            if (scc.comp[static_cast<std::size_t>(v)] != scc.comp[static_cast<std::size_t>(u)])
                bottom[static_cast<std::size_t>(scc.comp[static_cast<std::size_t>(v)])] = 0;

    ECDecomposition out;
    for (int c = 0; c < scc.count; ++c)
        if (bottom[static_cast<std::size_t>(c)])
            out.components.push_back(scc.members[static_cast<std::size_t>(c)]);
    std::sort(out.components.begin(), out.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

ValueVector mc_reach_value(const Game& mc, const RegionSet& target) {
    if (target.size() != static_cast<std::size_t>(mc.num_vertices()))
        throw DimensionMismatchError("mc_reach_value: target has wrong dimension");
    Chain chain = chain_of(mc);
    std::vector<std::optional<Rational>> pins(chain.dist.size());
    for (auto v = target.find_first(); v != RegionSet::npos; v = target.find_next(v))
        pins[v] = Rational(1);
    return chain_values(chain, pins);
}

ValueVector mc_parity_value(const Game& mc) {
    if (!mc.is_parity())
        throw NotAnMcError("mc_parity_value: not a parity game");
    ECDecomposition bsccs = mc_bsccs(mc);
    RegionSet accepting(static_cast<std::size_t>(mc.num_vertices()));
    for (const auto& comp : bsccs.components) {
        int min_pri = mc.priority(comp.front());
        for (int v : comp) min_pri = std::min(min_pri, mc.priority(v));
        if (even_min_wins(min_pri))
            for (int v : comp) accepting.set(static_cast<std::size_t>(v));
    }
    return mc_reach_value(mc, accepting);
}

} // namespace mpg
