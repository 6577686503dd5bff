#include "mpg/graph.hpp"

#include <algorithm>
#include <deque>

namespace mpg {

SccResult strongly_connected_components(const std::vector<std::vector<int>>& adj, const RegionSet& alive) {
    const int n = static_cast<int>(adj.size());
    SccResult res;
    res.comp.assign(static_cast<std::size_t>(n), -1);

    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    int next_index = 0;

    // Iterative Tarjan; frame = (vertex, next successor position).
    std::vector<std::pair<int, std::size_t>> frames;
    for (int root = 0; root < n; ++root) {
        if (!alive.test(static_cast<std::size_t>(root)) || index[static_cast<std::size_t>(root)] >= 0)
            continue;
        frames.emplace_back(root, 0);
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = 1;

        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            const auto& succ = adj[static_cast<std::size_t>(v)];
            bool descended = false;
            while (pos < succ.size()) {
                const int u = succ[pos++];
                if (!alive.test(static_cast<std::size_t>(u))) continue;
                if (index[static_cast<std::size_t>(u)] < 0) {
                    index[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = next_index++;
                    stack.push_back(u);
                    on_stack[static_cast<std::size_t>(u)] = 1;
                    frames.emplace_back(u, 0);
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(u)])
                    low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(u)]);
            }
            if (descended) continue;

            if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                std::vector<int> members;
                int u;
                do {
                    u = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(u)] = 0;
                    res.comp[static_cast<std::size_t>(u)] = res.count;
                    members.push_back(u);
                } while (u != v);
                std::sort(members.begin(), members.end());
                res.members.push_back(std::move(members));
                ++res.count;
            }
            const int finished = v;
            frames.pop_back();
            if (!frames.empty()) {
                const int parent = frames.back().first;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(finished)]);
            }
        }
    }
    return res;
}

std::vector<std::vector<int>> adjacency_of(const Game& g) {
    std::vector<std::vector<int>> adj;
    adj.reserve(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) adj.push_back(g.successors(v));
    return adj;
}

SccResult strongly_connected_components(const Game& g, const RegionSet& alive) {
    return strongly_connected_components(adjacency_of(g), alive);
}

std::vector<std::vector<int>> predecessor_lists(const Game& g) {
    std::vector<std::vector<int>> pred(static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int u : g.successors(v))
            pred[static_cast<std::size_t>(u)].push_back(v);
    return pred;
}

RegionSet can_reach(const Game& g, const RegionSet& target, const RegionSet& alive) {
    auto pred = predecessor_lists(g);
    RegionSet seen = target & alive;
    std::deque<int> queue(region_ids(seen).begin(), region_ids(seen).end());
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int p : pred[static_cast<std::size_t>(v)]) {
            if (!alive.test(static_cast<std::size_t>(p)) || seen.test(static_cast<std::size_t>(p))) continue;
            seen.set(static_cast<std::size_t>(p));
            queue.push_back(p);
        }
    }
    return seen;
}

RegionSet positive_attractor(const Game& g, Player player, const RegionSet& target,
                             const RegionSet& alive, std::vector<int>* choice) {
    const Owner mine = to_owner(player);
    const Owner theirs = to_owner(other(player));
    auto pred = predecessor_lists(g);

    RegionSet attr = target & alive;
    // Opponent vertices get a countdown of alive successors outside the attractor.
    std::vector<int> escapes(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (!alive.test(static_cast<std::size_t>(v)) || g.owner(v) != theirs) continue;
        int cnt = 0;
        for (int u : g.successors(v)) {
            if (!alive.test(static_cast<std::size_t>(u)))
                cnt = -1;   // can escape the universe outright; never attracted
            if (cnt >= 0 && alive.test(static_cast<std::size_t>(u)) && !attr.test(static_cast<std::size_t>(u)))
                ++cnt;
        }
        escapes[static_cast<std::size_t>(v)] = cnt;
    }

    std::deque<int> queue(region_ids(attr).begin(), region_ids(attr).end());
    // Opponent vertices whose countdown was 0 from the start (all successors in target).
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (alive.test(static_cast<std::size_t>(v)) && g.owner(v) == theirs && !attr.test(static_cast<std::size_t>(v)) &&
            escapes[static_cast<std::size_t>(v)] == 0 && !g.successors(v).empty()) {
            attr.set(static_cast<std::size_t>(v));
            queue.push_back(v);
        }
    }

    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int v : pred[static_cast<std::size_t>(u)]) {
            if (!alive.test(static_cast<std::size_t>(v)) || attr.test(static_cast<std::size_t>(v))) continue;
            const Owner o = g.owner(v);
            if (o == theirs) {
                if (escapes[static_cast<std::size_t>(v)] > 0 && --escapes[static_cast<std::size_t>(v)] == 0) {
                    attr.set(static_cast<std::size_t>(v));
                    queue.push_back(v);
                }
            } else {
                attr.set(static_cast<std::size_t>(v));
                if (choice && o == mine) (*choice)[static_cast<std::size_t>(v)] = u;
                queue.push_back(v);
            }
        }
    }
    return attr;
}

RegionSet positive_attractor(const Game& g, Player player, const RegionSet& target) {
    RegionSet alive(static_cast<std::size_t>(g.num_vertices()));
    alive.set();
    return positive_attractor(g, player, target, alive);
}

AlmostSureReach almost_sure_reach(const Game& g, Player player, const RegionSet& target,
                                  const RegionSet& alive) {
    const Owner mine = to_owner(player);
    RegionSet universe = alive;

    AlmostSureReach out;
    out.choice.assign(static_cast<std::size_t>(g.num_vertices()), -1);

    for (;;) {
        // Closure trim: outside-target vertices must not be forced out of the
        // universe (random/opponent) and must retain a choice (the player).
        bool trimmed = true;
        while (trimmed) {
            trimmed = false;
            for (int v = 0; v < g.num_vertices(); ++v) {
                if (!universe.test(static_cast<std::size_t>(v)) || target.test(static_cast<std::size_t>(v))) continue;
                bool bad;
                if (g.owner(v) == mine) {
                    bad = true;
                    for (int u : g.successors(v))
                        if (universe.test(static_cast<std::size_t>(u))) { bad = false; break; }
                } else {
                    bad = false;
                    for (int u : g.successors(v))
                        if (!universe.test(static_cast<std::size_t>(u))) { bad = true; break; }
                }
                if (bad) {
                    universe.reset(static_cast<std::size_t>(v));
                    trimmed = true;
                }
            }
        }

        std::vector<int> choice(static_cast<std::size_t>(g.num_vertices()), -1);
        RegionSet attr = positive_attractor(g, player, target & universe, universe, &choice);
        RegionSet stuck = universe - attr;
        if (!stuck.any()) {
            out.region = universe;
            for (int v = 0; v < g.num_vertices(); ++v)
                if (universe.test(static_cast<std::size_t>(v)) && g.owner(v) == mine &&
                    !target.test(static_cast<std::size_t>(v)))
                    out.choice[static_cast<std::size_t>(v)] = choice[static_cast<std::size_t>(v)];
            return out;
        }
        universe -= stuck;
    }
}

} // namespace mpg
