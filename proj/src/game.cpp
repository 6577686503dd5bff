#include "mpg/game.hpp"

#include <algorithm>
#include <set>

namespace mpg {

Game::Game(GameKind kind,
           std::vector<VertexRecord> vertices,
           std::vector<std::vector<int>> successors,
           std::vector<std::vector<Rational>> weights,
           RegionSet target)
    : kind_(kind),
      verts_(std::move(vertices)),
      succ_(std::move(successors)),
      w_(std::move(weights)),
      target_(std::move(target)) {
    if (succ_.size() != verts_.size() || w_.size() != verts_.size())
        throw Error("game construction: ragged vertex arrays");
    edge_base_.resize(verts_.size());
    n_edges_ = 0;
    for (std::size_t v = 0; v < succ_.size(); ++v) {
        edge_base_[v] = n_edges_;
        n_edges_ += succ_[v].size();
    }
    if (target_.size() != verts_.size()) target_.resize(verts_.size());
}

std::string Game::display_name(int v) const {
    const std::string& n = name(v);
    return n.empty() ? "v" + std::to_string(v) : n;
}

int Game::successor_index(int v, int to) const {
    const auto& s = succ_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == to) return static_cast<int>(i);
    return -1;
}

int Game::count_owned(Owner o) const {
    int cnt = 0;
    for (const auto& rec : verts_)
        if (rec.owner == o) ++cnt;
    return cnt;
}

std::vector<int> Game::owned_vertices(Owner o) const {
    std::vector<int> out;
    for (int v = 0; v < num_vertices(); ++v)
        if (owner(v) == o) out.push_back(v);
    return out;
}

std::vector<int> Game::priorities() const {
    std::set<int> seen;
    for (const auto& rec : verts_)
        if (rec.priority >= 0) seen.insert(rec.priority);
    return std::vector<int>(seen.begin(), seen.end());
}

int GameBuilder::vertex(Owner owner, int priority, std::string name) {
    verts_.push_back(VertexRecord{owner, priority, std::move(name)});
    succ_.emplace_back();
    w_.emplace_back();
    return static_cast<int>(verts_.size()) - 1;
}

GameBuilder& GameBuilder::edge(int from, int to) {
    succ_[static_cast<std::size_t>(from)].push_back(to);
    return *this;
}

GameBuilder& GameBuilder::edge(int from, int to, Rational weight) {
    succ_[static_cast<std::size_t>(from)].push_back(to);
    w_[static_cast<std::size_t>(from)].push_back(std::move(weight));
    return *this;
}

GameBuilder& GameBuilder::target(int v) {
    target_.push_back(v);
    return *this;
}

Game GameBuilder::build() && {
    RegionSet t(verts_.size());
    for (int v : target_) {
        if (v < 0 || v >= static_cast<int>(verts_.size()))
            throw Error("target vertex out of range: " + std::to_string(v));
        t.set(static_cast<std::size_t>(v));
    }
    for (std::size_t v = 0; v < succ_.size(); ++v)
        for (int to : succ_[v])
            if (to < 0 || to >= static_cast<int>(verts_.size()))
                throw Error("edge endpoint out of range: " + std::to_string(to));
    return Game(kind_, std::move(verts_), std::move(succ_), std::move(w_), std::move(t));
}

void validate_game(const Game& g) {
    const int n = g.num_vertices();
    for (int v = 0; v < n; ++v) {
        const auto& succ = g.successors(v);
        if (succ.empty())
            throw ValidationError(ValidationError::Kind::SinkVertex, v,
                                  "SinkVertex(" + g.display_name(v) + "): no outgoing edge");

        std::set<int> distinct(succ.begin(), succ.end());
        if (distinct.size() != succ.size())
            throw ValidationError(ValidationError::Kind::Malformed, v,
                                  "duplicate edge at " + g.display_name(v));

        if (g.owner(v) == Owner::Random) {
            const auto& w = g.weights(v);
            if (w.size() != succ.size())
                throw ValidationError(ValidationError::Kind::BadDistribution, v,
                                      "BadDistribution(" + g.display_name(v) + "): weight count mismatch");
            Rational sum = 0;
            for (const Rational& q : w) {
                if (q <= 0)
                    throw ValidationError(ValidationError::Kind::BadDistribution, v,
                                          "BadDistribution(" + g.display_name(v) + "): non-positive weight " + rat_str(q));
                sum += q;
            }
            if (sum != 1)
                throw ValidationError(ValidationError::Kind::BadDistribution, v,
                                      "BadDistribution(" + g.display_name(v) + ", " + rat_str(sum) + ")");
        } else {
            if (!g.weights(v).empty())
                throw ValidationError(ValidationError::Kind::WeightOnControlledEdge, v,
                                      "WeightOnControlledEdge(" + g.display_name(v) + ")");
        }

        if (g.is_parity() && g.priority(v) < 0)
            throw ValidationError(ValidationError::Kind::MissingPriority, v,
                                  "MissingPriority(" + g.display_name(v) + ")");
    }
}

bool is_valid_strategy(const Game& g, const Strategy& f) {
    if (f.choice.size() != static_cast<std::size_t>(g.num_vertices())) return false;
    const Owner o = to_owner(f.player);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.owner(v) == o) {
            if (f[v] < 0 || !g.has_edge(v, f[v])) return false;
        }
    }
    return true;
}

Game induced_mdp(const Game& g, const Strategy& f) {
    if (f.choice.size() != static_cast<std::size_t>(g.num_vertices()))
        throw StrategyMismatchError("strategy has wrong dimension");
    const Owner o = to_owner(f.player);

    std::vector<VertexRecord> verts;
    std::vector<std::vector<int>> succ;
    std::vector<std::vector<Rational>> w;
    verts.reserve(g.num_vertices());
    succ.reserve(g.num_vertices());
    w.reserve(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        VertexRecord rec = g.vertex(v);
        if (rec.owner == o) {
            const int to = f[v];
            if (to < 0 || !g.has_edge(v, to))
                throw StrategyMismatchError("strategy at " + g.display_name(v) + " is not an edge");
            rec.owner = Owner::Random;
            succ.push_back({to});
            w.push_back({Rational(1)});
        } else {
            succ.push_back(g.successors(v));
            w.push_back(g.weights(v));
        }
        verts.push_back(std::move(rec));
    }
    return Game(g.kind(), std::move(verts), std::move(succ), std::move(w), g.target());
}

Game induced_mc(const Game& g, const Strategy& f0, const Strategy& f1) {
    return induced_mdp(induced_mdp(g, f0), f1);
}

SubGame restrict_vertices_mapped(const Game& g, const RegionSet& keep) {
    if (keep.size() != static_cast<std::size_t>(g.num_vertices()))
        throw DimensionMismatchError("restrict_vertices: region has wrong dimension");

    std::vector<int> to_parent = region_ids(keep);
    std::vector<int> to_sub(static_cast<std::size_t>(g.num_vertices()), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        to_sub[static_cast<std::size_t>(to_parent[i])] = static_cast<int>(i);

    std::vector<VertexRecord> verts;
    std::vector<std::vector<int>> succ;
    std::vector<std::vector<Rational>> w;
    RegionSet target(to_parent.size());
    verts.reserve(to_parent.size());
    for (std::size_t i = 0; i < to_parent.size(); ++i) {
        const int v = to_parent[i];
        verts.push_back(g.vertex(v));
        std::vector<int> s;
        std::vector<Rational> ws;
        const auto& osucc = g.successors(v);
        for (std::size_t k = 0; k < osucc.size(); ++k) {
            const int to = to_sub[static_cast<std::size_t>(osucc[k])];
            if (to < 0) continue;
            s.push_back(to);
            if (g.owner(v) == Owner::Random) ws.push_back(g.weight(v, static_cast<int>(k)));
        }
        succ.push_back(std::move(s));
        w.push_back(std::move(ws));
        if (g.kind() == GameKind::Reachability && g.target().test(static_cast<std::size_t>(v)))
            target.set(i);
    }
    return SubGame{Game(g.kind(), std::move(verts), std::move(succ), std::move(w), std::move(target)),
                   std::move(to_parent)};
}

Game restrict_vertices(const Game& g, const RegionSet& keep) {
    return restrict_vertices_mapped(g, keep).game;
}

Game restrict_edges(const Game& g, const EdgeSet& keep) {
    if (keep.size() != g.num_edges())
        throw DimensionMismatchError("restrict_edges: edge set has wrong dimension");

    std::vector<VertexRecord> verts;
    std::vector<std::vector<int>> succ;
    std::vector<std::vector<Rational>> w;
    verts.reserve(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        verts.push_back(g.vertex(v));
        const auto& osucc = g.successors(v);
        if (g.owner(v) == Owner::Random) {
            for (std::size_t k = 0; k < osucc.size(); ++k)
                if (!keep.test(g.edge_index(v, static_cast<int>(k))))
                    throw RandomEdgeDroppedError("RandomEdgeDropped at " + g.display_name(v));
            succ.push_back(osucc);
            w.push_back(g.weights(v));
        } else {
            std::vector<int> s;
            for (std::size_t k = 0; k < osucc.size(); ++k)
                if (keep.test(g.edge_index(v, static_cast<int>(k))))
                    s.push_back(osucc[k]);
            succ.push_back(std::move(s));
            w.emplace_back();
        }
    }
    return Game(g.kind(), std::move(verts), std::move(succ), std::move(w), g.target());
}

SwitchClasses classify_switches(const Game& g, const ValueVector& val) {
    if (val.size() != static_cast<std::size_t>(g.num_vertices()))
        throw DimensionMismatchError("classify_switches: value vector has wrong dimension");

    SwitchClasses out{EdgeSet(g.num_edges()), EdgeSet(g.num_edges()), EdgeSet(g.num_edges())};
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& succ = g.successors(v);
        for (std::size_t k = 0; k < succ.size(); ++k) {
            const std::size_t e = g.edge_index(v, static_cast<int>(k));
            if (g.owner(v) == Owner::Random) {
                out.neutral.set(e);
                continue;
            }
            const int c = cmp(val[static_cast<std::size_t>(succ[k])], val[static_cast<std::size_t>(v)]);
            if (c == 0) {
                out.neutral.set(e);
            } else if (g.owner(v) == Owner::P0) {
                if (c > 0)
                    out.profitable.set(e);
                else
                    out.loss.set(e);
            }
            // Player-1 edges with strictly differing values stay unclassified.
        }
    }
    return out;
}

EdgeSet all_edges(const Game& g) {
    EdgeSet e(g.num_edges());
    e.set();
    return e;
}

} // namespace mpg
