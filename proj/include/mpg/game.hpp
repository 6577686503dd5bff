#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpg/errors.hpp"
#include "mpg/rational.hpp"
#include "mpg/region.hpp"

namespace mpg {

enum class Owner : std::uint8_t { P0, P1, Random };
enum class Player : std::uint8_t { P0, P1 };
enum class GameKind : std::uint8_t { Parity, Reachability };

inline Owner to_owner(Player p) { return p == Player::P0 ? Owner::P0 : Owner::P1; }
inline Player other(Player p) { return p == Player::P0 ? Player::P1 : Player::P0; }

// Min-parity convention, fixed repo-wide: Player 0 wins a play iff the
// minimum priority occurring infinitely often is even.
inline bool even_min_wins(int min_priority) { return min_priority >= 0 && min_priority % 2 == 0; }

struct VertexRecord {
    Owner owner = Owner::Random;
    int priority = -1;      // >= 0 in parity games, -1 in reachability games
    std::string name;       // optional label, empty if absent
};

// A pure memoryless strategy for one player: a total map from that player's
// vertices to chosen successors. Entries for other vertices are -1.
struct Strategy {
    Player player = Player::P0;
    std::vector<int> choice;

    Strategy() = default;
    Strategy(Player p, std::size_t n) : player(p), choice(n, -1) {}

    int operator[](int v) const { return choice[static_cast<std::size_t>(v)]; }
    int& at(int v) { return choice[static_cast<std::size_t>(v)]; }
};

// Immutable arena/game. Vertices carry dense ids 0..n-1; each vertex has an
// ordered successor list, with a positive rational weight per edge exactly on
// random vertices (weights sum to 1 when the game validates). Construction
// happens through GameBuilder or the restriction/induction operations below;
// after that the object is safe to share across threads.
class Game {
public:
    Game() = default;
    Game(GameKind kind,
         std::vector<VertexRecord> vertices,
         std::vector<std::vector<int>> successors,
         std::vector<std::vector<Rational>> weights,
         RegionSet target);

    int num_vertices() const { return static_cast<int>(verts_.size()); }
    std::size_t num_edges() const { return n_edges_; }
    bool empty() const { return verts_.empty(); }

    GameKind kind() const { return kind_; }
    bool is_parity() const { return kind_ == GameKind::Parity; }

    Owner owner(int v) const { return verts_[static_cast<std::size_t>(v)].owner; }
    bool is_controlled(int v) const { return owner(v) != Owner::Random; }
    int priority(int v) const { return verts_[static_cast<std::size_t>(v)].priority; }
    const std::string& name(int v) const { return verts_[static_cast<std::size_t>(v)].name; }
    std::string display_name(int v) const;
    const VertexRecord& vertex(int v) const { return verts_[static_cast<std::size_t>(v)]; }

    const std::vector<int>& successors(int v) const { return succ_[static_cast<std::size_t>(v)]; }
    const std::vector<Rational>& weights(int v) const { return w_[static_cast<std::size_t>(v)]; }
    const Rational& weight(int v, int i) const { return w_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)]; }

    // Index of `to` in v's successor list, -1 if (v,to) is not an edge.
    int successor_index(int v, int to) const;
    bool has_edge(int v, int to) const { return successor_index(v, to) >= 0; }

    // Flat edge slot of the i-th successor of v, for EdgeSet membership.
    std::size_t edge_index(int v, int i) const { return edge_base_[static_cast<std::size_t>(v)] + static_cast<std::size_t>(i); }

    const RegionSet& target() const { return target_; }

    int count_owned(Owner o) const;
    std::vector<int> owned_vertices(Owner o) const;

    // Distinct priorities present, ascending. Empty for reachability games.
    std::vector<int> priorities() const;

private:
    GameKind kind_ = GameKind::Parity;
    std::vector<VertexRecord> verts_;
    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<Rational>> w_;   // parallel to succ_ for random vertices, empty otherwise
    std::vector<std::size_t> edge_base_;
    std::size_t n_edges_ = 0;
    RegionSet target_;                       // reachability games only
};

// Incremental construction helper; build() hands the finished immutable Game.
class GameBuilder {
public:
    static GameBuilder parity() { return GameBuilder(GameKind::Parity); }
    static GameBuilder reachability() { return GameBuilder(GameKind::Reachability); }

    explicit GameBuilder(GameKind kind) : kind_(kind) {}

    int vertex(Owner owner, int priority = -1, std::string name = "");
    GameBuilder& edge(int from, int to);
    GameBuilder& edge(int from, int to, Rational weight);
    GameBuilder& target(int v);

    int num_vertices() const { return static_cast<int>(verts_.size()); }
    Game build() &&;

private:
    GameKind kind_;
    std::vector<VertexRecord> verts_;
    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<Rational>> w_;
    std::vector<int> target_;
};

// Checks every structural invariant: sinklessness, weights positive and
// summing to exactly 1 on random vertices, no weights on controlled edges,
// priorities present on parity games, target well-formed on reachability
// games. Throws ValidationError naming the first offending vertex.
void validate_game(const Game& g);

bool is_valid_strategy(const Game& g, const Strategy& f);

// Re-owns the strategy player's vertices to Random with a point distribution
// on f(v). Kind, priorities and target are preserved.
Game induced_mdp(const Game& g, const Strategy& f);

// Both players fixed; equals induced_mdp(induced_mdp(g, f0), f1).
Game induced_mc(const Game& g, const Strategy& f0, const Strategy& f1);

struct SubGame {
    Game game;
    std::vector<int> to_parent;   // subgame id -> parent id
};

// g restricted to `keep`, vertices re-indexed densely. The result is NOT
// validated: it may contain sinks or substochastic distributions, and every
// solver re-validates before use.
SubGame restrict_vertices_mapped(const Game& g, const RegionSet& keep);
Game restrict_vertices(const Game& g, const RegionSet& keep);

// Drops controlled edges outside `keep`; random vertices are untouched.
// Requires keep to cover every random edge (RandomEdgeDropped otherwise).
Game restrict_edges(const Game& g, const EdgeSet& keep);

struct SwitchClasses {
    EdgeSet profitable;   // Player-0 edges with strictly larger successor value
    EdgeSet neutral;      // random edges plus controlled edges with equal values
    EdgeSet loss;         // Player-0 edges with strictly smaller successor value
};

// Classifies every edge of g against the value vector `val` (typically the
// best-response evaluation of the current strategy). Profit and loss are
// defined on Player-0 edges only; neutrality spans both players' edges and
// always contains all random edges. Comparisons are exact.
SwitchClasses classify_switches(const Game& g, const ValueVector& val);

// The union of all edge slots of g.
EdgeSet all_edges(const Game& g);

} // namespace mpg
