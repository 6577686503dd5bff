#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mpg/game.hpp"
#include "mpg/rational.hpp"

namespace mpg {

// One Initialise level: which sub-arena was treated (parent-game ids) and the
// almost-sure winning region found there.
struct InitTraceEvent {
    int depth = 0;
    std::vector<int> region;     // vertices of this level, original ids
    std::vector<int> quali_w0;   // almost-sure region, original ids
    bool empty_region_return = false;
};

// One outer Improve iteration.
struct ImproveTraceEvent {
    int iteration = 0;           // 1-based
    std::uint64_t value_hash = 0;
    std::optional<ValueVector> values;             // kept while the game is small
    std::vector<std::pair<int, int>> profitable;   // applied switches (vertex, new successor)
    std::vector<std::pair<int, int>> neutral;      // neutral-round rewires
    std::vector<int> neutral_w0;                   // winning region of the neutral subgame
    bool changed = false;
};

struct SolveTrace {
    std::vector<InitTraceEvent> init;
    std::vector<ImproveTraceEvent> improve;
};

struct SolveOptions {
    bool record_trace = false;
    std::size_t trace_value_limit = 64;   // keep full value vectors up to this size
    std::size_t trace_max_events = 4096;  // hard cap; older events are dropped silently
};

struct SolveReport {
    ValueVector values;
    Strategy strategy0;
    Strategy strategy1;          // final best response
    int outer_iterations = 0;
    int profitable_rounds = 0;
    int neutral_rounds = 0;
    std::optional<SolveTrace> trace;
};

} // namespace mpg
