#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "cutnash/game.hpp"

namespace cutnash {

struct MoveRecord {
    PlayerId player = 0;
    double utility_before = 0.0;
    double utility_after = 0.0;
};

struct LocalResult {
    State state;
    bool changed = false;
    std::vector<MoveRecord> moves;
};

struct LocalOptions {
    double rel_slack = 1e-9;
    long long move_ceiling = 10'000'000;
};

/// Raised when the p-move loop exceeds its ceiling. True p-moves with p > 1
/// strictly increase the potential, so hitting this signals a slack bug.
struct MoveCeilingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Repeatedly applies p-moves by players in B until none exists. Scans B in
/// ascending player id and restarts the scan after every applied move.
LocalResult local(const CutGame& game, State state, std::span<const PlayerId> block,
                  double p, const LocalOptions& opts = {});

}  // namespace cutnash
