#include "cutnash/local_search.hpp"

#include <algorithm>

namespace cutnash {

LocalResult local(const CutGame& game, State state, std::span<const PlayerId> block,
                  double p, const LocalOptions& opts) {
    if (!(p > 1.0)) throw std::invalid_argument("p must exceed 1");
    PlayerSet order(block.begin(), block.end());
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());

    LocalResult result;
    result.state = std::move(state);
    long long applied = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (PlayerId j : order) {
            if (!is_p_move(game, result.state, j, p, opts.rel_slack)) continue;
            const double before = utility(game, result.state, j);
            result.state.sides[j] ^= 1u;
            const double after = utility(game, result.state, j);
            result.moves.push_back({j, before, after});
            if (++applied > opts.move_ceiling)
                throw MoveCeilingError("local move ceiling exceeded; check comparison slack");
            moved = true;
            break;  // restart the scan from the lowest id
        }
    }
    result.changed = !result.moves.empty();
    return result;
}

}  // namespace cutnash
