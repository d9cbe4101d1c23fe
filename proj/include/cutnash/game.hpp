#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cutnash {

using PlayerId = int;
using PlayerSet = std::vector<PlayerId>;

struct Edge {
    PlayerId j = 0;
    PlayerId k = 0;
    double w = 0.0;
};

/// A weighted cut game: one player per node, utility = weight of the
/// player's incident cut edges. Only positive-weight pairs are stored;
/// absent pairs behave as zero-weight edges. Immutable after construction.
class CutGame {
public:
    CutGame(int n, std::vector<Edge> edges);

    int player_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// U_j: total weight incident to j (the player's maximum utility).
    double max_utility(PlayerId j) const;

    /// Players with U_j = 0 never gain from any move; they are excluded
    /// from blocks and from rounding.
    bool inert(PlayerId j) const { return max_utility(j) == 0.0; }

    /// (neighbor, weight) pairs for j.
    const std::vector<std::pair<PlayerId, double>>& neighbors(PlayerId j) const;

    double total_weight() const { return total_weight_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<double> max_utility_;
    std::vector<std::vector<std::pair<PlayerId, double>>> adjacency_;
    double total_weight_ = 0.0;

    void check_player(PlayerId j) const;
};

/// Side assignment for all n players; 0 = left, 1 = right.
struct State {
    std::vector<std::uint8_t> sides;

    State() = default;
    explicit State(int n, std::uint8_t fill = 0) : sides(static_cast<std::size_t>(n), fill) {}

    int size() const { return static_cast<int>(sides.size()); }
    bool operator==(const State&) const = default;

    static State all_left(int n) { return State(n, 0); }
    static State seeded_random(int n, std::uint64_t seed);
};

/// Per-edge cut membership plus the total cut weight for one state.
struct CutView {
    std::vector<std::uint8_t> in_cut;  // aligned with game.edges()
    double cut_weight = 0.0;
};

CutView make_cut_view(const CutGame& game, const State& state);

/// u_j(S): total weight of cut edges incident to j.
double utility(const CutGame& game, const State& state, PlayerId j);

/// Phi(S): total cut weight (the exact potential).
double potential(const CutGame& game, const State& state);

/// Phi_R(S): weight of cut edges with at least one endpoint in R.
double potential(const CutGame& game, const State& state, std::span<const PlayerId> subset);

/// State with sides complemented exactly on R.
State apply_flip(const State& state, std::span<const PlayerId> flips);

/// True iff flipping j multiplies its utility by strictly more than p.
/// At u_j(S) = 0 the move counts whenever the deviation utility is positive.
/// Strict comparisons carry a relative slack to absorb float noise.
bool is_p_move(const CutGame& game, const State& state, PlayerId j, double p,
               double rel_slack = 1e-9);

/// Phi_R(S_-R, S'_R) / Phi_R(S). Returns +infinity when the denominator is
/// zero and the numerator positive, and 1 when both vanish.
double stretch(const CutGame& game, const State& state, std::span<const PlayerId> subset);

}  // namespace cutnash
