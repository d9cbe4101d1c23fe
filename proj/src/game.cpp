#include "cutnash/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "cutnash/rng.hpp"

namespace cutnash {

CutGame::CutGame(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("player count must be non-negative");
    std::set<std::pair<PlayerId, PlayerId>> seen;
    for (auto& e : edges_) {
        if (e.j < 0 || e.j >= n_ || e.k < 0 || e.k >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.j == e.k) throw std::invalid_argument("self-loops are not allowed");
        if (e.j > e.k) std::swap(e.j, e.k);
        if (!(e.w >= 0.0) || !std::isfinite(e.w))
            throw std::invalid_argument("edge weight must be finite and non-negative");
        if (!seen.insert({e.j, e.k}).second)
            throw std::invalid_argument("duplicate edge");
    }
    max_utility_.assign(static_cast<std::size_t>(n_), 0.0);
    adjacency_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& e : edges_) {
        max_utility_[e.j] += e.w;
        max_utility_[e.k] += e.w;
        adjacency_[e.j].emplace_back(e.k, e.w);
        adjacency_[e.k].emplace_back(e.j, e.w);
        total_weight_ += e.w;
    }
}

void CutGame::check_player(PlayerId j) const {
    if (j < 0 || j >= n_) throw std::out_of_range("player id out of range");
}

double CutGame::max_utility(PlayerId j) const {
    check_player(j);
    return max_utility_[j];
}

const std::vector<std::pair<PlayerId, double>>& CutGame::neighbors(PlayerId j) const {
    check_player(j);
    return adjacency_[j];
}

State State::seeded_random(int n, std::uint64_t seed) {
    State s(n);
    auto eng = seeded_engine(seed, 0xA11);
    for (auto& side : s.sides) side = static_cast<std::uint8_t>(eng() & 1u);
    return s;
}

namespace {

void check_state(const CutGame& game, const State& state) {
    if (state.size() != game.player_count())
        throw std::invalid_argument("state length does not match player count");
}

std::vector<std::uint8_t> membership_mask(int n, std::span<const PlayerId> subset) {
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(n), 0);
    for (PlayerId j : subset) {
        if (j < 0 || j >= n) throw std::out_of_range("player id out of range");
        mask[j] = 1;
    }
    return mask;
}

}  // namespace

CutView make_cut_view(const CutGame& game, const State& state) {
    check_state(game, state);
    CutView view;
    view.in_cut.reserve(game.edges().size());
    for (const auto& e : game.edges()) {
        const bool cut = state.sides[e.j] != state.sides[e.k];
        view.in_cut.push_back(cut ? 1 : 0);
        if (cut) view.cut_weight += e.w;
    }
    return view;
}

double utility(const CutGame& game, const State& state, PlayerId j) {
    check_state(game, state);
    double u = 0.0;
    for (const auto& [k, w] : game.neighbors(j))
        if (state.sides[j] != state.sides[k]) u += w;
    return u;
}

double potential(const CutGame& game, const State& state) {
    check_state(game, state);
    double phi = 0.0;
    for (const auto& e : game.edges())
        if (state.sides[e.j] != state.sides[e.k]) phi += e.w;
    return phi;
}

double potential(const CutGame& game, const State& state, std::span<const PlayerId> subset) {
    check_state(game, state);
    const auto mask = membership_mask(game.player_count(), subset);
    double phi = 0.0;
    for (const auto& e : game.edges())
        if ((mask[e.j] || mask[e.k]) && state.sides[e.j] != state.sides[e.k]) phi += e.w;
    return phi;
}

State apply_flip(const State& state, std::span<const PlayerId> flips) {
    State out = state;
    for (PlayerId j : flips) {
        if (j < 0 || j >= state.size()) throw std::out_of_range("player id out of range");
        out.sides[j] ^= 1u;
    }
    return out;
}

bool is_p_move(const CutGame& game, const State& state, PlayerId j, double p,
               double rel_slack) {
    if (!(p > 1.0)) throw std::invalid_argument("p must exceed 1");
    check_state(game, state);
    // Flipping j toggles every incident edge, so the deviation utility is
    // the weight of the currently uncut incident edges.
    double u = 0.0, deviation = 0.0;
    for (const auto& [k, w] : game.neighbors(j)) {
        if (state.sides[j] != state.sides[k])
            u += w;
        else
            deviation += w;
    }
    if (u == 0.0) return deviation > 0.0;
    return deviation > p * u * (1.0 + rel_slack);
}

double stretch(const CutGame& game, const State& state, std::span<const PlayerId> subset) {
    if (subset.empty()) throw std::invalid_argument("stretch requires a nonempty subset");
    const double before = potential(game, state, subset);
    const double after = potential(game, apply_flip(state, subset), subset);
    if (before == 0.0)
        return after > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
    return after / before;
}

}  // namespace cutnash
