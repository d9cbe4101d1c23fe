#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <span>
#include <vector>

#include "cutnash/game.hpp"

namespace cutnash {

/// Record of how frozen players (fixed to -vhat) were folded into the
/// reduced coefficients.
struct FrozenFolding {
    int noncut_edges = 0;   // one endpoint active, edge not in the cut
    double noncut_weight = 0.0;
    int cut_edges = 0;      // one endpoint active, edge in the cut
    double cut_weight = 0.0;
    int dropped_edges = 0;  // no active endpoint; contributes nothing
    double dropped_weight = 0.0;
};

/// The block-restricted stretch SDP in reduced Gram form. Row 0 is the
/// reference vector vhat; rows 1..|B| are the active (non-inert) players of
/// B. Objective value Z = <C, X> + c0; constraint <A, X> + a0 >= b.
struct SdpProblem {
    int dim = 0;
    Eigen::MatrixXd C;
    double c0 = 0.0;
    Eigen::MatrixXd A;
    double a0 = 0.0;
    double b = 0.0;
    double sigma = 0.0;
    std::vector<PlayerId> players;  // gram row i+1 corresponds to players[i]
    FrozenFolding folded;
    double block_cut_weight = 0.0;  // w(CUT_B(S)); the constraint's attainable
                                    // maximum is 4 * block_cut_weight
};

enum class SdpStatus { Optimal, Infeasible, NumericalFailure };

struct SdpSolution {
    Eigen::MatrixXd gram;
    double z = 0.0;  // <C, gram> + c0
    std::vector<Eigen::VectorXd> vectors;
    SdpStatus status = SdpStatus::NumericalFailure;
    int iterations = 0;
    double gap = 0.0;            // certified primal-dual gap on Z
    double constraint_value = 0.0;  // <A, gram> + a0
};

/// Assembles the SDP for block B at the given state. Edges with both
/// endpoints outside the active set contribute nothing; frozen endpoints are
/// eliminated algebraically so the Gram dimension is 1 + |active B|.
/// The caller is responsible for passing a state with no tau-move in B.
SdpProblem build_sdp(const CutGame& game, const State& state, std::span<const PlayerId> block,
                     double sigma);

/// Z evaluated at the rank-1 point encoding subset R of the active players
/// (v_j = vhat for j in R, v_j = -vhat otherwise). `member` is indexed like
/// SdpProblem::players.
double rank_one_objective(const SdpProblem& problem, const std::vector<std::uint8_t>& member);

/// Constraint left-hand side <A, X> + a0 at the same rank-1 point.
double rank_one_constraint(const SdpProblem& problem, const std::vector<std::uint8_t>& member);

/// Dense primal-dual interior-point solve. On Optimal the returned Z is
/// within tol * scale of the true optimum, scale = max(1, sum |C| + |c0|).
SdpSolution solve_sdp(const SdpProblem& problem, double tol = 1e-8);

/// Unit vectors whose pairwise inner products reproduce a PSD unit-diagonal
/// Gram matrix (eigendecomposition with a small negative-eigenvalue clip).
/// Throws if the matrix is indefinite beyond -1e-4.
std::vector<Eigen::VectorXd> extract_vectors(const Eigen::MatrixXd& gram);

/// Plain-text dump of (C, c0, A, a0, b) for cross-checks with external
/// tools. Format: one header line "sdp <dim>", then "c0 <v>", the upper
/// triangle of C as "C <i> <j> <v>" rows, then "a0 <v>", "b <v>", and the
/// upper triangle of A as "A <i> <j> <v>" rows. Zero entries are omitted.
void dump_problem(const SdpProblem& problem, std::ostream& out);

}  // namespace cutnash
