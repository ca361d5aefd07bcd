#ifndef SDPEXACT_SDP_HPP
#define SDPEXACT_SDP_HPP

// Infeasible-start primal-dual path-following solver for dense standard-form
// SDPs up to dimension ~12.  Deterministic: fixed initial iterate, no
// randomization.

#include "numkit.hpp"
#include "sdp_problem.hpp"

#include <optional>

namespace sdpexact {

struct SolveOptions {
    double tol_gap = 1e-9;   // relative duality gap target
    double tol_feas = 1e-8;  // relative primal/dual feasibility target
    int max_iter = 200;
    double rank_tol = 1e-6;  // relative eigenvalue threshold for reported ranks
};

enum class SolveStatus { Optimal, Unbounded, Infeasible, IterationLimit };

struct SdpSolution {
    SolveStatus status = SolveStatus::IterationLimit;
    SymMatrix X;
    SymMatrix Y;  // dual slack C - sum lambda_i A_i
    Vec lambda;
    double primal_value = 0.0;
    double dual_value = 0.0;
    double gap = 0.0;
    int rank_X = 0;
    int rank_Y = 0;
    bool strictly_complementary = false;

    int iterations = 0;
    double primal_infeas = 0.0;  // achieved, relative
    double dual_infeas = 0.0;
    bool constraints_dependent = false;  // warning, not an error
};

SdpSolution solve(const SdpProblem& p, const SolveOptions& opts = {});

// Rank-one primal recovery for the Shor structure: when rank_X == 1 and
// X00 > 0, returns (X01,...,X0n)/X00.  Requires Optimal status.
std::optional<Vec> recover_point(const SdpSolution& sol);

const char* to_string(SolveStatus s);

}  // namespace sdpexact

#endif
