#ifndef SDPEXACT_EXACTNESS_HPP
#define SDPEXACT_EXACTNESS_HPP

// Membership in the SDP-exact region, decided by two independent routes:
// solving the relaxation, or recovering multipliers at a supplied variety
// point.

#include "model.hpp"
#include "sdp.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace sdpexact {

enum class Verdict { Exact, NotExact, Boundary, Inconclusive };
enum class Route { SdpRoute, PointRoute };

struct ExactnessCertificate {
    Verdict verdict = Verdict::Inconclusive;
    Route route = Route::SdpRoute;
    std::optional<Vec> minimizer;
    std::optional<Vec> lambda;  // multipliers of f_1..f_m
    double hessian_min_eig = 0.0;
    int rank_X = 0;
    int rank_Y = 0;
    bool strictly_complementary = false;
    double stationarity_residual = 0.0;  // PointRoute
    SolveStatus solver_status = SolveStatus::Optimal;
    std::string note;
};

struct ExactnessOptions {
    SolveOptions solve;
    // eigenvalues within a factor `boundary_band` of the rank threshold make
    // the verdict Boundary instead of Exact/NotExact
    double boundary_band = 10.0;
    double tol_variety = 1e-8;  // ||f(x)|| bound for the point route
    double tol_pd = 1e-7;       // relative positive-definiteness threshold
};

// Solves the Shor relaxation (or, for purely quadratic data such as Max-Cut,
// the homogeneous relaxation in S^n) and reads the verdict off the ranks.
ExactnessCertificate check_exact_sdp(const QuadraticProgram& qp,
                                     const ExactnessOptions& opts = {});

// Recovers multipliers from the stationarity equation at x (linear least
// squares); when the constraint Jacobian has a nullspace, maximizes the
// minimum Hessian eigenvalue over the affine multiplier set by an auxiliary
// SDP.  Throws Error("NotOnVariety") when ||f(x)|| exceeds tol_variety.
ExactnessCertificate certify_at_point(const QuadraticProgram& qp, const Vec& x,
                                      const ExactnessOptions& opts = {});

// Best achievable min-eigenvalue of H over multipliers consistent with
// stationarity at x; -inf when stationarity has no solution.  This is the
// scalar that changes sign on the boundary of x's spectrahedral shadow.
double best_hessian_min_eig(const QuadraticProgram& qp, const Vec& x,
                            Vec* lambda_out = nullptr,
                            const ExactnessOptions& opts = {});

struct CriticalPoint {
    Vec x;
    Vec lambda;
    double objective_value;
};

struct CriticalPointSet {
    std::vector<CriticalPoint> points;
    int converged_starts = 0;
    int total_starts = 0;
    long long bound = 0;  // 2^m C(n,m)
};

// Multistart Newton on {f(x) = 0, (x-u) - sum lambda_i (A_i x + a_i) = 0}.
// Seeded and reproducible; results sorted and deduplicated.
CriticalPointSet ed_critical_points(const QuadraticProgram& qp, int starts,
                                    std::uint64_t seed,
                                    const ExactnessOptions& opts = {});

const char* to_string(Verdict v);

}  // namespace sdpexact

#endif
