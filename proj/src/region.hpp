#ifndef SDPEXACT_REGION_HPP
#define SDPEXACT_REGION_HPP

// Geometry of SDP-exact regions: master spectrahedra, boundary sampling in
// the normal bundle, tangency witnesses, and the m=1 cut locus.

#include "exactness.hpp"
#include "model.hpp"
#include "poly.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sdpexact {

struct MasterSpectrahedron {
    enum class Kind { Lin, Ed };
    Kind kind = Kind::Ed;
    SymMatrix B0;               // identity for Ed, zero for Lin
    std::vector<SymMatrix> B;   // the constraint matrices A_i

    int m() const { return static_cast<int>(B.size()); }
    SymMatrix pencil_at(const Vec& lambda) const;  // B0 - sum lambda_i B_i
    bool contains(const Vec& lambda) const;        // strict: pencil PD
};

MasterSpectrahedron master(const QuadraticProgram& qp, MasterSpectrahedron::Kind kind);

// For an Ed master and a unit direction v, the exit parameter t* with
// I - t* sum v_i A_i on the PSD boundary; nullopt when the ray never exits.
std::optional<double> boundary_ray(const MasterSpectrahedron& s, const Vec& v);

// u = x - (1/2) Jac_f(x) lambda for Ed, u = (1/2) Jac_f(x) lambda for Lin.
Vec shadow_point(const QuadraticProgram& qp, const Vec& x, const Vec& lambda,
                 double tol_variety = 1e-8);

struct BoundarySample {
    double t_or_index = 0.0;
    Vec x;
    Vec lambda;
    Vec u;
    double det_residual = 0.0;  // |det H(lambda)|
};

// Variety access: a finite point list, or a curve parametrization with its
// parameter range.
struct VarietyAccess {
    std::vector<Vec> points;
    std::function<Vec(double)> param;
    double t_lo = 0.0, t_hi = 0.0;

    bool finite() const { return !points.empty(); }
    static VarietyAccess from_points(std::vector<Vec> pts);
    static VarietyAccess from_param(std::function<Vec(double)> f, double lo, double hi);
};

struct SampleOptions {
    double tol_variety = 1e-8;
    int max_ray_retries = 50;
    // rays exiting beyond this multiplier norm count as unbounded and are
    // redrawn; keeps desk-scale sample spreads usable for interpolation
    double lambda_cap = 8.0;
    int threads = 1;  // deterministic for any value: per-sample seed streams
};

// Draws x on the variety and a random ray direction in lambda-space, raycasts
// to the PSD boundary of the Ed master, and emits psi(x, lambda).
std::vector<BoundarySample> sample_boundary(const QuadraticProgram& qp,
                                            const VarietyAccess& access, int count,
                                            std::uint64_t seed,
                                            const SampleOptions& opts = {});

std::string samples_to_csv(const std::vector<BoundarySample>& samples, int n, int m);
// Returns the u columns of a sample CSV produced by samples_to_csv.
std::vector<Vec> csv_to_points(const std::string& csv, int* nvars_out = nullptr);

// Boundary of the exact region located along a random ray from the variety
// point x0, by bisecting the sign of the best achievable Hessian minimum
// eigenvalue (an SDP membership verdict).  Ray directions live in the range
// of Jac_f(x0) so the stationarity system stays solvable along the ray.
// Returns nullopt when no sign change is bracketed (the shadow is unbounded
// in the drawn directions).
std::optional<BoundarySample> boundary_by_bisection(const QuadraticProgram& qp, const Vec& x0,
                                                    std::uint64_t seed,
                                                    const ExactnessOptions& opts = {});

// Machine-precision samples of the fold locus of x0's shadow for
// overconstrained instances: Gauss-Newton on {det H = 0, nu_j . grad det H = 0}
// over the multiplier space, keeping PSD-side solutions.  Every returned u
// lies on the algebraic boundary surface.
std::optional<BoundarySample> shadow_fold_sample(const QuadraticProgram& qp, const Vec& x0,
                                                 std::uint64_t seed);

struct TangencyWitness {
    Vec x;
    Vec x_prime;
    Vec lambda;
    Vec u;
    double bisector_residual = 0.0;      // | ||u-x||^2 - ||u-x'||^2 |
    double det_residual = 0.0;           // |det H(lambda)|
    double normal_angle_residual = 0.0;  // sin of angle(grad det, x'-x)
};

// Thm: the boundaries of the cells of x and x' meet the bisector hyperplane
// tangentially; the witness point is psi(x, lambda) with
// (I - sum lambda_i A_i)(x'-x) = 0.  Requires m == n.
TangencyWitness tangency_witness(const QuadraticProgram& qp, const Vec& x, const Vec& xp);

struct CutLocusComponent {
    Vec normal;        // unit eigenvector v_i of A
    double offset;     // hyperplane v.u + offset = 0, offset = (1/omega_i) v.a
    double omega;      // eigenvalue of A
    DensePolynomial quadric;  // >= 0 marks the two-real-preimage part of the plane
    // with repeated eigenvalues the component collapses onto extra planes
    std::vector<std::pair<Vec, double>> extra_planes;
};

struct CutLocus {
    std::vector<CutLocusComponent> components;
};

// m = 1 decomposition: n hyperplanes from the eigenvectors of A, each
// carrying the discriminant quadric of the restricted fiber equation.
// Throws Error("SingularA") when A has a zero eigenvalue.
CutLocus cut_locus_m1(const QuadraticProgram& qp);

}  // namespace sdpexact

#endif
