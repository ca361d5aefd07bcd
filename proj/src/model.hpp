#ifndef SDPEXACT_MODEL_HPP
#define SDPEXACT_MODEL_HPP

// Quadratic programs with quadratic equality constraints, their cost
// matrices, and the Shor embedding into a standard-form SDP.

#include "numkit.hpp"
#include "sdp_problem.hpp"

#include <optional>
#include <vector>

namespace sdpexact {

// f(x) = x^T A x + 2 a^T x + alpha
struct QuadraticConstraint {
    SymMatrix A;
    Vec a;
    double alpha = 0.0;

    double eval(const Vec& x) const;
    // gradient/2 = A x + a
    Vec half_gradient(const Vec& x) const;
};

struct Objective {
    enum class Kind { General, Ed, Lin };
    Kind kind = Kind::Ed;
    // General: g(x) = x^T C x + c^T x
    SymMatrix C;
    Vec c;
    // Ed: g(x) = ||x - u||^2 (constant ||u||^2 dropped in the embedding);
    // Lin: g(x) = u^T x
    Vec u;

    static Objective ed(Vec u);
    static Objective lin(Vec u);
    static Objective general(SymMatrix C, Vec c);

    // Expansion into (C, c): Ed gives C = I, c = -2u; Lin gives C = 0, c = u.
    SymMatrix expanded_C(int n) const;
    Vec expanded_c(int n) const;
};

struct QuadraticProgram {
    int n = 0;
    std::vector<QuadraticConstraint> constraints;
    Objective objective;

    int m() const { return static_cast<int>(constraints.size()); }
    void validate() const;
};

struct VarietyPoints {
    std::vector<Vec> points;
    double residual_tol = 1e-10;
};

// Residuals f_i(x).
Vec eval_constraints(const QuadraticProgram& qp, const Vec& x);

// n x m matrix, column j = 2 (A_j x + a_j) = grad f_j(x).
Matrix jacobian(const QuadraticProgram& qp, const Vec& x);

// H(lambda) = C - sum_i lambda_i A_i, the x-Hessian of the Lagrangian.
SymMatrix hessian(const QuadraticProgram& qp, const Vec& lambda);

// Objective value g(x); for Ed this is the full ||x-u||^2.
double objective_value(const QuadraticProgram& qp, const Vec& x);

// Shor relaxation in S^{n+1}: A_0 = E00 with b_0 = 1, A_i = [[alpha_i, a_i^T],
// [a_i, A_i]] with b_i = 0, cost [[0, c^T/2],[c/2, C]].
SdpProblem embed_shor(const QuadraticProgram& qp);

// Purely quadratic data (all a_i = 0 and expanded c = 0): such programs are
// solved in S^n with X = x x^T instead of the inhomogeneous Shor embedding.
bool is_homogeneous(const QuadraticProgram& qp);

// Homogeneous embedding in S^n: constraints A_i . X = -alpha_i, cost C.
SdpProblem embed_homogeneous(const QuadraticProgram& qp);

// Index of the nearest point, by Euclidean distance.
int nearest_point_index(const std::vector<Vec>& points, const Vec& u);

}  // namespace sdpexact

#endif
