#ifndef SDPEXACT_GALLERY_HPP
#define SDPEXACT_GALLERY_HPP

// Packaged example instances; each mirrors one of the worked configurations
// (Voronoi four points, Max-Cut, vertex cube, twisted cubic with two or three
// quadrics, six points, five points, hyperbola cut locus, two hyperboloids).

#include "model.hpp"
#include "poly.hpp"
#include "region.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace sdpexact {

struct ExampleDescriptor {
    std::string name;
    std::vector<std::string> aliases;
    std::string description;
    QuadraticProgram qp;  // ED objective with u = 0 unless stated otherwise
    std::vector<Vec> points;
    std::function<Vec(double)> param;
    double t_lo = 0.0, t_hi = 0.0;
    std::optional<GoldenName> golden;

    bool has_param() const { return static_cast<bool>(param); }
    VarietyAccess variety() const;
};

const std::vector<ExampleDescriptor>& gallery();
const ExampleDescriptor* find_example(const std::string& name);
std::vector<std::string> gallery_names();

// Convenience constructors, also used by tests.
QuadraticProgram four_points_qp();
QuadraticProgram maxcut3_qp(const Vec& weights);  // weights (c12, c13, c23)
QuadraticProgram coordinate_squares_qp(int n);    // f_i = x_i^2 - 1, ED at u=0
QuadraticProgram twisted_cubic_qp();
QuadraticProgram twisted_cubic_three_qp();        // adds x1 x3 - x2^2
QuadraticProgram six_points_qp();
QuadraticProgram five_points_qp();
QuadraticProgram hyperbola_qp();
QuadraticProgram ellipse_qp(double a2, double b2);  // x1^2/a2 + x2^2/b2 = 1
QuadraticProgram circle_qp();
QuadraticProgram two_hyperboloids_qp();

// Points on the two-hyperboloids curve, traced from a known intersection
// point by tangent continuation.  Deterministic.
std::vector<Vec> trace_two_hyperboloids(int count);

// Brute-force Max-Cut oracle: enumerates cuts, returns the cut value minimum
// and whether the Laplacian certificate L(D_s C D_s) >= 0 holds at an optimal
// cut (the membership test for the Max-Cut exact region).
struct MaxcutOracle {
    double best_value;
    Vec best_cut;
    bool exact;
    bool tie;  // distinct optimal cuts beyond the global sign flip
};
MaxcutOracle maxcut3_oracle(const Vec& weights, double tol = 1e-9);

}  // namespace sdpexact

#endif
