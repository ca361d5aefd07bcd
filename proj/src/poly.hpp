#ifndef SDPEXACT_POLY_HPP
#define SDPEXACT_POLY_HPP

// Dense multivariate polynomials, numerical vanishing-ideal interpolation,
// and the embedded golden boundary polynomials.

#include "numkit.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sdpexact {

struct DensePolynomial {
    int nvars = 0;
    // exponent tuple -> coefficient; zero coefficients are never stored
    std::map<std::vector<int>, double> terms;

    void add_term(const std::vector<int>& exp, double coef);
    double eval(const Vec& u) const;
    // sum of |coef| * prod |u_i|^e_i; the natural residual scale for "does
    // eval(u) vanish up to cancellation" tests
    double eval_abs(const Vec& u) const;
    int total_degree() const;
    size_t term_count() const { return terms.size(); }

    // substitute u_i = center_i + half_i * y_i, returning the polynomial in y
    DensePolynomial substitute_affine(const Vec& center, const Vec& half) const;
    // inverse direction: given p(y) over the scaled box, return q(u) =
    // p((u - center)/half)
    DensePolynomial unscale_from_box(const Vec& center, const Vec& half) const;

    // divide by the largest-|coefficient| term (sign included)
    void normalize();
};

// --- golden boundary polynomials -------------------------------------------

enum class GoldenName { TwistedCubic8, ThreeQuadrics9, SteinerQuartic };

struct GoldenPolynomial {
    GoldenName name;
    std::string label;
    DensePolynomial poly;
    int degree;
};

const GoldenPolynomial& golden_polynomial(GoldenName name);

// The four planes bounding the origin cell of the five-points instance,
// written as degree-one polynomials that vanish on the planes.
const std::vector<DensePolynomial>& five_point_planes();

// --- vanishing-ideal interpolation -----------------------------------------

// All exponent tuples in n variables with total degree <= deg, graded
// lexicographic order.
std::vector<std::vector<int>> monomials_up_to(int nvars, int deg);

struct VanishingResult {
    int nullity = 0;
    Vec singular_values;  // ascending
    // present when nullity >= 1: the smallest singular direction, mapped back
    // to the original (unscaled) coordinates and normalized
    std::optional<DensePolynomial> candidate;
};

// Builds the monomial evaluation matrix at the samples (affinely mapped into
// [-1,1]^n first) and counts singular values below 1e-8 * largest.
// Requires #samples >= 2 * C(n+degree, degree); throws
// Error("InsufficientSamples") otherwise.
VanishingResult vanishing_dimension(const std::vector<Vec>& samples, int degree);

// Smallest d <= d_max with nullity >= 1; nullopt when none.
// Requires d_max <= 10.
std::optional<int> minimal_vanishing_degree(const std::vector<Vec>& samples, int d_max);

// Continued-fraction rational approximation for display (denominator bound
// 1e6); returns false when no stable reconstruction exists.
bool approx_rational(double x, long long max_den, long long& num, long long& den);

}  // namespace sdpexact

#endif
