#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gallery.hpp"
#include "poly.hpp"
#include "region.hpp"
#include "rng.hpp"
#include "test_instances.hpp"

#include <cmath>

using namespace sdpexact;

TEST_CASE("golden polynomial point checks") {
    const DensePolynomial& steiner = golden_polynomial(GoldenName::SteinerQuartic).poly;
    CHECK(steiner.eval({0, 0, 0}) == 0.0);
    CHECK(steiner.eval({1, 1, -1}) == 0.0);  // 1 + 1 + 1 - 3
    CHECK(steiner.total_degree() == 4);

    const DensePolynomial& p8 = golden_polynomial(GoldenName::TwistedCubic8).poly;
    CHECK(std::fabs(p8.eval({0, 0.5, 0})) < 1e-14);  // u2-only terms telescope at 1/2
    CHECK(p8.total_degree() == 8);
    CHECK(p8.term_count() == 51);

    const DensePolynomial& p9 = golden_polynomial(GoldenName::ThreeQuadrics9).poly;
    CHECK(p9.total_degree() == 9);
    CHECK(p9.term_count() == 59);

    REQUIRE(five_point_planes().size() == 4);
    for (const auto& plane : five_point_planes()) CHECK(plane.total_degree() == 1);
    // the planes pass through the tangency midpoints (+-1/2,...) of the origin cell
    CHECK(five_point_planes()[3].eval({0.5, 0.5, 0.5}) == 0.0);
}

TEST_CASE("eval_abs dominates eval") {
    Rng rng(8);
    const DensePolynomial& p8 = golden_polynomial(GoldenName::TwistedCubic8).poly;
    for (int trial = 0; trial < 20; ++trial) {
        Vec u = {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        CHECK(std::fabs(p8.eval(u)) <= p8.eval_abs(u) + 1e-12);
    }
}

TEST_CASE("affine substitution composes correctly") {
    Rng rng(15);
    const DensePolynomial& p9 = golden_polynomial(GoldenName::ThreeQuadrics9).poly;
    Vec center = {0.3, -0.7, 1.1};
    Vec half = {2.0, 0.5, 1.5};
    DensePolynomial q = p9.substitute_affine(center, half);
    for (int trial = 0; trial < 10; ++trial) {
        Vec y = {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        Vec u(3);
        for (int i = 0; i < 3; ++i) u[i] = center[i] + half[i] * y[i];
        double a = q.eval(y), b = p9.eval(u);
        CHECK(a == doctest::Approx(b).epsilon(1e-9).scale(1 + std::fabs(b)));
    }
    DensePolynomial back = q.unscale_from_box(center, half);
    for (int trial = 0; trial < 10; ++trial) {
        Vec u = {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        CHECK(back.eval(u) ==
              doctest::Approx(p9.eval(u)).epsilon(1e-8).scale(1 + std::fabs(p9.eval(u))));
    }
}

TEST_CASE("monomial count") {
    CHECK(monomials_up_to(3, 8).size() == 165);  // C(11,3)
    CHECK(monomials_up_to(2, 2).size() == 6);
    CHECK(monomials_up_to(1, 5).size() == 6);
}

TEST_CASE("vanishing dimension of circle samples") {
    Rng rng(2);
    std::vector<Vec> pts;
    for (int i = 0; i < 100; ++i) {
        double t = rng.uniform(0, 6.283185307179586);
        pts.push_back({std::cos(t), std::sin(t)});
    }
    VanishingResult r = vanishing_dimension(pts, 2);
    CHECK(r.nullity == 1);
    REQUIRE(r.candidate);
    // candidate proportional to u1^2 + u2^2 - 1
    DensePolynomial c = *r.candidate;
    double s = c.terms.at({2, 0});
    CHECK(c.terms.at({0, 2}) / s == doctest::Approx(1).epsilon(1e-6));
    CHECK(c.terms.at({0, 0}) / s == doctest::Approx(-1).epsilon(1e-6));
}

TEST_CASE("no conic through generic points") {
    Rng rng(3);
    std::vector<Vec> pts;
    for (int i = 0; i < 100; ++i) pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
    CHECK(vanishing_dimension(pts, 2).nullity == 0);
    CHECK(!minimal_vanishing_degree(pts, 3).has_value());
}

TEST_CASE("insufficient samples are rejected") {
    std::vector<Vec> pts = {{0, 0}, {1, 0}, {0, 1}};
    CHECK_THROWS_AS(vanishing_dimension(pts, 2), Error);
    CHECK_THROWS_AS(minimal_vanishing_degree(pts, 11), Error);
}

TEST_CASE("twisted cubic boundary interpolates at degree eight") {
    const ExampleDescriptor* e = find_example("twisted-cubic");
    auto samples = sample_boundary(e->qp, e->variety(), 400, 20240601);
    std::vector<Vec> pts;
    for (const auto& s : samples) pts.push_back(s.u);

    CHECK(vanishing_dimension(pts, 7).nullity == 0);
    VanishingResult r8 = vanishing_dimension(pts, 8);
    CHECK(r8.nullity >= 1);
    auto mindeg = minimal_vanishing_degree(pts, 8);
    REQUIRE(mindeg);
    CHECK(*mindeg == 8);

    // cross-check the candidate against the golden polynomial up to scale
    REQUIRE(r8.candidate);
    const DensePolynomial& p8 = golden_polynomial(GoldenName::TwistedCubic8).poly;
    Rng rng(5);
    double num = 0, den = 0;
    for (int i = 0; i < 60; ++i) {
        Vec u = {rng.uniform(-1.5, 1.5), rng.uniform(-0.5, 2), rng.uniform(-1.5, 1.5)};
        double a = r8.candidate->eval(u), b = p8.eval(u);
        num += a * b;
        den += b * b;
    }
    double ratio = num / den;
    for (int i = 0; i < 30; ++i) {
        Vec u = {rng.uniform(-1.5, 1.5), rng.uniform(-0.5, 2), rng.uniform(-1.5, 1.5)};
        double a = r8.candidate->eval(u), b = ratio * p8.eval(u);
        CHECK(a == doctest::Approx(b).epsilon(2e-4).scale(1 + p8.eval_abs(u) * std::fabs(ratio)));
    }
}

TEST_CASE("interpolation soundness on held-out samples") {
    const ExampleDescriptor* e = find_example("twisted-cubic");
    auto samples = sample_boundary(e->qp, e->variety(), 700, 77);
    std::vector<Vec> train, held;
    for (size_t i = 0; i < samples.size(); ++i)
        (i % 2 == 0 ? train : held).push_back(samples[i].u);
    VanishingResult r = vanishing_dimension(train, 8);
    REQUIRE(r.nullity >= 1);
    REQUIRE(r.candidate);
    for (const auto& u : held) {
        double v = r.candidate->eval(u);
        double scale = r.candidate->eval_abs(u) + 1.0;
        CHECK(std::fabs(v) <= 1e-6 * scale);
    }
}

TEST_CASE("recovered minimal degree is scale invariant") {
    Rng rng(21);
    std::vector<Vec> pts;
    for (int i = 0; i < 80; ++i) {
        double t = rng.uniform(0, 6.283185307179586);
        pts.push_back({std::cos(t), std::sin(t)});
    }
    auto d1 = minimal_vanishing_degree(pts, 4);
    std::vector<Vec> scaled = pts;
    for (auto& p : scaled)
        for (auto& v : p) v *= 37.5;
    auto d2 = minimal_vanishing_degree(scaled, 4);
    REQUIRE(d1);
    REQUIRE(d2);
    CHECK(*d1 == 2);
    CHECK(*d2 == 2);
}

TEST_CASE("three-quadrics fold samples vanish at degree nine and not below") {
    QuadraticProgram qp = testing::twisted_cubic_three();
    Rng rng(31337);
    std::vector<Vec> pts;
    const DensePolynomial& p9 = golden_polynomial(GoldenName::ThreeQuadrics9).poly;
    int k = 0, strays = 0;
    while (pts.size() < 450 && k < 3000) {
        double t = rng.uniform(-1.0, 1.0);
        Vec x0 = {t, t * t, t * t * t};
        auto bs = shadow_fold_sample(qp, x0, Rng::mix(999, k));
        ++k;
        if (!bs) continue;
        // fold samples land on the cut locus surface
        double v = p9.eval(bs->u);
        double scale = p9.eval_abs(bs->u) + 1.0;
        if (std::fabs(v) > 1e-8 * scale) {
            ++strays;
            continue;
        }
        pts.push_back(bs->u);
    }
    REQUIRE(pts.size() >= 440);
    CHECK(strays <= 5);

    CHECK(vanishing_dimension(pts, 8).nullity == 0);
    VanishingResult r9 = vanishing_dimension(pts, 9);
    CHECK(r9.nullity >= 1);
    auto mindeg = minimal_vanishing_degree(pts, 9);
    REQUIRE(mindeg);
    CHECK(*mindeg == 9);
}

TEST_CASE("rational display reconstruction") {
    long long num, den;
    REQUIRE(approx_rational(0.5, 1000000, num, den));
    CHECK(num == 1);
    CHECK(den == 2);
    REQUIRE(approx_rational(-2.25, 1000000, num, den));
    CHECK(num == -9);
    CHECK(den == 4);
    REQUIRE(approx_rational(3.0, 1000000, num, den));
    CHECK(num == 3);
    CHECK(den == 1);
}
