#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exactness.hpp"
#include "gallery.hpp"
#include "rng.hpp"
#include "test_instances.hpp"

#include <cmath>

using namespace sdpexact;

namespace {

QuadraticProgram with_ed(QuadraticProgram qp, Vec u) {
    qp.objective = Objective::ed(std::move(u));
    return qp;
}

}  // namespace

TEST_CASE("four-point instance at u on the variety") {
    ExactnessCertificate c = check_exact_sdp(with_ed(testing::four_points(), {0, 0}));
    CHECK(c.verdict == Verdict::Exact);
    REQUIRE(c.minimizer);
    CHECK(std::fabs((*c.minimizer)[0]) < 1e-5);
    CHECK(std::fabs((*c.minimizer)[1]) < 1e-5);
    REQUIRE(c.lambda);
    CHECK(norm_inf(*c.lambda) < 1e-5);
    CHECK(c.rank_X == 1);
    CHECK(c.rank_Y == 2);
    CHECK(c.strictly_complementary);
    CHECK(c.hessian_min_eig > 0);
}

TEST_CASE("four-point instance at the equidistant interior point") {
    // (1,1) ties between (0,1) and (1,0): grid oracle places it off the
    // exact region, the solved relaxation has rank_X >= 2
    ExactnessCertificate c = check_exact_sdp(with_ed(testing::four_points(), {1, 1}));
    CHECK(c.verdict == Verdict::NotExact);
    CHECK(c.rank_X >= 2);
}

TEST_CASE("maxcut with weights (1,2,3) is exact") {
    ExactnessCertificate c = check_exact_sdp(testing::maxcut3({1, 2, 3}));
    CHECK(c.verdict == Verdict::Exact);
    REQUIRE(c.minimizer);
    Vec s = *c.minimizer;
    CHECK(std::fabs(std::fabs(s[0]) - 1) < 1e-5);
    // cut (1,1,-1) up to sign; the oracle's Laplacian is PSD with rank 2
    CHECK(s[0] * s[1] > 0);
    CHECK(s[0] * s[2] < 0);
}

TEST_CASE("maxcut verdict agrees with the Laplacian oracle across random weights") {
    Rng rng(2025);
    int boundary = 0;
    for (int trial = 0; trial < 40; ++trial) {
        Vec w = {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        MaxcutOracle oracle = maxcut3_oracle(w);
        ExactnessCertificate c = check_exact_sdp(testing::maxcut3(w));
        if (c.verdict == Verdict::Boundary || c.verdict == Verdict::Inconclusive) {
            ++boundary;
            continue;
        }
        CHECK((c.verdict == Verdict::Exact) == oracle.exact);
    }
    CHECK(boundary <= 2);
}

TEST_CASE("certify_at_point on the twisted cubic at the origin") {
    ExactnessCertificate c = certify_at_point(with_ed(testing::twisted_cubic(), {0, 0, 0}),
                                              {0, 0, 0});
    CHECK(c.verdict == Verdict::Exact);
    REQUIRE(c.lambda);
    CHECK(norm_inf(*c.lambda) < 1e-9);
    CHECK(c.hessian_min_eig == doctest::Approx(1).epsilon(1e-9));
}

TEST_CASE("certify_at_point at the bisector of x^2 = 1") {
    QuadraticProgram qp = testing::coordinate_squares(1);
    qp.objective = Objective::ed({0.0});
    ExactnessCertificate c = certify_at_point(qp, {1.0});
    CHECK(c.verdict == Verdict::Boundary);
    REQUIRE(c.lambda);
    CHECK((*c.lambda)[0] == doctest::Approx(1).epsilon(1e-9));
    CHECK(std::fabs(c.hessian_min_eig) < 1e-9);
}

TEST_CASE("certify_at_point on the five-point instance at the origin") {
    ExactnessCertificate c = certify_at_point(testing::five_points(), {0, 0, 0});
    CHECK(c.verdict == Verdict::Exact);
    CHECK(c.hessian_min_eig > 0);
}

TEST_CASE("certify_at_point rejects off-variety points") {
    CHECK_THROWS_AS(certify_at_point(testing::four_points(), {0.5, 0.5}), Error);
}

TEST_CASE("ed_critical_points on a circle") {
    QuadraticProgram qp = with_ed(testing::circle(), {0.3, 0.0});
    CriticalPointSet s = ed_critical_points(qp, 60, 7);
    REQUIRE(s.points.size() == 2);
    // sorted by objective value: nearest first
    CHECK(s.points[0].x[0] == doctest::Approx(1).epsilon(1e-8));
    CHECK(s.points[0].x[1] == doctest::Approx(0).epsilon(1e-7));
    CHECK(s.points[1].x[0] == doctest::Approx(-1).epsilon(1e-8));
}

TEST_CASE("ed_critical_points on an ellipse attains the bound") {
    QuadraticProgram qp = with_ed(testing::ellipse(2, 1), {0.1, 0.1});
    CriticalPointSet s = ed_critical_points(qp, 120, 11);
    CHECK(s.bound == 4);
    CHECK(s.points.size() == 4);
}

TEST_CASE("ed_critical_points of a finite variety are the variety points") {
    QuadraticProgram qp = with_ed(testing::four_points(), {0.4, 0.7});
    CriticalPointSet s = ed_critical_points(qp, 200, 13);
    REQUIRE(s.points.size() == 4);
    CHECK(static_cast<long long>(s.points.size()) <= s.bound);
    std::vector<Vec> expected = {{0, 0}, {0, 1}, {1, 0}, {2, 2}};
    for (const auto& e : expected) {
        bool found = false;
        for (const auto& cp : s.points) {
            if (std::fabs(cp.x[0] - e[0]) < 1e-7 && std::fabs(cp.x[1] - e[1]) < 1e-7)
                found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("route agreement on the four-point instance") {
    QuadraticProgram base = testing::four_points();
    std::vector<Vec> pts = {{0, 0}, {0, 1}, {1, 0}, {2, 2}};
    Rng rng(321);
    int checked = 0;
    for (int trial = 0; trial < 25; ++trial) {
        Vec u = {rng.uniform(-1, 3), rng.uniform(-1, 3)};
        QuadraticProgram qp = with_ed(base, u);
        ExactnessCertificate sdp_route = check_exact_sdp(qp);
        if (sdp_route.verdict == Verdict::Boundary ||
            sdp_route.verdict == Verdict::Inconclusive)
            continue;

        // point route: exact iff the *nearest* point certifies
        int nearest = nearest_point_index(pts, u);
        ExactnessCertificate point_route = certify_at_point(qp, pts[nearest]);
        if (point_route.verdict == Verdict::Boundary) continue;
        ++checked;
        CHECK((sdp_route.verdict == Verdict::Exact) ==
              (point_route.verdict == Verdict::Exact));
        if (sdp_route.verdict == Verdict::Exact) {
            REQUIRE(sdp_route.minimizer);
            CHECK(std::fabs((*sdp_route.minimizer)[0] - pts[nearest][0]) < 1e-5);
            CHECK(std::fabs((*sdp_route.minimizer)[1] - pts[nearest][1]) < 1e-5);
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("Voronoi containment of exact minimizers") {
    QuadraticProgram base = testing::four_points();
    std::vector<Vec> pts = {{0, 0}, {0, 1}, {1, 0}, {2, 2}};
    Rng rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        Vec u = {rng.uniform(-1, 3), rng.uniform(-1, 3)};
        ExactnessCertificate c = check_exact_sdp(with_ed(base, u));
        if (c.verdict != Verdict::Exact) continue;
        REQUIRE(c.minimizer);
        int nearest = nearest_point_index(pts, u);
        CHECK(std::fabs((*c.minimizer)[0] - pts[nearest][0]) < 1e-5);
        CHECK(std::fabs((*c.minimizer)[1] - pts[nearest][1]) < 1e-5);
    }
}

TEST_CASE("constraint scaling leaves the verdict invariant") {
    Rng rng(9001);
    QuadraticProgram base = testing::four_points();
    std::vector<Vec> pts = {{0, 0}, {0, 1}, {1, 0}, {2, 2}};
    for (int trial = 0; trial < 8; ++trial) {
        Vec u = {rng.uniform(-1, 3), rng.uniform(-1, 3)};
        QuadraticProgram qp = with_ed(base, u);
        QuadraticProgram scaled = qp;
        Vec s(qp.m());
        for (int k = 0; k < qp.m(); ++k) {
            s[k] = rng.uniform(0.2, 3.0) * (rng.uniform01() < 0.3 ? -1.0 : 1.0);
            scaled.constraints[k].A *= s[k];
            for (auto& v : scaled.constraints[k].a) v *= s[k];
            scaled.constraints[k].alpha *= s[k];
        }
        ExactnessCertificate c1 = check_exact_sdp(qp);
        ExactnessCertificate c2 = check_exact_sdp(scaled);
        if (c1.verdict == Verdict::Boundary || c2.verdict == Verdict::Boundary) continue;
        CHECK(c1.verdict == c2.verdict);

        // multipliers transform as lambda_i -> lambda_i / s_i on the variety
        int nearest = nearest_point_index(pts, u);
        ExactnessCertificate p1 = certify_at_point(qp, pts[nearest]);
        ExactnessCertificate p2 = certify_at_point(scaled, pts[nearest]);
        REQUIRE(p1.lambda);
        REQUIRE(p2.lambda);
        for (int k = 0; k < qp.m(); ++k)
            CHECK((*p2.lambda)[k] ==
                  doctest::Approx((*p1.lambda)[k] / s[k]).epsilon(1e-6).scale(1.0));
    }
}
