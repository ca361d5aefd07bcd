#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "degrees.hpp"
#include "numkit.hpp"

using namespace sdpexact;

TEST_CASE("delta_rank_one") {
    CHECK(delta_rank_one(3, 3) == 4);
    CHECK(delta_rank_one(2, 5) == 20);
    for (int d = 1; d <= 12; ++d) CHECK(delta_rank_one(1, d) == d);
    CHECK_THROWS_AS(delta_rank_one(4, 3), Error);
}

TEST_CASE("beta_sdp") {
    CHECK(beta_sdp(3, 4) == 40);
    CHECK(beta_sdp(2, 3) == 4);      // C(4,3)
    CHECK(beta_sdp(3, 3) == 8);      // (3-1) 2^{3-1}
    CHECK(beta_sdp(2, 7) == 56);     // formula value at the flagged table cell
    CHECK_THROWS_AS(beta_sdp(1, 3), Error);
}

TEST_CASE("qp_alg_degree and beta_qp") {
    CHECK(qp_alg_degree(2, 3) == 12);
    CHECK(qp_alg_degree(3, 3) == 8);
    CHECK(qp_alg_degree(0, 5) == 1);
    CHECK(beta_qp(2, 3) == 32);
    CHECK(beta_qp(3, 3) == 24);
    CHECK(beta_qp(1, 2) == 6);
    for (int n = 1; n <= 12; ++n) CHECK(beta_qp(n, n) == (i64{1} << n) * n);
}

TEST_CASE("ED degrees and boundary degrees") {
    CHECK(ed_degree_ci(2, 3) == 12);
    CHECK(beta_ed(2, 3) == 24);
    CHECK(beta_ed(3, 3) == 24);
    CHECK(beta_ed(1, 3) == 3);  // n hyperplanes, deg_pi forced to 2
    CHECK(beta_ed(1, 7) == 7);
    CHECK_THROWS_AS(beta_ed(2, 3, 5), Error);  // 5 does not divide 24
}

TEST_CASE("linear objective degrees") {
    CHECK(lin_alg_degree(2, 3) == 8);  // 2^2 C(2,1)
    CHECK(beta_lin(2, 3) == 12);
    // n = 2: four cones with eight boundary rays, eight points in P^1
    CHECK(beta_lin(2, 2) == 8);
    CHECK_THROWS_AS(beta_lin(1, 3), Error);
}

TEST_CASE("maxcut, polar, segre") {
    CHECK(maxcut_beta(3) == 8);
    CHECK(maxcut_beta(4) == 24);
    auto polar = polar_degrees(3);
    REQUIRE(polar.size() == 3);
    CHECK(polar[0] == 3);
    CHECK(polar[1] == 6);
    CHECK(polar[2] == 4);
    CHECK(segre_degree(3, 1, 4, 1) == 24);
}

TEST_CASE("delta_star and expected_degree") {
    CHECK(delta_star(2, 3) == 6);
    CHECK(delta_star(3, 3) == 8);
    // l = 2: Pataki range is the single rank d-1, so delta* = delta(2,d,d-1)
    CHECK(delta_star(2, 4) == delta_rank_one(2, 4));
    CHECK_THROWS_AS(delta_star(4, 5), Error);

    CHECK(expected_degree(3, 3, 2, 5) == 40);   // five points
    CHECK(expected_degree(3, 3, 1, 6) == 36);   // six points
    CHECK(expected_degree(3, 2, 0, 4) == 2 * 4 * delta_star(1, 3));
}

TEST_CASE("pataki range") {
    auto r23 = pataki_range(2, 3);
    REQUIRE(r23.size() == 1);
    CHECK(r23[0] == 2);
    auto r33 = pataki_range(3, 3);
    REQUIRE(r33.size() == 2);
    CHECK(r33[0] == 1);
    CHECK(r33[1] == 2);
}

TEST_CASE("cross-formula identities") {
    // beta(l,d) = (d-1) delta(l,d,d-1) - delta(l+1,d,d-1) for 3 <= l < d <= 12
    for (int d = 4; d <= 12; ++d)
        for (int l = 3; l < d; ++l)
            CHECK(beta_sdp(l, d) == (d - 1) * delta_rank_one(l, d) - delta_rank_one(l + 1, d));

    // beta_QP(m,n) = n 2^m C(n,m) - 2^m C(n,m+1)
    for (int n = 1; n <= 12; ++n)
        for (int m = 1; m <= n; ++m)
            CHECK(beta_qp(m, n) ==
                  i64{n} * qp_alg_degree(m, n) - (i64{1} << m) * binomial(n, m + 1));

    // beta_QP identity via the next algebraic degree: note
    // 2^m C(n,m+1) = qp_alg_degree(m+1,n)/2
    for (int n = 2; n <= 12; ++n)
        for (int m = 1; m < n; ++m)
            CHECK(beta_qp(m, n) == i64{n} * qp_alg_degree(m, n) - qp_alg_degree(m + 1, n) / 2);

    // beta_ED(m,n) = m 2^m C(n,m) for 2 <= m <= n <= 12
    for (int n = 2; n <= 12; ++n)
        for (int m = 2; m <= n; ++m) CHECK(beta_ed(m, n) == i64{m} * ed_degree_ci(m, n));
}

TEST_CASE("golden tables match the formulas except the flagged cell") {
    for (TableName name : all_tables()) {
        const DegreeTable& t = golden_table(name);
        for (int r : t.rows)
            for (int c : t.cols) {
                if (!t.has(r, c)) continue;
                bool flagged = false;
                for (const auto& disc : t.discrepancies)
                    if (disc.row == r && disc.col == c) {
                        flagged = true;
                        CHECK(t.entries.at({r, c}) == disc.printed);
                        CHECK(t.formula(r, c) == disc.formula);
                    }
                if (!flagged) CHECK(t.entries.at({r, c}) == t.formula(r, c));
            }
    }
    // exactly one discrepancy in the whole golden set: Table 1 right, (2,7)
    int count = 0;
    for (TableName name : all_tables()) count += golden_table(name).discrepancies.size();
    CHECK(count == 1);
    const auto& d = golden_table(TableName::SdpBoundary).discrepancies[0];
    CHECK(d.row == 2);
    CHECK(d.col == 7);
    CHECK(d.printed == 66);
    CHECK(d.formula == 56);
}

TEST_CASE("render_table marks the discrepancy") {
    std::string s = render_table(golden_table(TableName::SdpBoundary));
    CHECK(s.find("66*") != std::string::npos);
    CHECK(s.find("56") != std::string::npos);
}
