#ifndef SDPEXACT_DEGREES_HPP
#define SDPEXACT_DEGREES_HPP

// Closed-form degree calculators for rank-one / SDP-exact boundaries, plus
// the published reference tables they are checked against.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sdpexact {

using i64 = std::int64_t;

i64 binomial(int n, int k);

// delta(l, d, d-1) = 2^{l-1} C(d,l): algebraic degree of rank-one SDP
// solutions.  Domain 1 <= l <= d.
i64 delta_rank_one(int l, int d);

// Rank-one boundary degree: C(d+1,3) for l = 2, else
// 2^{l-1}(d-1)C(d,l) - 2^l C(d,l+1).  Domain 2 <= l <= d.
i64 beta_sdp(int l, int d);

// Algebraic degree of QP: 2^m C(n,m).  Domain 0 <= m <= n.
i64 qp_alg_degree(int m, int n);

// Boundary degree of the QP exact region: 2^m (n C(n,m) - C(n,m+1)).
// Domain 1 <= m <= n; equals 2^n * n when m == n.
i64 beta_qp(int m, int n);

// ED degree of a generic complete intersection: 2^m C(n,m).
i64 ed_degree_ci(int m, int n);

// Boundary degree for the ED problem: m 2^m C(n,m) / deg_pi.  The m = 1
// case always has deg_pi = 2 (and the result is the n hyperplanes).
// deg_pi = 0 selects the default (1 for m >= 2, 2 for m = 1).
i64 beta_ed(int m, int n, int deg_pi = 0);

// Algebraic degree of the linear-objective problem: 2^m C(n-1,m-1).
i64 lin_alg_degree(int m, int n);

// Boundary degree for the linear-objective problem: 2^m n C(n-2,m-2)/deg_pi.
// Domain 2 <= m <= n.
i64 beta_lin(int m, int n, int deg_pi = 1);

// Max-Cut boundary degree (n-1) 2^{n-1}.
i64 maxcut_beta(int n);

// Polar degrees of the Veronese: (2^{l-1} C(d,l)) for l = 1..d.
std::vector<i64> polar_degrees(int d);

// Degree of V x W under the Segre embedding.
i64 segre_degree(i64 deg_v, int dim_v, i64 deg_w, int dim_w);

// Ranks r admissible for an optimal dual matrix of a generic SDP with l
// constraints on d x d matrices.
std::vector<int> pataki_range(int l, int d);

// Sum of delta(l,d,r) over the Pataki range.  Known values (2,3) -> 6 and
// (3,3) -> 8 are stored; beyond these only the single-rank case r = d-1 is
// supported and everything else throws Error("UnknownDeltaStar").
i64 delta_star(int l, int d);

// Expected boundary degree C(n-1,n-c) * deg_v * delta_star(p+1,n) for a
// codimension-c variety of degree deg_v cut out by c+p quadrics.  Reported
// as an estimate, not ground truth.
i64 expected_degree(int n, int c, int p, i64 deg_v);

enum class TableName {
    SdpAlgebraic,
    SdpBoundary,
    QpAlgebraic,
    QpBoundary,
    EdDegree,
    EdBoundary,
};

struct TableDiscrepancy {
    int row, col;
    i64 printed;
    i64 formula;
    std::string note;
};

struct DegreeTable {
    TableName name;
    std::string title;
    std::string row_label, col_label;
    std::vector<int> rows, cols;
    std::map<std::pair<int, int>, i64> entries;  // published values
    std::vector<TableDiscrepancy> discrepancies;
    std::string source;

    // Formula value for a cell.
    i64 formula(int row, int col) const;
    bool has(int row, int col) const { return entries.count({row, col}) > 0; }
};

const DegreeTable& golden_table(TableName name);
std::vector<TableName> all_tables();

// Plain-text rendering with discrepancy footnotes, as printed by the CLI.
std::string render_table(const DegreeTable& t);

}  // namespace sdpexact

#endif
