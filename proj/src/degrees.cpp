#include "degrees.hpp"

#include "numkit.hpp"

#include <sstream>

namespace sdpexact {

i64 binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    i64 r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {
i64 pow2(int e) { return i64{1} << e; }

void require(bool ok, const char* what) {
    if (!ok) throw Error("domain", what);
}
}  // namespace

i64 delta_rank_one(int l, int d) {
    require(1 <= l && l <= d, "delta_rank_one needs 1 <= l <= d");
    return pow2(l - 1) * binomial(d, l);
}

i64 beta_sdp(int l, int d) {
    require(2 <= l && l <= d, "beta_sdp needs 2 <= l <= d");
    if (l == 2) return binomial(d + 1, 3);
    return pow2(l - 1) * (d - 1) * binomial(d, l) - pow2(l) * binomial(d, l + 1);
}

i64 qp_alg_degree(int m, int n) {
    require(0 <= m && m <= n, "qp_alg_degree needs 0 <= m <= n");
    return pow2(m) * binomial(n, m);
}

i64 beta_qp(int m, int n) {
    require(1 <= m && m <= n, "beta_qp needs 1 <= m <= n");
    return pow2(m) * (i64{n} * binomial(n, m) - binomial(n, m + 1));
}

i64 ed_degree_ci(int m, int n) {
    require(1 <= m && m <= n, "ed_degree_ci needs 1 <= m <= n");
    return pow2(m) * binomial(n, m);
}

i64 beta_ed(int m, int n, int deg_pi) {
    require(1 <= m && m <= n, "beta_ed needs 1 <= m <= n");
    if (m == 1) deg_pi = 2;  // the fibers of psi are 2-to-1 over each hyperplane
    if (deg_pi == 0) deg_pi = 1;
    require(deg_pi >= 1, "beta_ed needs deg_pi >= 1");
    i64 num = i64{m} * pow2(m) * binomial(n, m);
    require(num % deg_pi == 0, "beta_ed: deg_pi must divide m 2^m C(n,m)");
    return num / deg_pi;
}

i64 lin_alg_degree(int m, int n) {
    require(1 <= m && m <= n, "lin_alg_degree needs 1 <= m <= n");
    return pow2(m) * binomial(n - 1, m - 1);
}

i64 beta_lin(int m, int n, int deg_pi) {
    require(2 <= m && m <= n, "beta_lin needs 2 <= m <= n");
    require(deg_pi >= 1, "beta_lin needs deg_pi >= 1");
    i64 num = pow2(m) * i64{n} * binomial(n - 2, m - 2);
    require(num % deg_pi == 0, "beta_lin: deg_pi must divide the numerator");
    return num / deg_pi;
}

i64 maxcut_beta(int n) {
    require(n >= 2, "maxcut_beta needs n >= 2");
    return i64{n - 1} * pow2(n - 1);
}

std::vector<i64> polar_degrees(int d) {
    require(d >= 1, "polar_degrees needs d >= 1");
    std::vector<i64> out;
    for (int l = 1; l <= d; ++l) out.push_back(delta_rank_one(l, d));
    return out;
}

i64 segre_degree(i64 deg_v, int dim_v, i64 deg_w, int dim_w) {
    require(deg_v >= 1 && deg_w >= 1 && dim_v >= 0 && dim_w >= 0, "segre_degree domain");
    return deg_v * deg_w * binomial(dim_v + dim_w, dim_w);
}

std::vector<int> pataki_range(int l, int d) {
    require(1 <= l && d >= 1, "pataki_range domain");
    std::vector<int> out;
    for (int r = 0; r <= d; ++r) {
        if (binomial(d - r + 1, 2) <= l && binomial(r + 1, 2) <= binomial(d + 1, 2) - l)
            out.push_back(r);
    }
    return out;
}

i64 delta_star(int l, int d) {
    require(1 <= l && l <= d, "delta_star needs 1 <= l <= d");
    if (l == 2 && d == 3) return 6;
    if (l == 3 && d == 3) return 8;
    std::vector<int> range = pataki_range(l, d);
    if (range.size() == 1 && range[0] == d - 1) return delta_rank_one(l, d);
    throw Error("UnknownDeltaStar",
                "delta(l,d,*) outside the stored values needs the general rank formula");
}

i64 expected_degree(int n, int c, int p, i64 deg_v) {
    require(1 <= c && c <= n && p >= 0 && deg_v >= 1, "expected_degree domain");
    return binomial(n - 1, n - c) * deg_v * delta_star(p + 1, n);
}

namespace {

DegreeTable make_table(TableName name) {
    DegreeTable t;
    t.name = name;
    switch (name) {
        case TableName::SdpAlgebraic: {
            t.title = "Algebraic degrees delta(l,d,d-1)";
            t.row_label = "l";
            t.col_label = "d";
            t.rows = {2, 3, 4, 5, 6, 7};
            t.cols = {3, 4, 5, 6, 7};
            const i64 v[6][5] = {
                {6, 12, 20, 30, 42},
                {4, 16, 40, 80, 140},
                {0, 8, 40, 120, 280},
                {0, 0, 16, 96, 336},
                {0, 0, 0, 32, 224},
                {0, 0, 0, 0, 64},
            };
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 5; ++j)
                    if (t.rows[i] <= t.cols[j]) t.entries[{t.rows[i], t.cols[j]}] = v[i][j];
            t.source = "rank-one algebraic degree table";
            break;
        }
        case TableName::SdpBoundary: {
            t.title = "Rank-one boundary degrees beta(l,d)";
            t.row_label = "l";
            t.col_label = "d";
            t.rows = {2, 3, 4, 5, 6, 7};
            t.cols = {3, 4, 5, 6, 7};
            const i64 v[6][5] = {
                {4, 10, 20, 35, 66},
                {8, 40, 120, 280, 560},
                {0, 24, 144, 504, 1344},
                {0, 0, 64, 448, 1792},
                {0, 0, 0, 160, 1280},
                {0, 0, 0, 0, 384},
            };
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 5; ++j)
                    if (t.rows[i] <= t.cols[j]) t.entries[{t.rows[i], t.cols[j]}] = v[i][j];
            // The published (l=2, d=7) cell prints 66, but the l=2 boundary
            // degree is C(d+1,3) = C(8,3) = 56.  The formula is the proved
            // statement; the cell is presumed a typo and kept as printed.
            t.discrepancies.push_back(
                {2, 7, 66, 56, "printed 66, formula C(8,3) = 56; presumed typo in the source table"});
            t.source = "rank-one boundary degree table";
            break;
        }
        case TableName::QpAlgebraic: {
            t.title = "Algebraic degrees of QP";
            t.row_label = "m";
            t.col_label = "n";
            t.rows = {1, 2, 3, 4, 5, 6};
            t.cols = {2, 3, 4, 5, 6};
            const i64 v[6][5] = {
                {4, 6, 8, 10, 12},
                {4, 12, 24, 40, 60},
                {0, 8, 32, 80, 160},
                {0, 0, 16, 80, 240},
                {0, 0, 0, 32, 192},
                {0, 0, 0, 0, 64},
            };
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 5; ++j)
                    if (t.rows[i] <= t.cols[j]) t.entries[{t.rows[i], t.cols[j]}] = v[i][j];
            t.source = "QP algebraic degree table";
            break;
        }
        case TableName::QpBoundary: {
            t.title = "Boundary degrees beta_QP(m,n)";
            t.row_label = "m";
            t.col_label = "n";
            t.rows = {1, 2, 3, 4, 5, 6};
            t.cols = {2, 3, 4, 5, 6};
            const i64 v[6][5] = {
                {6, 12, 20, 30, 42},
                {8, 32, 80, 160, 280},
                {0, 24, 120, 360, 840},
                {0, 0, 64, 384, 1344},
                {0, 0, 0, 160, 1120},
                {0, 0, 0, 0, 384},
            };
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 5; ++j)
                    if (t.rows[i] <= t.cols[j]) t.entries[{t.rows[i], t.cols[j]}] = v[i][j];
            t.source = "QP boundary degree table";
            break;
        }
        case TableName::EdDegree: {
            t.title = "ED degrees";
            t.row_label = "m";
            t.col_label = "n";
            t.rows = {2, 3, 4, 5, 6};
            t.cols = {2, 3, 4, 5, 6};
            const i64 v[5][5] = {
                {4, 12, 24, 40, 60},
                {0, 8, 32, 80, 160},
                {0, 0, 16, 80, 240},
                {0, 0, 0, 32, 192},
                {0, 0, 0, 0, 64},
            };
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                    if (t.rows[i] <= t.cols[j]) t.entries[{t.rows[i], t.cols[j]}] = v[i][j];
            t.source = "ED degree table";
            break;
        }
        case TableName::EdBoundary: {
            t.title = "Boundary degrees beta_ED(m,n)";
            t.row_label = "m";
            t.col_label = "n";
            t.rows = {2, 3, 4, 5, 6};
            t.cols = {2, 3, 4, 5, 6};
            const i64 v[5][5] = {
                {8, 24, 48, 80, 120},
                {0, 24, 96, 240, 480},
                {0, 0, 64, 320, 960},
                {0, 0, 0, 160, 960},
                {0, 0, 0, 0, 384},
            };
            for (int i = 0; i < 5; ++i)
                for (int j = 0; j < 5; ++j)
                    if (t.rows[i] <= t.cols[j]) t.entries[{t.rows[i], t.cols[j]}] = v[i][j];
            t.source = "ED boundary degree table";
            break;
        }
    }
    return t;
}

}  // namespace

i64 DegreeTable::formula(int row, int col) const {
    switch (name) {
        case TableName::SdpAlgebraic:
            return delta_rank_one(row, col);
        case TableName::SdpBoundary:
            return beta_sdp(row, col);
        case TableName::QpAlgebraic:
            return qp_alg_degree(row, col);
        case TableName::QpBoundary:
            return beta_qp(row, col);
        case TableName::EdDegree:
            return ed_degree_ci(row, col);
        case TableName::EdBoundary:
            return beta_ed(row, col);
    }
    throw Error("internal", "bad table name");
}

const DegreeTable& golden_table(TableName name) {
    static const DegreeTable tables[] = {
        make_table(TableName::SdpAlgebraic), make_table(TableName::SdpBoundary),
        make_table(TableName::QpAlgebraic),  make_table(TableName::QpBoundary),
        make_table(TableName::EdDegree),     make_table(TableName::EdBoundary),
    };
    return tables[static_cast<int>(name)];
}

std::vector<TableName> all_tables() {
    return {TableName::SdpAlgebraic, TableName::SdpBoundary, TableName::QpAlgebraic,
            TableName::QpBoundary,   TableName::EdDegree,    TableName::EdBoundary};
}

std::string render_table(const DegreeTable& t) {
    std::ostringstream os;
    os << t.title << "\n";
    os << t.row_label << "\\" << t.col_label;
    for (int c : t.cols) os << "\t" << c;
    os << "\n";
    for (int r : t.rows) {
        os << r;
        for (int c : t.cols) {
            os << "\t";
            if (t.has(r, c)) {
                os << t.entries.at({r, c});
                for (const auto& d : t.discrepancies)
                    if (d.row == r && d.col == c) os << "*";
            } else {
                os << ".";
            }
        }
        os << "\n";
    }
    for (const auto& d : t.discrepancies) {
        os << "* (" << t.row_label << "=" << d.row << "," << t.col_label << "=" << d.col
           << "): " << d.note << "\n";
    }
    return os.str();
}

}  // namespace sdpexact
