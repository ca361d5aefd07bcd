#include "sdp.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cmath>

namespace sdpexact {

namespace {

// svec packing with sqrt(2)-scaled off-diagonals, so svec(A).svec(B) = A.B.
const double kSqrt2 = 1.4142135623730951;

int svec_len(int d) { return d * (d + 1) / 2; }

Vec svec(const SymMatrix& m) {
    const int d = m.dim();
    Vec v(svec_len(d));
    int k = 0;
    for (int j = 0; j < d; ++j)
        for (int i = 0; i <= j; ++i) v[k++] = (i == j) ? m(i, j) : kSqrt2 * m(i, j);
    return v;
}

SymMatrix smat(const Vec& v, int d) {
    SymMatrix m(d);
    int k = 0;
    for (int j = 0; j < d; ++j)
        for (int i = 0; i <= j; ++i) {
            m.set(i, j, (i == j) ? v[k] : v[k] / kSqrt2);
            ++k;
        }
    return m;
}

SymMatrix sym_product(const SymMatrix& a, const SymMatrix& b) {
    // (AB + BA)/2
    const int d = a.dim();
    Matrix ab = matmul(a.dense(), b.dense());
    SymMatrix out(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= i; ++j) out.set(i, j, 0.5 * (ab(i, j) + ab(j, i)));
    return out;
}

// Columns of the symmetric Kronecker operator M |-> (GM + MG)/2 in svec
// coordinates.
Matrix skron_with_identity(const SymMatrix& g) {
    const int d = g.dim();
    const int kk = svec_len(d);
    Matrix op(kk, kk);
    int col = 0;
    for (int j = 0; j < d; ++j)
        for (int i = 0; i <= j; ++i) {
            SymMatrix basis(d);
            double v = (i == j) ? 1.0 : 1.0 / kSqrt2;
            basis.set(i, j, v);
            Vec column = svec(sym_product(g, basis));
            op.set_col(col, column);
            ++col;
        }
    return op;
}

struct LuFactor {
    Matrix lu;
    std::vector<int> piv;
    bool singular = false;

    explicit LuFactor(Matrix a) : lu(std::move(a)), piv(lu.rows()) {
        const int n = lu.rows();
        for (int k = 0; k < n; ++k) {
            int pivot = k;
            for (int i = k + 1; i < n; ++i)
                if (std::fabs(lu(i, k)) > std::fabs(lu(pivot, k))) pivot = i;
            piv[k] = pivot;
            if (std::fabs(lu(pivot, k)) < 1e-300) {
                singular = true;
                return;
            }
            if (pivot != k)
                for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
            for (int i = k + 1; i < n; ++i) {
                lu(i, k) /= lu(k, k);
                double f = lu(i, k);
                if (f == 0.0) continue;
                for (int j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
            }
        }
    }

    Vec solve(Vec b) const {
        const int n = lu.rows();
        // factor swaps whole rows, so apply every interchange before the
        // triangular solves
        for (int k = 0; k < n; ++k) std::swap(b[k], b[piv[k]]);
        for (int k = 0; k < n; ++k)
            for (int i = k + 1; i < n; ++i) b[i] -= lu(i, k) * b[k];
        for (int i = n - 1; i >= 0; --i) {
            for (int j = i + 1; j < n; ++j) b[i] -= lu(i, j) * b[j];
            b[i] /= lu(i, i);
        }
        return b;
    }
};

// Largest alpha with M + alpha*D >= 0, via the whitened eigenvalue problem.
double max_step(const SymMatrix& m, const SymMatrix& d) {
    auto chol = cholesky(m);
    if (!chol) return 0.0;
    const int n = m.dim();
    const Matrix& l = *chol;
    // W = L^-1 D L^-T
    Matrix t(n, n);
    for (int col = 0; col < n; ++col) {
        Vec b = d.dense().col(col);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) b[i] -= l(i, j) * b[j];
            b[i] /= l(i, i);
        }
        t.set_col(col, b);
    }
    Matrix w(n, n);
    for (int row = 0; row < n; ++row) {
        Vec b = t.row(row);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) b[i] -= l(i, j) * b[j];
            b[i] /= l(i, i);
        }
        for (int j = 0; j < n; ++j) w(row, j) = b[j];
    }
    Spectrum s = eig_sym(SymMatrix(w));
    double lmin = s.eigenvalues.front();
    if (lmin >= -1e-300) return 1e18;
    return -1.0 / lmin;
}

bool constraints_independent(const SdpProblem& p) {
    const int l = p.l();
    SymMatrix gram(l);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j <= i; ++j) gram.set(i, j, inner(p.A[i], p.A[j]));
    return numeric_rank(gram, 1e-10) == l;
}

}  // namespace

SdpSolution solve(const SdpProblem& p, const SolveOptions& opts) {
    p.validate();
    const int d = p.d;
    const int l = p.l();
    const int kk = svec_len(d);

    SdpSolution out;
    out.constraints_dependent = !constraints_independent(p);

    std::vector<Vec> a_svec(l);
    for (int i = 0; i < l; ++i) a_svec[i] = svec(p.A[i]);
    const Vec c_svec = svec(p.C);

    double a_scale = 1.0;
    for (int i = 0; i < l; ++i) a_scale = std::max(a_scale, p.A[i].frob());
    const double b_scale = 1.0 + norm_inf(p.b);
    const double c_scale = 1.0 + p.C.frob();

    SymMatrix x = (b_scale / a_scale) * SymMatrix::identity(d);
    SymMatrix s = c_scale * SymMatrix::identity(d);
    Vec y(l, 0.0);

    const int nsys = l + 2 * kk;
    double best_prim_inf = 1e300;
    int last_improvement = 0;
    int tiny_steps = 0;

    for (int iter = 0; iter < opts.max_iter; ++iter) {
        out.iterations = iter;

        Vec x_svec = svec(x);
        Vec rp(l);
        for (int i = 0; i < l; ++i) rp[i] = p.b[i] - dot(a_svec[i], x_svec);
        SymMatrix rd = p.C;
        rd -= s;
        for (int i = 0; i < l; ++i) {
            if (y[i] == 0.0) continue;
            rd -= y[i] * p.A[i];
        }

        double pobj = inner(p.C, x);
        double dobj = dot(p.b, y);
        double mu = inner(x, s) / d;
        double prim_inf = norm_inf(rp) / b_scale;
        double dual_inf = rd.frob() / c_scale;
        double gap_rel = std::fabs(pobj - dobj) / (1.0 + std::fabs(pobj) + std::fabs(dobj));

        out.primal_value = pobj;
        out.dual_value = dobj;
        out.gap = std::fabs(pobj - dobj);
        out.primal_infeas = prim_inf;
        out.dual_infeas = dual_inf;

        if (prim_inf <= opts.tol_feas && dual_inf <= opts.tol_feas && gap_rel <= opts.tol_gap) {
            out.status = SolveStatus::Optimal;
            break;
        }

        // divergence heuristics (best-effort signals)
        if (pobj < -1.0 / std::max(opts.tol_gap, 1e-12) && prim_inf <= 1e-4 &&
            dual_inf > 1e-4) {
            out.status = SolveStatus::Unbounded;
            break;
        }
        if (dobj > 1.0 / std::max(opts.tol_gap, 1e-12) && dual_inf <= 1e-6 &&
            prim_inf > opts.tol_feas) {
            // improving dual ray: the primal constraints cannot be met
            out.status = SolveStatus::Infeasible;
            break;
        }
        if (!std::isfinite(mu) || mu > 1e20 * (1.0 + b_scale * c_scale)) {
            out.status = prim_inf > std::max(100.0 * opts.tol_feas, 1e-4)
                             ? SolveStatus::Infeasible
                             : SolveStatus::IterationLimit;
            break;
        }
        if (prim_inf < best_prim_inf * 0.9) {
            best_prim_inf = prim_inf;
            last_improvement = iter;
        }
        if (prim_inf > opts.tol_feas && iter - last_improvement >= 30) {
            out.status = SolveStatus::Infeasible;
            break;
        }

        Matrix e_op = skron_with_identity(s);
        Matrix f_op = skron_with_identity(x);

        Matrix sys(nsys, nsys);
        for (int i = 0; i < l; ++i)
            for (int k = 0; k < kk; ++k) sys(i, k) = a_svec[i][k];
        for (int k = 0; k < kk; ++k) {
            for (int i = 0; i < l; ++i) sys(l + k, kk + i) = a_svec[i][k];
            sys(l + k, kk + l + k) = 1.0;
        }
        for (int k = 0; k < kk; ++k)
            for (int j = 0; j < kk; ++j) {
                sys(l + kk + k, j) = e_op(k, j);
                sys(l + kk + k, kk + l + j) = f_op(k, j);
            }

        LuFactor lu(std::move(sys));
        if (lu.singular) {
            out.status = SolveStatus::IterationLimit;
            break;
        }

        SymMatrix xs_sym = sym_product(x, s);

        auto pack_rhs = [&](const Vec& rc_svec) {
            Vec rhs(nsys, 0.0);
            for (int i = 0; i < l; ++i) rhs[i] = rp[i];
            Vec rd_svec = svec(rd);
            for (int k = 0; k < kk; ++k) rhs[l + k] = rd_svec[k];
            for (int k = 0; k < kk; ++k) rhs[l + kk + k] = rc_svec[k];
            return rhs;
        };
        auto unpack = [&](const Vec& sol, SymMatrix& dx, Vec& dy, SymMatrix& ds) {
            Vec v(kk);
            for (int k = 0; k < kk; ++k) v[k] = sol[k];
            dx = smat(v, d);
            dy.assign(l, 0.0);
            for (int i = 0; i < l; ++i) dy[i] = sol[kk + i];
            for (int k = 0; k < kk; ++k) v[k] = sol[kk + l + k];
            ds = smat(v, d);
        };

        // predictor
        SymMatrix rc = -1.0 * xs_sym;
        Vec sol = lu.solve(pack_rhs(svec(rc)));
        SymMatrix dxa(d), dsa(d);
        Vec dya;
        unpack(sol, dxa, dya, dsa);

        double ap_aff = std::min(1.0, 0.99 * max_step(x, dxa));
        double ad_aff = std::min(1.0, 0.99 * max_step(s, dsa));
        SymMatrix x_aff = x + ap_aff * dxa;
        SymMatrix s_aff = s + ad_aff * dsa;
        double mu_aff = inner(x_aff, s_aff) / d;
        double sigma = std::pow(std::max(mu_aff, 0.0) / std::max(mu, 1e-300), 3.0);
        sigma = std::clamp(sigma, 1e-10, 1.0);

        // corrector
        SymMatrix rc2 = -1.0 * xs_sym;
        rc2 -= sym_product(dxa, dsa);
        for (int i = 0; i < d; ++i) rc2.add(i, i, sigma * mu);
        sol = lu.solve(pack_rhs(svec(rc2)));
        SymMatrix dx(d), ds(d);
        Vec dy;
        unpack(sol, dx, dy, ds);

        double ap = std::min(1.0, 0.98 * max_step(x, dx));
        double ad = std::min(1.0, 0.98 * max_step(s, ds));

        if (std::getenv("SDPX_DEBUG")) {
            // check the Newton direction satisfies the linearized equations
            Vec dxs = svec(dx);
            double r1 = 0.0;
            for (int i = 0; i < l; ++i) r1 = std::max(r1, std::fabs(dot(a_svec[i], dxs) - rp[i]));
            SymMatrix e2 = ds;
            for (int i = 0; i < l; ++i) e2 += dy[i] * p.A[i];
            e2 -= rd;
            SymMatrix e3 = sym_product(dx, s);
            e3 += sym_product(x, ds);
            e3 -= rc2;
            e3 += xs_sym;
            std::fprintf(stderr,
                         "it=%d mu=%.2e pinf=%.2e dinf=%.2e gap=%.2e sig=%.2e ap=%.2f ad=%.2f "
                         "r1=%.1e r2=%.1e r3=%.1e\n",
                         iter, mu, prim_inf, dual_inf, gap_rel, sigma, ap, ad, r1, e2.frob(),
                         e3.frob());
        }

        if (ap < 1e-10 && ad < 1e-10) {
            if (++tiny_steps >= 3) {
                // stalled; a residual still far from feasible marks the
                // problem infeasible (best-effort signal)
                out.status = prim_inf > std::max(100.0 * opts.tol_feas, 1e-4)
                                 ? SolveStatus::Infeasible
                                 : SolveStatus::IterationLimit;
                break;
            }
        } else {
            tiny_steps = 0;
        }

        x += ap * dx;
        for (int i = 0; i < l; ++i) y[i] += ad * dy[i];
        s += ad * ds;
    }

    if (out.status == SolveStatus::IterationLimit && out.primal_infeas <= 1e-6 &&
        out.dual_infeas <= 1e-6 &&
        out.gap <= 1e-6 * (1.0 + std::fabs(out.primal_value))) {
        // converged to slightly looser tolerances than requested; still usable
        out.status = SolveStatus::Optimal;
    }

    out.X = x;
    out.Y = s;
    out.lambda = y;
    out.rank_X = numeric_rank(x, opts.rank_tol);
    out.rank_Y = numeric_rank(s, opts.rank_tol);
    out.strictly_complementary = (out.rank_X + out.rank_Y == d);
    return out;
}

std::optional<Vec> recover_point(const SdpSolution& sol) {
    if (sol.status != SolveStatus::Optimal) throw Error("status", "recover_point needs Optimal");
    if (sol.rank_X != 1) return std::nullopt;
    double x00 = sol.X(0, 0);
    if (x00 <= 0.0) return std::nullopt;
    Vec x(sol.X.dim() - 1);
    for (size_t i = 0; i < x.size(); ++i) x[i] = sol.X(0, static_cast<int>(i) + 1) / x00;
    return x;
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "Optimal";
        case SolveStatus::Unbounded: return "Unbounded";
        case SolveStatus::Infeasible: return "Infeasible";
        case SolveStatus::IterationLimit: return "IterationLimit";
    }
    return "?";
}

}  // namespace sdpexact
