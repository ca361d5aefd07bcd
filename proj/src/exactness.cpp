#include "exactness.hpp"

#include "degrees.hpp"
#include "rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sdpexact {

namespace {

const double kMinusInf = -std::numeric_limits<double>::infinity();
const double kPlusInf = std::numeric_limits<double>::infinity();

Vec objective_gradient(const QuadraticProgram& qp, const Vec& x) {
    SymMatrix c2 = qp.objective.expanded_C(qp.n);
    Vec c1 = qp.objective.expanded_c(qp.n);
    Vec g = c2.apply(x);
    for (int i = 0; i < qp.n; ++i) g[i] = 2.0 * g[i] + c1[i];
    return g;
}

// eigenvalues of M sitting within a factor `band` of the rank threshold make
// the numeric rank ambiguous
bool rank_ambiguous(const SymMatrix& m, double rank_tol, double band) {
    Spectrum s = eig_sym(m);
    double wmax = 0.0;
    for (double w : s.eigenvalues) wmax = std::max(wmax, std::fabs(w));
    if (wmax == 0.0) return false;
    double thr = rank_tol * wmax;
    for (double w : s.eigenvalues) {
        double a = std::fabs(w);
        if (a >= thr / band && a <= thr * band) return true;
    }
    return false;
}

struct MultiplierAnalysis {
    bool stationarity_ok = false;
    double stationarity_residual = 0.0;
    Vec lambda;
    double min_eig = kMinusInf;  // +inf when the multiplier LMI is unbounded
};

MultiplierAnalysis analyze_multipliers(const QuadraticProgram& qp, const Vec& x,
                                       const ExactnessOptions& opts) {
    MultiplierAnalysis out;
    Matrix jac = jacobian(qp, x);
    Vec grad = objective_gradient(qp, x);
    LeastSquares ls = solve_least_squares(jac, grad);
    out.stationarity_residual = ls.residual;
    if (ls.residual > 1e-6 * (1.0 + norm2(grad))) return out;
    out.stationarity_ok = true;
    out.lambda = ls.solution;

    std::vector<Vec> dirs;  // nontrivial Hessian directions of the multiplier set
    std::vector<int> dir_index;
    std::vector<SymMatrix> gs;
    for (int j = 0; j < ls.nullspace.cols(); ++j) {
        SymMatrix g(qp.n);
        for (int i = 0; i < qp.m(); ++i) {
            double w = ls.nullspace(i, j);
            if (w == 0.0) continue;
            g += w * qp.constraints[i].A;
        }
        if (g.frob() > 1e-12) {
            gs.push_back(g);
            dir_index.push_back(j);
        }
    }

    if (gs.empty()) {
        out.min_eig = eig_sym(hessian(qp, out.lambda)).eigenvalues.front();
        return out;
    }

    // max t s.t. H(lambda0) - sum mu_j G_j - t I >= 0, solved through the
    // standard-form primal min H0.Z s.t. G_j.Z = 0, I.Z = 1, Z >= 0
    SdpProblem lmi;
    lmi.d = qp.n;
    lmi.A = gs;
    lmi.b.assign(gs.size(), 0.0);
    lmi.A.push_back(SymMatrix::identity(qp.n));
    lmi.b.push_back(1.0);
    lmi.C = hessian(qp, out.lambda);

    SdpSolution sol = solve(lmi, opts.solve);
    if (sol.status == SolveStatus::Infeasible) {
        // no unit-trace PSD matrix is orthogonal to the G_j: the dual value
        // grows without bound and the Hessian can be made arbitrarily PD
        out.min_eig = kPlusInf;
        return out;
    }
    if (sol.status == SolveStatus::Optimal) {
        Vec lam = out.lambda;
        for (size_t j = 0; j < gs.size(); ++j) {
            double mu = sol.lambda[j];
            for (int i = 0; i < qp.m(); ++i) lam[i] += mu * ls.nullspace(i, dir_index[j]);
        }
        out.lambda = lam;
    }
    out.min_eig = eig_sym(hessian(qp, out.lambda)).eigenvalues.front();
    return out;
}

Vec leading_rank_one_factor(const SymMatrix& x) {
    Spectrum s = eig_sym(x);
    int last = x.dim() - 1;
    double w = std::max(s.eigenvalues[last], 0.0);
    Vec v(x.dim());
    for (int i = 0; i < x.dim(); ++i) v[i] = std::sqrt(w) * s.vectors(i, last);
    for (int i = 0; i < x.dim(); ++i) {
        if (std::fabs(v[i]) > 1e-9) {
            if (v[i] < 0)
                for (double& t : v) t = -t;
            break;
        }
    }
    return v;
}

}  // namespace

ExactnessCertificate check_exact_sdp(const QuadraticProgram& qp, const ExactnessOptions& opts) {
    qp.validate();
    const bool homo = is_homogeneous(qp);
    SdpProblem p = homo ? embed_homogeneous(qp) : embed_shor(qp);
    SdpSolution sol = solve(p, opts.solve);

    ExactnessCertificate cert;
    cert.route = Route::SdpRoute;
    cert.solver_status = sol.status;
    if (sol.status != SolveStatus::Optimal) {
        cert.verdict = Verdict::Inconclusive;
        cert.note = std::string("solver status ") + to_string(sol.status);
        return cert;
    }

    cert.rank_X = sol.rank_X;
    cert.rank_Y = sol.rank_Y;
    cert.strictly_complementary = sol.strictly_complementary;

    if (homo) {
        Spectrum sy = eig_sym(sol.Y);
        cert.hessian_min_eig =
            sy.eigenvalues.size() >= 2 ? sy.eigenvalues[1] : sy.eigenvalues[0];
        cert.lambda = sol.lambda;
        if (sol.rank_X == 1) cert.minimizer = leading_rank_one_factor(sol.X);
    } else {
        const int n = qp.n;
        SymMatrix h(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) h.set(i, j, sol.Y(i + 1, j + 1));
        cert.hessian_min_eig = eig_sym(h).eigenvalues.front();
        Vec lam(qp.m());
        for (int i = 0; i < qp.m(); ++i) lam[i] = sol.lambda[i + 1];
        cert.lambda = lam;
        if (sol.rank_X == 1) cert.minimizer = recover_point(sol);
    }

    bool ambiguous = rank_ambiguous(sol.X, opts.solve.rank_tol, opts.boundary_band) ||
                     rank_ambiguous(sol.Y, opts.solve.rank_tol, opts.boundary_band);
    bool exact = sol.rank_X == 1 && sol.rank_Y == p.d - 1 && sol.strictly_complementary &&
                 cert.hessian_min_eig > 0.0;
    cert.verdict = ambiguous ? Verdict::Boundary : (exact ? Verdict::Exact : Verdict::NotExact);
    return cert;
}

double best_hessian_min_eig(const QuadraticProgram& qp, const Vec& x, Vec* lambda_out,
                            const ExactnessOptions& opts) {
    MultiplierAnalysis a = analyze_multipliers(qp, x, opts);
    if (lambda_out && a.stationarity_ok) *lambda_out = a.lambda;
    return a.min_eig;
}

ExactnessCertificate certify_at_point(const QuadraticProgram& qp, const Vec& x,
                                      const ExactnessOptions& opts) {
    qp.validate();
    Vec fx = eval_constraints(qp, x);
    double fscale = 1.0 + norm2(x);
    if (norm_inf(fx) > opts.tol_variety * fscale)
        throw Error("NotOnVariety", "point violates the constraints beyond tolerance");

    ExactnessCertificate cert;
    cert.route = Route::PointRoute;
    cert.minimizer = x;

    MultiplierAnalysis a = analyze_multipliers(qp, x, opts);
    cert.stationarity_residual = a.stationarity_residual;
    if (!a.stationarity_ok) {
        cert.verdict = Verdict::NotExact;
        cert.note = "stationarity equation has no multiplier solution";
        return cert;
    }
    cert.lambda = a.lambda;
    cert.hessian_min_eig = a.min_eig;

    double scale_h = 1.0;
    if (std::isfinite(a.min_eig)) {
        Spectrum sh = eig_sym(hessian(qp, a.lambda));
        scale_h = 1.0 + std::fabs(sh.eigenvalues.back());
    }
    double band = opts.boundary_band * opts.tol_pd * scale_h;

    if (a.min_eig > band) {
        cert.verdict = Verdict::Exact;
        cert.rank_X = 1;
        cert.rank_Y = qp.n;  // = d-1 for the Shor embedding
        cert.strictly_complementary = true;
    } else if (a.min_eig >= -band) {
        cert.verdict = Verdict::Boundary;
    } else {
        cert.verdict = Verdict::NotExact;
    }
    return cert;
}

CriticalPointSet ed_critical_points(const QuadraticProgram& qp, int starts, std::uint64_t seed,
                                    const ExactnessOptions& opts) {
    (void)opts;  // tolerances below are tied to the Newton scheme, not tunable yet
    qp.validate();
    if (qp.objective.kind != Objective::Kind::Ed)
        throw Error("domain", "ed_critical_points needs an ED objective");
    if (starts < 1) throw Error("domain", "ed_critical_points needs starts >= 1");

    const int n = qp.n;
    const int m = qp.m();
    const Vec& u = qp.objective.u;
    const double box = 2.0 * (1.0 + norm2(u));
    const double fscale = 1.0 + box * box;

    CriticalPointSet out;
    out.total_starts = starts;
    out.bound = (m <= n) ? ed_degree_ci(m, n) : 0;

    auto residual = [&](const Vec& x, const Vec& lam, Vec& fval) {
        fval = eval_constraints(qp, x);
        Vec stat(n);
        for (int i = 0; i < n; ++i) stat[i] = x[i] - u[i];
        for (int k = 0; k < m; ++k) {
            Vec hg = qp.constraints[k].half_gradient(x);
            for (int i = 0; i < n; ++i) stat[i] -= lam[k] * hg[i];
        }
        Vec r(m + n);
        for (int k = 0; k < m; ++k) r[k] = fval[k];
        for (int i = 0; i < n; ++i) r[m + i] = stat[i];
        return r;
    };

    std::vector<CriticalPoint> found;
    for (int s = 0; s < starts; ++s) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(s)));
        Vec x(n), lam(m);
        for (int i = 0; i < n; ++i) x[i] = rng.uniform(-box, box);
        for (int k = 0; k < m; ++k) lam[k] = rng.uniform(-box, box);

        bool converged = false;
        for (int it = 0; it < 80; ++it) {
            Vec fval;
            Vec r = residual(x, lam, fval);
            if (norm_inf(r) < 1e-13 * fscale) {
                converged = true;
                break;
            }
            // Jacobian of the square critical system in (x, lambda)
            Matrix j(m + n, m + n);
            Matrix jac = jacobian(qp, x);  // n x m, column k = grad f_k
            for (int k = 0; k < m; ++k)
                for (int i = 0; i < n; ++i) j(k, i) = jac(i, k);
            SymMatrix h = hessian(qp, lam);  // = I - sum lam_k A_k for ED
            for (int i = 0; i < n; ++i)
                for (int i2 = 0; i2 < n; ++i2) j(m + i, i2) = h(i, i2);
            for (int k = 0; k < m; ++k) {
                Vec hg = qp.constraints[k].half_gradient(x);
                for (int i = 0; i < n; ++i) j(m + i, n + k) = -hg[i];
            }

            Vec step;
            try {
                step = solve_lu(j, r);
            } catch (const Error&) {
                step = solve_least_squares(j, r).solution;
            }
            double steplen = norm_inf(step);
            if (!std::isfinite(steplen) || steplen > 1e8) break;
            for (int i = 0; i < n; ++i) x[i] -= step[i];
            for (int k = 0; k < m; ++k) lam[k] -= step[n + k];
            if (norm_inf(x) > 1e6) break;
        }
        if (!converged) continue;

        Vec fval;
        Vec r = residual(x, lam, fval);
        if (norm_inf(fval) > 1e-9 * fscale || norm_inf(r) > 1e-9 * fscale) continue;
        ++out.converged_starts;

        CriticalPoint cp;
        cp.x = x;
        cp.lambda = lam;
        cp.objective_value = objective_value(qp, x);
        found.push_back(std::move(cp));
    }

    std::sort(found.begin(), found.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        if (a.objective_value != b.objective_value) return a.objective_value < b.objective_value;
        return a.x < b.x;
    });
    for (const auto& cp : found) {
        bool dup = false;
        for (const auto& kept : out.points) {
            double d = 0.0;
            for (int i = 0; i < n; ++i) d = std::max(d, std::fabs(cp.x[i] - kept.x[i]));
            if (d <= 1e-6 * (1.0 + norm2(kept.x))) {
                dup = true;
                break;
            }
        }
        if (!dup) out.points.push_back(cp);
    }
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Exact: return "Exact";
        case Verdict::NotExact: return "NotExact";
        case Verdict::Boundary: return "Boundary";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

}  // namespace sdpexact
