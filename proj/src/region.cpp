#include "region.hpp"

#include "rng.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

namespace sdpexact {

SymMatrix MasterSpectrahedron::pencil_at(const Vec& lambda) const {
    if (static_cast<int>(lambda.size()) != m())
        throw Error("dim", "pencil multiplier length mismatch");
    SymMatrix p = B0;
    for (int i = 0; i < m(); ++i) {
        if (lambda[i] == 0.0) continue;
        p -= lambda[i] * B[i];
    }
    return p;
}

bool MasterSpectrahedron::contains(const Vec& lambda) const {
    return psd_status(pencil_at(lambda)) == PsdStatus::PositiveDefinite;
}

MasterSpectrahedron master(const QuadraticProgram& qp, MasterSpectrahedron::Kind kind) {
    qp.validate();
    MasterSpectrahedron s;
    s.kind = kind;
    s.B0 = (kind == MasterSpectrahedron::Kind::Ed) ? SymMatrix::identity(qp.n)
                                                   : SymMatrix(qp.n);
    for (const auto& f : qp.constraints) s.B.push_back(f.A);
    return s;
}

std::optional<double> boundary_ray(const MasterSpectrahedron& s, const Vec& v) {
    if (s.kind != MasterSpectrahedron::Kind::Ed)
        throw Error("domain", "boundary_ray needs an Ed master (B0 = I)");
    SymMatrix dir(s.B0.dim());
    for (int i = 0; i < s.m(); ++i) {
        if (v[i] == 0.0) continue;
        dir += v[i] * s.B[i];
    }
    double lmax = eig_sym(dir).eigenvalues.back();
    if (lmax <= 1e-14) return std::nullopt;
    return 1.0 / lmax;
}

Vec shadow_point(const QuadraticProgram& qp, const Vec& x, const Vec& lambda,
                 double tol_variety) {
    Vec fx = eval_constraints(qp, x);
    if (norm_inf(fx) > tol_variety * (1.0 + norm2(x)))
        throw Error("NotOnVariety", "shadow_point requires x on the variety");
    Matrix jac = jacobian(qp, x);
    Vec jl = matvec(jac, lambda);
    Vec u(qp.n);
    const bool lin = qp.objective.kind == Objective::Kind::Lin;
    for (int i = 0; i < qp.n; ++i) u[i] = lin ? 0.5 * jl[i] : x[i] - 0.5 * jl[i];
    return u;
}

VarietyAccess VarietyAccess::from_points(std::vector<Vec> pts) {
    VarietyAccess a;
    a.points = std::move(pts);
    return a;
}

VarietyAccess VarietyAccess::from_param(std::function<Vec(double)> f, double lo, double hi) {
    VarietyAccess a;
    a.param = std::move(f);
    a.t_lo = lo;
    a.t_hi = hi;
    return a;
}

std::vector<BoundarySample> sample_boundary(const QuadraticProgram& qp,
                                            const VarietyAccess& access, int count,
                                            std::uint64_t seed, const SampleOptions& opts) {
    qp.validate();
    if (qp.objective.kind == Objective::Kind::Lin)
        throw Error("domain", "sample_boundary covers the Ed region");
    if (!access.finite() && !access.param)
        throw Error("domain", "sample_boundary needs variety points or a parametrization");

    MasterSpectrahedron s = master(qp, MasterSpectrahedron::Kind::Ed);
    const int m = qp.m();

    std::vector<BoundarySample> out(count);
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::string error_code, error_what;
    std::mutex err_mutex;

    auto worker = [&]() {
        for (;;) {
            int k = next.fetch_add(1);
            if (k >= count || failed.load()) return;
            try {
                Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(k)));
                BoundarySample bs;
                if (access.finite()) {
                    int idx = rng.uniform_int(static_cast<int>(access.points.size()));
                    bs.t_or_index = idx;
                    bs.x = access.points[idx];
                } else {
                    double t = rng.uniform(access.t_lo, access.t_hi);
                    bs.t_or_index = t;
                    bs.x = access.param(t);
                }
                Vec fx = eval_constraints(qp, bs.x);
                if (norm_inf(fx) > opts.tol_variety * (1.0 + norm2(bs.x)))
                    throw Error("ParametrizationResidual",
                                "variety access produced an off-variety point");

                std::optional<double> tstar;
                Vec v;
                for (int attempt = 0; attempt <= opts.max_ray_retries; ++attempt) {
                    v = rng.unit_vector(m);
                    tstar = boundary_ray(s, v);
                    if (tstar && *tstar > opts.lambda_cap) tstar.reset();
                    if (tstar) break;
                }
                if (!tstar)
                    throw Error("UnboundedRays",
                                "no bounded boundary ray found after retries");

                bs.lambda.assign(m, 0.0);
                for (int i = 0; i < m; ++i) bs.lambda[i] = *tstar * v[i];
                bs.det_residual = std::fabs(det_sym(s.pencil_at(bs.lambda)));
                bs.u = shadow_point(qp, bs.x, bs.lambda, opts.tol_variety);
                out[k] = std::move(bs);
            } catch (const Error& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                failed.store(true);
                error_code = e.code();
                error_what = e.what();
                return;
            }
        }
    };

    int threads = std::max(1, opts.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) throw Error(error_code, error_what);
    return out;
}

std::string samples_to_csv(const std::vector<BoundarySample>& samples, int n, int m) {
    std::ostringstream os;
    os << "t_or_index";
    for (int i = 1; i <= n; ++i) os << ",x" << i;
    for (int i = 1; i <= m; ++i) os << ",lam" << i;
    for (int i = 1; i <= n; ++i) os << ",u" << i;
    os << ",det_residual\n";
    char buf[40];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf;
    };
    for (const auto& bs : samples) {
        put(bs.t_or_index);
        for (int i = 0; i < n; ++i) { os << ","; put(bs.x[i]); }
        for (int i = 0; i < m; ++i) { os << ","; put(bs.lambda[i]); }
        for (int i = 0; i < n; ++i) { os << ","; put(bs.u[i]); }
        os << ",";
        put(bs.det_residual);
        os << "\n";
    }
    return os.str();
}

std::vector<Vec> csv_to_points(const std::string& csv, int* nvars_out) {
    std::istringstream is(csv);
    std::string line;
    if (!std::getline(is, line)) throw Error("parse", "empty CSV");
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header.push_back(cell);
    }
    std::vector<int> ucols;
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i].size() >= 2 && header[i][0] == 'u' &&
            std::isdigit(static_cast<unsigned char>(header[i][1])))
            ucols.push_back(static_cast<int>(i));
    if (ucols.empty()) throw Error("parse", "CSV has no u columns");

    std::vector<Vec> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
        Vec u;
        for (int c : ucols) u.push_back(row.at(c));
        out.push_back(std::move(u));
    }
    if (nvars_out) *nvars_out = static_cast<int>(ucols.size());
    return out;
}

std::optional<BoundarySample> boundary_by_bisection(const QuadraticProgram& qp, const Vec& x0,
                                                    std::uint64_t seed,
                                                    const ExactnessOptions& opts) {
    qp.validate();
    const int n = qp.n;
    Rng rng(seed);
    Matrix jac = jacobian(qp, x0);

    QuadraticProgram probe = qp;
    auto eig_at = [&](const Vec& u, Vec* lam) {
        probe.objective = Objective::ed(u);
        return best_hessian_min_eig(probe, x0, lam, opts);
    };

    for (int attempt = 0; attempt < 20; ++attempt) {
        // direction in the normal space at x0
        Vec z = rng.unit_vector(qp.m());
        Vec w = matvec(jac, z);
        double wn = norm2(w);
        if (wn < 1e-10) continue;
        for (auto& v : w) v /= wn;

        double lo = 0.0;
        if (eig_at(x0, nullptr) <= 0.0) return std::nullopt;  // x0 itself not interior
        double hi = 0.25 * (1.0 + norm2(x0));
        bool bracketed = false;
        for (int grow = 0; grow < 40; ++grow) {
            Vec u(n);
            for (int i = 0; i < n; ++i) u[i] = x0[i] + hi * w[i];
            if (eig_at(u, nullptr) <= 0.0) {
                bracketed = true;
                break;
            }
            lo = hi;
            hi *= 1.7;
        }
        if (!bracketed) continue;  // unbounded in this direction, redraw

        for (int it = 0; it < 80 && hi - lo > 1e-12 * (1.0 + hi); ++it) {
            double mid = 0.5 * (lo + hi);
            Vec u(n);
            for (int i = 0; i < n; ++i) u[i] = x0[i] + mid * w[i];
            if (eig_at(u, nullptr) > 0.0)
                lo = mid;
            else
                hi = mid;
        }

        BoundarySample bs;
        bs.x = x0;
        double s = 0.5 * (lo + hi);
        bs.t_or_index = s;
        bs.u.assign(n, 0.0);
        for (int i = 0; i < n; ++i) bs.u[i] = x0[i] + s * w[i];
        Vec lam;
        eig_at(bs.u, &lam);
        bs.lambda = lam.empty() ? Vec(qp.m(), 0.0) : lam;
        bs.det_residual = std::fabs(det_sym(hessian(probe, bs.lambda)));
        return bs;
    }
    return std::nullopt;
}

namespace {

SymMatrix adjugate_sym(const SymMatrix& m) {
    const int n = m.dim();
    Spectrum s = eig_sym(m);
    SymMatrix adj(n);
    for (int k = 0; k < n; ++k) {
        double prod = 1.0;
        for (int j = 0; j < n; ++j)
            if (j != k) prod *= s.eigenvalues[j];
        if (prod == 0.0) continue;
        for (int i = 0; i < n; ++i)
            for (int j2 = 0; j2 <= i; ++j2)
                adj.add(i, j2, prod * s.vectors(i, k) * s.vectors(j2, k));
    }
    return adj;
}

}  // namespace

std::optional<BoundarySample> shadow_fold_sample(const QuadraticProgram& qp, const Vec& x0,
                                                 std::uint64_t seed) {
    qp.validate();
    const int m = qp.m();
    Matrix jac = jacobian(qp, x0);
    LeastSquares ls = solve_least_squares(jac, Vec(qp.n, 0.0));
    const int k = ls.nullspace.cols();
    if (k == 0) return std::nullopt;  // injective Jacobian: raycast the master instead

    auto gval = [&](const Vec& lam) {
        SymMatrix h = hessian(qp, lam);
        SymMatrix adj = adjugate_sym(h);
        Vec g(1 + k);
        g[0] = det_sym(h);
        for (int j = 0; j < k; ++j) {
            double t = 0.0;
            for (int i = 0; i < m; ++i) t -= ls.nullspace(i, j) * inner(adj, qp.constraints[i].A);
            g[1 + j] = t;
        }
        return g;
    };

    Rng rng(seed);
    for (int attempt = 0; attempt < 30; ++attempt) {
        Vec lam(m);
        double radius = rng.uniform(0.5, 4.0);
        for (auto& v : lam) v = radius * rng.gaussian();

        bool converged = false;
        for (int it = 0; it < 60; ++it) {
            Vec g = gval(lam);
            double hfrob = hessian(qp, lam).frob();
            double scale = 1.0 + std::pow(hfrob, qp.n);
            if (norm_inf(g) < 1e-13 * scale) {
                converged = true;
                break;
            }
            Matrix jg(1 + k, m);
            double step_h = 1e-7 * (1.0 + norm2(lam));
            for (int c = 0; c < m; ++c) {
                Vec lp = lam, lm = lam;
                lp[c] += step_h;
                lm[c] -= step_h;
                Vec gp = gval(lp), gm = gval(lm);
                for (int r = 0; r < 1 + k; ++r) jg(r, c) = (gp[r] - gm[r]) / (2 * step_h);
            }
            Vec step = solve_least_squares(jg, g).solution;
            double sl = norm_inf(step);
            if (!std::isfinite(sl) || sl > 1e4) break;
            for (int i = 0; i < m; ++i) lam[i] -= step[i];
            if (norm_inf(lam) > 1e3) break;
        }
        if (!converged) continue;

        SymMatrix h = hessian(qp, lam);
        Spectrum sp = eig_sym(h);
        if (sp.eigenvalues.front() < -1e-8 * (1.0 + h.frob())) continue;  // wrong sheet
        // the tangency system is identically zero on the rank <= d-2 stratum
        // (adjugate vanishes); keep only simple boundary contacts
        if (sp.eigenvalues.size() >= 2 && sp.eigenvalues[1] < 1e-5 * (1.0 + h.frob())) continue;
        if (norm_inf(lam) > 12.0) continue;  // desk-scale spread for interpolation

        BoundarySample bs;
        bs.x = x0;
        bs.lambda = lam;
        bs.det_residual = std::fabs(det_sym(h));
        bs.u = shadow_point(qp, x0, lam);
        return bs;
    }
    return std::nullopt;
}

TangencyWitness tangency_witness(const QuadraticProgram& qp, const Vec& x, const Vec& xp) {
    qp.validate();
    const int n = qp.n;
    if (qp.m() != n) throw Error("domain", "tangency_witness needs m == n");

    Vec delta(n);
    for (int i = 0; i < n; ++i) delta[i] = xp[i] - x[i];
    if (norm2(delta) < 1e-12) throw Error("domain", "tangency_witness needs x != x'");

    // (I - sum lambda_i A_i)(x'-x) = 0  <=>  [A_1 d | ... | A_n d] lambda = d
    Matrix w(n, n);
    for (int k = 0; k < n; ++k) {
        Vec col = qp.constraints[k].A.apply(delta);
        for (int i = 0; i < n; ++i) w(i, k) = col[i];
    }
    LeastSquares ls = solve_least_squares(w, delta);
    if (ls.residual > 1e-8 * (1.0 + norm2(delta)))
        throw Error("SingularSystem", "no multiplier solves the tangency system");

    TangencyWitness out;
    out.x = x;
    out.x_prime = xp;
    out.lambda = ls.solution;

    SymMatrix h = SymMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        if (out.lambda[k] == 0.0) continue;
        h -= out.lambda[k] * qp.constraints[k].A;
    }
    out.det_residual = std::fabs(det_sym(h));

    Matrix jac = jacobian(qp, x);
    Vec jl = matvec(jac, out.lambda);
    out.u.assign(n, 0.0);
    for (int i = 0; i < n; ++i) out.u[i] = x[i] - 0.5 * jl[i];

    double d1 = 0.0, d2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double a = out.u[i] - x[i];
        double b = out.u[i] - xp[i];
        d1 += a * a;
        d2 += b * b;
    }
    out.bisector_residual = std::fabs(d1 - d2);

    // gradient of det(H(lambda(u))) at u, via lambda(u) = 2 Jac^-1 (x - u)
    SymMatrix adj = adjugate_sym(h);
    Vec grad_lambda(n);
    for (int k = 0; k < n; ++k) grad_lambda[k] = -inner(adj, qp.constraints[k].A);
    Vec g;
    try {
        g = solve_lu(transpose(jac), grad_lambda);
    } catch (const Error&) {
        g = solve_least_squares(transpose(jac), grad_lambda).solution;
    }
    for (double& t : g) t *= -2.0;
    double gn = norm2(g);
    if (gn < 1e-300) {
        out.normal_angle_residual = 1.0;  // degenerate gradient: no defined normal
    } else {
        double dn = norm2(delta);
        double proj = dot(g, delta) / (gn * dn);
        double dev2 = std::max(0.0, 1.0 - proj * proj);
        out.normal_angle_residual = std::sqrt(dev2);
    }
    return out;
}

CutLocus cut_locus_m1(const QuadraticProgram& qp) {
    qp.validate();
    if (qp.m() != 1) throw Error("domain", "cut_locus_m1 needs a single constraint");
    const int n = qp.n;
    const SymMatrix& a = qp.constraints[0].A;
    const Vec& avec = qp.constraints[0].a;
    const double alpha = qp.constraints[0].alpha;

    Spectrum s = eig_sym(a);
    double wscale = 0.0;
    for (double w : s.eigenvalues) wscale = std::max(wscale, std::fabs(w));
    for (double w : s.eigenvalues)
        if (std::fabs(w) <= 1e-12 * (1.0 + wscale))
            throw Error("SingularA", "cut_locus_m1 needs a nonsingular quadratic part");

    // coordinates of a in the eigenbasis
    Vec acoef(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double t = 0.0;
        for (int i = 0; i < n; ++i) t += s.vectors(i, j) * avec[i];
        acoef[j] = t;
    }

    CutLocus out;
    for (int i = 0; i < n; ++i) {
        const double omega = s.eigenvalues[i];
        const double lam = 1.0 / omega;
        CutLocusComponent comp;
        comp.omega = omega;
        comp.normal.assign(n, 0.0);
        for (int r = 0; r < n; ++r) comp.normal[r] = s.vectors(r, i);
        comp.offset = lam * acoef[i];

        // eigenvalues equal to omega collapse the fiber direction to a sphere;
        // the plane conditions for the other members become part of the locus
        std::vector<bool> in_group(n, false);
        double anorm2_group = 0.0;
        for (int j = 0; j < n; ++j) {
            if (std::fabs(s.eigenvalues[j] - omega) <= 1e-9 * (1.0 + wscale)) {
                in_group[j] = true;
                anorm2_group += acoef[j] * acoef[j];
                if (j != i) {
                    Vec vn(n);
                    for (int r = 0; r < n; ++r) vn[r] = s.vectors(r, j);
                    comp.extra_planes.emplace_back(std::move(vn), lam * acoef[j]);
                }
            }
        }

        // q(u) = sum_{j in group} a_j^2 - omega * f(b_u), with b_u the
        // projection of the fiber base point; beta_j(u) = (v_j.u + lam a_j)/(1 - lam w_j)
        DensePolynomial q;
        q.nvars = n;
        q.add_term(std::vector<int>(n, 0), anorm2_group - omega * alpha);
        for (int j = 0; j < n; ++j) {
            if (in_group[j]) continue;
            double denom = 1.0 - lam * s.eigenvalues[j];
            // affine form beta = c0 + sum_k ck u_k
            Vec ck(n);
            for (int k = 0; k < n; ++k) ck[k] = s.vectors(k, j) / denom;
            double c0 = lam * acoef[j] / denom;
            double w = s.eigenvalues[j];
            // -omega * (w beta^2 + 2 a_j beta)
            DensePolynomial beta2;
            beta2.nvars = n;
            beta2.add_term(std::vector<int>(n, 0), c0 * c0);
            for (int k = 0; k < n; ++k) {
                std::vector<int> e(n, 0);
                e[k] = 1;
                beta2.add_term(e, 2.0 * c0 * ck[k]);
                for (int k2 = 0; k2 < n; ++k2) {
                    std::vector<int> e2(n, 0);
                    e2[k] += 1;
                    e2[k2] += 1;
                    beta2.add_term(e2, ck[k] * ck[k2]);
                }
            }
            for (const auto& [exp, coef] : beta2.terms) q.add_term(exp, -omega * w * coef);
            q.add_term(std::vector<int>(n, 0), -omega * 2.0 * acoef[j] * c0);
            for (int k = 0; k < n; ++k) {
                std::vector<int> e(n, 0);
                e[k] = 1;
                q.add_term(e, -omega * 2.0 * acoef[j] * ck[k]);
            }
        }
        comp.quadric = std::move(q);
        out.components.push_back(std::move(comp));
    }
    return out;
}

}  // namespace sdpexact
