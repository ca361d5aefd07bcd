#include "model.hpp"

#include <cmath>

namespace sdpexact {

double QuadraticConstraint::eval(const Vec& x) const {
    Vec ax = A.apply(x);
    return dot(x, ax) + 2.0 * dot(a, x) + alpha;
}

Vec QuadraticConstraint::half_gradient(const Vec& x) const {
    Vec g = A.apply(x);
    for (size_t i = 0; i < g.size(); ++i) g[i] += a[i];
    return g;
}

Objective Objective::ed(Vec u) {
    Objective o;
    o.kind = Kind::Ed;
    o.u = std::move(u);
    return o;
}

Objective Objective::lin(Vec u) {
    Objective o;
    o.kind = Kind::Lin;
    o.u = std::move(u);
    return o;
}

Objective Objective::general(SymMatrix C, Vec c) {
    Objective o;
    o.kind = Kind::General;
    o.C = std::move(C);
    o.c = std::move(c);
    return o;
}

SymMatrix Objective::expanded_C(int n) const {
    switch (kind) {
        case Kind::Ed:
            return SymMatrix::identity(n);
        case Kind::Lin:
            return SymMatrix(n);
        case Kind::General:
            if (C.dim() != n) throw Error("dim", "objective C has wrong dimension");
            return C;
    }
    throw Error("internal", "bad objective kind");
}

Vec Objective::expanded_c(int n) const {
    switch (kind) {
        case Kind::Ed: {
            if (static_cast<int>(u.size()) != n) throw Error("dim", "objective u has wrong length");
            Vec c2(n);
            for (int i = 0; i < n; ++i) c2[i] = -2.0 * u[i];
            return c2;
        }
        case Kind::Lin:
            if (static_cast<int>(u.size()) != n) throw Error("dim", "objective u has wrong length");
            return u;
        case Kind::General:
            if (static_cast<int>(c.size()) != n) throw Error("dim", "objective c has wrong length");
            return c;
    }
    throw Error("internal", "bad objective kind");
}

void QuadraticProgram::validate() const {
    if (n < 1) throw Error("dim", "quadratic program needs n >= 1");
    for (const auto& f : constraints) {
        if (f.A.dim() != n || static_cast<int>(f.a.size()) != n)
            throw Error("dim", "constraint data has wrong dimension");
    }
    objective.expanded_C(n);
    objective.expanded_c(n);
}

Vec eval_constraints(const QuadraticProgram& qp, const Vec& x) {
    if (static_cast<int>(x.size()) != qp.n) throw Error("dim", "point has wrong length");
    Vec r(qp.m());
    for (int i = 0; i < qp.m(); ++i) r[i] = qp.constraints[i].eval(x);
    return r;
}

Matrix jacobian(const QuadraticProgram& qp, const Vec& x) {
    if (static_cast<int>(x.size()) != qp.n) throw Error("dim", "point has wrong length");
    Matrix j(qp.n, qp.m());
    for (int k = 0; k < qp.m(); ++k) {
        Vec g = qp.constraints[k].half_gradient(x);
        for (int i = 0; i < qp.n; ++i) j(i, k) = 2.0 * g[i];
    }
    return j;
}

SymMatrix hessian(const QuadraticProgram& qp, const Vec& lambda) {
    if (static_cast<int>(lambda.size()) != qp.m())
        throw Error("dim", "multiplier vector has wrong length");
    SymMatrix h = qp.objective.expanded_C(qp.n);
    for (int k = 0; k < qp.m(); ++k) {
        if (lambda[k] == 0.0) continue;
        for (int i = 0; i < qp.n; ++i)
            for (int j = 0; j <= i; ++j)
                h.set(i, j, h(i, j) - lambda[k] * qp.constraints[k].A(i, j));
    }
    return h;
}

double objective_value(const QuadraticProgram& qp, const Vec& x) {
    if (qp.objective.kind == Objective::Kind::Ed) {
        double s = 0.0;
        for (int i = 0; i < qp.n; ++i) {
            double d = x[i] - qp.objective.u[i];
            s += d * d;
        }
        return s;
    }
    SymMatrix c2 = qp.objective.expanded_C(qp.n);
    Vec c1 = qp.objective.expanded_c(qp.n);
    return dot(x, c2.apply(x)) + dot(c1, x);
}

SdpProblem embed_shor(const QuadraticProgram& qp) {
    qp.validate();
    const int n = qp.n;
    SdpProblem p;
    p.d = n + 1;

    SymMatrix a0(n + 1);
    a0.set(0, 0, 1.0);
    p.A.push_back(a0);
    p.b.push_back(1.0);

    for (const auto& f : qp.constraints) {
        SymMatrix ai(n + 1);
        ai.set(0, 0, f.alpha);
        for (int i = 0; i < n; ++i) {
            ai.set(0, i + 1, f.a[i]);
            for (int j = 0; j <= i; ++j) ai.set(i + 1, j + 1, f.A(i, j));
        }
        p.A.push_back(ai);
        p.b.push_back(0.0);
    }

    SymMatrix c2 = qp.objective.expanded_C(n);
    Vec c1 = qp.objective.expanded_c(n);
    SymMatrix cc(n + 1);
    for (int i = 0; i < n; ++i) {
        cc.set(0, i + 1, 0.5 * c1[i]);
        for (int j = 0; j <= i; ++j) cc.set(i + 1, j + 1, c2(i, j));
    }
    p.C = cc;
    return p;
}

bool is_homogeneous(const QuadraticProgram& qp) {
    if (qp.objective.kind != Objective::Kind::General) return false;
    for (double v : qp.objective.c)
        if (v != 0.0) return false;
    for (const auto& f : qp.constraints)
        for (double v : f.a)
            if (v != 0.0) return false;
    return true;
}

SdpProblem embed_homogeneous(const QuadraticProgram& qp) {
    qp.validate();
    if (!is_homogeneous(qp)) throw Error("domain", "program is not homogeneous");
    SdpProblem p;
    p.d = qp.n;
    for (const auto& f : qp.constraints) {
        p.A.push_back(f.A);
        p.b.push_back(-f.alpha);
    }
    p.C = qp.objective.expanded_C(qp.n);
    return p;
}

void SdpProblem::validate() const {
    if (d < 1) throw Error("dim", "SDP dimension must be >= 1");
    if (A.empty()) throw Error("dim", "SDP needs at least one constraint");
    if (A.size() != b.size()) throw Error("dim", "SDP constraint/b length mismatch");
    for (const auto& ai : A)
        if (ai.dim() != d) throw Error("dim", "SDP constraint matrix has wrong dimension");
    if (C.dim() != d) throw Error("dim", "SDP cost matrix has wrong dimension");
}

int nearest_point_index(const std::vector<Vec>& points, const Vec& u) {
    int best = -1;
    double bestd = 0.0;
    for (size_t k = 0; k < points.size(); ++k) {
        double s = 0.0;
        for (size_t i = 0; i < u.size(); ++i) {
            double d = points[k][i] - u[i];
            s += d * d;
        }
        if (best < 0 || s < bestd) {
            best = static_cast<int>(k);
            bestd = s;
        }
    }
    return best;
}

}  // namespace sdpexact
