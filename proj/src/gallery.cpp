#include "gallery.hpp"

#include <cmath>

namespace sdpexact {

namespace {

QuadraticConstraint make_constraint(int n, std::initializer_list<std::tuple<int, int, double>> quad,
                                    Vec lin_half, double alpha) {
    QuadraticConstraint f;
    f.A = SymMatrix(n);
    for (const auto& [i, j, v] : quad) f.A.set(i, j, v);
    f.a = std::move(lin_half);
    f.alpha = alpha;
    return f;
}

}  // namespace

VarietyAccess ExampleDescriptor::variety() const {
    if (has_param()) return VarietyAccess::from_param(param, t_lo, t_hi);
    return VarietyAccess::from_points(points);
}

QuadraticProgram four_points_qp() {
    QuadraticProgram qp;
    qp.n = 2;
    // x1 x2 - 2 x2^2 + 2 x2
    qp.constraints.push_back(make_constraint(2, {{0, 1, 0.5}, {1, 1, -2.0}}, {0.0, 1.0}, 0.0));
    // x1^2 - x2^2 - x1 + x2
    qp.constraints.push_back(
        make_constraint(2, {{0, 0, 1.0}, {1, 1, -1.0}}, {-0.5, 0.5}, 0.0));
    qp.objective = Objective::ed({0.0, 0.0});
    return qp;
}

QuadraticProgram maxcut3_qp(const Vec& weights) {
    QuadraticProgram qp;
    qp.n = 3;
    for (int i = 0; i < 3; ++i) {
        QuadraticConstraint f;
        f.A = SymMatrix(3);
        f.A.set(i, i, 1.0);
        f.a = {0, 0, 0};
        f.alpha = -1.0;
        qp.constraints.push_back(std::move(f));
    }
    SymMatrix c(3);
    c.set(0, 1, 0.5 * weights[0]);
    c.set(0, 2, 0.5 * weights[1]);
    c.set(1, 2, 0.5 * weights[2]);
    qp.objective = Objective::general(c, {0, 0, 0});
    return qp;
}

QuadraticProgram coordinate_squares_qp(int n) {
    QuadraticProgram qp;
    qp.n = n;
    for (int i = 0; i < n; ++i) {
        QuadraticConstraint f;
        f.A = SymMatrix(n);
        f.A.set(i, i, 1.0);
        f.a.assign(n, 0.0);
        f.alpha = -1.0;
        qp.constraints.push_back(std::move(f));
    }
    qp.objective = Objective::ed(Vec(n, 0.0));
    return qp;
}

QuadraticProgram twisted_cubic_qp() {
    QuadraticProgram qp;
    qp.n = 3;
    // x2 - x1^2
    qp.constraints.push_back(make_constraint(3, {{0, 0, -1.0}}, {0.0, 0.5, 0.0}, 0.0));
    // x3 - x1 x2
    qp.constraints.push_back(make_constraint(3, {{0, 1, -0.5}}, {0.0, 0.0, 0.5}, 0.0));
    qp.objective = Objective::ed({0, 0, 0});
    return qp;
}

QuadraticProgram twisted_cubic_three_qp() {
    QuadraticProgram qp = twisted_cubic_qp();
    // x1 x3 - x2^2
    qp.constraints.push_back(make_constraint(3, {{0, 2, 0.5}, {1, 1, -1.0}}, {0, 0, 0}, 0.0));
    return qp;
}

QuadraticProgram six_points_qp() {
    QuadraticProgram qp;
    qp.n = 3;
    // 9 x1 x3 - 5 x2 x3 - x3^2 + x3
    qp.constraints.push_back(
        make_constraint(3, {{0, 2, 4.5}, {1, 2, -2.5}, {2, 2, -1.0}}, {0, 0, 0.5}, 0.0));
    // 6 x2^2 - 13 x2 x3 + x3^2 - 6 x2 - x3
    qp.constraints.push_back(
        make_constraint(3, {{1, 1, 6.0}, {1, 2, -6.5}, {2, 2, 1.0}}, {0, -3.0, -0.5}, 0.0));
    // 2 x1 x2 - 6 x1 x3 + x2 x3 + x3^2 - x3
    qp.constraints.push_back(make_constraint(
        3, {{0, 1, 1.0}, {0, 2, -3.0}, {1, 2, 0.5}, {2, 2, 1.0}}, {0, 0, -0.5}, 0.0));
    // 6 x1^2 - 5 x2 x3 - x3^2 - 6 x1 + x3
    qp.constraints.push_back(
        make_constraint(3, {{0, 0, 6.0}, {1, 2, -2.5}, {2, 2, -1.0}}, {-3.0, 0, 0.5}, 0.0));
    qp.objective = Objective::ed({0, 0, 0});
    return qp;
}

QuadraticProgram five_points_qp() {
    QuadraticProgram qp;
    qp.n = 3;
    // x2 x3 - x1
    qp.constraints.push_back(make_constraint(3, {{1, 2, 0.5}}, {-0.5, 0, 0}, 0.0));
    // x1 x3 - x2 x3 + x1 - x2
    qp.constraints.push_back(
        make_constraint(3, {{0, 2, 0.5}, {1, 2, -0.5}}, {0.5, -0.5, 0}, 0.0));
    // x2^2 - x3^2
    qp.constraints.push_back(make_constraint(3, {{1, 1, 1.0}, {2, 2, -1.0}}, {0, 0, 0}, 0.0));
    // x1 x2 - x3
    qp.constraints.push_back(make_constraint(3, {{0, 1, 0.5}}, {0, 0, -0.5}, 0.0));
    // x1^2 - x3^2
    qp.constraints.push_back(make_constraint(3, {{0, 0, 1.0}, {2, 2, -1.0}}, {0, 0, 0}, 0.0));
    qp.objective = Objective::ed({0, 0, 0});
    return qp;
}

QuadraticProgram hyperbola_qp() {
    QuadraticProgram qp;
    qp.n = 2;
    qp.constraints.push_back(make_constraint(2, {{0, 0, 1.0}, {1, 1, -1.0}}, {0, 0}, -1.0));
    qp.objective = Objective::ed({0, 0});
    return qp;
}

QuadraticProgram ellipse_qp(double a, double b) {
    QuadraticProgram qp;
    qp.n = 2;
    // b^2 x1^2 + a^2 x2^2 - a^2 b^2
    qp.constraints.push_back(
        make_constraint(2, {{0, 0, b * b}, {1, 1, a * a}}, {0, 0}, -a * a * b * b));
    qp.objective = Objective::ed({0, 0});
    return qp;
}

QuadraticProgram circle_qp() {
    QuadraticProgram qp;
    qp.n = 2;
    qp.constraints.push_back(make_constraint(2, {{0, 0, 1.0}, {1, 1, 1.0}}, {0, 0}, -1.0));
    qp.objective = Objective::ed({0, 0});
    return qp;
}

QuadraticProgram two_hyperboloids_qp() {
    QuadraticProgram qp;
    qp.n = 3;
    // x1^2 + x2^2 - x3^2 - 1
    qp.constraints.push_back(
        make_constraint(3, {{0, 0, 1.0}, {1, 1, 1.0}, {2, 2, -1.0}}, {0, 0, 0}, -1.0));
    // 0.7 x1^2 - 0.6 x2^2 + 0.2 x3^2 + 0.4 x1 x2 - 0.3 x1 x3 + 0.5 x2 x3
    //   + 0.1 x1 + 0.3 x2 - 0.2 x3 - 0.8   (vanishes at (1,0,0))
    qp.constraints.push_back(make_constraint(
        3,
        {{0, 0, 0.7}, {1, 1, -0.6}, {2, 2, 0.2}, {0, 1, 0.2}, {0, 2, -0.15}, {1, 2, 0.25}},
        {0.05, 0.15, -0.1}, -0.8));
    qp.objective = Objective::ed({0, 0, 0});
    return qp;
}

std::vector<Vec> trace_two_hyperboloids(int count) {
    QuadraticProgram qp = two_hyperboloids_qp();
    auto correct = [&](Vec x) {
        for (int it = 0; it < 40; ++it) {
            Vec f = eval_constraints(qp, x);
            if (norm_inf(f) < 1e-14) break;
            Matrix jt = transpose(jacobian(qp, x));  // 2 x 3
            Vec step = solve_least_squares(jt, f).solution;
            for (int i = 0; i < 3; ++i) x[i] -= step[i];
        }
        return x;
    };
    auto tangent = [&](const Vec& x) {
        Matrix j = jacobian(qp, x);  // columns grad f1, grad f2
        Vec g1 = j.col(0), g2 = j.col(1);
        Vec t = {g1[1] * g2[2] - g1[2] * g2[1], g1[2] * g2[0] - g1[0] * g2[2],
                 g1[0] * g2[1] - g1[1] * g2[0]};
        double n = norm2(t);
        for (auto& v : t) v /= n;
        return t;
    };

    std::vector<Vec> out;
    const double h = 0.04;
    for (int dir = 0; dir < 2; ++dir) {
        Vec x = correct({1.0, 0.0, 0.0});
        Vec prev_t = tangent(x);
        if (dir == 1)
            for (auto& v : prev_t) v = -v;
        for (int k = 0; k < (count + 1) / 2; ++k) {
            Vec t = tangent(x);
            if (dot(t, prev_t) < 0)
                for (auto& v : t) v = -v;
            Vec xn(3);
            for (int i = 0; i < 3; ++i) xn[i] = x[i] + h * t[i];
            x = correct(xn);
            prev_t = t;
            out.push_back(x);
            if (static_cast<int>(out.size()) >= count) return out;
        }
    }
    return out;
}

MaxcutOracle maxcut3_oracle(const Vec& weights, double tol) {
    QuadraticProgram qp = maxcut3_qp(weights);
    const SymMatrix c = qp.objective.C;

    MaxcutOracle out;
    out.best_value = 1e300;
    out.tie = false;
    std::vector<Vec> best_cuts;
    for (int mask = 0; mask < 8; ++mask) {
        Vec s = {mask & 1 ? 1.0 : -1.0, mask & 2 ? 1.0 : -1.0, mask & 4 ? 1.0 : -1.0};
        double v = dot(s, c.apply(s));
        if (v < out.best_value - tol) {
            out.best_value = v;
            best_cuts.clear();
            best_cuts.push_back(s);
        } else if (v <= out.best_value + tol) {
            best_cuts.push_back(s);
        }
    }
    // cuts come in sign pairs; more than one pair at the minimum is a tie
    out.tie = best_cuts.size() > 2;
    out.best_cut = best_cuts.front();
    if (out.best_cut[0] < 0)
        for (auto& v : out.best_cut) v = -v;

    // Laplacian certificate: H = C - diag(lambda), lambda_i = s_i (C s)_i
    const Vec& s = out.best_cut;
    Vec cs = c.apply(s);
    SymMatrix h = c;
    for (int i = 0; i < 3; ++i) h.add(i, i, -s[i] * cs[i]);
    double mineig = eig_sym(h).eigenvalues.front();
    out.exact = mineig >= -tol * (1.0 + h.frob()) && !out.tie;
    return out;
}

namespace {

std::vector<ExampleDescriptor> build_gallery() {
    std::vector<ExampleDescriptor> g;

    {
        ExampleDescriptor e;
        e.name = "voronoi-four-points";
        e.aliases = {"four-points"};
        e.description = "two quadrics meeting in four points; ED cells inscribed in Voronoi cells";
        e.qp = four_points_qp();
        e.points = {{0, 0}, {0, 1}, {1, 0}, {2, 2}};
        g.push_back(std::move(e));
    }
    {
        ExampleDescriptor e;
        e.name = "maxcut-3";
        e.description = "Max-Cut on K3, elliptope relaxation; default weights (1,2,3)";
        e.qp = maxcut3_qp({1, 2, 3});
        for (int mask = 0; mask < 8; ++mask)
            e.points.push_back({mask & 1 ? 1.0 : -1.0, mask & 2 ? 1.0 : -1.0, mask & 4 ? 1.0 : -1.0});
        g.push_back(std::move(e));
    }
    {
        ExampleDescriptor e;
        e.name = "eight-points";
        e.aliases = {"cube-vertices"};
        e.description = "f_i = x_i^2 - 1 in R^3; eight pairwise tangent spectrahedra";
        e.qp = coordinate_squares_qp(3);
        for (int mask = 0; mask < 8; ++mask)
            e.points.push_back({mask & 1 ? 1.0 : -1.0, mask & 2 ? 1.0 : -1.0, mask & 4 ? 1.0 : -1.0});
        g.push_back(std::move(e));
    }
    {
        ExampleDescriptor e;
        e.name = "twisted-cubic";
        e.description = "twisted cubic curve; boundary surface of degree eight ruled by parabolas";
        e.qp = twisted_cubic_qp();
        e.param = [](double t) { return Vec{t, t * t, t * t * t}; };
        e.t_lo = -1.25;
        e.t_hi = 1.25;
        e.golden = GoldenName::TwistedCubic8;
        g.push_back(std::move(e));
    }
    {
        ExampleDescriptor e;
        e.name = "three-quadrics";
        e.aliases = {"twisted-cubic-three"};
        e.description = "twisted cubic cut out by three quadrics; exact region dense, cut locus of degree nine";
        e.qp = twisted_cubic_three_qp();
        e.param = [](double t) { return Vec{t, t * t, t * t * t}; };
        e.t_lo = -1.0;
        e.t_hi = 1.0;
        e.golden = GoldenName::ThreeQuadrics9;
        g.push_back(std::move(e));
    }
    {
        ExampleDescriptor e;
        e.name = "two-hyperboloids";
        e.description = "two generic hyperboloids meeting in a quartic space curve";
        e.qp = two_hyperboloids_qp();
        e.points = trace_two_hyperboloids(160);
        g.push_back(std::move(e));
    }
    {
        ExampleDescriptor e;
        e.name = "six-points";
        e.description = "six general points in R^3 cut out by four quadrics";
        e.qp = six_points_qp();
        e.points = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {-2, -3, -2}, {-0.5, -0.5, -1}};
        g.push_back(std::move(e));
    }
    {
        ExampleDescriptor e;
        e.name = "five-points";
        e.description = "five general points in R^3 cut out by five quadrics; dual elliptope cells";
        e.qp = five_points_qp();
        e.points = {{0, 0, 0}, {1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
        e.golden = GoldenName::SteinerQuartic;
        g.push_back(std::move(e));
    }
    {
        ExampleDescriptor e;
        e.name = "hyperbola-cutlocus";
        e.aliases = {"hyperbola"};
        e.description = "x1^2 - x2^2 = 1; cut locus in two lines";
        e.qp = hyperbola_qp();
        e.param = [](double t) { return Vec{std::cosh(t), std::sinh(t)}; };
        e.t_lo = -1.5;
        e.t_hi = 1.5;
        g.push_back(std::move(e));
    }
    return g;
}

}  // namespace

const std::vector<ExampleDescriptor>& gallery() {
    static const std::vector<ExampleDescriptor> g = build_gallery();
    return g;
}

const ExampleDescriptor* find_example(const std::string& name) {
    for (const auto& e : gallery()) {
        if (e.name == name) return &e;
        for (const auto& a : e.aliases)
            if (a == name) return &e;
    }
    return nullptr;
}

std::vector<std::string> gallery_names() {
    std::vector<std::string> out;
    for (const auto& e : gallery()) out.push_back(e.name);
    return out;
}

}  // namespace sdpexact
