#include "poly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace sdpexact {

void DensePolynomial::add_term(const std::vector<int>& exp, double coef) {
    if (coef == 0.0) return;
    auto it = terms.find(exp);
    if (it == terms.end()) {
        terms.emplace(exp, coef);
    } else {
        it->second += coef;
        if (it->second == 0.0) terms.erase(it);
    }
}

double DensePolynomial::eval(const Vec& u) const {
    if (static_cast<int>(u.size()) != nvars) throw Error("dim", "poly_eval length mismatch");
    double s = 0.0;
    for (const auto& [exp, coef] : terms) {
        double t = coef;
        for (int i = 0; i < nvars; ++i)
            for (int k = 0; k < exp[i]; ++k) t *= u[i];
        s += t;
    }
    return s;
}

double DensePolynomial::eval_abs(const Vec& u) const {
    if (static_cast<int>(u.size()) != nvars) throw Error("dim", "poly_eval length mismatch");
    double s = 0.0;
    for (const auto& [exp, coef] : terms) {
        double t = std::fabs(coef);
        for (int i = 0; i < nvars; ++i)
            for (int k = 0; k < exp[i]; ++k) t *= std::fabs(u[i]);
        s += t;
    }
    return s;
}

int DensePolynomial::total_degree() const {
    int d = 0;
    for (const auto& [exp, coef] : terms) {
        int t = 0;
        for (int e : exp) t += e;
        d = std::max(d, t);
    }
    return d;
}

DensePolynomial DensePolynomial::substitute_affine(const Vec& center, const Vec& half) const {
    DensePolynomial out;
    out.nvars = nvars;
    for (const auto& [exp, coef] : terms) {
        // expand coef * prod_i (center_i + half_i y_i)^{exp_i}
        std::map<std::vector<int>, double> acc;
        acc[std::vector<int>(nvars, 0)] = coef;
        for (int i = 0; i < nvars; ++i) {
            if (exp[i] == 0) continue;
            std::map<std::vector<int>, double> next;
            // binomial expansion of (center_i + half_i y_i)^{exp_i}
            std::vector<double> pw(exp[i] + 1);
            for (int k = 0; k <= exp[i]; ++k) {
                double b = 1.0;
                for (int j = 0; j < k; ++j) b = b * (exp[i] - j) / (j + 1);
                pw[k] = b * std::pow(center[i], exp[i] - k) * std::pow(half[i], k);
            }
            for (const auto& [e, c] : acc) {
                for (int k = 0; k <= exp[i]; ++k) {
                    if (pw[k] == 0.0) continue;
                    std::vector<int> e2 = e;
                    e2[i] += k;
                    next[e2] += c * pw[k];
                }
            }
            acc = std::move(next);
        }
        for (const auto& [e, c] : acc) out.add_term(e, c);
    }
    return out;
}

DensePolynomial DensePolynomial::unscale_from_box(const Vec& center, const Vec& half) const {
    Vec c2(nvars), h2(nvars);
    for (int i = 0; i < nvars; ++i) {
        c2[i] = -center[i] / half[i];
        h2[i] = 1.0 / half[i];
    }
    return substitute_affine(c2, h2);
}

void DensePolynomial::normalize() {
    double best = 0.0;
    for (const auto& [exp, coef] : terms)
        if (std::fabs(coef) > std::fabs(best)) best = coef;
    if (best == 0.0) return;
    for (auto& [exp, coef] : terms) coef /= best;
}

namespace {

DensePolynomial from_terms(int nvars, std::initializer_list<std::pair<std::vector<int>, double>> ts) {
    DensePolynomial p;
    p.nvars = nvars;
    for (const auto& [e, c] : ts) p.add_term(e, c);
    return p;
}

GoldenPolynomial make_twisted_cubic8() {
    DensePolynomial p = from_terms(3, {
        {{0, 6, 2}, 64},    {{3, 3, 1}, 16},    {{2, 3, 2}, 408},   {{1, 5, 1}, -64},
        {{1, 3, 3}, -96},   {{0, 7, 0}, 128},   {{0, 5, 2}, -256},  {{0, 3, 4}, -56},
        {{6, 0, 0}, 1},     {{5, 0, 1}, -30},   {{4, 2, 0}, -80},   {{4, 0, 2}, 294},
        {{3, 2, 1}, -416},  {{3, 0, 3}, -880},  {{2, 4, 0}, 880},   {{2, 2, 2}, -876},
        {{2, 0, 4}, -588},  {{1, 4, 1}, 32},    {{1, 2, 3}, 256},   {{1, 0, 5}, -120},
        {{0, 6, 0}, -576},  {{0, 4, 2}, 304},   {{0, 2, 4}, 148},   {{0, 0, 6}, -8},
        {{4, 1, 0}, 1140},  {{3, 1, 1}, -1092}, {{2, 3, 0}, -2544}, {{2, 1, 2}, -558},
        {{1, 3, 1}, 192},   {{1, 1, 3}, -408},  {{0, 5, 0}, 1088},  {{0, 1, 4}, -138},
        {{4, 0, 0}, -2670}, {{3, 0, 1}, -600},  {{2, 2, 0}, 2832},  {{2, 0, 2}, 207},
        {{0, 0, 4}, 39},    {{1, 2, 1}, -96},   {{1, 0, 3}, 120},   {{0, 4, 0}, -1120},
        {{0, 2, 2}, -228},  {{2, 1, 0}, -1332}, {{1, 1, 1}, -108},  {{0, 3, 0}, 680},
        {{0, 1, 2}, 144},   {{2, 0, 0}, 189},   {{1, 0, 1}, 54},    {{0, 2, 0}, -244},
        {{0, 0, 2}, -27},   {{0, 1, 0}, 48},    {{0, 0, 0}, -4},
    });
    return {GoldenName::TwistedCubic8, "twisted-cubic boundary, degree 8", p, 8};
}

GoldenPolynomial make_three_quadrics9() {
    DensePolynomial p = from_terms(3, {
        {{0, 3, 6}, 5832},    {{0, 6, 2}, 27648},   {{1, 4, 3}, -62208},
        {{2, 2, 4}, -2916},   {{0, 4, 4}, 15552},   {{3, 0, 5}, -5832},
        {{2, 0, 6}, 8748},    {{0, 2, 6}, -5832},   {{1, 0, 7}, -4374},
        {{0, 0, 8}, 729},     {{2, 5, 0}, -41472},  {{3, 3, 1}, 86400},
        {{1, 5, 1}, 27648},   {{4, 1, 2}, 60750},   {{2, 3, 2}, -41472},
        {{0, 5, 2}, -62208},  {{3, 1, 3}, -106920}, {{1, 3, 3}, 85536},
        {{2, 1, 4}, 71442},   {{0, 3, 4}, -19656},  {{1, 1, 5}, -19440},
        {{0, 1, 6}, 3888},    {{6, 0, 0}, -84375},  {{4, 2, 0}, -54000},
        {{2, 4, 0}, 72576},   {{5, 0, 1}, 202500},  {{3, 2, 1}, -19440},
        {{1, 4, 1}, -48384},  {{4, 0, 2}, -220725}, {{2, 2, 2}, 6912},
        {{0, 4, 2}, 58032},   {{3, 0, 3}, 140454},  {{1, 2, 3}, -35424},
        {{2, 0, 4}, -54027},  {{0, 2, 4}, 8424},    {{1, 0, 5}, 11178},
        {{0, 0, 6}, -1161},   {{4, 1, 0}, 40050},   {{2, 3, 0}, -50760},
        {{3, 1, 1}, -21132},  {{1, 3, 1}, 33840},   {{2, 1, 2}, 11880},
        {{0, 3, 2}, -28744},  {{1, 1, 3}, 3708},    {{0, 1, 4}, -1314},
        {{4, 0, 0}, -7431},   {{2, 2, 0}, 17736},   {{3, 0, 1}, 6112},
        {{1, 2, 1}, -11824},  {{2, 0, 2}, -3246},   {{0, 2, 2}, 7976},
        {{1, 0, 3}, 312},     {{0, 0, 4}, 37},      {{2, 1, 0}, -3096},
        {{1, 1, 1}, 2064},    {{0, 1, 2}, -1176},   {{2, 0, 0}, 216},
        {{1, 0, 1}, -144},    {{0, 0, 2}, 72},
    });
    return {GoldenName::ThreeQuadrics9, "three-quadrics twisted-cubic cut locus, degree 9", p, 9};
}

GoldenPolynomial make_steiner_quartic() {
    DensePolynomial p = from_terms(3, {
        {{2, 2, 0}, 1},
        {{2, 0, 2}, 1},
        {{0, 2, 2}, 1},
        {{1, 1, 1}, 3},
    });
    return {GoldenName::SteinerQuartic, "Steiner quartic", p, 4};
}

}  // namespace

const GoldenPolynomial& golden_polynomial(GoldenName name) {
    static const GoldenPolynomial g8 = make_twisted_cubic8();
    static const GoldenPolynomial g9 = make_three_quadrics9();
    static const GoldenPolynomial g4 = make_steiner_quartic();
    switch (name) {
        case GoldenName::TwistedCubic8: return g8;
        case GoldenName::ThreeQuadrics9: return g9;
        case GoldenName::SteinerQuartic: return g4;
    }
    throw Error("internal", "bad golden name");
}

const std::vector<DensePolynomial>& five_point_planes() {
    static const std::vector<DensePolynomial> planes = {
        from_terms(3, {{{1, 0, 0}, 2}, {{0, 1, 0}, 2}, {{0, 0, 1}, -2}, {{0, 0, 0}, 3}}),
        from_terms(3, {{{1, 0, 0}, 2}, {{0, 1, 0}, -2}, {{0, 0, 1}, 2}, {{0, 0, 0}, 3}}),
        from_terms(3, {{{1, 0, 0}, 2}, {{0, 1, 0}, -2}, {{0, 0, 1}, -2}, {{0, 0, 0}, -3}}),
        from_terms(3, {{{1, 0, 0}, 2}, {{0, 1, 0}, 2}, {{0, 0, 1}, 2}, {{0, 0, 0}, -3}}),
    };
    return planes;
}

std::vector<std::vector<int>> monomials_up_to(int nvars, int deg) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    // graded order, lexicographic within each total degree
    for (int total = 0; total <= deg; ++total) {
        std::vector<std::vector<int>> level;
        std::function<void(int, int)> rec = [&](int var, int left) {
            if (var == nvars - 1) {
                cur[var] = left;
                level.push_back(cur);
                return;
            }
            for (int e = left; e >= 0; --e) {
                cur[var] = e;
                rec(var + 1, left - e);
            }
        };
        rec(0, total);
        for (auto& m : level) out.push_back(std::move(m));
    }
    return out;
}

namespace {

// One-sided Jacobi on the columns of e; diagonalizes E^T E without forming
// the Gram matrix, which keeps the small singular values above the roundoff
// floor of an explicit Gram eigendecomposition.
void one_sided_jacobi(Matrix& e, Matrix& v, Vec& sigma) {
    const int rows = e.rows(), cols = e.cols();
    v = Matrix::identity(cols);
    const int max_sweeps = 40;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < cols; ++p) {
            for (int q = p + 1; q < cols; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int i = 0; i < rows; ++i) {
                    app += e(i, p) * e(i, p);
                    aqq += e(i, q) * e(i, q);
                    apq += e(i, p) * e(i, q);
                }
                if (std::fabs(apq) <= 1e-15 * std::sqrt(app * aqq) + 1e-300) continue;
                rotated = true;
                double tau = (aqq - app) / (2.0 * apq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (int i = 0; i < rows; ++i) {
                    double ep = e(i, p), eq = e(i, q);
                    e(i, p) = c * ep - s * eq;
                    e(i, q) = s * ep + c * eq;
                }
                for (int i = 0; i < cols; ++i) {
                    double vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }
    sigma.assign(cols, 0.0);
    for (int j = 0; j < cols; ++j) {
        double s = 0.0;
        for (int i = 0; i < rows; ++i) s += e(i, j) * e(i, j);
        sigma[j] = std::sqrt(s);
    }
}

}  // namespace

VanishingResult vanishing_dimension(const std::vector<Vec>& samples, int degree) {
    if (samples.empty()) throw Error("InsufficientSamples", "no samples");
    const int n = static_cast<int>(samples[0].size());
    const auto monos = monomials_up_to(n, degree);
    const int cols = static_cast<int>(monos.size());
    if (static_cast<int>(samples.size()) < 2 * cols)
        throw Error("InsufficientSamples",
                    "need at least 2*C(n+degree,degree) samples for degree " +
                        std::to_string(degree));

    // map into [-1,1]^n
    Vec lo(n, 1e300), hi(n, -1e300);
    for (const auto& s : samples)
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], s[i]);
            hi[i] = std::max(hi[i], s[i]);
        }
    Vec center(n), half(n);
    for (int i = 0; i < n; ++i) {
        center[i] = 0.5 * (lo[i] + hi[i]);
        half[i] = std::max(0.5 * (hi[i] - lo[i]), 1e-12);
    }

    Matrix e(static_cast<int>(samples.size()), cols);
    for (size_t r = 0; r < samples.size(); ++r) {
        Vec y(n);
        for (int i = 0; i < n; ++i) y[i] = (samples[r][i] - center[i]) / half[i];
        for (int c = 0; c < cols; ++c) {
            double t = 1.0;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < monos[c][i]; ++k) t *= y[i];
            e(static_cast<int>(r), c) = t;
        }
        // row normalization: leaves the nullspace unchanged, evens out the
        // weight of samples sitting near the corners of the box
        double rn = 0.0;
        for (int c = 0; c < cols; ++c) rn += e(static_cast<int>(r), c) * e(static_cast<int>(r), c);
        rn = std::sqrt(rn);
        if (rn > 0)
            for (int c = 0; c < cols; ++c) e(static_cast<int>(r), c) /= rn;
    }

    Matrix v;
    Vec sigma;
    one_sided_jacobi(e, v, sigma);

    std::vector<int> order(cols);
    for (int i = 0; i < cols; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sigma[a] < sigma[b]; });

    VanishingResult out;
    out.singular_values.resize(cols);
    for (int i = 0; i < cols; ++i) out.singular_values[i] = sigma[order[i]];

    double smax = out.singular_values.back();
    if (smax == 0.0) {
        out.nullity = cols;
    } else {
        for (double s : out.singular_values)
            if (s < 1e-8 * smax) ++out.nullity;
    }

    if (out.nullity >= 1) {
        DensePolynomial q;
        q.nvars = n;
        for (int c = 0; c < cols; ++c) q.add_term(monos[c], v(c, order[0]));
        DensePolynomial p = q.unscale_from_box(center, half);
        p.normalize();
        out.candidate = std::move(p);
    }
    return out;
}

std::optional<int> minimal_vanishing_degree(const std::vector<Vec>& samples, int d_max) {
    if (d_max > 10) throw Error("domain", "minimal_vanishing_degree supports d_max <= 10");
    for (int d = 1; d <= d_max; ++d) {
        if (vanishing_dimension(samples, d).nullity >= 1) return d;
    }
    return std::nullopt;
}

bool approx_rational(double x, long long max_den, long long& num, long long& den) {
    if (!std::isfinite(x)) return false;
    double v = x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fl = std::floor(v);
        if (fl > 9e17 || fl < -9e17) return false;
        long long a = static_cast<long long>(fl);
        long long p2 = a * p1 + p0;
        long long q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = v - fl;
        if (std::fabs(static_cast<double>(p1) / q1 - x) < 1e-12 * std::max(1.0, std::fabs(x))) break;
        if (rem < 1e-15) break;
        v = 1.0 / rem;
    }
    if (q1 == 0) return false;
    if (std::fabs(static_cast<double>(p1) / q1 - x) > 1e-9 * std::max(1.0, std::fabs(x))) return false;
    num = p1;
    den = q1;
    return true;
}

}  // namespace sdpexact
