#include "numkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sdpexact {

double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

double norm_inf(const Vec& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::fabs(v));
    return m;
}

Vec Matrix::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void Matrix::set_col(int j, const Vec& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error("dim", "matmul shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Vec matvec(const Matrix& m, const Vec& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw Error("dim", "matvec shape mismatch");
    Vec out(m.rows(), 0.0);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

double frobenius(const Matrix& m) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

SymMatrix::SymMatrix(int dim, double fill)
    : dim_(dim), data_(static_cast<size_t>(dim) * dim, fill) {
    if (dim < 1) throw Error("dim", "SymMatrix dimension must be >= 1");
}

SymMatrix::SymMatrix(const Matrix& m) : SymMatrix(m.rows()) {
    if (m.rows() != m.cols()) throw Error("dim", "SymMatrix from non-square matrix");
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j <= i; ++j) {
            double v = 0.5 * (m(i, j) + m(j, i));
            data_[static_cast<size_t>(i) * dim_ + j] = v;
            data_[static_cast<size_t>(j) * dim_ + i] = v;
        }
}

void SymMatrix::set(int i, int j, double v) {
    data_[static_cast<size_t>(i) * dim_ + j] = v;
    data_[static_cast<size_t>(j) * dim_ + i] = v;
}

void SymMatrix::add(int i, int j, double v) {
    set(i, j, (*this)(i, j) + v);
}

Matrix SymMatrix::dense() const {
    Matrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

Vec SymMatrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw Error("dim", "SymMatrix apply mismatch");
    Vec y(dim_, 0.0);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
}

double SymMatrix::frob() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

SymMatrix SymMatrix::identity(int n) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::diag(const Vec& d) {
    SymMatrix m(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
    return m;
}

SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
SymMatrix operator*(double s, SymMatrix a) { return a *= s; }

double inner(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw Error("dim", "inner dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += a(i, j) * b(i, j);
    return s;
}

Spectrum eig_sym(const SymMatrix& m) {
    const int n = m.dim();
    Matrix a = m.dense();
    Matrix q = Matrix::identity(n);

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(2.0 * s);
    };

    const double scale = std::max(m.frob(), 1e-300);
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && off_norm() > 1e-15 * scale * n; ++sweep) {
        for (int p = 0; p < n; ++p) {
            for (int r = p + 1; r < n; ++r) {
                double apq = a(p, r);
                if (std::fabs(apq) <= 1e-300) {
                    a(p, r) = a(r, p) = 0.0;
                    continue;
                }
                double theta = (a(r, r) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                double app = a(p, p), arr = a(r, r);
                a(p, p) = app - t * apq;
                a(r, r) = arr + t * apq;
                a(p, r) = a(r, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k != p && k != r) {
                        double akp = a(k, p), akr = a(k, r);
                        a(k, p) = a(p, k) = akp - s * (akr + tau * akp);
                        a(k, r) = a(r, k) = akr + s * (akp - tau * akr);
                    }
                    double qkp = q(k, p), qkr = q(k, r);
                    q(k, p) = qkp - s * (qkr + tau * qkp);
                    q(k, r) = qkr + s * (qkp - tau * qkr);
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i) < a(j, j); });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.vectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        int src = order[k];
        out.eigenvalues[k] = a(src, src);
        // sign convention: largest-magnitude component positive
        int imax = 0;
        for (int i = 1; i < n; ++i)
            if (std::fabs(q(i, src)) > std::fabs(q(imax, src))) imax = i;
        double sgn = q(imax, src) < 0 ? -1.0 : 1.0;
        for (int i = 0; i < n; ++i) out.vectors(i, k) = sgn * q(i, src);
    }
    return out;
}

int numeric_rank(const Spectrum& s, double rel_tol) {
    double wmax = 0.0;
    for (double w : s.eigenvalues) wmax = std::max(wmax, std::fabs(w));
    if (wmax == 0.0) return 0;
    int r = 0;
    for (double w : s.eigenvalues)
        if (std::fabs(w) > rel_tol * wmax) ++r;
    return r;
}

int numeric_rank(const SymMatrix& m, double rel_tol) {
    if (rel_tol <= 0) throw Error("domain", "numeric_rank requires rel_tol > 0");
    return numeric_rank(eig_sym(m), rel_tol);
}

PsdStatus psd_status(const SymMatrix& m, double rel_tol) {
    if (rel_tol <= 0) throw Error("domain", "psd_status requires rel_tol > 0");
    Spectrum s = eig_sym(m);
    double wmax = 0.0;
    for (double w : s.eigenvalues) wmax = std::max(wmax, std::fabs(w));
    double thr = rel_tol * (1.0 + wmax);
    double wmin = s.eigenvalues.front();
    if (wmin > thr) return PsdStatus::PositiveDefinite;
    if (wmin < -thr) return PsdStatus::Indefinite;
    return PsdStatus::PositiveSemidefinite;
}

std::optional<Matrix> cholesky(const SymMatrix& m) {
    const int n = m.dim();
    Matrix l(n, n);
    for (int j = 0; j < n; ++j) {
        double d = m(j, j);
        for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (d <= 0.0 || !std::isfinite(d)) return std::nullopt;
        l(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double v = m(i, j);
            for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
            l(i, j) = v / l(j, j);
        }
    }
    return l;
}

double det_sym(const SymMatrix& m) {
    Spectrum s = eig_sym(m);
    double d = 1.0;
    for (double w : s.eigenvalues) d *= w;
    return d;
}

namespace {

// Householder vector for column x: returns (v, beta) with (I - beta v v^T) x = ||x|| e0.
void householder(const Vec& x, Vec& v, double& beta) {
    const int n = static_cast<int>(x.size());
    v = x;
    double sigma = 0.0;
    for (int i = 1; i < n; ++i) sigma += x[i] * x[i];
    v[0] = 1.0;
    if (sigma == 0.0) {
        beta = 0.0;
        return;
    }
    double mu = std::sqrt(x[0] * x[0] + sigma);
    double v0 = (x[0] <= 0.0) ? x[0] - mu : -sigma / (x[0] + mu);
    beta = 2.0 * v0 * v0 / (sigma + v0 * v0);
    for (int i = 1; i < n; ++i) v[i] = x[i] / v0;
    v[0] = 1.0;
}

}  // namespace

LeastSquares solve_least_squares(const Matrix& m_in, const Vec& rhs, double rel_tol) {
    const int rows = m_in.rows();
    const int cols = m_in.cols();
    if (static_cast<int>(rhs.size()) != rows) throw Error("dim", "least squares rhs mismatch");

    // Column-pivoted Householder QR: M P = Q [R; 0].
    Matrix r = m_in;
    Vec qtb = rhs;
    std::vector<int> perm(cols);
    std::iota(perm.begin(), perm.end(), 0);
    Vec colnorm(cols, 0.0);
    for (int j = 0; j < cols; ++j) {
        double s = 0.0;
        for (int i = 0; i < rows; ++i) s += r(i, j) * r(i, j);
        colnorm[j] = s;
    }

    const int kmax = std::min(rows, cols);
    for (int k = 0; k < kmax; ++k) {
        int pivot = k;
        for (int j = k + 1; j < cols; ++j)
            if (colnorm[j] > colnorm[pivot]) pivot = j;
        if (pivot != k) {
            for (int i = 0; i < rows; ++i) std::swap(r(i, k), r(i, pivot));
            std::swap(colnorm[k], colnorm[pivot]);
            std::swap(perm[k], perm[pivot]);
        }

        Vec x(rows - k);
        for (int i = k; i < rows; ++i) x[i - k] = r(i, k);
        Vec v;
        double beta;
        householder(x, v, beta);
        for (int j = k; j < cols; ++j) {
            double w = 0.0;
            for (int i = k; i < rows; ++i) w += v[i - k] * r(i, j);
            w *= beta;
            for (int i = k; i < rows; ++i) r(i, j) -= w * v[i - k];
        }
        double w = 0.0;
        for (int i = k; i < rows; ++i) w += v[i - k] * qtb[i];
        w *= beta;
        for (int i = k; i < rows; ++i) qtb[i] -= w * v[i - k];

        for (int j = k + 1; j < cols; ++j) colnorm[j] -= r(k, j) * r(k, j);
    }

    double rmax = 0.0;
    for (int k = 0; k < kmax; ++k) rmax = std::max(rmax, std::fabs(r(k, k)));
    int rank = 0;
    for (int k = 0; k < kmax; ++k)
        if (std::fabs(r(k, k)) > rel_tol * rmax) ++rank;

    LeastSquares out;
    out.rank = rank;

    // Row-space factorization of R1 = [R11 R12] (rank x cols):
    // QR of R1^T gives R1^T = Z [U; 0], so R1 = [U^T 0] Z^T.
    Matrix r1t(cols, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < cols; ++j) r1t(j, i) = r(i, j);
    Matrix z = Matrix::identity(cols);
    for (int k = 0; k < rank; ++k) {
        Vec x(cols - k);
        for (int i = k; i < cols; ++i) x[i - k] = r1t(i, k);
        Vec v;
        double beta;
        householder(x, v, beta);
        for (int j = k; j < rank; ++j) {
            double w = 0.0;
            for (int i = k; i < cols; ++i) w += v[i - k] * r1t(i, j);
            w *= beta;
            for (int i = k; i < cols; ++i) r1t(i, j) -= w * v[i - k];
        }
        // accumulate Z := Z * H_k
        for (int i = 0; i < cols; ++i) {
            double w = 0.0;
            for (int j = k; j < cols; ++j) w += z(i, j) * v[j - k];
            w *= beta;
            for (int j = k; j < cols; ++j) z(i, j) -= w * v[j - k];
        }
    }

    // Solve U^T y1 = c1 by forward substitution; r1t's top block holds U,
    // so (U^T)(i,j) = r1t(j,i).
    Vec y1(rank, 0.0);
    for (int i = 0; i < rank; ++i) {
        double s = qtb[i];
        for (int j = 0; j < i; ++j) s -= r1t(j, i) * y1[j];
        y1[i] = s / r1t(i, i);
    }

    Vec y(cols, 0.0);
    for (int i = 0; i < cols; ++i) {
        double s = 0.0;
        for (int j = 0; j < rank; ++j) s += z(i, j) * y1[j];
        y[i] = s;
    }
    out.solution.assign(cols, 0.0);
    for (int j = 0; j < cols; ++j) out.solution[perm[j]] = y[j];

    out.nullspace = Matrix(cols, cols - rank);
    for (int i = 0; i < cols; ++i)
        for (int j = rank; j < cols; ++j) out.nullspace(perm[i], j - rank) = z(i, j);

    Vec res = matvec(m_in, out.solution);
    for (int i = 0; i < rows; ++i) res[i] -= rhs[i];
    out.residual = norm2(res);
    return out;
}

Vec solve_lu(Matrix a, Vec b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw Error("dim", "solve_lu shape mismatch");
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i)
            if (std::fabs(a(i, k)) > std::fabs(a(pivot, k))) pivot = i;
        if (std::fabs(a(pivot, k)) < 1e-300) throw Error("singular", "singular linear system");
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pivot, j));
            std::swap(b[k], b[pivot]);
        }
        for (int i = k + 1; i < n; ++i) {
            double f = a(i, k) / a(k, k);
            if (f == 0.0) continue;
            a(i, k) = 0.0;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
            b[i] -= f * b[k];
        }
    }
    Vec x(n, 0.0);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

}  // namespace sdpexact
