#ifndef SDPEXACT_NUMKIT_HPP
#define SDPEXACT_NUMKIT_HPP

// Dense linear algebra for small symmetric problems (dims up to ~100,
// typically <= 15).  Deterministic, no external dependencies.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdpexact {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double norm_inf(const Vec& a);

class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Dense row-major rectangular matrix.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw Error("dim", "negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    Vec col(int j) const;
    Vec row(int i) const;
    void set_col(int j, const Vec& v);

    static Matrix identity(int n);

private:
    int rows_, cols_;
    std::vector<double> data_;
};

Matrix transpose(const Matrix& m);
Matrix matmul(const Matrix& a, const Matrix& b);
Vec matvec(const Matrix& m, const Vec& v);
double frobenius(const Matrix& m);

// Symmetric matrix; construction symmetrizes, so entries(i,j)==entries(j,i)
// holds exactly afterwards.
class SymMatrix {
public:
    SymMatrix() : dim_(0) {}
    explicit SymMatrix(int dim, double fill = 0.0);
    // Symmetrizes: stores (m + m^T)/2.
    explicit SymMatrix(const Matrix& m);

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * dim_ + j]; }
    // Writes both (i,j) and (j,i).
    void set(int i, int j, double v);
    void add(int i, int j, double v);

    Matrix dense() const;
    Vec apply(const Vec& x) const;  // matrix-vector product

    double frob() const;
    double max_abs() const;

    SymMatrix& operator+=(const SymMatrix& o);
    SymMatrix& operator-=(const SymMatrix& o);
    SymMatrix& operator*=(double s);

    static SymMatrix identity(int n);
    static SymMatrix diag(const Vec& d);

private:
    int dim_;
    std::vector<double> data_;
};

SymMatrix operator+(SymMatrix a, const SymMatrix& b);
SymMatrix operator-(SymMatrix a, const SymMatrix& b);
SymMatrix operator*(double s, SymMatrix a);

// trace(A * B) for symmetric A, B.
double inner(const SymMatrix& a, const SymMatrix& b);

struct Spectrum {
    Vec eigenvalues;  // ascending
    Matrix vectors;   // orthonormal columns, vectors.col(k) pairs with eigenvalues[k]
};

// Cyclic Jacobi rotations.  Always converges for symmetric input; an
// iteration cap only guards against internal failure.
Spectrum eig_sym(const SymMatrix& m);

// Count of eigenvalues with |w_i| > rel_tol * max|w_j|.  Zero matrix has rank 0.
int numeric_rank(const SymMatrix& m, double rel_tol = 1e-6);
int numeric_rank(const Spectrum& s, double rel_tol = 1e-6);

enum class PsdStatus { PositiveDefinite, PositiveSemidefinite, Indefinite };

// Classifies by the minimum eigenvalue against +-rel_tol*(1+max|w|).
PsdStatus psd_status(const SymMatrix& m, double rel_tol = 1e-9);

// Lower-triangular Cholesky factor; empty when m is not numerically positive
// definite.
std::optional<Matrix> cholesky(const SymMatrix& m);

double det_sym(const SymMatrix& m);

struct LeastSquares {
    Vec solution;        // minimum-norm least-squares solution
    double residual;     // ||M*solution - rhs||
    Matrix nullspace;    // orthonormal columns spanning ker(M)
    int rank;
};

// Column-pivoted Householder QR followed by a row-space factorization
// (complete orthogonal decomposition).  Rank decisions use numeric_rank's
// relative threshold.
LeastSquares solve_least_squares(const Matrix& m, const Vec& rhs, double rel_tol = 1e-6);

// Square solve via LU with partial pivoting.  Throws Error("singular") on
// numerically singular input.
Vec solve_lu(Matrix a, Vec b);

}  // namespace sdpexact

#endif
