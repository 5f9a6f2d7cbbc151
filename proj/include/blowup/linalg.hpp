#ifndef BLOWUP_LINALG_HPP
#define BLOWUP_LINALG_HPP

#include <optional>
#include <vector>

#include "blowup/scalar.hpp"

namespace blowup {

// Dense matrix over Q. Degreewise matrices in this problem stay small
// (at most a few hundred entries per side), so dense storage is the default.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, Scalar(0)) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    void set_col(int j, const Vec& v);
    Vec col(int j) const;
    Vec row(int i) const;

    // Column j of the result is the image of basis vector j.
    Vec apply(const Vec& x) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled_by(const Scalar& c) const;
    bool operator==(const Matrix& rhs) const = default;

    bool is_zero() const;

    static Matrix from_cols(int rows, const std::vector<Vec>& cols);
    static Matrix from_rows(int cols, const std::vector<Vec>& rows);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

// Pivot-column orders for elimination. MinBits picks, within the current
// column, the entry with the smallest combined bit size to limit coefficient
// blow-up; the column scan order is what distinguishes the policies.
enum class PivotOrder { MinBits, FirstNonzero, ReverseCols };

struct Echelon {
    Matrix rre;                   // reduced row echelon form
    std::vector<int> pivot_cols;  // column of the pivot in each nonzero row
    int rank = 0;
};

Echelon reduced_echelon(Matrix a, PivotOrder order = PivotOrder::MinBits);

int rank_of(const Matrix& a);

struct SolveResult {
    bool consistent = false;
    Vec particular;           // one solution of A x = b when consistent
    std::vector<Vec> kernel;  // basis of the null space of A
};

// Exact solve; kernel basis is returned in every case.
SolveResult solve(const Matrix& a, const Vec& b, PivotOrder order = PivotOrder::MinBits);

std::vector<Vec> kernel_basis(const Matrix& a, PivotOrder order = PivotOrder::MinBits);

// A subspace of Q^ambient_dim presented by an independent basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}

    // Reduces a spanning set to a canonical (reduced-echelon) basis.
    static Subspace span_of(int ambient_dim, const std::vector<Vec>& vectors);

    // Requires the given vectors to be independent already.
    static Subspace from_basis(int ambient_dim, std::vector<Vec> basis);

    int ambient_dim() const { return ambient_; }
    int dim() const { return int(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    std::optional<Vec> coordinates_of(const Vec& v) const;

    Subspace sum(const Subspace& other) const;
    bool operator==(const Subspace& other) const;  // equality as subspaces

private:
    int ambient_ = 0;
    std::vector<Vec> basis_;
};

// Standard coordinate vectors whose classes form a basis of ambient/sub.
Subspace quotient_basis(const Subspace& sub, int ambient_dim);

// Vectors from `candidates` extending `inside` to a basis of
// span(inside + candidates); first-come order, deterministic.
std::vector<Vec> extend_basis(const std::vector<Vec>& inside, const std::vector<Vec>& candidates,
                              int ambient_dim);

// Coordinates of v in the span of `basis_cols` (columns independent).
std::optional<Vec> express_in(const std::vector<Vec>& basis_cols, const Vec& v, int ambient_dim);

}  // namespace blowup

#endif
