#include "blowup/linalg.hpp"

#include <algorithm>

#include "blowup/errors.hpp"

namespace blowup {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void Matrix::set_col(int j, const Vec& v) {
    if (int(v.size()) != rows_) throw InputError("set_col: dimension mismatch");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Vec Matrix::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Vec Matrix::row(int i) const {
    Vec v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

Vec Matrix::apply(const Vec& x) const {
    if (int(x.size()) != cols_) throw InputError("apply: dimension mismatch");
    Vec y(rows_, Scalar(0));
    for (int j = 0; j < cols_; ++j) {
        if (x[j] == 0) continue;
        for (int i = 0; i < rows_; ++i) {
            const Scalar& a = at(i, j);
            if (a != 0) y[i] += a * x[j];
        }
    }
    return y;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw InputError("matrix product: dimension mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix sum: dimension mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InputError("matrix diff: dimension mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

Matrix Matrix::scaled_by(const Scalar& c) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * c;
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::from_cols(int rows, const std::vector<Vec>& cols) {
    Matrix m(rows, int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) m.set_col(j, cols[j]);
    return m;
}

Matrix Matrix::from_rows(int cols, const std::vector<Vec>& rows) {
    Matrix m(int(rows.size()), cols);
    for (int i = 0; i < int(rows.size()); ++i) {
        if (int(rows[i].size()) != cols) throw InputError("from_rows: dimension mismatch");
        for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

namespace {

// Column visit order for the elimination.
std::vector<int> column_order(int cols, PivotOrder order) {
    std::vector<int> cs(cols);
    for (int j = 0; j < cols; ++j) cs[j] = j;
    if (order == PivotOrder::ReverseCols) std::reverse(cs.begin(), cs.end());
    return cs;
}

}  // namespace

Echelon reduced_echelon(Matrix a, PivotOrder order) {
    Echelon res;
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> pivot_cols;
    int next_row = 0;
    for (int c : column_order(cols, order)) {
        if (next_row >= rows) break;
        // pick pivot row: smallest bit size unless FirstNonzero asked
        int pivot = -1;
        std::size_t best_bits = 0;
        for (int i = next_row; i < rows; ++i) {
            if (a.at(i, c) == 0) continue;
            if (order == PivotOrder::FirstNonzero) {
                pivot = i;
                break;
            }
            std::size_t bits = scalar_bits(a.at(i, c));
            if (pivot < 0 || bits < best_bits) {
                pivot = i;
                best_bits = bits;
            }
        }
        if (pivot < 0) continue;
        // swap into place, normalize, eliminate everywhere else
        if (pivot != next_row)
            for (int j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(next_row, j));
        Scalar inv = 1 / a.at(next_row, c);
        for (int j = 0; j < cols; ++j)
            if (a.at(next_row, j) != 0) a.at(next_row, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == next_row) continue;
            Scalar f = a.at(i, c);
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                if (a.at(next_row, j) != 0) a.at(i, j) -= f * a.at(next_row, j);
        }
        pivot_cols.push_back(c);
        ++next_row;
    }
    res.rre = std::move(a);
    res.pivot_cols = std::move(pivot_cols);
    res.rank = next_row;
    return res;
}

int rank_of(const Matrix& a) {
    return reduced_echelon(a).rank;
}

SolveResult solve(const Matrix& a, const Vec& b, PivotOrder order) {
    if (int(b.size()) != a.rows()) throw InputError("solve: rhs dimension mismatch");
    const int rows = a.rows(), cols = a.cols();
    Matrix aug(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, cols) = b[i];
    }
    // Keep the rhs column out of the pivot search: eliminate on columns of A
    // only, in the requested order, by doing the reduction manually.
    Echelon ech;
    {
        Matrix m = aug;
        std::vector<int> pivot_cols;
        int next_row = 0;
        for (int c : column_order(cols, order)) {
            if (next_row >= rows) break;
            int pivot = -1;
            std::size_t best_bits = 0;
            for (int i = next_row; i < rows; ++i) {
                if (m.at(i, c) == 0) continue;
                if (order == PivotOrder::FirstNonzero) {
                    pivot = i;
                    break;
                }
                std::size_t bits = scalar_bits(m.at(i, c));
                if (pivot < 0 || bits < best_bits) {
                    pivot = i;
                    best_bits = bits;
                }
            }
            if (pivot < 0) continue;
            if (pivot != next_row)
                for (int j = 0; j <= cols; ++j) std::swap(m.at(pivot, j), m.at(next_row, j));
            Scalar inv = 1 / m.at(next_row, c);
            for (int j = 0; j <= cols; ++j)
                if (m.at(next_row, j) != 0) m.at(next_row, j) *= inv;
            for (int i = 0; i < rows; ++i) {
                if (i == next_row) continue;
                Scalar f = m.at(i, c);
                if (f == 0) continue;
                for (int j = 0; j <= cols; ++j)
                    if (m.at(next_row, j) != 0) m.at(i, j) -= f * m.at(next_row, j);
            }
            pivot_cols.push_back(c);
            ++next_row;
        }
        ech.rre = std::move(m);
        ech.pivot_cols = std::move(pivot_cols);
        ech.rank = next_row;
    }

    SolveResult out;
    // inconsistent if a nonzero rhs entry remains in a zero row of A
    for (int i = ech.rank; i < rows; ++i)
        if (ech.rre.at(i, cols) != 0) {
            out.consistent = false;
            out.kernel = kernel_basis(a, order);
            return out;
        }
    out.consistent = true;
    out.particular = zero_vec(cols);
    for (int rix = 0; rix < ech.rank; ++rix) out.particular[ech.pivot_cols[rix]] = ech.rre.at(rix, cols);

    // kernel from the same echelon form (drop rhs column)
    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec k = zero_vec(cols);
        k[c] = 1;
        for (int rix = 0; rix < ech.rank; ++rix) k[ech.pivot_cols[rix]] = -ech.rre.at(rix, c);
        out.kernel.push_back(std::move(k));
    }
    return out;
}

std::vector<Vec> kernel_basis(const Matrix& a, PivotOrder order) {
    Echelon ech = reduced_echelon(a, order);
    const int cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> out;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec k = zero_vec(cols);
        k[c] = 1;
        for (int rix = 0; rix < ech.rank; ++rix) k[ech.pivot_cols[rix]] = -ech.rre.at(rix, c);
        out.push_back(std::move(k));
    }
    return out;
}

Subspace Subspace::span_of(int ambient_dim, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (int(v.size()) != ambient_dim) throw InputError("span_of: vector dimension mismatch");
    Echelon ech = reduced_echelon(Matrix::from_rows(ambient_dim, vectors), PivotOrder::FirstNonzero);
    Subspace s(ambient_dim);
    for (int i = 0; i < ech.rank; ++i) s.basis_.push_back(ech.rre.row(i));
    return s;
}

Subspace Subspace::from_basis(int ambient_dim, std::vector<Vec> basis) {
    Subspace s(ambient_dim);
    if (int(Subspace::span_of(ambient_dim, basis).dim()) != int(basis.size()))
        throw InputError("from_basis: vectors are not linearly independent");
    s.basis_ = std::move(basis);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    return coordinates_of(v).has_value();
}

std::optional<Vec> Subspace::coordinates_of(const Vec& v) const {
    if (int(v.size()) != ambient_) throw InputError("coordinates_of: dimension mismatch");
    if (basis_.empty()) {
        if (is_zero(v)) return Vec{};
        return std::nullopt;
    }
    Matrix m = Matrix::from_cols(ambient_, basis_);
    SolveResult r = solve(m, v);
    if (!r.consistent) return std::nullopt;
    return r.particular;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw InputError("subspace sum: ambient mismatch");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span_of(ambient_, all);
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && dim() == other.dim() && contains(other);
}

Subspace quotient_basis(const Subspace& sub, int ambient_dim) {
    if (sub.ambient_dim() != ambient_dim) throw InputError("quotient_basis: ambient mismatch");
    std::vector<Vec> rows = sub.basis();
    if (rank_of(Matrix::from_rows(ambient_dim, rows)) != int(rows.size()))
        throw InputError("quotient_basis: sub basis not independent");
    std::vector<Vec> picked;
    int have = int(rows.size());
    for (int i = 0; i < ambient_dim && have + int(picked.size()) < ambient_dim; ++i) {
        Vec e = zero_vec(ambient_dim);
        e[i] = 1;
        std::vector<Vec> trial = rows;
        trial.insert(trial.end(), picked.begin(), picked.end());
        trial.push_back(e);
        if (rank_of(Matrix::from_rows(ambient_dim, trial)) == have + int(picked.size()) + 1)
            picked.push_back(std::move(e));
    }
    return Subspace::from_basis(ambient_dim, std::move(picked));
}

std::vector<Vec> extend_basis(const std::vector<Vec>& inside, const std::vector<Vec>& candidates,
                              int ambient_dim) {
    std::vector<Vec> have = inside;
    std::vector<Vec> picked;
    int r = have.empty() ? 0 : rank_of(Matrix::from_rows(ambient_dim, have));
    for (const auto& c : candidates) {
        std::vector<Vec> trial = have;
        trial.push_back(c);
        int r2 = rank_of(Matrix::from_rows(ambient_dim, trial));
        if (r2 > r) {
            picked.push_back(c);
            have = std::move(trial);
            r = r2;
        }
    }
    return picked;
}

std::optional<Vec> express_in(const std::vector<Vec>& basis_cols, const Vec& v, int ambient_dim) {
    if (basis_cols.empty()) {
        if (is_zero(v)) return Vec{};
        return std::nullopt;
    }
    Matrix m = Matrix::from_cols(ambient_dim, basis_cols);
    SolveResult r = solve(m, v);
    if (!r.consistent) return std::nullopt;
    return r.particular;
}

}  // namespace blowup
