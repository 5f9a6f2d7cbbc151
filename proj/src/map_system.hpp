#ifndef BLOWUP_SRC_MAP_SYSTEM_HPP
#define BLOWUP_SRC_MAP_SYSTEM_HPP

#include <vector>

#include "blowup/dgmodule.hpp"

namespace blowup {

// Flat variable layout for an unknown degree-`shift` map S -> T given by one
// matrix per source degree, plus a growing list of linear equations in those
// variables. Used by the homotopy solver, the Hom-complex and the shriek
// solver.
struct MapSystem {
    const DgModule& S;
    const DgModule& T;
    int shift;
    std::vector<int> offsets;  // per source degree
    int n_vars = 0;

    MapSystem(const DgModule& s, const DgModule& t, int shift_in)
        : S(s), T(t), shift(shift_in) {
        offsets.assign(S.hi - S.lo + 2, 0);
        for (int d = S.lo; d <= S.hi; ++d) {
            offsets[d - S.lo + 1] =
                offsets[d - S.lo] + T.dim(d + shift) * S.dim(d);
        }
        n_vars = offsets[S.hi - S.lo + 1];
    }

    // variable index for entry (t, j) of the matrix at source degree d
    int var(int d, int t, int j) const {
        return offsets[d - S.lo] + t * S.dim(d) + j;
    }

    std::vector<Vec> rows;
    std::vector<Scalar> rhs;

    Vec new_row() const { return zero_vec(n_vars); }
    void push(Vec row, Scalar b) {
        rows.push_back(std::move(row));
        rhs.push_back(std::move(b));
    }

    // matrices of a flat solution vector
    std::vector<Matrix> unflatten(const Vec& x) const {
        std::vector<Matrix> mats;
        for (int d = S.lo; d <= S.hi; ++d) {
            Matrix m(T.dim(d + shift), S.dim(d));
            for (int t = 0; t < m.rows(); ++t)
                for (int j = 0; j < m.cols(); ++j) m.at(t, j) = x[var(d, t, j)];
            mats.push_back(std::move(m));
        }
        return mats;
    }

    Vec flatten(const std::vector<Matrix>& mats) const {
        Vec x = zero_vec(n_vars);
        for (int d = S.lo; d <= S.hi; ++d) {
            const Matrix& m = mats[d - S.lo];
            for (int t = 0; t < m.rows(); ++t)
                for (int j = 0; j < m.cols(); ++j) x[var(d, t, j)] = m.at(t, j);
        }
        return x;
    }

    // Adds the base-linearity equations f(r.m) = (-1)^{shift |r|} r.f(m).
    void add_linearity_rows();
};

}  // namespace blowup

#endif
