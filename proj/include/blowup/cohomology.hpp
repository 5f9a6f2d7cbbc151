#ifndef BLOWUP_COHOMOLOGY_HPP
#define BLOWUP_COHOMOLOGY_HPP

#include <functional>

#include "blowup/homotopy.hpp"
#include "blowup/morphism.hpp"

namespace blowup {

// Uniform read-only view of a cochain complex (algebra, module, Hom complex).
struct ComplexView {
    int lo = 0, hi = -1;
    std::function<int(int)> dim;
    std::function<Matrix(int)> diff;  // dim(d+1) x dim(d)
};

ComplexView view_of(const DegreewiseAlgebra& a);
ComplexView view_of(const DgModule& m);
ComplexView view_of(const HomComplex& h);

// Degreewise cohomology with chosen cocycle representatives. Valid only up
// to one below the truncation bound of the underlying object; the caller's
// window is checked against the view.
struct GradedCohomology {
    int lo = 0, hi = -1;
    std::vector<int> ambient_dims;            // cochain dims per degree
    std::vector<int> dims;                    // dim H^d
    std::vector<std::vector<Vec>> reps;       // representative cocycles
    std::vector<std::vector<Vec>> boundaries; // echelon basis of im(d)

    int dim(int d) const { return (d < lo || d > hi) ? 0 : dims[d - lo]; }
    // Class coordinates of a cocycle in the representative basis;
    // nullopt when the vector is not a cocycle of that degree.
    std::optional<Vec> class_of(int d, const Vec& cocycle) const;
    bool is_coboundary(int d, const Vec& cocycle) const;
};

GradedCohomology cohomology(const ComplexView& v, int lo, int hi);
GradedCohomology cohomology(const DegreewiseAlgebra& a, int lo, int hi);
GradedCohomology cohomology(const DgModule& m, int lo, int hi);

std::vector<int> betti(const DegreewiseAlgebra& a, int lo, int hi);

// Graded basis of cohomology with cup-product structure constants.
struct CohomologyRing {
    std::string label;
    int lo = 0, hi = -1;
    std::vector<int> dims;
    std::vector<std::vector<std::string>> class_names;
    std::vector<std::vector<std::vector<SVec>>> cup;  // cup[d][e], d+e <= hi
    std::optional<int> formal_dimension;

    int dim(int d) const { return (d < lo || d > hi) ? 0 : dims[d - lo]; }
    const SVec& cup_product(int d, int e, int i, int j) const;
    Vec cup_elem(int d, const Vec& x, int e, const Vec& y) const;
};

// Ring structure induced on cohomology: representatives are multiplied and
// reduced modulo coboundaries. Constants are independent of the chosen
// representatives.
CohomologyRing cup_structure(const DegreewiseAlgebra& a, int lo, int hi);

// H^d(f) bijective for every d in [lo, hi].
bool is_quasi_iso(const AlgebraMorphism& f, int lo, int hi);
bool is_quasi_iso(const ModuleMorphism& f, int lo, int hi);

struct PoincareResult {
    bool ok = false;
    int witness_degree = -1;
    Vec witness_class;  // pairs to zero against all of the complementary degree
};

// Nondegeneracy of every pairing H^d x H^{n-d} -> H^n. Requires dim H^n = 1.
PoincareResult poincare_check(const CohomologyRing& ring, int n);

}  // namespace blowup

#endif
