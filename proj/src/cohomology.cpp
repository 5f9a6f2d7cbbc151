#include "blowup/cohomology.hpp"

#include "blowup/errors.hpp"

namespace blowup {

ComplexView view_of(const DegreewiseAlgebra& a) {
    ComplexView v;
    v.lo = 0;
    v.hi = a.N;
    v.dim = [&a](int d) { return a.dim(d); };
    v.diff = [&a](int d) {
        if (d < 0 || d >= a.N) return Matrix(a.dim(d + 1), a.dim(d));
        return a.diff[d];
    };
    return v;
}

ComplexView view_of(const DgModule& m) {
    ComplexView v;
    v.lo = m.lo;
    v.hi = m.hi;
    v.dim = [&m](int d) { return m.dim(d); };
    v.diff = [&m](int d) {
        if (d < m.lo || d >= m.hi) return Matrix(m.dim(d + 1), m.dim(d));
        return m.diff[d - m.lo];
    };
    return v;
}

ComplexView view_of(const HomComplex& h) {
    ComplexView v;
    v.lo = h.lo;
    v.hi = h.hi;
    auto hdim = [&h](int d) { return (d < h.lo || d > h.hi) ? 0 : h.dims[d - h.lo]; };
    v.dim = hdim;
    v.diff = [&h, hdim](int d) {
        if (d < h.lo || d >= h.hi) return Matrix(hdim(d + 1), hdim(d));
        return h.diff[d - h.lo];
    };
    return v;
}

GradedCohomology cohomology(const ComplexView& v, int lo, int hi) {
    if (lo < v.lo || hi > v.hi - 1)
        throw InputError("cohomology: window [" + std::to_string(lo) + "," + std::to_string(hi) +
                         "] exceeds the certifiable range [" + std::to_string(v.lo) + "," +
                         std::to_string(v.hi - 1) + "]");
    GradedCohomology H;
    H.lo = lo;
    H.hi = hi;
    for (int d = lo; d <= hi; ++d) {
        const int n = v.dim(d);
        H.ambient_dims.push_back(n);
        std::vector<Vec> cycles = kernel_basis(v.diff(d));
        std::vector<Vec> bnd;
        if (d - 1 >= v.lo) {
            Matrix prev = v.diff(d - 1);
            std::vector<Vec> cols;
            for (int j = 0; j < prev.cols(); ++j) cols.push_back(prev.col(j));
            bnd = Subspace::span_of(n, cols).basis();
        }
        std::vector<Vec> reps = extend_basis(bnd, cycles, n);
        H.dims.push_back(int(reps.size()));
        H.reps.push_back(std::move(reps));
        H.boundaries.push_back(std::move(bnd));
    }
    return H;
}

GradedCohomology cohomology(const DegreewiseAlgebra& a, int lo, int hi) {
    return cohomology(view_of(a), lo, hi);
}

GradedCohomology cohomology(const DgModule& m, int lo, int hi) {
    return cohomology(view_of(m), lo, hi);
}

std::vector<int> betti(const DegreewiseAlgebra& a, int lo, int hi) {
    GradedCohomology H = cohomology(a, lo, hi);
    return H.dims;
}

std::optional<Vec> GradedCohomology::class_of(int d, const Vec& cocycle) const {
    if (d < lo || d > hi) throw InputError("class_of: degree outside the computed window");
    const auto& r = reps[d - lo];
    const auto& b = boundaries[d - lo];
    std::vector<Vec> cols = r;
    cols.insert(cols.end(), b.begin(), b.end());
    auto coords = express_in(cols, cocycle, ambient_dims[d - lo]);
    if (!coords) return std::nullopt;
    Vec out(coords->begin(), coords->begin() + r.size());
    return out;
}

bool GradedCohomology::is_coboundary(int d, const Vec& cocycle) const {
    auto c = class_of(d, cocycle);
    return c && is_zero(*c);
}

static const SVec kEmptySVec;

const SVec& CohomologyRing::cup_product(int d, int e, int i, int j) const {
    if (d < lo || e < lo || d + e > hi) return kEmptySVec;
    return cup[d - lo][e - lo][std::size_t(i) * dim(e) + j];
}

Vec CohomologyRing::cup_elem(int d, const Vec& x, int e, const Vec& y) const {
    Vec out = zero_vec(dim(d + e));
    if (d + e > hi) return out;
    for (int i = 0; i < int(x.size()); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < int(y.size()); ++j) {
            if (y[j] == 0) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [t, s] : cup_product(d, e, i, j)) out[t] += c * s;
        }
    }
    return out;
}

CohomologyRing cup_structure(const DegreewiseAlgebra& a, int lo, int hi) {
    if (lo != 0) throw InputError("cup_structure: window must start at degree 0");
    GradedCohomology H = cohomology(a, lo, hi);
    CohomologyRing ring;
    ring.label = "H(" + a.label + ")";
    ring.lo = lo;
    ring.hi = hi;
    ring.dims = H.dims;
    for (int d = lo; d <= hi; ++d) {
        std::vector<std::string> names;
        for (const auto& r : H.reps[d - lo]) names.push_back("[" + a.element_str(d, r) + "]");
        ring.class_names.push_back(std::move(names));
    }
    ring.cup.assign(hi - lo + 1, {});
    for (int d = lo; d <= hi; ++d) {
        ring.cup[d - lo].assign(hi - d - lo + 1, {});
        for (int e = lo; d + e <= hi; ++e) {
            auto& table = ring.cup[d - lo][e - lo];
            table.assign(std::size_t(H.dim(d)) * H.dim(e), {});
            for (int i = 0; i < H.dim(d); ++i)
                for (int j = 0; j < H.dim(e); ++j) {
                    Vec prod = a.mul(d, H.reps[d - lo][i], e, H.reps[e - lo][j]);
                    auto cls = H.class_of(d + e, prod);
                    if (!cls)
                        throw InternalError("cup_structure: product of cocycles is not a cocycle");
                    table[std::size_t(i) * H.dim(e) + j] = to_sparse(*cls);
                }
        }
    }
    return ring;
}

namespace {

// induced map on H in one degree, as a matrix
template <typename ApplyFn>
std::optional<Matrix> induced_matrix(const GradedCohomology& HS, const GradedCohomology& HT, int d,
                                     ApplyFn&& apply) {
    Matrix m(HT.dim(d), HS.dim(d));
    for (int i = 0; i < HS.dim(d); ++i) {
        Vec img = apply(d, HS.reps[d - HS.lo][i]);
        auto cls = HT.class_of(d, img);
        if (!cls) return std::nullopt;  // image of a cocycle is not a cocycle
        for (int t = 0; t < int(cls->size()); ++t) m.at(t, i) = (*cls)[t];
    }
    return m;
}

template <typename ApplyFn>
bool quasi_iso_impl(const ComplexView& sv, const ComplexView& tv, int lo, int hi, ApplyFn&& apply) {
    GradedCohomology HS = cohomology(sv, lo, hi);
    GradedCohomology HT = cohomology(tv, lo, hi);
    for (int d = lo; d <= hi; ++d) {
        if (HS.dim(d) != HT.dim(d)) return false;
        auto m = induced_matrix(HS, HT, d, apply);
        if (!m) throw InternalError("is_quasi_iso: morphism is not a chain map");
        if (rank_of(*m) != HS.dim(d)) return false;
    }
    return true;
}

}  // namespace

bool is_quasi_iso(const AlgebraMorphism& f, int lo, int hi) {
    return quasi_iso_impl(view_of(*f.source), view_of(*f.target), lo, hi,
                          [&](int d, const Vec& x) { return f.apply(d, x); });
}

bool is_quasi_iso(const ModuleMorphism& f, int lo, int hi) {
    if (f.shift != 0) throw InputError("is_quasi_iso: degree-preserving morphism expected");
    return quasi_iso_impl(view_of(*f.source), view_of(*f.target), lo, hi,
                          [&](int d, const Vec& x) { return f.apply(d, x); });
}

PoincareResult poincare_check(const CohomologyRing& ring, int n) {
    if (n < ring.lo || n > ring.hi)
        throw InputError("poincare_check: formal dimension outside the ring's window");
    if (ring.dim(n) != 1)
        throw HypothesisError("poincare_check: dim H^" + std::to_string(n) + " = " +
                              std::to_string(ring.dim(n)) + ", expected 1");
    PoincareResult res;
    for (int d = 0; 2 * d <= n; ++d) {
        const int e = n - d;
        if (ring.dim(d) != ring.dim(e)) {
            res.ok = false;
            res.witness_degree = ring.dim(d) > ring.dim(e) ? d : e;
            // any class in the bigger side's kernel of the pairing
            const int big = res.witness_degree, small = n - big;
            Matrix pairing(ring.dim(small), ring.dim(big));
            for (int i = 0; i < ring.dim(big); ++i)
                for (int j = 0; j < ring.dim(small); ++j) {
                    const SVec& p = ring.cup_product(big, small, i, j);
                    pairing.at(j, i) = p.empty() ? Scalar(0) : p[0].second;
                }
            auto ker = kernel_basis(pairing);
            res.witness_class = ker.empty() ? zero_vec(ring.dim(big)) : ker[0];
            return res;
        }
        // dims agree, so nondegeneracy = trivial kernel of the square pairing
        Matrix pairing(ring.dim(e), ring.dim(d));
        for (int i = 0; i < ring.dim(d); ++i)
            for (int j = 0; j < ring.dim(e); ++j) {
                const SVec& p = ring.cup_product(d, e, i, j);
                pairing.at(j, i) = p.empty() ? Scalar(0) : p[0].second;
            }
        auto ker = kernel_basis(pairing);
        if (!ker.empty()) {
            res.ok = false;
            res.witness_degree = d;
            res.witness_class = ker[0];
            return res;
        }
    }
    res.ok = true;
    return res;
}

}  // namespace blowup
