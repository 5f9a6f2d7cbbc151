#include "blowup/homotopy.hpp"

#include "blowup/errors.hpp"
#include "map_system.hpp"

namespace blowup {

namespace {
int parity_sign(long long k) {
    return (k % 2 == 0) ? 1 : -1;
}
}  // namespace

void MapSystem::add_linearity_rows() {
    // f(r.m) = (-1)^{shift |r|} r.f(m), one equation per target coordinate.
    for (int b = 1; b <= S.base->N; ++b)
        for (int d = S.lo; d <= S.hi; ++d) {
            const int out_deg = b + d + shift;
            const int out_dim = T.dim(out_deg);
            if (out_dim == 0) continue;
            for (int i = 0; i < S.base->dim(b); ++i)
                for (int j = 0; j < S.dim(d); ++j) {
                    // LHS: f applied to the action r_i . m_j (degree b+d)
                    std::vector<Vec> eq(out_dim, Vec());
                    for (int t = 0; t < out_dim; ++t) eq[t] = new_row();
                    if (b + d <= S.hi) {
                        for (const auto& [mj, c] : S.act(b, d, i, j))
                            for (int t = 0; t < out_dim; ++t) eq[t][var(b + d, t, mj)] += c;
                    }
                    // RHS: (-1)^{shift b} r_i . f(m_j); f(m_j) in T degree d+shift
                    const Scalar sgn(parity_sign(1LL * shift * b));
                    for (int t2 = 0; t2 < T.dim(d + shift); ++t2)
                        for (const auto& [t, c] : T.act(b, d + shift, i, t2))
                            eq[t][var(d, t2, j)] -= sgn * c;
                    for (int t = 0; t < out_dim; ++t)
                        if (!is_zero(eq[t])) push(std::move(eq[t]), Scalar(0));
                }
        }
}

std::optional<HomotopyWitness> homotopy_between(const ModuleMorphism& f0,
                                                const ModuleMorphism& f1) {
    const bool same_src =
        f0.source == f1.source || structurally_equal(*f0.source, *f1.source);
    const bool same_tgt =
        f0.target == f1.target || structurally_equal(*f0.target, *f1.target);
    if (!same_src || !same_tgt)
        throw InputError("homotopy_between: morphisms must share source and target");
    if (f0.shift != 0 || f1.shift != 0)
        throw InputError("homotopy_between: degree-preserving morphisms expected");
    const DgModule& S = *f0.source;
    const DgModule& T = *f0.target;

    MapSystem sys(S, T, -1);
    sys.add_linearity_rows();

    // d_T h(m) + h(d_S m) = f0(m) - f1(m), coordinatewise
    for (int d = S.lo; d <= S.hi; ++d) {
        const int out_dim = T.dim(d);
        for (int j = 0; j < S.dim(d); ++j) {
            Vec x = zero_vec(S.dim(d));
            x[j] = 1;
            Vec target = f0.apply(d, x);
            add_scaled(target, f1.apply(d, x), Scalar(-1));
            std::vector<Vec> eq;
            for (int t = 0; t < out_dim; ++t) eq.push_back(sys.new_row());
            // d_T h(m): h(m) lives in T degree d-1
            if (d - 1 >= T.lo && d - 1 < T.hi) {
                const Matrix& dt = T.diff[d - 1 - T.lo];
                for (int t = 0; t < dt.rows(); ++t)
                    for (int u = 0; u < dt.cols(); ++u)
                        if (dt.at(t, u) != 0) eq[t][sys.var(d, u, j)] += dt.at(t, u);
            }
            // h(d_S m): d_S m in S degree d+1
            if (d < S.hi) {
                Vec dm = S.diff[d - S.lo].col(j);
                for (int u = 0; u < int(dm.size()); ++u)
                    if (dm[u] != 0)
                        for (int t = 0; t < out_dim; ++t) eq[t][sys.var(d + 1, t, u)] += dm[u];
            }
            for (int t = 0; t < out_dim; ++t) sys.push(std::move(eq[t]), target[t]);
        }
    }

    Matrix A = Matrix::from_rows(sys.n_vars, sys.rows);
    SolveResult r = solve(A, sys.rhs);
    if (!r.consistent) return std::nullopt;
    HomotopyWitness w{f0, f1, sys.unflatten(r.particular)};
    return w;
}

bool check_homotopy(const HomotopyWitness& w) {
    const DgModule& S = *w.f0.source;
    const DgModule& T = *w.f0.target;
    auto h_apply = [&](int d, const Vec& x) -> Vec {
        if (d < S.lo || d > S.hi) return zero_vec(T.dim(d - 1));
        return w.h[d - S.lo].apply(x);
    };
    for (int d = S.lo; d <= S.hi; ++d)
        for (int j = 0; j < S.dim(d); ++j) {
            Vec x = zero_vec(S.dim(d));
            x[j] = 1;
            Vec lhs = T.d_of(d - 1, h_apply(d, x));
            add_scaled(lhs, h_apply(d + 1, S.d_of(d, x)), Scalar(1));
            Vec rhs = w.f0.apply(d, x);
            add_scaled(rhs, w.f1.apply(d, x), Scalar(-1));
            if (lhs != rhs) return false;
        }
    // base-linearity of h
    for (int b = 0; b <= S.base->N; ++b)
        for (int d = S.lo; d <= S.hi; ++d)
            for (int i = 0; i < S.base->dim(b); ++i) {
                Vec r = zero_vec(S.base->dim(b));
                r[i] = 1;
                for (int j = 0; j < S.dim(d); ++j) {
                    Vec x = zero_vec(S.dim(d));
                    x[j] = 1;
                    Vec lhs = (b + d <= S.hi) ? h_apply(b + d, S.act_elem(b, r, d, x))
                                              : zero_vec(T.dim(b + d - 1));
                    Vec rhs = T.act_elem(b, r, d - 1, h_apply(d, x));
                    if (parity_sign(b) < 0)
                        for (auto& c : rhs) c = -c;
                    if (lhs != rhs) return false;
                }
            }
    return true;
}

HomComplex hom_complex(ModulePtr m, ModulePtr n, int lo, int hi) {
    if (!m || !n) throw InputError("hom_complex: null module");
    if (m->base != n->base) throw InputError("hom_complex: modules over different base algebras");
    if (hi < lo) throw InputError("hom_complex: empty degree window");
    HomComplex hc;
    hc.source = m;
    hc.target = n;
    hc.lo = lo;
    hc.hi = hi;

    std::vector<std::vector<Vec>> flat_bases;
    std::vector<MapSystem> systems;
    systems.reserve(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) {
        systems.emplace_back(*m, *n, i);
        MapSystem& sys = systems.back();
        sys.add_linearity_rows();
        Matrix A = sys.rows.empty() ? Matrix(0, sys.n_vars)
                                    : Matrix::from_rows(sys.n_vars, sys.rows);
        std::vector<Vec> basis = kernel_basis(A);
        hc.dims.push_back(int(basis.size()));
        std::vector<ModuleMorphism> elems;
        for (const auto& v : basis) {
            ModuleMorphism f;
            f.label = "hom" + std::to_string(i);
            f.source = m;
            f.target = n;
            f.shift = i;
            f.mats = sys.unflatten(v);
            elems.push_back(std::move(f));
        }
        hc.basis.push_back(std::move(elems));
        flat_bases.push_back(std::move(basis));
    }

    // D(f) = d_N o f - (-1)^i f o d_M, expressed in the next degree's basis
    for (int i = lo; i < hi; ++i) {
        const MapSystem& next = systems[i + 1 - lo];
        Matrix d(hc.dims[i + 1 - lo], hc.dims[i - lo]);
        for (int b = 0; b < hc.dims[i - lo]; ++b) {
            const ModuleMorphism& f = hc.basis[i - lo][b];
            std::vector<Matrix> Df;
            for (int deg = m->lo; deg <= m->hi; ++deg) {
                Matrix out(n->dim(deg + i + 1), m->dim(deg));
                // d_N o f
                if (deg + i >= n->lo && deg + i < n->hi)
                    out = n->diff[deg + i - n->lo] * f.mat(deg);
                // -(-1)^i f o d_M
                if (deg < m->hi) {
                    Matrix t = f.mat(deg + 1) * m->diff[deg - m->lo];
                    out = out - t.scaled_by(Scalar(parity_sign(i)));
                }
                Df.push_back(std::move(out));
            }
            Vec flat = next.flatten(Df);
            auto coords = express_in(flat_bases[i + 1 - lo], flat, next.n_vars);
            if (!coords)
                throw InternalError("hom_complex: differential leaves the computed basis");
            for (int t = 0; t < int(coords->size()); ++t) d.at(t, b) = (*coords)[t];
        }
        hc.diff.push_back(std::move(d));
    }
    return hc;
}

AlgebraMorphism SemiTrivialCone::inclusion() const {
    AlgebraMorphism f;
    f.label = cone_base->label + " -> " + algebra->label;
    f.source = cone_base;
    f.target = algebra;
    for (int d = 0; d <= cone_base->N; ++d) {
        Matrix m(algebra->dim(d), cone_base->dim(d));
        for (int i = 0; i < cone_base->dim(d); ++i) m.at(base_index(d, i), i) = 1;
        f.mats.push_back(std::move(m));
    }
    return f;
}

SemiTrivialCone semi_trivial_cone_cdga(const ModuleMorphism& f) {
    if (f.shift != 0) throw InputError("semi_trivial_cone_cdga: degree-0 morphism expected");
    const DgModule& M = *f.source;
    const DgModule& T = *f.target;
    AlgebraPtr A = M.base;
    if (T.base != A) throw InputError("semi_trivial_cone_cdga: target must be over the same base");
    // target must be the base algebra as a module over itself
    if (T.lo != 0 || T.hi != A->N) throw InputError("semi_trivial_cone_cdga: target is not the base");
    for (int d = 0; d <= A->N; ++d)
        if (T.dim(d) != A->dim(d))
            throw InputError("semi_trivial_cone_cdga: target is not the base algebra");

    {
        ValidationReport rep = validate(f);
        if (!rep.ok())
            throw InputError("semi_trivial_cone_cdga: morphism invalid: " + rep.summary());
    }

    // nonzero degree range of M
    int nz_lo = 0, nz_hi = -1;
    for (int d = M.lo; d <= M.hi; ++d)
        if (M.dim(d) > 0) {
            if (nz_hi < nz_lo) nz_lo = d;
            nz_hi = d;
        }
    bool concentrated = (nz_hi < nz_lo) || (nz_lo >= 1 && nz_hi <= 2 * nz_lo - 1);
    bool injective = true;
    for (int d = M.lo; d <= M.hi && injective; ++d)
        if (rank_of(f.mat(d)) != M.dim(d)) injective = false;
    if (!concentrated && !injective)
        throw HypothesisError(
            "semi_trivial_cone_cdga: module is concentrated in [" + std::to_string(nz_lo) + "," +
            std::to_string(nz_hi) +
            "], which violates the [p,2p-1] hypothesis, and the map is not an ideal inclusion");
    if (nz_hi >= nz_lo && nz_lo - 1 < 0)
        throw InputError("semi_trivial_cone_cdga: suspension part would sit in negative degrees");

    const int N = std::max(A->N, nz_hi - 1);
    SemiTrivialCone out;
    out.cone_base = A;
    out.coned = f.source;

    DegreewiseAlgebra C;
    C.label = A->label + "(+)s(" + M.label + ")";
    C.N = N;
    C.generators = A->generators;
    C.names.assign(N + 1, {});
    out.base_dims.assign(N + 1, 0);
    auto sdim = [&](int d) { return M.dim(d + 1); };  // suspension part of degree d
    for (int d = 0; d <= N; ++d) {
        out.base_dims[d] = A->dim(d);
        for (int i = 0; i < A->dim(d); ++i) C.names[d].push_back(A->names[d][i]);
        for (int j = 0; j < sdim(d); ++j)
            C.names[d].push_back("s(" + M.names[d + 1 - M.lo][j] + ")");
    }
    C.unit_index = A->unit_index;
    C.declared_connected = A->declared_connected && sdim(0) == 0;

    auto cdim = [&](int d) { return (d < 0 || d > N) ? 0 : int(C.names[d].size()); };

    // products
    C.mult.assign(N + 1, {});
    for (int d = 0; d <= N; ++d) {
        C.mult[d].assign(N - d + 1, {});
        for (int e = 0; d + e <= N; ++e) {
            auto& table = C.mult[d][e];
            table.assign(std::size_t(cdim(d)) * cdim(e), {});
            const int sd = out.base_dims[d], se = out.base_dims[e], st = out.base_dims[d + e];
            // A x A
            for (int i = 0; i < sd; ++i)
                for (int j = 0; j < se; ++j) table[std::size_t(i) * cdim(e) + j] =
                    A->basis_product(d, e, i, j);
            // A x sM: r.(s m) = (-1)^{|r|} s(r.m)
            for (int i = 0; i < sd; ++i)
                for (int j = 0; j < sdim(e); ++j) {
                    SVec v;
                    for (const auto& [t, c] : M.act(d, e + 1, i, j))
                        v.emplace_back(st + t, Scalar(parity_sign(d)) * c);
                    table[std::size_t(i) * cdim(e) + se + j] = std::move(v);
                }
            // sM x A: (s m).r = (-1)^{|r|(|sm|)} r.(s m) = (-1)^{e(d+1)} s(r.m)
            for (int j = 0; j < sdim(d); ++j)
                for (int i = 0; i < se; ++i) {
                    SVec v;
                    for (const auto& [t, c] : M.act(e, d + 1, i, j))
                        v.emplace_back(st + t, Scalar(parity_sign(1LL * e * (d + 1))) * c);
                    table[std::size_t(sd + j) * cdim(e) + i] = std::move(v);
                }
            // sM x sM = 0 (already empty)
        }
    }

    // differential: d(a, s m) = (d_A a + f(m), -s(d_M m))
    C.diff.assign(N + 1, Matrix());
    for (int d = 0; d <= N; ++d) {
        Matrix mt(cdim(d + 1), cdim(d));
        const int sd = out.base_dims[d];
        const int st = (d + 1 <= N) ? out.base_dims[d + 1] : 0;
        for (int i = 0; i < sd; ++i) {
            if (d < A->N) {
                Vec da = A->diff[d].col(i);
                for (int t = 0; t < int(da.size()); ++t)
                    if (da[t] != 0) mt.at(t, i) = da[t];
            }
        }
        for (int j = 0; j < sdim(d); ++j) {
            Vec x = zero_vec(M.dim(d + 1));
            x[j] = 1;
            Vec fm = f.apply(d + 1, x);  // lands in A degree d+1
            for (int t = 0; t < int(fm.size()); ++t)
                if (fm[t] != 0) mt.at(t, sd + j) = fm[t];
            if (d + 1 < M.hi) {
                Vec dm = M.diff[d + 1 - M.lo].col(j);
                for (int t = 0; t < int(dm.size()); ++t)
                    if (dm[t] != 0) mt.at(st + t, sd + j) = -dm[t];
            }
        }
        C.diff[d] = std::move(mt);
    }

    ValidationReport rep = validate(C);
    if (!rep.ok())
        throw InternalError("semi_trivial_cone_cdga: assembled algebra fails validation: " +
                            rep.summary());
    out.algebra = std::make_shared<DegreewiseAlgebra>(std::move(C));
    return out;
}

}  // namespace blowup
