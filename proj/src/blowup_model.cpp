#include "blowup/blowup_model.hpp"

#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

namespace {
int parity_sign(long long k) {
    return (k % 2 == 0) ? 1 : -1;
}
}  // namespace

ComplementModel complement_model(const EmbeddingModel& e, const ModuleMorphism& phi_shriek) {
    // source cone: R (+)_{phi^!} s s^{-r} Q over R
    SemiTrivialCone src = semi_trivial_cone_cdga(phi_shriek);

    // phi phi^! vanishes for degree reasons; certify rather than assume
    for (int d = phi_shriek.source->lo; d <= phi_shriek.source->hi; ++d)
        if (d <= e.R->N && !(e.phi.mats[d] * phi_shriek.mat(d)).is_zero())
            throw InternalError("complement_model: phi o phi^! != 0, degree " + std::to_string(d));

    // target cone: Q (+)_0 s s^{-r} Q over Q
    ModulePtr sQ_over_Q = suspension(module_over_self(e.Q), -e.r());
    ModuleMorphism zero = zero_morphism(sQ_over_Q, module_over_self(e.Q));
    zero.label = "phi phi^!";
    SemiTrivialCone tgt = semi_trivial_cone_cdga(zero);

    // phi (+) id
    AlgebraMorphism f;
    f.label = "phi(+)id";
    f.source = src.algebra;
    f.target = tgt.algebra;
    for (int d = 0; d <= src.algebra->N; ++d) {
        Matrix m(tgt.algebra->dim(d), src.algebra->dim(d));
        // base part by phi
        if (d <= e.R->N)
            for (int i = 0; i < e.R->dim(d); ++i) {
                Vec fi = e.phi.mats[d].col(i);
                for (int t = 0; t < int(fi.size()); ++t)
                    if (fi[t] != 0) m.at(tgt.base_index(d, t), src.base_index(d, i)) = fi[t];
            }
        // suspension part identically
        const int sdim_src = src.algebra->dim(d) - src.base_dims[d];
        for (int j = 0; j < sdim_src; ++j) m.at(tgt.susp_index(d, j), src.susp_index(d, j)) = 1;
        f.mats.push_back(std::move(m));
    }
    ValidationReport rep = validate(f);
    if (!rep.ok())
        throw InternalError("complement_model: phi (+) id fails validation: " + rep.summary());
    return ComplementModel{std::move(src), std::move(tgt), std::move(f)};
}

ProjectivizationModel projectivization_model(AlgebraPtr Q, const ChernData& chern, int N) {
    int dim_v = 0;
    for (int d = 0; d <= Q->N; ++d)
        if (Q->dim(d) > 0) dim_v = d;
    const int k = chern.k;
    if (2 * k < dim_v + 2)
        throw HypothesisError("projectivization_model: need 2k >= dim V + 2 (k=" +
                              std::to_string(k) + ", dim V = " + std::to_string(dim_v) + ")");

    // total space: Q (x) Lambda(x, z), Dz = sum_{i<k} gamma_i x^{k-i}
    FreeExtensionBuilder total_b(Q, {{"x", 2, 0}, {"z", 2 * k - 1, 0}},
                                 N, Q->label + "(x)Lambda(x,z)");
    Vec dz = zero_vec(total_b.basis_dim(2 * k));
    for (int i = 0; i < k; ++i) {
        const Vec& g = chern.gamma[i];
        for (int qi = 0; qi < int(g.size()); ++qi)
            if (g[qi] != 0) dz[total_b.pair_index(2 * k, 2 * i, qi, {k - i, 0})] += g[qi];
    }
    total_b.set_diff(1, dz);
    AlgebraPtr total = total_b.build();

    FreeExtensionBuilder sphere_b(Q, {{"z", 2 * k - 1, 0}}, N, Q->label + "(x)Lambda(z)");
    AlgebraPtr sphere = sphere_b.build();

    // projection: x -> 0, z -> z, identity on Q
    AlgebraMorphism proj;
    proj.label = "proj";
    proj.source = total;
    proj.target = sphere;
    for (int d = 0; d <= total->N; ++d) {
        Matrix m(sphere->dim(d), total->dim(d));
        for (int i = 0; i < total->dim(d); ++i) {
            auto t = sphere->basis_index(d, total->names[d][i]);
            if (t) m.at(*t, i) = 1;  // monomials not involving x survive by name
        }
        proj.mats.push_back(std::move(m));
    }
    ValidationReport rep = validate(proj);
    if (!rep.ok())
        throw InternalError("projectivization_model: projection fails validation: " +
                            rep.summary());
    return ProjectivizationModel{std::move(total), std::move(sphere), std::move(proj)};
}

int BlowupModel::x_index(int t, int j, int qi) const {
    const Layout& L = layout.at(t);
    int off = L.r_dim;
    for (const auto& [jj, qd] : L.x_part) {
        if (jj == j) return off + qi;
        off += embedding.Q->dim(qd);
    }
    throw InputError("x_index: no such block");
}

int BlowupModel::z_index(int t, int j, int qi) const {
    const Layout& L = layout.at(t);
    int off = L.r_dim;
    for (const auto& [jj, qd] : L.x_part) off += embedding.Q->dim(qd);
    for (const auto& [jj, qd] : L.z_part) {
        if (jj == j) return off + qi;
        off += embedding.Q->dim(qd);
    }
    throw InputError("z_index: no such block");
}

BlowupModel blowup_model(const EmbeddingModel& e, const ModuleMorphism& phi_shriek,
                         const ChernData& chern, int N) {
    const int n = e.n, k = e.k();
    if (N < 0) N = n + 2;
    if (N < n) throw InputError("blowup_model: top bound must be at least n");
    if (chern.k != k)
        throw HypothesisError("blowup_model: chern data has k=" + std::to_string(chern.k) +
                              " but the embedding has codimension 2k=" + std::to_string(2 * k));
    {
        ValidationReport rep = validate(phi_shriek);
        if (!rep.ok())
            throw HypothesisError("blowup_model: phi^! is not a module chain map: " +
                                  rep.summary());
        if (phi_shriek.source->lo != e.r() || phi_shriek.shift != 0)
            throw HypothesisError("blowup_model: phi^! must be a degree-0 map from s^{-2k}Q");
    }
    const auto& Q = *e.Q;
    const auto& R = *e.R;
    const int zdeg = 2 * k - 1;

    BlowupModel B;
    B.embedding = e;
    B.chern = chern;
    B.phi_shriek = phi_shriek;

    DegreewiseAlgebra A;
    A.label = "B(" + R.label + "," + Q.label + ")";
    A.N = N;
    A.declared_connected = true;
    A.generators = R.generators;
    A.names.assign(N + 1, {});
    B.layout.assign(N + 1, {});

    for (int t = 0; t <= N; ++t) {
        auto& L = B.layout[t];
        L.r_dim = R.dim(t);
        for (int i = 0; i < R.dim(t); ++i) A.names[t].push_back(R.names[t][i]);
        for (int j = 1; 2 * j <= t; ++j) {
            int qd = t - 2 * j;
            if (Q.dim(qd) == 0) continue;
            L.x_part.emplace_back(j, qd);
            std::string xs = (j == 1) ? "x" : "x^" + std::to_string(j);
            for (int qi = 0; qi < Q.dim(qd); ++qi)
                A.names[t].push_back(Q.names[qd][qi] == "1" ? xs : Q.names[qd][qi] + "*" + xs);
        }
        for (int j = 0; 2 * j + zdeg <= t; ++j) {
            int qd = t - 2 * j - zdeg;
            if (Q.dim(qd) == 0) continue;
            L.z_part.emplace_back(j, qd);
            std::string xs = (j == 0) ? "z" : (j == 1 ? "x*z" : "x^" + std::to_string(j) + "*z");
            for (int qi = 0; qi < Q.dim(qd); ++qi)
                A.names[t].push_back(Q.names[qd][qi] == "1" ? xs : Q.names[qd][qi] + "*" + xs);
        }
    }
    A.unit_index = 0;

    auto adim = [&](int t) { return (t < 0 || t > N) ? 0 : int(A.names[t].size()); };

    // index helpers against the layout (before A is finalized)
    auto x_ix = [&](int t, int j, int qi) -> int {
        const auto& L = B.layout[t];
        int off = L.r_dim;
        for (const auto& [jj, qd] : L.x_part) {
            if (jj == j) return off + qi;
            off += Q.dim(qd);
        }
        return -1;
    };
    auto z_ix = [&](int t, int j, int qi) -> int {
        const auto& L = B.layout[t];
        int off = L.r_dim;
        for (const auto& [jj, qd] : L.x_part) off += Q.dim(qd);
        for (const auto& [jj, qd] : L.z_part) {
            if (jj == j) return off + qi;
            off += Q.dim(qd);
        }
        return -1;
    };

    // scatter a Q-element into the (j, e) block of degree t (e = z exponent)
    auto scatter = [&](Vec& out, int t, int j, int zexp, const Vec& q, int qdeg,
                       const Scalar& coef) {
        if (coef == 0) return;
        if (t > N) return;
        for (int qi = 0; qi < int(q.size()); ++qi) {
            if (q[qi] == 0) continue;
            int ix = (zexp == 0) ? (j == 0 ? -2 : x_ix(t, j, qi)) : z_ix(t, j, qi);
            if (ix == -2) throw InternalError("blowup_model: scatter into the R part");
            if (ix >= 0) out[ix] += coef * q[qi];
        }
        (void)qdeg;
    };

    // multiplication tables
    A.mult.assign(N + 1, {});
    for (int d = 0; d <= N; ++d) A.mult[d].assign(N - d + 1, {});
    for (int d = 0; d <= N; ++d)
        for (int ee = 0; d + ee <= N; ++ee) {
            auto& table = A.mult[d][ee];
            table.assign(std::size_t(adim(d)) * adim(ee), {});
            const int t = d + ee;
            auto put = [&](int i, int j, Vec dense) {
                table[std::size_t(i) * adim(ee) + j] = to_sparse(dense);
            };
            // R x R
            for (int i = 0; i < R.dim(d); ++i)
                for (int j = 0; j < R.dim(ee); ++j) {
                    const SVec& p = R.basis_product(d, ee, i, j);
                    if (!p.empty()) table[std::size_t(i) * adim(ee) + j] = p;
                }
            // tensor blocks of a given degree: (j, zexp, qdeg)
            auto blocks_of = [&](int deg) {
                std::vector<std::tuple<int, int, int>> blocks;
                for (const auto& [j, qd] : B.layout[deg].x_part) blocks.emplace_back(j, 0, qd);
                for (const auto& [j, qd] : B.layout[deg].z_part) blocks.emplace_back(j, 1, qd);
                return blocks;
            };
            // R x tensor: r (q x w) = (phi(r) q) x w
            for (int i = 0; i < R.dim(d); ++i) {
                Vec phir = e.phi.apply(d, [&] {
                    Vec v = zero_vec(R.dim(d));
                    v[i] = 1;
                    return v;
                }());
                for (const auto& [j, zexp, qd] : blocks_of(ee))
                    for (int qi = 0; qi < Q.dim(qd); ++qi) {
                        Vec q = zero_vec(Q.dim(qd));
                        q[qi] = 1;
                        Vec pq = Q.mul(d, phir, qd, q);
                        Vec dense = zero_vec(adim(t));
                        scatter(dense, t, j, zexp, pq, d + qd, Scalar(1));
                        put(i, (zexp == 0) ? x_ix(ee, j, qi) : z_ix(ee, j, qi), dense);
                    }
            }
            // tensor x R: (q x w) r = (-1)^{|r||q x w|} (phi(r) q) x w
            for (int i = 0; i < R.dim(ee); ++i) {
                Vec phir = e.phi.apply(ee, [&] {
                    Vec v = zero_vec(R.dim(ee));
                    v[i] = 1;
                    return v;
                }());
                for (const auto& [j, zexp, qd] : blocks_of(d))
                    for (int qi = 0; qi < Q.dim(qd); ++qi) {
                        Vec q = zero_vec(Q.dim(qd));
                        q[qi] = 1;
                        Vec pq = Q.mul(ee, phir, qd, q);
                        Vec dense = zero_vec(adim(t));
                        scatter(dense, t, j, zexp, pq, ee + qd,
                                Scalar(parity_sign(1LL * d * ee)));
                        put((zexp == 0) ? x_ix(d, j, qi) : z_ix(d, j, qi), i, dense);
                    }
            }
            // tensor x tensor
            for (const auto& [j1, e1, qd1] : blocks_of(d))
                for (const auto& [j2, e2, qd2] : blocks_of(ee)) {
                    if (e1 + e2 >= 2) continue;  // z^2 = 0
                    for (int q1 = 0; q1 < Q.dim(qd1); ++q1)
                        for (int q2 = 0; q2 < Q.dim(qd2); ++q2) {
                            const SVec& qq = Q.basis_product(qd1, qd2, q1, q2);
                            if (qq.empty()) continue;
                            // (q1 x w1)(q2 x w2) = (-1)^{|w1||q2|} q1 q2 x w1 w2
                            int sign = parity_sign(1LL * e1 * qd2);
                            Vec dense = zero_vec(adim(t));
                            for (const auto& [qt, c] : qq) {
                                int ix = (e1 + e2 == 0) ? x_ix(t, j1 + j2, qt)
                                                        : z_ix(t, j1 + j2, qt);
                                if (ix >= 0) dense[ix] += Scalar(sign) * c;
                            }
                            int row = (e1 == 0) ? x_ix(d, j1, q1) : z_ix(d, j1, q1);
                            int col = (e2 == 0) ? x_ix(ee, j2, q2) : z_ix(ee, j2, q2);
                            put(row, col, dense);
                        }
                }
        }

    // differential
    A.diff.assign(N + 1, Matrix());
    for (int t = 0; t <= N; ++t) {
        Matrix m(adim(t + 1), adim(t));
        // R part
        if (t < R.N)
            for (int i = 0; i < R.dim(t); ++i) {
                Vec dr = R.diff[t].col(i);
                for (int u = 0; u < int(dr.size()); ++u)
                    if (dr[u] != 0) m.at(u, i) = dr[u];
            }
        // x part: D(q x^j) = dq x^j
        for (const auto& [j, qd] : B.layout[t].x_part)
            for (int qi = 0; qi < Q.dim(qd); ++qi) {
                Vec q = zero_vec(Q.dim(qd));
                q[qi] = 1;
                Vec dq = Q.d_of(qd, q);
                Vec col = zero_vec(adim(t + 1));
                scatter(col, t + 1, j, 0, dq, qd + 1, Scalar(1));
                int ci = x_ix(t, j, qi);
                for (int u = 0; u < adim(t + 1); ++u)
                    if (col[u] != 0) m.at(u, ci) = col[u];
            }
        // z part: D(q x^j z) = dq x^j z
        //   + (-1)^{|q|} [j = 0] phi^!(s^{-2k} q)
        //   + (-1)^{|q|} sum_i (q gamma_i) x^{k-i+j}
        for (const auto& [j, qd] : B.layout[t].z_part)
            for (int qi = 0; qi < Q.dim(qd); ++qi) {
                Vec q = zero_vec(Q.dim(qd));
                q[qi] = 1;
                Vec col = zero_vec(adim(t + 1));
                scatter(col, t + 1, j, 1, Q.d_of(qd, q), qd + 1, Scalar(1));
                const Scalar sq(parity_sign(qd));
                if (j == 0) {
                    // phi^! lands in R^{qd + 2k} = R^{t+1}
                    Vec fr = phi_shriek.apply(qd + 2 * k, q);
                    for (int u = 0; u < int(fr.size()); ++u)
                        if (fr[u] != 0 && t + 1 <= N) col[u] += sq * fr[u];
                }
                for (int i = 0; i < k; ++i) {
                    Vec qg = Q.mul(qd, q, 2 * i, chern.gamma[i]);
                    scatter(col, t + 1, k - i + j, 0, qg, qd + 2 * i, sq);
                }
                int ci = z_ix(t, j, qi);
                for (int u = 0; u < adim(t + 1); ++u)
                    if (col[u] != 0) m.at(u, ci) = col[u];
            }
        A.diff[t] = std::move(m);
    }

    ValidationReport rep = validate(A);
    if (!rep.ok())
        throw InternalError("blowup_model: assembled algebra fails validation: " + rep.summary());
    B.algebra = std::make_shared<DegreewiseAlgebra>(std::move(A));

    // iota: R -> B
    AlgebraMorphism iota;
    iota.label = "iota";
    iota.source = e.R;
    iota.target = B.algebra;
    for (int d = 0; d <= R.N; ++d) {
        Matrix mi(B.algebra->dim(d), R.dim(d));
        for (int i = 0; i < R.dim(d); ++i) mi.at(i, i) = 1;
        iota.mats.push_back(std::move(mi));
    }
    ValidationReport irep = validate(iota);
    if (!irep.ok()) throw InternalError("blowup_model: iota fails validation: " + irep.summary());
    B.iota = std::move(iota);
    return B;
}

}  // namespace blowup
