#include "blowup/ring_presentation.hpp"

#include "blowup/errors.hpp"

namespace blowup {

namespace {

int parity_sign(long long k) {
    return (k % 2 == 0) ? 1 : -1;
}

// Ambient graded algebra E = H(W) (+) H(V) (x) Lambda^+(x) up to a bound.
struct Ambient {
    const BlowupPresentation& p;
    int top;
    struct Layout {
        int w_dim = 0;
        std::vector<std::pair<int, int>> x_part;  // (j, v-degree)
    };
    std::vector<Layout> layout;

    explicit Ambient(const BlowupPresentation& pres, int bound) : p(pres), top(bound) {
        layout.assign(top + 1, {});
        for (int t = 0; t <= top; ++t) {
            layout[t].w_dim = p.HW.dim(t);
            for (int j = 1; 2 * j <= t; ++j) {
                int vd = t - 2 * j;
                if (p.HV.dim(vd) > 0 && vd <= p.m) layout[t].x_part.emplace_back(j, vd);
            }
        }
    }

    int dim(int t) const {
        if (t < 0 || t > top) return 0;
        int d = layout[t].w_dim;
        for (const auto& [j, vd] : layout[t].x_part) d += p.HV.dim(vd);
        return d;
    }

    int w_index(int, int i) const { return i; }

    int x_index(int t, int j, int vi) const {
        int off = layout[t].w_dim;
        for (const auto& [jj, vd] : layout[t].x_part) {
            if (jj == j) return off + vi;
            off += p.HV.dim(vd);
        }
        return -1;
    }

    Vec f_star_apply(int d, const Vec& w) const {
        if (d > p.m || d >= int(p.f_star.size())) return zero_vec(p.HV.dim(d));
        return p.f_star[d].apply(w);
    }

    // product of basis elements, as a dense vector in degree d+e
    Vec mul_basis(int d, int i, int e, int j) const {
        Vec out = zero_vec(dim(d + e));
        if (d + e > top) return out;
        const Layout& Ld = layout[d];
        const Layout& Le = layout[e];
        // identify the block of i
        int kind_i = 0, j_i = 0, loc_i = i, vdeg_i = 0;
        if (i >= Ld.w_dim) {
            kind_i = 1;
            int off = Ld.w_dim;
            for (const auto& [j, vd] : Ld.x_part) {
                if (i < off + p.HV.dim(vd)) {
                    j_i = j;
                    vdeg_i = vd;
                    loc_i = i - off;
                    break;
                }
                off += p.HV.dim(vd);
            }
        }
        int kind_j = 0, j_j = 0, loc_j = j, vdeg_j = 0;
        if (j >= Le.w_dim) {
            kind_j = 1;
            int off = Le.w_dim;
            for (const auto& [jj, vd] : Le.x_part) {
                if (j < off + p.HV.dim(vd)) {
                    j_j = jj;
                    vdeg_j = vd;
                    loc_j = j - off;
                    break;
                }
                off += p.HV.dim(vd);
            }
        }
        const int t = d + e;
        if (kind_i == 0 && kind_j == 0) {
            // w w' in H(W)
            const SVec& ww = p.HW.cup_product(d, e, loc_i, loc_j);
            for (const auto& [u, c] : ww)
                if (t <= top && u < layout[t].w_dim) out[u] += c;
        } else if (kind_i == 0 && kind_j == 1) {
            // w (v x^j) = (f*(w) v) x^j
            Vec w = zero_vec(p.HW.dim(d));
            w[loc_i] = 1;
            Vec fv = f_star_apply(d, w);
            Vec v = zero_vec(p.HV.dim(vdeg_j));
            v[loc_j] = 1;
            Vec prod = p.HV.cup_elem(d, fv, vdeg_j, v);
            for (int u = 0; u < int(prod.size()); ++u) {
                if (prod[u] == 0) continue;
                int ix = x_index(t, j_j, u);
                if (ix >= 0) out[ix] += prod[u];
            }
        } else if (kind_i == 1 && kind_j == 0) {
            // (v x^i) w' = (-1)^{|w'||v|} (f*(w') v) x^i
            Vec w = zero_vec(p.HW.dim(e));
            w[loc_j] = 1;
            Vec fv = f_star_apply(e, w);
            Vec v = zero_vec(p.HV.dim(vdeg_i));
            v[loc_i] = 1;
            Vec prod = p.HV.cup_elem(e, fv, vdeg_i, v);
            const int sign = parity_sign(1LL * e * vdeg_i);
            for (int u = 0; u < int(prod.size()); ++u) {
                if (prod[u] == 0) continue;
                int ix = x_index(t, j_i, u);
                if (ix >= 0) out[ix] += Scalar(sign) * prod[u];
            }
        } else {
            // (v x^i)(v' x^j) = (v v') x^{i+j}
            Vec v = zero_vec(p.HV.dim(vdeg_i));
            v[loc_i] = 1;
            Vec v2 = zero_vec(p.HV.dim(vdeg_j));
            v2[loc_j] = 1;
            Vec prod = p.HV.cup_elem(vdeg_i, v, vdeg_j, v2);
            for (int u = 0; u < int(prod.size()); ++u) {
                if (prod[u] == 0) continue;
                int ix = x_index(t, j_i + j_j, u);
                if (ix >= 0) out[ix] += prod[u];
            }
        }
        return out;
    }

    Vec mul_elem(int d, const Vec& x, int e, const Vec& y) const {
        Vec out = zero_vec(dim(d + e));
        for (int i = 0; i < int(x.size()); ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < int(y.size()); ++j) {
                if (y[j] == 0) continue;
                Vec b = mul_basis(d, i, e, j);
                add_scaled(out, b, x[i] * y[j]);
            }
        }
        return out;
    }

    std::string basis_name(int t, int ix) const {
        const Layout& L = layout[t];
        if (ix < L.w_dim) return "W" + std::to_string(t) + "_" + std::to_string(ix);
        int off = L.w_dim;
        for (const auto& [j, vd] : L.x_part) {
            if (ix < off + p.HV.dim(vd))
                return "V" + std::to_string(vd) + "_" + std::to_string(ix - off) + "*x^" +
                       std::to_string(j);
            off += p.HV.dim(vd);
        }
        return "?";
    }
};

}  // namespace

BlowupPresentation presentation_from_model(const EmbeddingModel& e,
                                           const ModuleMorphism& phi_shriek,
                                           const ChernData& chern) {
    BlowupPresentation p;
    p.k = e.k();
    p.n = e.n;
    p.m = e.m;
    p.HW = cup_structure(*e.R, 0, e.n);
    p.HW.formal_dimension = e.n;
    p.HV = cup_structure(*e.Q, 0, e.m);
    p.HV.formal_dimension = e.m;

    GradedCohomology HR = cohomology(*e.R, 0, e.n);
    GradedCohomology HQ = cohomology(*e.Q, 0, e.m);

    for (int d = 0; d <= e.m; ++d) {
        Matrix fs(HQ.dim(d), HR.dim(d));
        for (int i = 0; i < HR.dim(d); ++i) {
            auto c = HQ.class_of(d, e.phi.apply(d, HR.reps[d][i]));
            if (!c) throw InternalError("presentation_from_model: H(phi) unreadable");
            for (int t = 0; t < int(c->size()); ++t) fs.at(t, i) = (*c)[t];
        }
        p.f_star.push_back(std::move(fs));

        Matrix fb(HR.dim(d + 2 * p.k), HQ.dim(d));
        for (int i = 0; i < HQ.dim(d); ++i) {
            // the source s^{-2k}Q in degree d+2k carries Q^d with the same basis
            Vec img = phi_shriek.apply(d + 2 * p.k, HQ.reps[d][i]);
            auto c = HR.class_of(d + 2 * p.k, img);
            if (!c) throw InternalError("presentation_from_model: H(phi^!) unreadable");
            for (int t = 0; t < int(c->size()); ++t) fb.at(t, i) = (*c)[t];
        }
        p.f_shriek.push_back(std::move(fb));
    }

    for (int i = 0; i < chern.k; ++i) {
        if (2 * i > e.m) {  // H^{2i}(V) = 0 above the dimension
            p.chern.push_back(zero_vec(p.HV.dim(2 * i)));
            continue;
        }
        auto c = HQ.class_of(2 * i, chern.gamma[i]);
        if (!c) throw InternalError("presentation_from_model: chern class unreadable");
        p.chern.push_back(*c);
    }
    return p;
}

PresentationResult blowup_presentation(const BlowupPresentation& p) {
    const int n = p.n, k = p.k;
    const int bound = n + 2;
    if (k < 2) throw HypothesisError("blowup_presentation: k >= 2 required by the stable range");
    if (int(p.chern.size()) != k) throw InputError("blowup_presentation: need c_0..c_{k-1}");

    // Poincare-duality consistency: H^n(f^!) sends the top class to the top
    {
        if (p.HV.dim(p.m) != 1 || p.HW.dim(n) != 1)
            throw HypothesisError("blowup_presentation: top cohomology must be one-dimensional");
        const Matrix& fb = p.f_shriek.at(p.m);
        if (fb.rows() != 1 || fb.cols() != 1 || fb.at(0, 0) == 0)
            throw HypothesisError("blowup_presentation: f^! does not send top to top");
    }

    Ambient E(p, bound);

    // ideal generators: g_v = f^!(v) + sum_i (v c_i) x^{k-i}
    struct Gen {
        int degree;
        Vec elem;
    };
    std::vector<Gen> gens;
    for (int vd = 0; vd <= p.m; ++vd)
        for (int vi = 0; vi < p.HV.dim(vd); ++vi) {
            const int gd = vd + 2 * k;
            if (gd > bound) continue;
            Vec g = zero_vec(E.dim(gd));
            Vec v = zero_vec(p.HV.dim(vd));
            v[vi] = 1;
            // f^!(v) in H^{vd+2k}(W)
            Vec fv = p.f_shriek.at(vd).col(vi);
            for (int t = 0; t < int(fv.size()); ++t)
                if (fv[t] != 0) g[E.w_index(gd, t)] += fv[t];
            for (int i = 0; i < k; ++i) {
                Vec vc = p.HV.cup_elem(vd, v, 2 * i, p.chern[i]);
                for (int u = 0; u < int(vc.size()); ++u) {
                    if (vc[u] == 0) continue;
                    int ix = E.x_index(gd, k - i, u);
                    if (ix >= 0) g[ix] += vc[u];
                }
            }
            gens.push_back({gd, std::move(g)});
        }

    // degreewise spans of the ideal
    std::vector<std::vector<Vec>> ideal(bound + 1);
    for (const auto& g : gens) {
        for (int t = g.degree; t <= bound; ++t) {
            // multiply by every basis element of complementary degree
            const int cd = t - g.degree;
            if (cd == 0) {
                ideal[t].push_back(g.elem);
                continue;
            }
            for (int b = 0; b < E.dim(cd); ++b) {
                Vec be = zero_vec(E.dim(cd));
                be[b] = 1;
                ideal[t].push_back(E.mul_elem(cd, be, g.degree, g.elem));
            }
        }
    }

    PresentationResult out;
    std::vector<Subspace> I;
    for (int t = 0; t <= bound; ++t) {
        I.push_back(Subspace::span_of(E.dim(t), ideal[t]));
        out.ambient_dims.push_back(E.dim(t));
        out.ideal_dims.push_back(I.back().dim());
    }

    // the ideal is closed under multiplication
    for (int t = 0; t <= bound; ++t)
        for (const auto& v : I[t].basis())
            for (int e = 1; t + e <= bound; ++e)
                for (int b = 0; b < E.dim(e); ++b) {
                    Vec be = zero_vec(E.dim(e));
                    be[b] = 1;
                    if (!I[t + e].contains(E.mul_elem(e, be, t, v)))
                        throw InternalError("blowup_presentation: ideal not multiplicatively "
                                            "closed in degree " +
                                            std::to_string(t + e));
                }

    // quotient collapses above n
    for (int t = n + 1; t <= bound; ++t)
        if (I[t].dim() != E.dim(t))
            throw InternalError("blowup_presentation: quotient does not vanish in degree " +
                                std::to_string(t));

    // expected dimensions
    for (int t = 0; t <= n; ++t) {
        int expect = p.HW.dim(t);
        for (int j = 1; j <= k - 1; ++j) expect += p.HV.dim(t - 2 * j);
        if (E.dim(t) - I[t].dim() != expect)
            throw InternalError("blowup_presentation: quotient dimension in degree " +
                                std::to_string(t) + " is " +
                                std::to_string(E.dim(t) - I[t].dim()) + ", expected " +
                                std::to_string(expect));
    }

    // quotient ring structure
    CohomologyRing ring;
    ring.label = "H(blow-up) via presentation";
    ring.lo = 0;
    ring.hi = bound;
    std::vector<std::vector<Vec>> reps(bound + 1);  // coordinate representatives in E
    for (int t = 0; t <= bound; ++t) {
        Subspace q = quotient_basis(I[t], E.dim(t));
        reps[t] = q.basis();
        ring.dims.push_back(int(reps[t].size()));
        std::vector<std::string> names;
        for (const auto& r : reps[t]) {
            // name by the leading ambient basis element
            int lead = -1;
            for (int u = 0; u < int(r.size()); ++u)
                if (r[u] != 0) {
                    lead = u;
                    break;
                }
            names.push_back(lead >= 0 ? "[" + E.basis_name(t, lead) + "]" : "0");
        }
        ring.class_names.push_back(std::move(names));
    }
    ring.cup.assign(bound + 1, {});
    for (int d = 0; d <= bound; ++d) {
        ring.cup[d].assign(bound - d + 1, {});
        for (int e = 0; d + e <= bound; ++e) {
            auto& table = ring.cup[d][e];
            table.assign(std::size_t(ring.dims[d]) * ring.dims[e], {});
            for (int i = 0; i < ring.dims[d]; ++i)
                for (int j = 0; j < ring.dims[e]; ++j) {
                    Vec prod = E.mul_elem(d, reps[d][i], e, reps[e][j]);
                    // reduce modulo I
                    std::vector<Vec> cols = reps[d + e];
                    const auto& ib = I[d + e].basis();
                    cols.insert(cols.end(), ib.begin(), ib.end());
                    auto coords = express_in(cols, prod, E.dim(d + e));
                    if (!coords)
                        throw InternalError("blowup_presentation: reduction failed");
                    SVec sv;
                    for (int u = 0; u < ring.dims[d + e]; ++u)
                        if ((*coords)[u] != 0) sv.emplace_back(u, (*coords)[u]);
                    table[std::size_t(i) * ring.dims[e] + j] = std::move(sv);
                }
        }
    }
    ring.formal_dimension = n;
    out.ring = std::move(ring);
    return out;
}

CompareResult compare_with_direct(const CohomologyRing& presentation, const CohomologyRing& direct,
                                  int top) {
    CompareResult r;
    auto fail = [&](const std::string& s) {
        r.equal = false;
        r.detail = s;
        return r;
    };
    for (int d = 0; d <= top; ++d)
        if (presentation.dim(d) != direct.dim(d))
            return fail("graded dimension differs first in degree " + std::to_string(d) + ": " +
                        std::to_string(presentation.dim(d)) + " vs " +
                        std::to_string(direct.dim(d)));
    for (int d = 0; d <= top; ++d)
        for (int e = d; d + e <= top; ++e) {
            auto rank_of_cup = [&](const CohomologyRing& ring) {
                Matrix m(ring.dim(d + e), ring.dim(d) * ring.dim(e));
                for (int i = 0; i < ring.dim(d); ++i)
                    for (int j = 0; j < ring.dim(e); ++j)
                        for (const auto& [t, c] : ring.cup_product(d, e, i, j))
                            m.at(t, i * ring.dim(e) + j) = c;
                return rank_of(m);
            };
            if (rank_of_cup(presentation) != rank_of_cup(direct))
                return fail("cup rank differs at (" + std::to_string(d) + "," +
                            std::to_string(e) + ")");
        }
    return r;
}

RingFingerprint fingerprint(const CohomologyRing& ring) {
    RingFingerprint fp;
    const int top = ring.hi;
    for (int d = 0; d <= top; ++d) fp.betti.push_back(ring.dim(d));
    fp.cup_ranks.assign(top + 1, {});
    for (int d = 0; d <= top; ++d)
        for (int e = 0; d + e <= top; ++e) {
            Matrix m(ring.dim(d + e), ring.dim(d) * ring.dim(e));
            for (int i = 0; i < ring.dim(d); ++i)
                for (int j = 0; j < ring.dim(e); ++j)
                    for (const auto& [t, c] : ring.cup_product(d, e, i, j))
                        m.at(t, i * ring.dim(e) + j) = c;
            fp.cup_ranks[d].push_back(rank_of(m));
        }
    for (int d = 0; d <= top; ++d) {
        // annihilator of the positive part inside H^d
        std::vector<Vec> rows;
        for (int e = 1; d + e <= top; ++e)
            for (int j = 0; j < ring.dim(e); ++j)
                for (int t = 0; t < ring.dim(d + e); ++t) {
                    Vec row = zero_vec(ring.dim(d));
                    for (int i = 0; i < ring.dim(d); ++i) {
                        for (const auto& [u, c] : ring.cup_product(d, e, i, j))
                            if (u == t) row[i] = c;
                    }
                    if (!is_zero(row)) rows.push_back(std::move(row));
                }
        Matrix m = rows.empty() ? Matrix(0, ring.dim(d))
                                : Matrix::from_rows(ring.dim(d), rows);
        fp.annihilator_dims.push_back(int(kernel_basis(m).size()));
    }
    return fp;
}

CohomologyRing cp5_blowup_presentation(int l) {
    if (l < 1) throw InputError("cp5_blowup_presentation: l must be a positive integer");
    BlowupPresentation p;
    p.k = 4;
    p.n = 10;
    p.m = 2;
    AlgebraPtr W = truncated_polynomial("a", 2, 6, 11);
    AlgebraPtr V = truncated_polynomial("a'", 2, 2, 3);
    p.HW = cup_structure(*W, 0, 10);
    p.HW.formal_dimension = 10;
    p.HV = cup_structure(*V, 0, 2);
    p.HV.formal_dimension = 2;

    // f*(a) = l a'
    for (int d = 0; d <= 2; ++d) {
        Matrix fs(p.HV.dim(d), p.HW.dim(d));
        if (d == 0) fs.at(0, 0) = 1;
        if (d == 2) fs.at(0, 0) = l;
        p.f_star.push_back(std::move(fs));
        Matrix fb(p.HW.dim(d + 8), p.HV.dim(d));
        if (d == 0) fb.at(0, 0) = l;  // f^!(1) = l a^4
        if (d == 2) fb.at(0, 0) = 1;  // f^!(a') = a^5
        p.f_shriek.push_back(std::move(fb));
    }
    // c(nu) = 1 + (6l-2) a'
    p.chern = {Vec{Scalar(1)}, Vec{Scalar(6 * l - 2)}, zero_vec(0), zero_vec(0)};
    // degrees 4 and 6 of H(V) are zero-dimensional
    p.chern[2] = zero_vec(p.HV.dim(4));
    p.chern[3] = zero_vec(p.HV.dim(6));
    return blowup_presentation(p).ring;
}

Scalar cp5_separating_invariant(int l) {
    if (l < 1) throw InputError("cp5_separating_invariant: l must be a positive integer");
    Scalar num(6 * l - 2);
    Scalar lq(l);
    Scalar n4 = num * num * num * num;
    Scalar l5 = lq * lq * lq * lq * lq;
    return n4 / l5;
}

}  // namespace blowup
