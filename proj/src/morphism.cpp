#include "blowup/morphism.hpp"

#include "blowup/errors.hpp"

namespace blowup {

namespace {
int parity_sign(long long k) {
    return (k % 2 == 0) ? 1 : -1;
}
}  // namespace

Vec AlgebraMorphism::apply(int d, const Vec& x) const {
    if (d < 0 || d > source->N) throw InputError("algebra morphism: degree out of range");
    return mats[d].apply(x);
}

ValidationReport validate(const AlgebraMorphism& f) {
    ValidationReport rep;
    auto issue = [&](const std::string& rule, const std::string& detail) {
        if (rep.issues.size() < 200) rep.issues.push_back({rule, detail});
    };
    const auto& S = *f.source;
    const auto& T = *f.target;
    if (int(f.mats.size()) != S.N + 1) {
        issue("shape", "morphism must carry one matrix per source degree");
        return rep;
    }
    for (int d = 0; d <= S.N; ++d)
        if (f.mats[d].cols() != S.dim(d) || f.mats[d].rows() != T.dim(d)) {
            issue("shape", "matrix at degree " + std::to_string(d) + " has wrong shape");
            return rep;
        }

    // unit to unit
    if (f.apply(0, S.unit()) != T.unit()) issue("unit", "f(1) != 1");

    // chain map
    for (int d = 0; d < S.N; ++d) {
        Matrix lhs = (d < T.N ? T.diff[d] : Matrix(0, T.dim(d))) * f.mats[d];
        Matrix rhs = f.mats[d + 1] * S.diff[d];
        if (!(lhs - rhs).is_zero()) issue("chain_map", "df != fd at degree " + std::to_string(d));
    }

    // multiplicative
    for (int d = 0; d <= S.N; ++d)
        for (int e = 0; d + e <= S.N; ++e)
            for (int i = 0; i < S.dim(d); ++i) {
                Vec fi = f.mats[d].col(i);
                for (int j = 0; j < S.dim(e); ++j) {
                    Vec lhs = f.apply(d + e, to_dense(S.basis_product(d, e, i, j), S.dim(d + e)));
                    Vec rhs = T.mul(d, fi, e, f.mats[e].col(j));
                    if (lhs != rhs)
                        issue("multiplicative",
                              "f(" + S.names[d][i] + "*" + S.names[e][j] + ") != f*f");
                }
            }
    return rep;
}

Vec ModuleMorphism::apply(int d, const Vec& x) const {
    if (d < source->lo || d > source->hi) throw InputError("module morphism: degree out of range");
    return mats[d - source->lo].apply(x);
}

const Matrix& ModuleMorphism::mat(int d) const {
    return mats.at(d - source->lo);
}

ValidationReport validate(const ModuleMorphism& f) {
    ValidationReport rep;
    auto issue = [&](const std::string& rule, const std::string& detail) {
        if (rep.issues.size() < 200) rep.issues.push_back({rule, detail});
    };
    const auto& S = *f.source;
    const auto& T = *f.target;
    if (S.base != T.base) {
        issue("base", "source and target modules live over different algebras");
        return rep;
    }
    if (S.hi >= S.lo && int(f.mats.size()) != S.hi - S.lo + 1) {
        issue("shape", "morphism must carry one matrix per source degree");
        return rep;
    }
    for (int d = S.lo; d <= S.hi; ++d)
        if (f.mat(d).cols() != S.dim(d) || f.mat(d).rows() != T.dim(d + f.shift)) {
            issue("shape", "matrix at degree " + std::to_string(d) + " has wrong shape");
            return rep;
        }

    // chain map: d_T o f = (-1)^shift f o d_S
    auto diff_of = [](const DgModule& mod, int d) {
        if (d < mod.lo || d > mod.hi) return Matrix(mod.dim(d + 1), mod.dim(d));
        return mod.diff[d - mod.lo];
    };
    for (int d = S.lo; d <= S.hi; ++d) {
        Matrix lhs = diff_of(T, d + f.shift) * f.mat(d);
        Matrix rhs = (d < S.hi ? f.mat(d + 1) * S.diff[d - S.lo]
                               : Matrix(T.dim(d + 1 + f.shift), S.dim(d)));
        if (f.shift % 2 != 0) rhs = rhs.scaled_by(Scalar(-1));
        if (!(lhs - rhs).is_zero()) issue("chain_map", "at degree " + std::to_string(d));
    }

    // linearity over the base: f(r.m) = (-1)^{shift |r|} r.f(m)
    for (int b = 0; b <= S.base->N; ++b)
        for (int d = S.lo; d <= S.hi; ++d) {
            if (b + d > S.hi && b + d + f.shift > T.hi) continue;
            for (int i = 0; i < S.base->dim(b); ++i) {
                Vec r = zero_vec(S.base->dim(b));
                r[i] = 1;
                for (int j = 0; j < S.dim(d); ++j) {
                    Vec x = zero_vec(S.dim(d));
                    x[j] = 1;
                    Vec lhs = (b + d <= S.hi) ? f.apply(b + d, S.act_elem(b, r, d, x))
                                              : zero_vec(T.dim(b + d + f.shift));
                    Vec rhs = T.act_elem(b, r, d + f.shift, f.apply(d, x));
                    if (parity_sign(1LL * f.shift * b) < 0)
                        for (auto& c : rhs) c = -c;
                    if (lhs != rhs)
                        issue("linearity", "f(r.m) != +/- r.f(m) at degrees (" + std::to_string(b) +
                                               "," + std::to_string(d) + ")");
                }
            }
        }
    return rep;
}

ModuleMorphism identity_morphism(ModulePtr m) {
    ModuleMorphism f;
    f.label = "id";
    f.source = m;
    f.target = m;
    f.shift = 0;
    for (int d = m->lo; d <= m->hi; ++d) f.mats.push_back(Matrix::identity(m->dim(d)));
    return f;
}

ModuleMorphism zero_morphism(ModulePtr source, ModulePtr target, int shift) {
    ModuleMorphism f;
    f.label = "0";
    f.source = source;
    f.target = target;
    f.shift = shift;
    for (int d = source->lo; d <= source->hi; ++d)
        f.mats.push_back(Matrix(target->dim(d + shift), source->dim(d)));
    return f;
}

ModuleMorphism morphism_difference(const ModuleMorphism& f0, const ModuleMorphism& f1) {
    if (f0.source != f1.source || f0.target != f1.target || f0.shift != f1.shift)
        throw InputError("morphism difference: incompatible morphisms");
    ModuleMorphism g = f0;
    g.label = f0.label + "-" + f1.label;
    for (std::size_t i = 0; i < g.mats.size(); ++i) g.mats[i] = f0.mats[i] - f1.mats[i];
    return g;
}

ModulePtr restrict_scalars(const AlgebraMorphism& phi, ModulePtr m) {
    if (m->base != phi.target) throw InputError("restrict_scalars: module not over phi's target");
    auto out = std::make_shared<DgModule>();
    out->label = m->label + "|" + phi.source->label;
    out->base = phi.source;
    out->lo = m->lo;
    out->hi = m->hi;
    out->names = m->names;
    out->diff = m->diff;
    const int bn = phi.source->N;
    out->action.assign(bn + 1, {});
    for (int b = 0; b <= bn; ++b) {
        out->action[b].assign(out->hi - out->lo + 1, {});
        for (int d = out->lo; d <= out->hi && b + d <= out->hi; ++d) {
            auto& table = out->action[b][d - out->lo];
            table.assign(std::size_t(phi.source->dim(b)) * m->dim(d), {});
            for (int i = 0; i < phi.source->dim(b); ++i) {
                Vec r = zero_vec(phi.source->dim(b));
                r[i] = 1;
                Vec fr = phi.apply(b, r);
                for (int j = 0; j < m->dim(d); ++j) {
                    Vec x = zero_vec(m->dim(d));
                    x[j] = 1;
                    table[std::size_t(i) * m->dim(d) + j] = to_sparse(m->act_elem(b, fr, d, x));
                }
            }
        }
    }
    return out;
}

ModuleMorphism as_module_morphism(const AlgebraMorphism& f) {
    ModulePtr src = module_over_self(f.source);
    ModulePtr tgt = restrict_scalars(f, module_over_self(f.target));
    ModuleMorphism g;
    g.label = f.label;
    g.source = src;
    g.target = tgt;
    g.shift = 0;
    for (int d = 0; d <= f.source->N; ++d)
        g.mats.push_back(d < int(f.mats.size()) ? f.mats[d] : Matrix(tgt->dim(d), src->dim(d)));
    return g;
}

ModulePtr mapping_cone(const ModuleMorphism& f) {
    if (f.shift != 0) throw InputError("mapping_cone: morphism must preserve degree");
    ValidationReport rep = validate(f);
    if (!rep.ok()) throw InputError("mapping_cone: morphism is not a chain map: " + rep.summary());
    const auto& A = *f.source;
    const auto& B = *f.target;
    auto c = std::make_shared<DgModule>();
    c->label = "cone(" + f.label + ")";
    c->base = A.base;
    c->lo = std::min(B.lo, A.lo - 1);
    c->hi = std::max(B.hi, A.hi - 1);
    const int n = c->hi - c->lo + 1;
    c->names.assign(n, {});
    // per degree: B-part first, then s(A)-part
    std::vector<int> bdim(n, 0);
    for (int d = c->lo; d <= c->hi; ++d) {
        bdim[d - c->lo] = B.dim(d);
        for (int i = 0; i < B.dim(d); ++i) c->names[d - c->lo].push_back(B.names[d - B.lo][i]);
        for (int i = 0; i < A.dim(d + 1); ++i)
            c->names[d - c->lo].push_back("s(" + A.names[d + 1 - A.lo][i] + ")");
    }
    auto cdim = [&](int d) { return (d < c->lo || d > c->hi) ? 0 : int(c->names[d - c->lo].size()); };

    // differential: d(b, sa) = (d_B b + f(a), -s d_A a)
    c->diff.assign(n, Matrix());
    for (int d = c->lo; d <= c->hi; ++d) {
        Matrix m(cdim(d + 1), cdim(d));
        const int boff = 0, soff = bdim[d - c->lo];
        const int bdim_next = (d + 1 <= c->hi) ? bdim[d + 1 - c->lo] : 0;
        for (int i = 0; i < B.dim(d); ++i) {
            if (d >= B.lo && d < B.hi) {
                Vec db = B.diff[d - B.lo].col(i);
                for (int t = 0; t < int(db.size()); ++t)
                    if (db[t] != 0) m.at(t, boff + i) = db[t];
            }
        }
        for (int j = 0; j < A.dim(d + 1); ++j) {
            // f(a) lands in the B part of degree d+1
            Vec fa = f.apply(d + 1, [&] {
                Vec x = zero_vec(A.dim(d + 1));
                x[j] = 1;
                return x;
            }());
            for (int t = 0; t < int(fa.size()); ++t)
                if (fa[t] != 0) m.at(t, soff + j) = fa[t];
            // -s d_A a lands in the s(A) part of degree d+1
            if (d + 1 >= A.lo && d + 1 < A.hi) {
                Vec da = A.diff[d + 1 - A.lo].col(j);
                for (int t = 0; t < int(da.size()); ++t)
                    if (da[t] != 0) m.at(bdim_next + t, soff + j) = -da[t];
            }
        }
        c->diff[d - c->lo] = std::move(m);
    }

    // action: r.(b, sa) = (r.b, (-1)^{|r|} s(r.a))
    const int bn = A.base->N;
    c->action.assign(bn + 1, {});
    for (int b = 0; b <= bn; ++b) {
        c->action[b].assign(n, {});
        for (int d = c->lo; d <= c->hi && b + d <= c->hi; ++d) {
            auto& table = c->action[b][d - c->lo];
            table.assign(std::size_t(A.base->dim(b)) * cdim(d), {});
            const int soff = bdim[d - c->lo];
            const int soff_t = bdim[b + d - c->lo];
            for (int i = 0; i < A.base->dim(b); ++i) {
                for (int j = 0; j < B.dim(d); ++j) {
                    SVec out = B.act(b, d, i, j);
                    table[std::size_t(i) * cdim(d) + j] = out;  // same indices: B part leads
                }
                for (int j = 0; j < A.dim(d + 1); ++j) {
                    SVec out;
                    for (const auto& [t, cc] : A.act(b, d + 1, i, j))
                        out.emplace_back(soff_t + t, Scalar(parity_sign(b)) * cc);
                    table[std::size_t(i) * cdim(d) + soff + j] = std::move(out);
                }
            }
        }
    }
    return c;
}

}  // namespace blowup
