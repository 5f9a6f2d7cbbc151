#include "blowup/embedding.hpp"

#include "blowup/errors.hpp"
#include "map_system.hpp"

namespace blowup {

namespace {

Vec basis_vec(int dim, int i) {
    Vec v = zero_vec(dim);
    v[i] = 1;
    return v;
}

void require(bool cond, const std::string& what) {
    if (!cond) throw HypothesisError(what);
}

}  // namespace

EmbeddingModel make_embedding_model(AlgebraPtr R, AlgebraPtr Q, AlgebraMorphism phi, int n, int m,
                                    Vec u_W, Vec u_V) {
    require(n >= 2 * m + 3, "stable range violated: need dim W >= 2 dim V + 3 (n=" +
                                std::to_string(n) + ", m=" + std::to_string(m) + ")");
    require((n - m) % 2 == 0, "odd codimension: the normal bundle cannot be complex");
    require(R && Q, "embedding model needs both algebras");
    require(R->dim(0) == 1, "R is not connected");
    require(Q->dim(0) == 1, "Q is not connected");
    require(R->N >= n + 1, "R must be presented at least up to degree n+1");
    require(Q->N >= m + 1, "Q must be presented at least up to degree m+1");
    for (int d = n + 1; d <= R->N; ++d)
        require(R->dim(d) == 0, "truncation hypothesis fails: R^{>= n+1} != 0");
    for (int d = m + 2; d <= Q->N; ++d)
        require(Q->dim(d) == 0, "truncation hypothesis fails: Q^{>= m+2} != 0");
    require(phi.source == R && phi.target == Q, "phi must map R to Q");
    {
        ValidationReport rep = validate(phi);
        if (!rep.ok()) throw HypothesisError("phi is not a CDGA morphism: " + rep.summary());
    }
    ValidationReport rr = validate(*R);
    if (!rr.ok()) throw HypothesisError("R fails CDGA validation: " + rr.summary());
    ValidationReport rq = validate(*Q);
    if (!rq.ok()) throw HypothesisError("Q fails CDGA validation: " + rq.summary());

    GradedCohomology HR = cohomology(*R, 0, std::min(n, R->N - 1));
    GradedCohomology HQ = cohomology(*Q, 0, std::min(m + 1, Q->N - 1));
    require(HR.dim(n) == 1, "dim H^n(R) = " + std::to_string(HR.dim(n)) + ", expected 1");
    require(HQ.dim(m) == 1, "dim H^m(Q) = " + std::to_string(HQ.dim(m)) + ", expected 1");
    require(int(u_W.size()) == R->dim(n), "orientation u_W has wrong dimension");
    require(int(u_V.size()) == Q->dim(m), "orientation u_V has wrong dimension");
    require(is_zero(R->d_of(n, u_W)), "u_W is not a cocycle");
    require(is_zero(Q->d_of(m, u_V)), "u_V is not a cocycle");
    auto cw = HR.class_of(n, u_W);
    auto cv = HQ.class_of(m, u_V);
    require(cw && !is_zero(*cw), "[u_W] does not span H^n(R)");
    require(cv && !is_zero(*cv), "[u_V] does not span H^m(Q)");

    // H^1(phi) injective (trivial when degree 1 is empty on the source side)
    if (HR.hi >= 1 && HR.dim(1) > 0) {
        require(HQ.hi >= 1, "Q is too truncated to certify H^1(phi)");
        Matrix h1(HQ.dim(1), HR.dim(1));
        for (int i = 0; i < HR.dim(1); ++i) {
            auto c = HQ.class_of(1, phi.apply(1, HR.reps[1][i]));
            if (!c) throw InternalError("H^1(phi) is not defined on classes");
            for (int t = 0; t < int(c->size()); ++t) h1.at(t, i) = (*c)[t];
        }
        require(rank_of(h1) == HR.dim(1), "H^1(phi) is not injective");
    }

    EmbeddingModel e;
    e.R = std::move(R);
    e.Q = std::move(Q);
    e.phi = std::move(phi);
    e.n = n;
    e.m = m;
    e.u_W = std::move(u_W);
    e.u_V = std::move(u_V);
    return e;
}

ChernData make_chern_data(AlgebraPtr Q, int k, std::vector<Vec> gamma) {
    if (k < 1) throw InputError("chern data: k must be >= 1");
    if (int(gamma.size()) != k)
        throw InputError("chern data: expected gamma_0..gamma_{k-1}, got " +
                         std::to_string(gamma.size()) + " entries");
    if (gamma[0] != Q->unit()) throw InputError("chern data: gamma_0 must be the unit");
    for (int i = 0; i < k; ++i) {
        if (int(gamma[i].size()) != Q->dim(2 * i))
            throw InputError("chern data: gamma_" + std::to_string(i) + " has wrong degree");
        if (!is_zero(Q->d_of(2 * i, gamma[i])))
            throw InputError("chern data: gamma_" + std::to_string(i) + " is not a cocycle");
    }
    ChernData c;
    c.k = k;
    c.gamma = std::move(gamma);
    return c;
}

SymplecticEmbeddingData make_symplectic_data(AlgebraPtr Q, Vec omega, Vec u_M, int m, int n) {
    if (m < 1) throw InputError("symplectic data: m must be >= 1");
    if (int(omega.size()) != Q->dim(2) || !is_zero(Q->d_of(2, omega)))
        throw InputError("symplectic data: omega must be a cocycle of degree 2");
    if (int(u_M.size()) != Q->dim(2 * m) || !is_zero(Q->d_of(2 * m, u_M)))
        throw InputError("symplectic data: u_M must be a cocycle of degree 2m");

    // top power
    Vec pow = Q->unit();
    for (int j = 0; j < m; ++j) pow = Q->mul(2 * j, pow, 2, omega);

    // solve [omega^m] = l [u_M]: omega^m - l u_M must be exact
    GradedCohomology H = cohomology(*Q, 0, std::min(2 * m, Q->N - 1));
    auto cw = H.class_of(2 * m, pow);
    auto cu = H.class_of(2 * m, u_M);
    if (!cw || !cu) throw InternalError("symplectic data: classes unreadable");
    if (is_zero(*cu)) throw InputError("symplectic data: [u_M] = 0");
    auto coords = express_in({*cu}, *cw, int(cu->size()));
    if (!coords) throw HypothesisError("[omega^m] is not a multiple of [u_M]");
    Scalar l = (*coords)[0];
    if (l <= 0) throw HypothesisError("l_M must be positive, got " + scalar_to_string(l));

    SymplecticEmbeddingData s;
    s.Q = std::move(Q);
    s.omega = std::move(omega);
    s.u_M = std::move(u_M);
    s.m = m;
    s.n = n;
    s.l_M = l;
    return s;
}

EmbeddingModel cp_embedding(const SymplecticEmbeddingData& s) {
    AlgebraPtr R = truncated_polynomial("a", 2, s.n + 1, 2 * s.n + 1);
    AlgebraMorphism phi;
    phi.label = "phi";
    phi.source = R;
    phi.target = s.Q;
    std::vector<Vec> omega_pow(s.n + 1);
    omega_pow[0] = s.Q->unit();
    for (int j = 1; j <= s.n; ++j)
        omega_pow[j] = s.Q->mul(2 * (j - 1), omega_pow[j - 1], 2, s.omega);
    for (int d = 0; d <= R->N; ++d) {
        Matrix mt(s.Q->dim(d), R->dim(d));
        if (d % 2 == 0 && d / 2 <= s.n && R->dim(d) == 1) mt.set_col(0, omega_pow[d / 2]);
        phi.mats.push_back(std::move(mt));
    }
    Vec u_W = basis_vec(1, 0);  // a^n spans R^{2n}
    return make_embedding_model(R, s.Q, phi, 2 * s.n, 2 * s.m, u_W, s.u_M);
}

ModulePtr shriek_source(const EmbeddingModel& e) {
    return suspension(restrict_scalars(e.phi, module_over_self(e.Q)), -e.r());
}

ModuleMorphism shriek_solve(const EmbeddingModel& e, PivotOrder order) {
    ModulePtr src = shriek_source(e);
    ModulePtr tgt = module_over_self(e.R);
    MapSystem sys(*src, *tgt, 0);
    sys.add_linearity_rows();

    // chain map rows: d_R(f(m)) - f(d(m)) = 0
    for (int d = src->lo; d <= src->hi; ++d) {
        const int out_dim = tgt->dim(d + 1);
        if (out_dim == 0 && tgt->dim(d) == 0) continue;
        for (int j = 0; j < src->dim(d); ++j) {
            std::vector<Vec> eq;
            for (int t = 0; t < out_dim; ++t) eq.push_back(sys.new_row());
            if (d < tgt->hi && d >= tgt->lo) {
                const Matrix& dr = e.R->diff[d];
                for (int t = 0; t < dr.rows(); ++t)
                    for (int u = 0; u < dr.cols(); ++u)
                        if (dr.at(t, u) != 0) eq[t][sys.var(d, u, j)] += dr.at(t, u);
            }
            if (d < src->hi) {
                Vec dm = src->diff[d - src->lo].col(j);
                for (int u = 0; u < int(dm.size()); ++u)
                    if (dm[u] != 0)
                        for (int t = 0; t < out_dim; ++t) eq[t][sys.var(d + 1, t, u)] -= dm[u];
            }
            for (int t = 0; t < out_dim; ++t)
                if (!is_zero(eq[t])) sys.push(std::move(eq[t]), Scalar(0));
        }
    }

    // normalization with auxiliary coboundary unknowns:
    // f(s^{-r} u_V) - d_R(y) = u_W for some y in R^{n-1}
    const int n = e.n;
    const int aux = e.R->dim(n - 1);
    const int total_vars = sys.n_vars + aux;
    std::vector<Vec> rows;
    std::vector<Scalar> rhs;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        Vec row = std::move(sys.rows[i]);
        row.resize(total_vars, Scalar(0));
        rows.push_back(std::move(row));
        rhs.push_back(sys.rhs[i]);
    }
    {
        const Matrix& dr = e.R->diff[n - 1];
        for (int t = 0; t < e.R->dim(n); ++t) {
            Vec row = zero_vec(total_vars);
            for (int j = 0; j < int(e.u_V.size()); ++j)
                if (e.u_V[j] != 0) row[sys.var(n, t, j)] += e.u_V[j];
            for (int u = 0; u < aux; ++u)
                if (dr.at(t, u) != 0) row[sys.n_vars + u] -= dr.at(t, u);
            rows.push_back(std::move(row));
            rhs.push_back(e.u_W[t]);
        }
    }

    SolveResult sol = solve(Matrix::from_rows(total_vars, rows), rhs, order);
    if (!sol.consistent)
        throw InternalError(
            "shriek_solve: no shriek map exists; an embedding-model invariant must have been "
            "violated despite validation");
    Vec f_part(sol.particular.begin(), sol.particular.begin() + sys.n_vars);
    ModuleMorphism f;
    f.label = "phi_shriek";
    f.source = src;
    f.target = tgt;
    f.shift = 0;
    f.mats = sys.unflatten(f_part);
    ValidationReport rep = validate(f);
    if (!rep.ok()) throw InternalError("shriek_solve: solution fails validation: " + rep.summary());
    return f;
}

OmegaComplement omega_complement(const SymplecticEmbeddingData& s, bool reverse_complement_choice) {
    const auto& Q = *s.Q;
    const int m = s.m;
    if (Q.N < 2 * m) throw HypothesisError("omega_complement: Q must be presented up to degree 2m");
    for (int d = 2 * m + 2; d <= Q.N; ++d)
        if (Q.dim(d) != 0)
            throw HypothesisError("omega_complement: Q^{>= 2m+2} != 0");

    // omega powers
    std::vector<Vec> wpow(m + 2);
    wpow[0] = Q.unit();
    for (int j = 1; j <= m + 1; ++j)
        wpow[j] = (2 * j <= Q.N) ? Q.mul(2 * (j - 1), wpow[j - 1], 2, s.omega) : Vec{};

    // boundaries in the top even degree
    std::vector<Vec> bnd_top;
    if (2 * m - 1 >= 0 && 2 * m - 1 < Q.N) {
        const Matrix& d = Q.diff[2 * m - 1];
        std::vector<Vec> cols;
        for (int j = 0; j < d.cols(); ++j) cols.push_back(d.col(j));
        bnd_top = Subspace::span_of(Q.dim(2 * m), cols).basis();
    }
    {
        Subspace bt = Subspace::span_of(Q.dim(2 * m), bnd_top);
        if (bt.contains(wpow[m])) throw HypothesisError("omega_complement: [omega^m] = 0");
    }

    OmegaComplement out;
    out.piece.assign(Q.N + 1, {});
    // odd degrees are contained in I entirely
    for (int d = 1; d <= Q.N; d += 2) {
        std::vector<Vec> full;
        for (int i = 0; i < Q.dim(d); ++i) full.push_back(basis_vec(Q.dim(d), i));
        out.piece[d] = std::move(full);
    }
    // top even degree: boundaries plus a complement S of Q omega^m (+) dQ
    {
        std::vector<Vec> seed = bnd_top;
        seed.push_back(wpow[m]);
        std::vector<Vec> candidates;
        for (int i = 0; i < Q.dim(2 * m); ++i) candidates.push_back(basis_vec(Q.dim(2 * m), i));
        if (reverse_complement_choice) std::reverse(candidates.begin(), candidates.end());
        std::vector<Vec> S = extend_basis(seed, candidates, Q.dim(2 * m));
        std::vector<Vec> all = bnd_top;
        all.insert(all.end(), S.begin(), S.end());
        out.piece[2 * m] = Subspace::span_of(Q.dim(2 * m), all).basis();
    }
    // descending recursion: I^{2k} = ker(q -> coefficient of omega^{k+1} in
    // omega q modulo I^{2k+2})
    for (int k = m - 1; k >= 0; --k) {
        const int d = 2 * k;
        std::vector<Vec> cols = {wpow[k + 1]};
        cols.insert(cols.end(), out.piece[d + 2].begin(), out.piece[d + 2].end());
        Matrix lambda(1, Q.dim(d));
        for (int j = 0; j < Q.dim(d); ++j) {
            Vec wq = Q.mul(2, s.omega, d, basis_vec(Q.dim(d), j));
            auto coords = express_in(cols, wq, Q.dim(d + 2));
            if (!coords)
                throw InternalError("omega_complement: decomposition failed in degree " +
                                    std::to_string(d + 2));
            lambda.at(0, j) = (*coords)[0];
        }
        out.piece[d] = kernel_basis(lambda);
    }

    // verification: direct sum, differential submodule, omega-stability
    for (int j = 0; j <= m; ++j) {
        const int d = 2 * j;
        Subspace I = Subspace::span_of(Q.dim(d), out.piece[d]);
        if (I.contains(wpow[j]))
            throw InternalError("omega_complement: omega^" + std::to_string(j) + " lies in I");
        if (I.dim() + 1 != Q.dim(d))
            throw InternalError("omega_complement: decomposition dimension mismatch in degree " +
                                std::to_string(d));
    }
    for (int d = 0; d <= Q.N; ++d) {
        Subspace next(Q.dim(d + 1));
        if (d + 1 <= Q.N) next = Subspace::span_of(Q.dim(d + 1), out.piece[d + 1]);
        Subspace nextw(Q.dim(d + 2));
        if (d + 2 <= Q.N) nextw = Subspace::span_of(Q.dim(d + 2), out.piece[d + 2]);
        for (const auto& v : out.piece[d]) {
            if (d < Q.N && !next.contains(Q.d_of(d, v)))
                throw InternalError("omega_complement: I is not closed under d in degree " +
                                    std::to_string(d));
            if (d + 2 <= Q.N && !nextw.contains(Q.mul(2, s.omega, d, v)))
                throw InternalError("omega_complement: I is not closed under omega in degree " +
                                    std::to_string(d));
        }
    }
    return out;
}

ModuleMorphism shriek_cpn(const SymplecticEmbeddingData& s, const EmbeddingModel& e) {
    OmegaComplement I = omega_complement(s);
    const auto& Q = *s.Q;
    const int k = e.k();
    ModulePtr src = shriek_source(e);
    ModulePtr tgt = module_over_self(e.R);

    std::vector<Vec> wpow(s.m + 1);
    wpow[0] = Q.unit();
    for (int j = 1; j <= s.m; ++j) wpow[j] = Q.mul(2 * (j - 1), wpow[j - 1], 2, s.omega);

    ModuleMorphism f;
    f.label = "phi_shriek_cpn";
    f.source = src;
    f.target = tgt;
    f.shift = 0;
    for (int d = src->lo; d <= src->hi; ++d) {
        const int qdeg = d - 2 * k;  // source degree d holds Q^{d-2k}
        Matrix mt(tgt->dim(d), src->dim(d));
        if (qdeg >= 0 && qdeg % 2 == 0 && qdeg / 2 <= s.m && tgt->dim(d) > 0) {
            const int j = qdeg / 2;
            std::vector<Vec> cols = {wpow[j]};
            cols.insert(cols.end(), I.at(qdeg).begin(), I.at(qdeg).end());
            for (int i = 0; i < Q.dim(qdeg); ++i) {
                auto coords = express_in(cols, basis_vec(Q.dim(qdeg), i), Q.dim(qdeg));
                if (!coords) throw InternalError("shriek_cpn: basis decomposition failed");
                // omega^j -> l_M a^{j+k}; R^{2(j+k)} is one-dimensional
                mt.at(0, i) = (*coords)[0] * s.l_M;
            }
        }
        f.mats.push_back(std::move(mt));
    }
    ValidationReport rep = validate(f);
    if (!rep.ok())
        throw InternalError("shriek_cpn: closed form fails validation: " + rep.summary());
    return f;
}

ChernData chern_normal(AlgebraPtr Q, const std::vector<Vec>& total_c_V,
                       const std::vector<Vec>& pulled_c_W, int k, int top) {
    GradedCohomology H = cohomology(*Q, 0, std::min(top, Q->N - 1));
    const int imax = std::min(k - 1, H.hi / 2);

    auto entry_class = [&](const std::vector<Vec>& cls, int i) -> Vec {
        if (i >= int(cls.size()) || 2 * i > H.hi) return zero_vec(H.dim(2 * i));
        if (int(cls[i].size()) != Q->dim(2 * i))
            throw InputError("chern_normal: class entry " + std::to_string(i) +
                             " has wrong degree");
        if (!is_zero(Q->d_of(2 * i, cls[i])))
            throw InputError("chern_normal: class entry " + std::to_string(i) +
                             " is not a cocycle");
        auto c = H.class_of(2 * i, cls[i]);
        if (!c) throw InternalError("chern_normal: class unreadable");
        return *c;
    };

    // leading terms must be 1
    {
        auto a0 = entry_class(total_c_V, 0);
        auto b0 = entry_class(pulled_c_W, 0);
        auto u = H.class_of(0, Q->unit());
        if (!u || a0 != *u || b0 != *u)
            throw InputError("chern_normal: total classes must start with 1");
    }

    // cup products on classes via representatives
    auto cup = [&](int da, const Vec& ca, int db, const Vec& cb) -> Vec {
        Vec ra = zero_vec(Q->dim(da));
        for (int t = 0; t < int(ca.size()); ++t) add_scaled(ra, H.reps[da - H.lo][t], ca[t]);
        Vec rb = zero_vec(Q->dim(db));
        for (int t = 0; t < int(cb.size()); ++t) add_scaled(rb, H.reps[db - H.lo][t], cb[t]);
        auto c = H.class_of(da + db, Q->mul(da, ra, db, rb));
        if (!c) throw InternalError("chern_normal: cup product unreadable");
        return *c;
    };

    // x = b / a: x_i = b_i - sum_{j=1..i} a_j x_{i-j}
    std::vector<Vec> x(imax + 1);
    x[0] = entry_class(total_c_V, 0);
    for (int i = 1; i <= imax; ++i) {
        Vec xi = entry_class(pulled_c_W, i);
        for (int j = 1; j <= i; ++j) {
            Vec prod = cup(2 * j, entry_class(total_c_V, j), 2 * (i - j), x[i - j]);
            add_scaled(xi, prod, Scalar(-1));
        }
        x[i] = std::move(xi);
    }

    // lift classes back to cocycle representatives
    std::vector<Vec> gamma(k);
    gamma[0] = Q->unit();
    for (int i = 1; i < k; ++i) {
        gamma[i] = zero_vec(Q->dim(2 * i));
        if (i <= imax)
            for (int t = 0; t < int(x[i].size()); ++t)
                add_scaled(gamma[i], H.reps[2 * i - H.lo][t], x[i][t]);
    }
    return make_chern_data(Q, k, std::move(gamma));
}

}  // namespace blowup
