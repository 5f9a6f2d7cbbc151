#include "blowup/massey.hpp"

#include "blowup/errors.hpp"

namespace blowup {

namespace {
int parity_sign(long long k) {
    return (k % 2 == 0) ? 1 : -1;
}
}  // namespace

MasseyReport massey_triple(const DegreewiseAlgebra& a, const CohomologyClass& alpha,
                           const CohomologyClass& beta, const CohomologyClass& gamma,
                           const MasseyOptions& opt) {
    const int da = alpha.degree, db = beta.degree, dc = gamma.degree;
    const int s = da + db + dc - 1;
    if (s > a.N - 1)
        throw InputError("massey_triple: product degree " + std::to_string(s) +
                         " exceeds the certifiable bound");
    for (const auto* c : {&alpha, &beta, &gamma})
        if (!is_zero(a.d_of(c->degree, c->cocycle)))
            throw InputError("massey_triple: input is not a cocycle");

    GradedCohomology H = cohomology(a, 0, a.N - 1);

    // dxi = a*b and deta = b*c must be solvable, i.e. the cup products vanish
    Vec ab = a.mul(da, alpha.cocycle, db, beta.cocycle);
    Vec bc = a.mul(db, beta.cocycle, dc, gamma.cocycle);
    auto solve_bounding = [&](int deg, const Vec& rhs, const char* which) {
        Matrix d = (deg - 1 >= 0 && deg - 1 < a.N) ? a.diff[deg - 1]
                                                   : Matrix(a.dim(deg), a.dim(deg - 1));
        SolveResult r = solve(d, rhs);
        if (!r.consistent)
            throw HypothesisError(std::string("massey_triple: [") + which +
                                  "] does not vanish in cohomology");
        return r.particular;
    };
    Vec xi = solve_bounding(da + db, ab, "alpha*beta");
    Vec eta = solve_bounding(db + dc, bc, "beta*gamma");
    if (opt.xi_perturbation) {
        if (!is_zero(a.d_of(da + db - 1, *opt.xi_perturbation)))
            throw InputError("massey_triple: xi perturbation must be a cocycle");
        add_scaled(xi, *opt.xi_perturbation, Scalar(1));
    }
    if (opt.eta_perturbation) {
        if (!is_zero(a.d_of(db + dc - 1, *opt.eta_perturbation)))
            throw InputError("massey_triple: eta perturbation must be a cocycle");
        add_scaled(eta, *opt.eta_perturbation, Scalar(1));
    }

    // representative: xi*c - (-1)^{|a|} a*eta
    Vec rep = a.mul(da + db - 1, xi, dc, gamma.cocycle);
    add_scaled(rep, a.mul(da, alpha.cocycle, db + dc - 1, eta), Scalar(-parity_sign(da)));
    if (!is_zero(a.d_of(s, rep)))
        throw InternalError("massey_triple: representative is not a cocycle");

    MasseyReport out;
    out.alpha = alpha;
    out.beta = beta;
    out.gamma = gamma;
    out.rep_degree = s;
    out.representative_cocycle = rep;
    auto cls = H.class_of(s, rep);
    if (!cls) throw InternalError("massey_triple: representative class unreadable");
    out.representative_class = *cls;
    out.xi = xi;
    out.eta = eta;

    // indeterminacy = [alpha] H^{db+dc-1} + H^{da+db-1} [gamma] inside H^s
    std::vector<Vec> span;
    for (const auto& g : H.reps[db + dc - 1]) {
        auto c = H.class_of(s, a.mul(da, alpha.cocycle, db + dc - 1, g));
        if (!c) throw InternalError("massey_triple: indeterminacy class unreadable");
        span.push_back(*c);
    }
    for (const auto& g : H.reps[da + db - 1]) {
        auto c = H.class_of(s, a.mul(da + db - 1, g, dc, gamma.cocycle));
        if (!c) throw InternalError("massey_triple: indeterminacy class unreadable");
        span.push_back(*c);
    }
    Subspace ind = Subspace::span_of(H.dim(s), span);
    out.indeterminacy_basis = ind.basis();
    out.contains_zero = ind.contains(out.representative_class);
    return out;
}

}  // namespace blowup
