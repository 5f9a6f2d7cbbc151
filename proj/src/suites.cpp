#include "blowup/suites.hpp"

#include <random>
#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

AlgebraPtr kodaira_thurston_model() {
    PresentationBuilder b("kodaira-thurston", 5);
    b.add_generator("u", 1);
    b.add_generator("y", 1);
    int v = b.add_generator("v", 1);
    b.add_generator("t", 1);
    b.set_diff(v, b.element(2, {{Scalar(1), {1, 1, 0, 0}}}));
    return b.build();
}

}  // namespace

McduffData mcduff_inputs(int n) {
    AlgebraPtr kt = kodaira_thurston_model();
    Vec omega = zero_vec(kt->dim(2));
    omega[*kt->basis_index(2, "u*v")] = 1;
    omega[*kt->basis_index(2, "y*t")] = 1;
    // the complex orientation is u^v^y^t = -(u*y*v*t)
    Vec u_M = zero_vec(kt->dim(4));
    u_M[0] = -1;
    McduffData d{make_symplectic_data(kt, omega, u_M, 2, n), {}, {}, {}};
    d.embedding = cp_embedding(d.symplectic);
    d.shriek = shriek_cpn(d.symplectic, d.embedding);
    // c(nu) = 1 + (n+1) omega + n(n+1)/2 omega^2
    Vec omega2 = kt->mul(2, omega, 2, omega);
    std::vector<Vec> gamma(d.embedding.k());
    gamma[0] = kt->unit();
    gamma[1] = scaled(omega, Scalar(n + 1));
    gamma[2] = scaled(omega2, Scalar(n * (n + 1)) / 2);
    for (int i = 3; i < d.embedding.k(); ++i) gamma[i] = zero_vec(kt->dim(2 * i));
    d.chern = make_chern_data(kt, d.embedding.k(), std::move(gamma));
    return d;
}

Cp5Cp1Data cp5_cp1_inputs(int l) {
    if (l < 1) throw InputError("cp5_cp1_inputs: l must be positive");
    AlgebraPtr q = truncated_polynomial("a'", 2, 2, 3);
    Vec omega{Scalar(l)};  // omega = l a'
    Vec u_M{Scalar(1)};
    Cp5Cp1Data d{make_symplectic_data(q, omega, u_M, 1, 5), {}, {}, {}};
    d.embedding = cp_embedding(d.symplectic);
    d.shriek = shriek_cpn(d.symplectic, d.embedding);
    d.chern = make_chern_data(
        q, 4, {q->unit(), Vec{Scalar(6 * l - 2)}, zero_vec(q->dim(4)), zero_vec(q->dim(6))});
    return d;
}

SuiteResult run_suite_mcduff() {
    SuiteResult res;
    res.suite = "mcduff";
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        res.checks.push_back({name, ok, detail});
    };
    try {
        McduffData d = mcduff_inputs(6);
        check("l_M = 2", d.symplectic.l_M == 2, scalar_to_string(d.symplectic.l_M));
        BlowupModel B = blowup_model(d.embedding, d.shriek, d.chern);
        check("B(R,Q) validates", validate(*B.algebra).ok());

        const int n = d.embedding.n;  // 12
        std::vector<int> b = betti(*B.algebra, 0, B.algebra->N - 1);
        bool vanish = true;
        for (int t = n + 1; t <= B.algebra->N - 1; ++t) vanish = vanish && b[t] == 0;
        check("H vanishes above n", vanish);

        std::vector<int> bq = betti(*d.symplectic.Q, 0, 4);
        std::vector<int> br = betti(*d.embedding.R, 0, n);
        bool additive = true;
        std::ostringstream bs;
        for (int t = 0; t <= n; ++t) {
            int expect = br[t];
            for (int j = 1; j <= d.embedding.k() - 1; ++j)
                if (t - 2 * j >= 0 && t - 2 * j <= 4) expect += bq[t - 2 * j];
            additive = additive && b[t] == expect;
            bs << b[t] << (t < n ? "," : "");
        }
        check("Betti additivity", additive, bs.str());

        CohomologyRing ring = cup_structure(*B.algebra, 0, B.algebra->N - 1);
        check("Poincare duality at n = 12", poincare_check(ring, n).ok);

        // Massey <[u x],[y x],[y x]> contains [v y x^3] and not 0
        const auto& A = *B.algebra;
        auto unit_class = [&](int deg, const std::string& name) {
            CohomologyClass c;
            c.degree = deg;
            c.cocycle = zero_vec(A.dim(deg));
            c.cocycle[*A.basis_index(deg, name)] = 1;
            return c;
        };
        MasseyReport rep = massey_triple(A, unit_class(3, "u*x"), unit_class(3, "y*x"),
                                         unit_class(3, "y*x"));
        check("Massey product nontrivial", !rep.contains_zero);
        GradedCohomology H = cohomology(A, 0, A.N - 1);
        Vec vyx3 = zero_vec(A.dim(8));
        vyx3[*A.basis_index(8, "y*v*x^3")] = -1;
        Vec dc = *H.class_of(8, vyx3);
        add_scaled(dc, rep.representative_class, Scalar(-1));
        check("[v y x^3] lies in the Massey set",
              Subspace::span_of(H.dim(8), rep.indeterminacy_basis).contains(dc));

        PresentationResult pres =
            blowup_presentation(presentation_from_model(d.embedding, d.shriek, d.chern));
        CompareResult cmp = compare_with_direct(pres.ring, ring, A.N - 1);
        check("presentation cross-check", cmp.equal, cmp.detail);
    } catch (const std::exception& e) {
        res.checks.push_back({"suite aborted", false, e.what()});
    }
    return res;
}

SuiteResult run_suite_cp5_family() {
    SuiteResult res;
    res.suite = "cp5-family";
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        res.checks.push_back({name, ok, detail});
    };
    try {
        std::vector<Scalar> vals;
        for (int l = 1; l <= 10; ++l) vals.push_back(cp5_separating_invariant(l));
        bool distinct = true;
        for (std::size_t i = 0; i < vals.size(); ++i)
            for (std::size_t j = i + 1; j < vals.size(); ++j)
                distinct = distinct && vals[i] != vals[j];
        check("h(1..10) pairwise distinct", distinct,
              "h(1) = " + scalar_to_string(vals[0]) + ", h(2) = " + scalar_to_string(vals[1]));

        const std::vector<int> expect{1, 0, 2, 0, 3, 0, 3, 0, 2, 0, 1};
        bool betti_equal = true;
        for (int l = 1; l <= 5; ++l) {
            CohomologyRing ring = cp5_blowup_presentation(l);
            for (int t = 0; t <= 10; ++t) betti_equal = betti_equal && ring.dim(t) == expect[t];
        }
        check("family Betti numbers agree", betti_equal);

        bool crosses = true;
        std::string detail;
        for (int l = 1; l <= 3; ++l) {
            Cp5Cp1Data d = cp5_cp1_inputs(l);
            BlowupModel B = blowup_model(d.embedding, d.shriek, d.chern);
            CohomologyRing direct = cup_structure(*B.algebra, 0, B.algebra->N - 1);
            PresentationResult pres =
                blowup_presentation(presentation_from_model(d.embedding, d.shriek, d.chern));
            CompareResult cmp = compare_with_direct(pres.ring, direct, B.algebra->N - 1);
            crosses = crosses && cmp.equal;
            if (!cmp.equal) detail = "l = " + std::to_string(l) + ": " + cmp.detail;
        }
        check("presentations match direct cohomology (l = 1..3)", crosses, detail);
    } catch (const std::exception& e) {
        res.checks.push_back({"suite aborted", false, e.what()});
    }
    return res;
}

SuiteResult run_suite_axioms(int count, unsigned seed) {
    SuiteResult res;
    res.suite = "axioms";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> ngen(1, 4);
    std::uniform_int_distribution<int> gdeg(1, 4);
    std::uniform_int_distribution<int> pow_dist(2, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    int failures = 0;
    std::string first_failure;
    for (int i = 0; i < count; ++i) {
        try {
            const int N = 7;
            AlgebraPtr cur = PresentationBuilder("fuzz", N).build();
            int gens = ngen(rng);
            for (int g = 0; g < gens; ++g) {
                GeneratorInfo gi;
                gi.name = std::string(1, char('a' + g));
                gi.degree = gdeg(rng);
                gi.power = (gi.degree % 2 == 0 && coin(rng)) ? pow_dist(rng) : 0;
                FreeExtensionBuilder ext(cur, {gi}, N);
                if (gi.power == 0 && gi.degree + 1 <= N && coin(rng)) {
                    int t = gi.degree + 1;
                    Matrix dmat =
                        (t < cur->N) ? cur->diff[t] : Matrix(cur->dim(t + 1), cur->dim(t));
                    auto cocycles = kernel_basis(dmat);
                    if (!cocycles.empty()) {
                        Vec img = zero_vec(cur->dim(t));
                        for (const auto& z : cocycles) add_scaled(img, z, Scalar(coef(rng)));
                        ext.set_diff(0, ext.embed_base(t, img));
                    }
                }
                cur = ext.build();
            }
            ValidationReport rep = validate(*cur);
            if (!rep.ok()) {
                ++failures;
                if (first_failure.empty()) first_failure = rep.summary();
            }
        } catch (const PresentationError& e) {
            ++failures;
            if (first_failure.empty()) first_failure = e.what();
        }
    }
    res.checks.push_back({"validate() fuzz over " + std::to_string(count) + " presentations",
                          failures == 0,
                          failures == 0 ? "" : std::to_string(failures) + " failures; first: " +
                                                   first_failure});
    return res;
}

}  // namespace blowup
