#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blowup/blowup_model.hpp"
#include "blowup/errors.hpp"
#include "blowup/massey.hpp"
#include "blowup/ring_presentation.hpp"
#include "test_util.hpp"

using namespace blowup;
using namespace blowup::testutil;

namespace {

SymplecticEmbeddingData kt_symplectic(int n) {
    AlgebraPtr kt = kodaira_thurston();
    Vec omega = zero_vec(kt->dim(2));
    omega[*kt->basis_index(2, "u*v")] = 1;
    omega[*kt->basis_index(2, "y*t")] = 1;
    // the complex orientation is u^v^y^t = -(u*y*v*t)
    Vec u_M = zero_vec(kt->dim(4));
    u_M[0] = -1;
    return make_symplectic_data(kt, omega, u_M, 2, n);
}

SymplecticEmbeddingData cp1_symplectic(int l, int n) {
    AlgebraPtr q = cp_model(1, 3);
    Vec omega = zero_vec(1);
    omega[0] = l;  // omega = l a'
    Vec u_M{Scalar(1)};
    return make_symplectic_data(q, omega, u_M, 1, n);
}

}  // namespace

TEST_CASE("symplectic data: l_M of the Kodaira-Thurston form is 2") {
    SymplecticEmbeddingData s = kt_symplectic(6);
    CHECK(s.l_M == 2);
}

TEST_CASE("symplectic data: l_M of the degree-l CP(1) form is l") {
    for (int l = 1; l <= 3; ++l) CHECK(cp1_symplectic(l, 5).l_M == l);
}

TEST_CASE("embedding model validation failures are named") {
    SymplecticEmbeddingData s = kt_symplectic(5);  // n = 5: 10 < 2*4+3
    CHECK_THROWS_WITH_AS(cp_embedding(s), doctest::Contains("stable range"), HypothesisError);
}

TEST_CASE("omega complement of Kodaira-Thurston") {
    SymplecticEmbeddingData s = kt_symplectic(6);
    OmegaComplement I = omega_complement(s);
    CHECK(I.at(0).size() == 0);
    CHECK(I.at(1).size() == 4);
    CHECK(I.at(2).size() == 5);
    CHECK(I.at(3).size() == 4);
    CHECK(I.at(4).size() == 0);
    // uniqueness: Q^{2m} = Q omega^m, so the complement choice cannot matter
    OmegaComplement I2 = omega_complement(s, true);
    for (int d = 0; d <= s.Q->N; ++d) {
        Subspace a = Subspace::span_of(s.Q->dim(d), I.at(d));
        Subspace b = Subspace::span_of(s.Q->dim(d), I2.at(d));
        CHECK(a == b);
    }
}

TEST_CASE("omega complement of the trivial case I = 0") {
    SymplecticEmbeddingData s = cp1_symplectic(2, 5);
    OmegaComplement I = omega_complement(s);
    for (int d = 0; d <= s.Q->N; ++d) CHECK(I.at(d).empty());
}

TEST_CASE("closed-form shriek for the McDuff embedding") {
    SymplecticEmbeddingData s = kt_symplectic(6);
    EmbeddingModel e = cp_embedding(s);
    ModuleMorphism f = shriek_cpn(s, e);
    CHECK(validate(f).ok());

    const auto& Q = *s.Q;
    // phi^!(s^{4-2n} 1) = 2 a^{n-2}
    Vec one = Q.unit();
    Vec img = f.apply(8, one);
    REQUIRE(img.size() == 1);
    CHECK(img[0] == 2);
    // phi^!(uv) = phi^!(yt) = a^{n-1}
    Vec uv = zero_vec(Q.dim(2));
    uv[*Q.basis_index(2, "u*v")] = 1;
    CHECK(f.apply(10, uv) == Vec{Scalar(1)});
    Vec yt = zero_vec(Q.dim(2));
    yt[*Q.basis_index(2, "y*t")] = 1;
    CHECK(f.apply(10, yt) == Vec{Scalar(1)});
    // zero on the other degree-2 monomials
    for (const char* nm : {"u*y", "u*t", "y*v", "v*t"}) {
        Vec q = zero_vec(Q.dim(2));
        q[*Q.basis_index(2, nm)] = 1;
        CHECK(is_zero(f.apply(10, q)));
    }
    // phi^!(u^v^y^t) = a^n; the normal-form monomial u*y*v*t is its negative
    Vec top = zero_vec(Q.dim(4));
    top[0] = 1;
    CHECK(f.apply(12, top) == Vec{Scalar(-1)});
}

TEST_CASE("closed-form shriek for CP(1) in CP(5) and l_M scaling") {
    for (int l : {1, 2}) {
        SymplecticEmbeddingData s = cp1_symplectic(l, 5);
        EmbeddingModel e = cp_embedding(s);
        ModuleMorphism f = shriek_cpn(s, e);
        // phi^!(s^{-8} 1) = l a^4, phi^!(s^{-8} a') = a^5
        CHECK(f.apply(8, s.Q->unit()) == Vec{Scalar(l)});
        CHECK(f.apply(10, Vec{Scalar(1)}) == Vec{Scalar(1)});
    }
}

TEST_CASE("shriek_solve matches shriek_cpn up to homotopy") {
    SymplecticEmbeddingData s = cp1_symplectic(2, 5);
    EmbeddingModel e = cp_embedding(s);
    ModuleMorphism closed = shriek_cpn(s, e);
    ModuleMorphism solved = shriek_solve(e);
    CHECK(validate(solved).ok());
    // normalization: [f(s^{-r} u_V)] = [u_W] exactly here (d_R = 0)
    CHECK(solved.apply(10, e.u_V) == e.u_W);

    auto w = homotopy_between(closed, solved);
    REQUIRE(w);
    CHECK(check_homotopy(*w));
}

TEST_CASE("shriek_solve with different pivot orders stays in one homotopy class") {
    SymplecticEmbeddingData s = kt_symplectic(6);
    EmbeddingModel e = cp_embedding(s);
    ModuleMorphism f1 = shriek_solve(e, PivotOrder::MinBits);
    ModuleMorphism f2 = shriek_solve(e, PivotOrder::ReverseCols);
    ModuleMorphism f3 = shriek_cpn(s, e);
    auto w12 = homotopy_between(f1, f2);
    REQUIRE(w12);
    CHECK(check_homotopy(*w12));
    auto w13 = homotopy_between(f1, f3);
    REQUIRE(w13);
    CHECK(check_homotopy(*w13));
}

TEST_CASE("shriek for a point submanifold") {
    // m = 0: Q = rationals, phi^! determined by the orientation alone
    AlgebraPtr pt = trivial_algebra(1);
    AlgebraPtr R = cp_model(2, 5);  // CP(2), n = 4
    AlgebraMorphism aug = augmentation(R, pt);
    EmbeddingModel e = make_embedding_model(R, pt, aug, 4, 0, Vec{Scalar(1)}, Vec{Scalar(1)});
    ModuleMorphism f = shriek_solve(e);
    CHECK(f.apply(4, pt->unit()) == Vec{Scalar(1)});  // s^{-4} 1 -> a^2
}

TEST_CASE("complement model of CP(1) in CP(5)") {
    SymplecticEmbeddingData s = cp1_symplectic(1, 5);
    EmbeddingModel e = cp_embedding(s);
    ModuleMorphism f = shriek_cpn(s, e);
    ComplementModel c = complement_model(e, f);
    CHECK(validate(*c.source.algebra).ok());
    CHECK(validate(*c.target.algebra).ok());
    CHECK(validate(c.map).ok());

    // H(source) = H(CP(5) \ CP(1)) = H(CP(3)) by the kernel/image oracle
    std::vector<int> b = betti(*c.source.algebra, 0, 9);
    CHECK(b == std::vector<int>{1, 0, 1, 0, 1, 0, 1, 0, 0, 0});

    // Euler characteristic bookkeeping from the cone exact sequence:
    // chi(source) = chi(R) - chi(s^{-r}Q shifted by one)
    long chi_src = 0, chi_r = 0, chi_sq = 0;
    for (int d = 0; d <= 9; ++d) chi_src += (d % 2 ? -1 : 1) * b[d];
    std::vector<int> br = betti(*e.R, 0, 10);
    for (int d = 0; d <= 10; ++d) chi_r += (d % 2 ? -1 : 1) * br[d];
    std::vector<int> bq = betti(*e.Q, 0, 2);
    for (int d = 0; d <= 2; ++d) chi_sq += ((d + 8) % 2 ? -1 : 1) * bq[d];
    // H^10(source) = 0 and H^10(R) = 1, so compare through degree 10
    CHECK(chi_src + 0 - 1 == chi_r - chi_sq - 1);
}

TEST_CASE("projectivization model: trivial base is the CP(k-1) model") {
    AlgebraPtr pt = trivial_algebra(10);
    ChernData chern = make_chern_data(pt, 4, {pt->unit(), zero_vec(0), zero_vec(0), zero_vec(0)});
    ProjectivizationModel pm = projectivization_model(pt, chern, 10);
    CHECK(validate(pm.proj).ok());
    std::vector<int> b = betti(*pm.total, 0, 9);
    CHECK(b == std::vector<int>{1, 0, 1, 0, 1, 0, 1, 0, 0, 0});  // CP(3)
}

TEST_CASE("projectivization model over Kodaira-Thurston satisfies Leray-Hirsch") {
    SymplecticEmbeddingData s = kt_symplectic(6);
    AlgebraPtr kt = s.Q;
    // c(nu) = 1 + 7 omega + 21 omega^2 at n = 6
    Vec g1 = scaled(s.omega, Scalar(7));
    Vec omega2 = kt->mul(2, s.omega, 2, s.omega);
    Vec g2 = scaled(omega2, Scalar(21));
    ChernData chern = make_chern_data(kt, 4, {kt->unit(), g1, g2, zero_vec(kt->dim(6))});
    const int N = 14;
    ProjectivizationModel pm = projectivization_model(kt, chern, N);
    CHECK(validate(pm.proj).ok());
    std::vector<int> bt = betti(*pm.total, 0, N - 1);
    std::vector<int> bq = betti(*kt, 0, 4);
    auto q = [&](int d) { return (d >= 0 && d <= 4) ? bq[d] : 0; };
    for (int d = 0; d + 2 <= N - 1 && d <= 11; ++d) {
        int expect = 0;
        for (int j = 0; j <= 3; ++j) expect += q(d - 2 * j);
        CHECK(bt[d] == expect);
    }
}

TEST_CASE("projectivization with zero chern classes is a product") {
    AlgebraPtr kt = kodaira_thurston();
    ChernData chern = make_chern_data(
        kt, 4, {kt->unit(), zero_vec(kt->dim(2)), zero_vec(kt->dim(4)), zero_vec(kt->dim(6))});
    ProjectivizationModel pm = projectivization_model(kt, chern, 12);
    std::vector<int> bt = betti(*pm.total, 0, 11);
    std::vector<int> bq = betti(*kt, 0, 4);
    auto q = [&](int d) { return (d >= 0 && d <= 4) ? bq[d] : 0; };
    // H(total) = H(Q) (x) H(CP(3) model): same dimension law, exact here
    for (int d = 0; d <= 10; ++d) {
        int expect = 0;
        for (int j = 0; j <= 3; ++j) expect += q(d - 2 * j);
        CHECK(bt[d] == expect);
    }
}

TEST_CASE("projectivization dimension hypothesis") {
    AlgebraPtr kt = kodaira_thurston();
    ChernData chern = make_chern_data(kt, 2, {kt->unit(), zero_vec(kt->dim(2))});
    CHECK_THROWS_AS(projectivization_model(kt, chern, 10), HypothesisError);  // 2k = 4 < 4+2
}

TEST_CASE("chern_normal reproduces the McDuff normal bundle") {
    SymplecticEmbeddingData s = kt_symplectic(6);
    AlgebraPtr kt = s.Q;
    // c(V) = 1; f*(c(CP(6))) = (1 + omega)^7 truncated
    std::vector<Vec> cv = {kt->unit()};
    Vec omega2 = kt->mul(2, s.omega, 2, s.omega);
    std::vector<Vec> cw = {kt->unit(), scaled(s.omega, Scalar(7)), scaled(omega2, Scalar(21))};
    ChernData c = chern_normal(kt, cv, cw, 4, 4);
    CHECK(c.gamma[0] == kt->unit());
    CHECK(c.gamma[1] == scaled(s.omega, Scalar(7)));
    // gamma_2 must represent 21 [omega^2]
    GradedCohomology H = cohomology(*kt, 0, 4);
    CHECK(*H.class_of(4, c.gamma[2]) == *H.class_of(4, scaled(omega2, Scalar(21))));
    CHECK(is_zero(c.gamma[3]));
}

TEST_CASE("chern_normal for CP(1) in CP(5)") {
    for (int l : {1, 2, 3}) {
        SymplecticEmbeddingData s = cp1_symplectic(l, 5);
        AlgebraPtr q = s.Q;
        // c(V) = 1 + 2a'; f*(c(CP(5))) = (1+a)^6 pulled: 1 + 6 l a'
        std::vector<Vec> cv = {q->unit(), Vec{Scalar(2)}};
        std::vector<Vec> cw = {q->unit(), Vec{Scalar(6 * l)}};
        ChernData c = chern_normal(q, cv, cw, 4, 2);
        CHECK(c.gamma[1] == Vec{Scalar(6 * l - 2)});
        for (int i = 2; i < 4; ++i) CHECK(is_zero(c.gamma[i]));
    }
}

TEST_CASE("chern_normal trivial quotient and bad leading term") {
    AlgebraPtr kt = kodaira_thurston();
    std::vector<Vec> one = {kt->unit()};
    ChernData c = chern_normal(kt, one, one, 3, 4);
    for (int i = 1; i < 3; ++i) CHECK(is_zero(c.gamma[i]));
    std::vector<Vec> bad = {scaled(kt->unit(), Scalar(2))};
    CHECK_THROWS_AS(chern_normal(kt, bad, one, 3, 4), InputError);
}

TEST_CASE("blow-up of CP(5) along CP(1): Betti numbers") {
    SymplecticEmbeddingData s = cp1_symplectic(1, 5);
    EmbeddingModel e = cp_embedding(s);
    ModuleMorphism f = shriek_cpn(s, e);
    ChernData chern =
        make_chern_data(s.Q, 4, {s.Q->unit(), Vec{Scalar(4)}, zero_vec(0), zero_vec(0)});
    BlowupModel B = blowup_model(e, f, chern);
    CHECK(validate(*B.algebra).ok());
    std::vector<int> b = betti(*B.algebra, 0, 11);
    CHECK(b == std::vector<int>{1, 0, 2, 0, 3, 0, 3, 0, 2, 0, 1, 0});

    // iota is injective and H^0, H^1 match R's
    CHECK(validate(B.iota).ok());
    for (int d = 0; d <= e.R->N; ++d)
        CHECK(rank_of(B.iota.mats[d]) == e.R->dim(d));
    CHECK(betti(*B.algebra, 0, 1) == betti(*e.R, 0, 1));

    CohomologyRing ring = cup_structure(*B.algebra, 0, 11);
    CHECK(poincare_check(ring, 10).ok);
}

TEST_CASE("McDuff blow-up: differential identity and Massey product") {
    SymplecticEmbeddingData s = kt_symplectic(6);
    EmbeddingModel e = cp_embedding(s);
    ModuleMorphism f = shriek_cpn(s, e);
    AlgebraPtr kt = s.Q;
    Vec omega2 = kt->mul(2, s.omega, 2, s.omega);
    ChernData chern = make_chern_data(
        kt, 4,
        {kt->unit(), scaled(s.omega, Scalar(7)), scaled(omega2, Scalar(21)), zero_vec(kt->dim(6))});
    BlowupModel B = blowup_model(e, f, chern);
    const auto& A = *B.algebra;
    CHECK(A.N == 14);

    // D(v (x) x^2) = (u (x) x) (y (x) x)
    auto vx2 = A.basis_index(5, "v*x^2");
    auto ux = A.basis_index(3, "u*x");
    auto yx = A.basis_index(3, "y*x");
    REQUIRE(vx2);
    REQUIRE(ux);
    REQUIRE(yx);
    Vec evx2 = zero_vec(A.dim(5));
    evx2[*vx2] = 1;
    Vec lhs = A.d_of(5, evx2);
    Vec eux = zero_vec(A.dim(3)), eyx = zero_vec(A.dim(3));
    eux[*ux] = 1;
    eyx[*yx] = 1;
    Vec rhs = A.mul(3, eux, 3, eyx);
    CHECK(lhs == rhs);

    // Massey <[u x],[y x],[y x]> is nontrivial and contains [v y x^3]
    CohomologyClass ca{3, eux}, cb{3, eyx}, cc{3, eyx};
    MasseyReport rep = massey_triple(A, ca, cb, cc);
    CHECK_FALSE(rep.contains_zero);
    CHECK(rep.rep_degree == 8);
    auto yvx3 = A.basis_index(8, "y*v*x^3");
    REQUIRE(yvx3);
    Vec vyx3 = zero_vec(A.dim(8));
    vyx3[*yvx3] = -1;  // v*y = -y*v
    GradedCohomology H = cohomology(A, 0, 13);
    Vec diff_class = *H.class_of(8, vyx3);
    add_scaled(diff_class, rep.representative_class, Scalar(-1));
    Subspace ind = Subspace::span_of(H.dim(8), rep.indeterminacy_basis);
    CHECK(ind.contains(diff_class));  // [v y x^3] lies in the Massey set
}

TEST_CASE("presentation equals direct cohomology for CP(5)/CP(1)") {
    for (int l : {1, 2}) {
        SymplecticEmbeddingData s = cp1_symplectic(l, 5);
        EmbeddingModel e = cp_embedding(s);
        ModuleMorphism f = shriek_cpn(s, e);
        ChernData chern = make_chern_data(
            s.Q, 4, {s.Q->unit(), Vec{Scalar(6 * l - 2)}, zero_vec(0), zero_vec(0)});
        BlowupModel B = blowup_model(e, f, chern);
        CohomologyRing direct = cup_structure(*B.algebra, 0, 11);
        PresentationResult pres = blowup_presentation(presentation_from_model(e, f, chern));
        CompareResult cmp = compare_with_direct(pres.ring, direct, 11);
        CHECK(cmp.equal);
        if (!cmp.equal) MESSAGE(cmp.detail);
        CHECK(poincare_check(pres.ring, 10).ok);
    }
}

TEST_CASE("cross-check negative controls") {
    SymplecticEmbeddingData s = cp1_symplectic(1, 5);
    EmbeddingModel e = cp_embedding(s);
    ModuleMorphism f = shriek_cpn(s, e);
    ChernData good =
        make_chern_data(s.Q, 4, {s.Q->unit(), Vec{Scalar(4)}, zero_vec(0), zero_vec(0)});
    BlowupModel B = blowup_model(e, f, good);
    CohomologyRing direct = cup_structure(*B.algebra, 0, 11);
    BlowupPresentation p = presentation_from_model(e, f, good);

    // a genuinely different ring is reported with its first differing degree
    CohomologyRing kt_ring = cup_structure(*kodaira_thurston(), 0, 4);
    CompareResult cmp = compare_with_direct(kt_ring, direct, 4);
    CHECK_FALSE(cmp.equal);
    CHECK(cmp.detail.find("degree") != std::string::npos);

    // a corrupted shriek map breaks the quotient dimension verification
    BlowupPresentation bad = p;
    bad.f_shriek[0] = Matrix(p.f_shriek[0].rows(), p.f_shriek[0].cols());
    CHECK_THROWS_AS(blowup_presentation(bad), InternalError);
    // and zeroing it on the top class trips the duality precondition
    BlowupPresentation bad2 = p;
    bad2.f_shriek[2] = Matrix(p.f_shriek[2].rows(), p.f_shriek[2].cols());
    CHECK_THROWS_AS(blowup_presentation(bad2), HypothesisError);

    // a c_1 off by one changes the ring but not its dims or cup ranks:
    // exactly the rigidity that makes the separating invariant necessary
    ChernData off =
        make_chern_data(s.Q, 4, {s.Q->unit(), Vec{Scalar(5)}, zero_vec(0), zero_vec(0)});
    PresentationResult pres = blowup_presentation(presentation_from_model(e, f, off));
    CHECK(compare_with_direct(pres.ring, direct, 11).equal);
}

TEST_CASE("cp5 family: presentation ring and relations") {
    for (int l : {1, 2, 3}) {
        CohomologyRing ring = cp5_blowup_presentation(l);
        std::vector<int> b;
        for (int d = 0; d <= 10; ++d) b.push_back(ring.dim(d));
        CHECK(b == std::vector<int>{1, 0, 2, 0, 3, 0, 3, 0, 2, 0, 1});
        CHECK(poincare_check(ring, 10).ok);

        // in the quotient: A = [a], X = [x]; check the defining relations of
        // Lambda(a,x)/(a^6, a^2 x, l^2 a^4 + (6l-2) a x^3 + l x^4)
        REQUIRE(ring.dim(2) == 2);
        // class names identify which generator is which
        int ia = ring.class_names[2][0].find("W2") != std::string::npos ? 0 : 1;
        int ix = 1 - ia;
        Vec A2 = zero_vec(2), X2 = zero_vec(2);
        A2[ia] = 1;
        X2[ix] = 1;
        auto cup = [&](int d, const Vec& x, int e, const Vec& y) {
            return ring.cup_elem(d, x, e, y);
        };
        Vec A_2 = cup(2, A2, 2, A2);        // a^2, degree 4
        Vec A2X = cup(4, A_2, 2, X2);       // a^2 x = 0
        CHECK(is_zero(A2X));
        Vec A_4 = cup(4, A_2, 4, A_2);      // a^4
        Vec X_2 = cup(2, X2, 2, X2);
        Vec X_3 = cup(4, X_2, 2, X2);
        Vec X_4 = cup(4, X_2, 4, X_2);
        Vec AX3 = cup(2, A2, 6, X_3);
        Vec rel = scaled(A_4, Scalar(l * l));
        add_scaled(rel, AX3, Scalar(6 * l - 2));
        add_scaled(rel, X_4, Scalar(l));
        CHECK(is_zero(rel));
        // a^6 = 0: a^4 * a^2
        CHECK(is_zero(cup(8, A_4, 4, A_2)));

        // firstmodel relation: l a^4 + (6l-2) a' x^3 + x^4 = 0 where a x = l a' x
        Vec rel1 = scaled(A_4, Scalar(l));
        add_scaled(rel1, scaled(AX3, Scalar(1) / Scalar(l)), Scalar(6 * l - 2));
        add_scaled(rel1, X_4, Scalar(1));
        CHECK(is_zero(rel1));
    }
}

TEST_CASE("cp5 family: separating invariant") {
    CHECK(cp5_separating_invariant(1) == 256);
    CHECK(cp5_separating_invariant(2) == Scalar(625) / Scalar(2));
    std::vector<Scalar> vals;
    for (int l = 1; l <= 10; ++l) vals.push_back(cp5_separating_invariant(l));
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j) CHECK(vals[i] != vals[j]);
    CHECK_THROWS_AS(cp5_separating_invariant(0), InputError);
}

TEST_CASE("fingerprints: invariance under basis permutation and rescaling") {
    CohomologyRing ring = cup_structure(*kodaira_thurston(), 0, 4);
    RingFingerprint fp = fingerprint(ring);
    CHECK(fp.betti == std::vector<int>{1, 3, 4, 3, 1});
    // H^1 products span only [ut] and [yt] ([uy] = 0), so the rank is 2
    CHECK(fp.cup_ranks[1][1] == 2);

    // permute the degree-1 basis and rescale a representative
    CohomologyRing perm = ring;
    auto swap_h1 = [&](int i, int j) {
        for (int e = 0; e <= 4; ++e) {
            if (1 + e > 4) continue;
            auto& t = perm.cup[1][e];
            for (int b = 0; b < ring.dim(e); ++b)
                std::swap(t[std::size_t(i) * ring.dim(e) + b], t[std::size_t(j) * ring.dim(e) + b]);
            auto& t2 = perm.cup[e][1];
            for (int a = 0; a < ring.dim(e); ++a)
                std::swap(t2[std::size_t(a) * ring.dim(1) + i], t2[std::size_t(a) * ring.dim(1) + j]);
        }
        // entries landing in degree 1: cup[0][1] and cup[1][0] outputs
        for (auto* t : {&perm.cup[0][1], &perm.cup[1][0]})
            for (auto& sv : *t)
                for (auto& [u, c] : sv) {
                    if (u == i)
                        u = j;
                    else if (u == j)
                        u = i;
                }
    };
    swap_h1(0, 2);
    RingFingerprint fp2 = fingerprint(perm);
    CHECK(fp == fp2);

    // rescale one degree-1 class by 3 (basis change): conjugate the tables
    CohomologyRing scaled_ring = ring;
    for (int e = 0; e <= 3; ++e) {
        auto& t = scaled_ring.cup[1][e];
        for (int b = 0; b < ring.dim(e); ++b)
            for (auto& [u, c] : t[std::size_t(0) * ring.dim(e) + b]) c *= 3;
        auto& t2 = scaled_ring.cup[e][1];
        for (int a = 0; a < ring.dim(e); ++a)
            for (auto& [u, c] : t2[std::size_t(a) * ring.dim(1) + 0]) c *= 3;
    }
    for (auto* t : {&scaled_ring.cup[0][1], &scaled_ring.cup[1][0]})
        for (auto& sv : *t)
            for (auto& [u, c] : sv)
                if (u == 0) c /= 3;
    RingFingerprint fp3 = fingerprint(scaled_ring);
    CHECK(fp == fp3);
}
