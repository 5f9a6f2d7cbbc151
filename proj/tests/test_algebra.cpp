#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blowup/cohomology.hpp"
#include "blowup/errors.hpp"
#include "test_util.hpp"

using namespace blowup;
using namespace blowup::testutil;

TEST_CASE("truncated polynomial: CP(5) model") {
    AlgebraPtr a = truncated_polynomial("a", 2, 6, 12);
    CHECK(validate(*a).ok());
    std::vector<int> b = betti(*a, 0, 11);
    std::vector<int> expect{1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0};
    CHECK(b == expect);
}

TEST_CASE("truncated polynomial: power 1 gives the trivial algebra") {
    AlgebraPtr a = truncated_polynomial("a", 2, 1, 4);
    CHECK(a->dim(0) == 1);
    for (int d = 1; d <= 4; ++d) CHECK(a->dim(d) == 0);
}

TEST_CASE("truncated polynomial: degree 4 generator") {
    AlgebraPtr a = truncated_polynomial("a", 4, 3, 12);
    CHECK(a->dim(0) == 1);
    CHECK(a->dim(4) == 1);
    CHECK(a->dim(8) == 1);
    CHECK(a->dim(12) == 0);
    CHECK(a->names[4][0] == "a");
    CHECK(a->names[8][0] == "a^2");
}

TEST_CASE("truncated polynomial rejects odd generator degree") {
    CHECK_THROWS_AS(truncated_polynomial("a", 3, 4, 12), InputError);
}

TEST_CASE("Kodaira-Thurston presentation") {
    AlgebraPtr kt = kodaira_thurston();
    CHECK(validate(*kt).ok());
    CHECK(kt->dim(0) == 1);
    CHECK(kt->dim(1) == 4);
    CHECK(kt->dim(2) == 6);
    CHECK(kt->dim(3) == 4);
    CHECK(kt->dim(4) == 1);
    int total = 0;
    for (int d = 0; d <= kt->N; ++d) total += kt->dim(d);
    CHECK(total == 16);

    // dv = u*y
    auto v = kt->basis_index(1, "v");
    auto uy = kt->basis_index(2, "u*y");
    REQUIRE(v);
    REQUIRE(uy);
    Vec ev = zero_vec(4);
    ev[*v] = 1;
    Vec dv = kt->d_of(1, ev);
    CHECK(dv[*uy] == 1);

    // Koszul sign: y*u = -u*y
    auto u = kt->basis_index(1, "u");
    auto y = kt->basis_index(1, "y");
    const SVec& yu = kt->basis_product(1, 1, *y, *u);
    REQUIRE(yu.size() == 1);
    CHECK(yu[0].first == int(*uy));
    CHECK(yu[0].second == -1);
}

TEST_CASE("degree-wrong differential is reported") {
    AlgebraPtr kt = kodaira_thurston();
    DegreewiseAlgebra bad = *kt;
    bad.diff[1] = Matrix(bad.dim(2), bad.dim(1));
    bad.diff[1].at(0, 2) = 1;  // some arbitrary non-Leibniz differential
    bad.diff[2] = Matrix(bad.dim(3), bad.dim(2));
    ValidationReport rep = validate(bad);
    CHECK_FALSE(rep.ok());

    // a differential matrix of the wrong shape is a degree violation
    DegreewiseAlgebra shape = *kt;
    shape.diff[1] = Matrix(shape.dim(1), shape.dim(1));
    ValidationReport rep2 = validate(shape);
    REQUIRE_FALSE(rep2.ok());
    CHECK(rep2.issues[0].rule == "differential");
}

TEST_CASE("sphere-like presentation Lambda(x,z), dz = x^k") {
    PresentationBuilder b("S", 8);
    b.add_generator("x", 2);
    int z = b.add_generator("z", 3);
    b.set_diff(z, b.element(4, {{Scalar(1), {2, 0}}}));  // dz = x^2
    AlgebraPtr s = b.build();
    CHECK(validate(*s).ok());
    // d(x*z) = x^3
    auto xz = s->basis_index(5, "x*z");
    auto x3 = s->basis_index(6, "x^3");
    REQUIRE(xz);
    REQUIRE(x3);
    Vec e = zero_vec(s->dim(5));
    e[*xz] = 1;
    Vec d = s->d_of(5, e);
    CHECK(d[*x3] == 1);
    // H(S^2 model): 1, 0, 1, 0, 0, ...
    std::vector<int> bet = betti(*s, 0, 7);
    CHECK(bet == std::vector<int>{1, 0, 1, 0, 0, 0, 0, 0});
}

TEST_CASE("single even generator, no relation") {
    PresentationBuilder b("poly", 6);
    b.add_generator("x", 2);
    AlgebraPtr a = b.build();
    CHECK(a->dim(0) == 1);
    CHECK(a->dim(2) == 1);
    CHECK(a->dim(4) == 1);
    CHECK(a->dim(6) == 1);
    CHECK(a->names[6][0] == "x^3");
}

TEST_CASE("presentation with inconsistent truncated differential fails") {
    // Lambda(a)/(a^2) with da = b, d(a^2) = 2ab != 0: Leibniz must fail
    PresentationBuilder b("bad", 6);
    int a = b.add_generator("a", 2, 2);
    b.add_generator("b", 3);
    b.set_diff(a, b.element(3, {{Scalar(1), {0, 1}}}));
    CHECK_THROWS_AS(b.build(), PresentationError);
}

TEST_CASE("free extension: tensor factor with dz = 0") {
    AlgebraPtr base = cp_model(2, 8);  // Lambda(a)/(a^3)
    FreeExtensionBuilder ext(base, {{"z", 5, 0}}, 8);
    AlgebraPtr t = ext.build();
    CHECK(validate(*t).ok());
    std::vector<int> b = betti(*t, 0, 7);
    // H(CP2) plus the same shifted by |z| = 5
    CHECK(b == std::vector<int>{1, 0, 1, 0, 1, 1, 0, 1});
}

TEST_CASE("free extension: killing a cohomology class") {
    AlgebraPtr base = cp_model(2, 8);  // H^4 spanned by [a^2]
    FreeExtensionBuilder ext(base, {{"z", 3, 0}}, 8);
    // dz = a^2
    Vec a2 = zero_vec(base->dim(4));
    a2[0] = 1;
    ext.set_diff(0, ext.embed_base(4, a2));
    AlgebraPtr t = ext.build();
    CHECK(validate(*t).ok());
    std::vector<int> b = betti(*t, 0, 7);
    CHECK(b[4] == 0);  // the class of a^2 is gone
    CHECK(b[0] == 1);
    CHECK(b[2] == 1);
}

TEST_CASE("element printing") {
    AlgebraPtr kt = kodaira_thurston();
    Vec x = zero_vec(kt->dim(2));
    x[*kt->basis_index(2, "u*y")] = Scalar(3, 2);
    x[*kt->basis_index(2, "v*t")] = -1;
    CHECK(kt->element_str(2, x) == "-v*t + 3/2*u*y");  // basis order is enumeration order
}

TEST_CASE("random presentations validate (fuzz)") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 40; ++i) {
        AlgebraPtr a = random_cdga(rng, 3, 4, 7);
        CHECK(validate(*a).ok());
    }
}
