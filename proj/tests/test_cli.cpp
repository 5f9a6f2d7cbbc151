#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blowup/cdga_file.hpp"
#include "blowup/cohomology.hpp"
#include "blowup/errors.hpp"
#include "blowup/model_io.hpp"
#include "blowup/report.hpp"
#include "blowup/suites.hpp"
#include "test_util.hpp"

using namespace blowup;
using namespace blowup::testutil;

namespace {

const char* kKtFile = R"(# Kodaira-Thurston
name kodaira-thurston
truncate_above 5
gen u 1
gen y 1
gen v 1
gen t 1
diff v = u*y
orientation u*v*y*t
symplectic_form u*v + y*t
)";

}  // namespace

TEST_CASE("expression parser") {
    std::vector<GeneratorInfo> gens{{"u", 1, 0}, {"y", 1, 0}, {"x", 2, 0}};
    Poly p = parse_poly("3/2*u*y - x + 2*x", gens);
    // terms: 3/2 uy, -x, 2x
    CHECK(p.terms.size() == 3);

    // Koszul normalization: y*u = -u*y
    Poly q = parse_poly("y*u", gens);
    REQUIRE(q.terms.size() == 1);
    CHECK(q.terms[0].first == -1);
    CHECK(q.terms[0].second == std::vector<int>{1, 1, 0});

    // odd squares die
    CHECK(parse_poly("u*u", gens).terms.empty());
    // powers
    Poly r = parse_poly("(1/3)*x^2", gens);
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms[0].first == Scalar(1) / 3);
    CHECK(r.terms[0].second == std::vector<int>{0, 0, 2});
    // symbol binding
    Poly s = parse_poly("l*x", gens, {{"l", Scalar(5)}});
    CHECK(s.terms[0].first == 5);
    CHECK_THROWS_AS(parse_poly("w + x", gens), InputError);
    CHECK_THROWS_AS(parse_poly("x +", gens), InputError);
    CHECK_THROWS_AS(parse_poly("x ^ y", gens), InputError);
}

TEST_CASE("expression evaluation in an algebra") {
    AlgebraPtr kt = kodaira_thurston();
    HomogeneousElement e = evaluate_expression(*kt, "u*v + y*t");
    CHECK(e.degree == 2);
    CHECK(e.coords[*kt->basis_index(2, "u*v")] == 1);
    CHECK(e.coords[*kt->basis_index(2, "y*t")] == 1);

    // Koszul sign through evaluation
    HomogeneousElement f = evaluate_expression(*kt, "u*v*y*t");
    CHECK(f.degree == 4);
    CHECK(f.coords[0] == -1);  // u*v*y*t = -(u*y*v*t)

    CHECK_THROWS_AS(evaluate_expression(*kt, "u + u*v"), InputError);  // inhomogeneous
}

TEST_CASE("basis combination parser") {
    McduffData d = mcduff_inputs(6);
    BlowupModel B = blowup_model(d.embedding, d.shriek, d.chern);
    HomogeneousElement e = parse_basis_combination(*B.algebra, "2*u*x - y*x");
    CHECK(e.degree == 3);
    CHECK(e.coords[*B.algebra->basis_index(3, "u*x")] == 2);
    CHECK(e.coords[*B.algebra->basis_index(3, "y*x")] == -1);
    CHECK_THROWS_AS(parse_basis_combination(*B.algebra, "nope"), InputError);
    CHECK_THROWS_AS(parse_basis_combination(*B.algebra, "u*x + a"), InputError);  // mixed degree
}

TEST_CASE("presentation file parse, build, and round-trip") {
    PresentationFile f = parse_presentation_file(kKtFile);
    CHECK(f.name == "kodaira-thurston");
    CHECK(f.generators.size() == 4);
    REQUIRE(f.diffs.size() == 1);
    CHECK(f.diffs[0].first == "v");
    AlgebraPtr a = build_algebra(f);
    CHECK(validate(*a).ok());
    CHECK(betti(*a, 0, 4) == std::vector<int>{1, 3, 4, 3, 1});

    // round-trip: emit, parse, rebuild; structure constants must agree
    PresentationFile g = parse_presentation_file(emit_presentation_file(f));
    AlgebraPtr b = build_algebra(g);
    REQUIRE(a->N == b->N);
    for (int d = 0; d <= a->N; ++d) REQUIRE(a->dim(d) == b->dim(d));
    for (int d = 0; d <= a->N; ++d) {
        CHECK(a->diff[d] == b->diff[d]);
        for (int e = 0; d + e <= a->N; ++e)
            CHECK(a->mult[d][e] == b->mult[d][e]);
    }
}

TEST_CASE("presentation file errors carry line context") {
    CHECK_THROWS_WITH_AS(parse_presentation_file("name x\ntruncate_above 4\ngen a\n"),
                         doctest::Contains("line 3"), InputError);
    CHECK_THROWS_WITH_AS(parse_presentation_file("name x\ntruncate_above 4\ngen a 2\nrel a*b\n"),
                         doctest::Contains("unsupported relation shape"), InputError);
    CHECK_THROWS_AS(parse_presentation_file("gen a 2\n"), InputError);  // no truncate_above
    // malformed degree
    CHECK_THROWS_AS(parse_presentation_file("name x\ntruncate_above 4\ngen a 0\n"), InputError);
    // presentation whose differential breaks d^2 = 0
    const char* bad = R"(name bad
truncate_above 6
gen a 1
gen b 2
diff a = b
diff b = a*b
)";
    PresentationFile f = parse_presentation_file(bad);
    CHECK_THROWS_AS(build_algebra(f), PresentationError);
}

TEST_CASE("distinguished elements") {
    PresentationFile f = parse_presentation_file(kKtFile);
    AlgebraPtr a = build_algebra(f);
    DistinguishedElements d = evaluate_distinguished(*a, f);
    REQUIRE(d.orientation);
    REQUIRE(d.symplectic_form);
    CHECK(d.orientation->degree == 4);
    CHECK(d.orientation->coords[0] == -1);
    CHECK(d.symplectic_form->degree == 2);
}

TEST_CASE("model persistence round-trip") {
    Cp5Cp1Data d = cp5_cp1_inputs(2);
    BlowupModel B = blowup_model(d.embedding, d.shriek, d.chern);
    nlohmann::ordered_json j = algebra_to_json(*B.algebra, {{"kind", "blowup-model"}});
    LoadedModel m = algebra_from_json(j);
    const auto& a = *B.algebra;
    const auto& b = *m.algebra;
    REQUIRE(a.N == b.N);
    CHECK(a.names == b.names);
    for (int deg = 0; deg <= a.N; ++deg) {
        CHECK(a.diff[deg] == b.diff[deg]);
        for (int e = 0; deg + e <= a.N; ++e) CHECK(a.mult[deg][e] == b.mult[deg][e]);
    }
    CHECK(m.provenance["kind"] == "blowup-model");

    // serialization is deterministic
    CHECK(algebra_to_json(*B.algebra).dump() == algebra_to_json(*m.algebra).dump());

    // header validation
    nlohmann::json broken = j;
    broken["format"] = "something-else";
    CHECK_THROWS_AS(algebra_from_json(broken), InputError);
    nlohmann::json v2 = j;
    v2["version"] = 2;
    CHECK_THROWS_AS(algebra_from_json(v2), InputError);
}

TEST_CASE("reports expose the same numbers in both renderings") {
    AlgebraPtr kt = kodaira_thurston();
    Report rep;
    rep.kind = "cohomology";
    rep.inputs = {{"file", "kt"}};
    rep.betti = betti(*kt, 0, 4);
    rep.poincare_duality = true;
    rep.timing_ms = 1.25;
    auto j = rep.to_json();
    CHECK(j["betti"] == std::vector<int>{1, 3, 4, 3, 1});
    CHECK(j["poincare_duality"] == true);
    std::string text = rep.to_text();
    CHECK(text.find("1 3 4 3 1") != std::string::npos);
    CHECK(text.find("poincare_duality: true") != std::string::npos);
    // JSON without timing is deterministic across calls
    CHECK(rep.to_json(false).dump() == rep.to_json(false).dump());
}

TEST_CASE("verify suites pass") {
    CHECK(run_suite_axioms(25, 7).ok());
    CHECK(run_suite_cp5_family().ok());
}
