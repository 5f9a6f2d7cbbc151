// Command-line workbench: cohomology of CDGA presentation files, blow-up
// model construction with persistence, Massey products, verification suites.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "blowup/cdga_file.hpp"
#include "blowup/errors.hpp"
#include "blowup/model_io.hpp"
#include "blowup/report.hpp"
#include "blowup/ring_presentation.hpp"
#include "blowup/suites.hpp"

using namespace blowup;
using nlohmann::ordered_json;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit(const Report& rep, bool as_json) {
    if (as_json)
        std::cout << rep.to_json().dump(1) << "\n";
    else
        std::cout << rep.to_text();
}

std::pair<int, int> parse_window(const std::string& spec, int lo_default, int hi_default) {
    if (spec.empty()) return {lo_default, hi_default};
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("window must be '<lo>:<hi>'");
    try {
        return {std::stoi(spec.substr(0, colon)), std::stoi(spec.substr(colon + 1))};
    } catch (const std::invalid_argument&) {
        throw InputError("window must be '<lo>:<hi>'");
    }
}

int top_nonzero_degree(const DegreewiseAlgebra& a) {
    int top = 0;
    for (int d = 0; d <= a.N; ++d)
        if (a.dim(d) > 0) top = d;
    return top;
}

struct BlowupArgs {
    std::string ambient, sub, embed, chern, out, lm, sub_total_chern = "1";
    bool chern_auto = false;
    int l = 0;
    int top = -1;
    bool json = false;
};

int cmd_cohomology(const std::string& file, const std::string& window, bool want_ring,
                   bool as_json) {
    Timer timer;
    PresentationFile pf = load_presentation_file(file);
    AlgebraPtr a = build_algebra(pf);
    auto [lo, hi] = parse_window(window, 0, a->N - 1);
    Report rep;
    rep.kind = "cohomology";
    rep.inputs = {{"file", file}, {"algebra", a->label}, {"window", {lo, hi}}};
    GradedCohomology H = cohomology(*a, lo, hi);
    rep.betti = H.dims;
    rep.inputs["window_lo"] = lo;
    if (want_ring) rep.ring = ring_to_json(cup_structure(*a, 0, hi));
    rep.validation = "valid";
    rep.timing_ms = timer.ms();
    emit(rep, as_json);
    return 0;
}

int cmd_blowup(const BlowupArgs& args) {
    Timer timer;
    PresentationFile sub_pf = load_presentation_file(args.sub);
    AlgebraPtr Q = build_algebra(sub_pf);
    DistinguishedElements dist = evaluate_distinguished(*Q, sub_pf);

    std::map<std::string, Scalar> symbols;
    if (args.l > 0) symbols["l"] = Scalar(args.l);

    EmbeddingModel e;
    ModuleMorphism shriek;
    std::optional<SymplecticEmbeddingData> sdata;

    if (args.ambient.rfind("cp:", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(args.ambient.substr(3));
        } catch (...) {
            throw InputError("--ambient cp:<N> needs an integer N");
        }
        if (n < 1) throw InputError("--ambient cp:<N> needs N >= 1");
        // the symplectic cocycle: explicit embed spec or the file's form
        Vec omega;
        if (!args.embed.empty()) {
            auto arrow = args.embed.find("->");
            if (arrow == std::string::npos) throw InputError("--embed must look like 'a-><expr>'");
            std::string lhs = args.embed.substr(0, arrow);
            if (lhs.find_first_not_of(" a") != std::string::npos)
                throw InputError("for cp ambients the embed spec maps the generator a");
            HomogeneousElement img =
                evaluate_expression(*Q, args.embed.substr(arrow + 2), symbols);
            if (img.degree != 2) throw InputError("--embed image must have degree 2");
            omega = img.coords;
        } else if (dist.symplectic_form) {
            omega = dist.symplectic_form->coords;
        } else {
            throw InputError("need --embed or a symplectic_form in the sub file");
        }
        if (!dist.orientation)
            throw InputError("the sub presentation needs an orientation for cp ambients");
        int dim_v = top_nonzero_degree(*Q);
        if (dim_v % 2 != 0)
            throw HypothesisError("sub manifold dimension must be even for cp ambients");
        sdata = make_symplectic_data(Q, omega, dist.orientation->coords, dim_v / 2, n);
        if (!args.lm.empty() && parse_scalar(args.lm) != sdata->l_M)
            throw HypothesisError("--l-m " + args.lm + " contradicts the computed l_M = " +
                                  scalar_to_string(sdata->l_M));
        e = cp_embedding(*sdata);
        shriek = shriek_cpn(*sdata, e);
    } else {
        PresentationFile amb_pf = load_presentation_file(args.ambient);
        AlgebraPtr R = build_algebra(amb_pf);
        DistinguishedElements amb_dist = evaluate_distinguished(*R, amb_pf);
        if (!amb_dist.orientation || !dist.orientation)
            throw InputError("both presentations need orientation cocycles");
        if (args.embed.empty()) throw InputError("general ambients need --embed 'g->expr;...'");
        // build phi from generator images
        std::map<std::string, std::string> images;
        std::string spec = args.embed;
        std::size_t pos = 0;
        while (pos < spec.size()) {
            auto semi = spec.find(';', pos);
            std::string part = spec.substr(pos, semi == std::string::npos ? spec.npos : semi - pos);
            pos = semi == std::string::npos ? spec.size() : semi + 1;
            auto arrow = part.find("->");
            if (arrow == std::string::npos) throw InputError("--embed must be 'g->expr;...'");
            auto strip = [](std::string s) {
                while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                    s.erase(s.begin());
                while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                    s.pop_back();
                return s;
            };
            images[strip(part.substr(0, arrow))] = strip(part.substr(arrow + 2));
        }
        AlgebraMorphism phi;
        phi.label = "phi";
        phi.source = R;
        phi.target = Q;
        std::vector<HomogeneousElement> gen_imgs;
        for (const auto& g : R->generators) {
            auto it = images.find(g.name);
            if (it == images.end())
                throw InputError("--embed misses the image of generator '" + g.name + "'");
            HomogeneousElement img = evaluate_expression(*Q, it->second, symbols);
            if (!is_zero(img.coords) && img.degree != g.degree)
                throw InputError("image of '" + g.name + "' must have degree " +
                                 std::to_string(g.degree));
            img.degree = g.degree;
            if (int(img.coords.size()) != Q->dim(g.degree))
                img.coords = zero_vec(Q->dim(g.degree));
            gen_imgs.push_back(img);
        }
        for (int d = 0; d <= R->N; ++d) {
            Matrix m(Q->dim(d), R->dim(d));
            for (int i = 0; i < R->dim(d); ++i) {
                // multiply generator images along the exponent vector
                const auto& exps = R->basis_exponents[d][i];
                Vec acc = Q->unit();
                int deg = 0;
                for (std::size_t g = 0; g < exps.size(); ++g)
                    for (int rep = 0; rep < exps[g]; ++rep) {
                        acc = Q->mul(deg, acc, R->generators[g].degree, gen_imgs[g].coords);
                        deg += R->generators[g].degree;
                    }
                if (deg == d) m.set_col(i, acc);
            }
            phi.mats.push_back(std::move(m));
        }
        int n = amb_dist.orientation->degree;
        int m_deg = dist.orientation->degree;
        e = make_embedding_model(R, Q, phi, n, m_deg, amb_dist.orientation->coords,
                                 dist.orientation->coords);
        shriek = shriek_solve(e);
    }

    // Chern data
    ChernData chern;
    const int k = e.k();
    if (args.chern_auto) {
        if (!sdata)
            throw InputError("--chern-auto needs a cp:<N> ambient");
        // c(V) from --sub-total-chern, f*(c(CP(n))) = (1+omega)^{n+1}
        std::vector<Vec> cv;
        {
            Poly p = parse_poly(args.sub_total_chern, Q->generators, symbols);
            // split by degree
            int maxdeg = e.m;
            cv.assign(maxdeg / 2 + 1, {});
            for (int i = 0; 2 * i <= maxdeg; ++i) cv[i] = zero_vec(Q->dim(2 * i));
            for (const auto& [c, exp] : p.terms) {
                int deg = 0;
                for (std::size_t g = 0; g < Q->generators.size(); ++g)
                    deg += exp[g] * Q->generators[g].degree;
                if (deg % 2 != 0) throw InputError("total chern class must be even");
                if (deg > maxdeg) continue;
                HomogeneousElement el = evaluate_homogeneous(*Q, Poly{{{c, exp}}});
                add_scaled(cv[deg / 2], el.coords, Scalar(1));
            }
        }
        std::vector<Vec> cw;
        {
            const int n_complex = sdata->n;
            Vec wp = Q->unit();
            Scalar binom(1);
            for (int i = 0; 2 * i <= e.m; ++i) {
                if (i > 0) {
                    binom = binom * Scalar(n_complex + 2 - i) / Scalar(i);
                    wp = Q->mul(2 * (i - 1), wp, 2, sdata->omega);
                }
                cw.push_back(scaled(wp, binom));
            }
        }
        chern = chern_normal(Q, cv, cw, k, e.m);
    } else if (!args.chern.empty()) {
        std::vector<Vec> gamma(k);
        gamma[0] = Q->unit();
        std::vector<std::string> parts;
        std::size_t pos = 0;
        while (pos <= args.chern.size()) {
            auto semi = args.chern.find(';', pos);
            parts.push_back(args.chern.substr(
                pos, semi == std::string::npos ? args.chern.npos : semi - pos));
            if (semi == std::string::npos) break;
            pos = semi + 1;
        }
        for (int i = 1; i < k; ++i) {
            gamma[i] = zero_vec(Q->dim(2 * i));
            if (i < int(parts.size())) {
                HomogeneousElement el = evaluate_expression(*Q, parts[i], symbols);
                if (!is_zero(el.coords)) {
                    if (el.degree != 2 * i)
                        throw InputError("chern entry " + std::to_string(i) +
                                         " must have degree " + std::to_string(2 * i));
                    gamma[i] = el.coords;
                }
            }
        }
        if (!parts.empty() && !parts[0].empty()) {
            HomogeneousElement el = evaluate_expression(*Q, parts[0], symbols);
            if (el.degree != 0 || el.coords != Q->unit())
                throw InputError("chern entry 0 must be 1");
        }
        chern = make_chern_data(Q, k, std::move(gamma));
    } else {
        throw InputError("need --chern '<expr>;...' or --chern-auto");
    }

    BlowupModel B = blowup_model(e, shriek, chern, args.top);

    Report rep;
    rep.kind = "blowup";
    rep.inputs = {{"ambient", args.ambient}, {"sub", args.sub}, {"n", e.n},      {"m", e.m},
                  {"k", k},                  {"top", B.algebra->N}};
    if (sdata) rep.inputs["l_M"] = scalar_to_string(sdata->l_M);
    rep.betti = betti(*B.algebra, 0, B.algebra->N - 1);
    CohomologyRing direct = cup_structure(*B.algebra, 0, B.algebra->N - 1);
    rep.poincare_duality = poincare_check(direct, e.n).ok;
    PresentationResult pres = blowup_presentation(presentation_from_model(e, shriek, chern));
    rep.cross_check = compare_with_direct(pres.ring, direct, B.algebra->N - 1).equal;
    rep.validation = "valid";

    if (!args.out.empty()) {
        ordered_json prov;
        prov["kind"] = "blowup-model";
        prov["ambient"] = args.ambient;
        prov["sub"] = args.sub;
        prov["n"] = e.n;
        prov["m"] = e.m;
        prov["k"] = k;
        if (sdata) prov["l_M"] = scalar_to_string(sdata->l_M);
        save_model(args.out, *B.algebra, std::move(prov));
        rep.inputs["out"] = args.out;
    }
    rep.timing_ms = timer.ms();
    emit(rep, args.json);
    return 0;
}

int cmd_massey(const std::string& file, const std::string& classes, bool as_json) {
    Timer timer;
    AlgebraPtr a;
    // model files are JSON; presentation files are line-oriented text
    {
        std::ifstream in(file);
        if (!in) throw InputError("cannot open '" + file + "'");
        char c = 0;
        in >> c;
        if (c == '{') {
            a = load_model(file).algebra;
        } else {
            a = build_algebra(load_presentation_file(file));
        }
    }
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= classes.size()) {
        auto semi = classes.find(';', pos);
        parts.push_back(classes.substr(pos, semi == std::string::npos ? classes.npos : semi - pos));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (parts.size() != 3) throw InputError("--classes needs three ';'-separated expressions");
    std::vector<CohomologyClass> cls;
    for (const auto& p : parts) {
        HomogeneousElement el = parse_basis_combination(*a, p);
        cls.push_back({el.degree, el.coords});
    }
    MasseyReport mrep = massey_triple(*a, cls[0], cls[1], cls[2]);
    Report rep;
    rep.kind = "massey";
    rep.inputs = {{"file", file}, {"classes", classes}};
    rep.massey = massey_to_json(mrep, *a);
    rep.timing_ms = timer.ms();
    emit(rep, as_json);
    return 0;
}

int cmd_verify(const std::string& suite, bool as_json) {
    Timer timer;
    SuiteResult res;
    if (suite == "mcduff")
        res = run_suite_mcduff();
    else if (suite == "cp5-family")
        res = run_suite_cp5_family();
    else if (suite == "axioms")
        res = run_suite_axioms();
    else
        throw InputError("unknown suite '" + suite + "' (mcduff, cp5-family, axioms)");

    if (as_json) {
        ordered_json j;
        j["kind"] = "verify";
        j["suite"] = res.suite;
        ordered_json checks = ordered_json::array();
        for (const auto& c : res.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        j["checks"] = checks;
        j["ok"] = res.ok();
        j["timing_ms"] = timer.ms();
        std::cout << j.dump(1) << "\n";
    } else {
        std::cout << "== verify " << res.suite << " ==\n";
        for (const auto& c : res.checks) {
            std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
            std::cout << "\n";
        }
        std::cout << (res.ok() ? "suite passed" : "suite FAILED") << " ("
                  << timer.ms() << " ms)\n";
    }
    return res.ok() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"blow-up workbench: rational models of blow-ups of embeddings"};
    app.require_subcommand(1);

    std::string file, window, classes, suite;
    bool want_ring = false, as_json = false;
    BlowupArgs bargs;

    auto* coh = app.add_subcommand("cohomology", "Betti numbers of a CDGA presentation file");
    coh->add_option("file", file, "presentation file (.cdga)")->required();
    coh->add_option("--window", window, "degree window '<lo>:<hi>'");
    coh->add_flag("--ring", want_ring, "include the cup-product structure");
    coh->add_flag("--json", as_json, "machine-readable output");

    auto* blow = app.add_subcommand("blowup", "build the blow-up model B(R,Q)");
    blow->add_option("--ambient", bargs.ambient, "'cp:<N>' or a presentation file")->required();
    blow->add_option("--sub", bargs.sub, "presentation file of the submanifold")->required();
    blow->add_option("--embed", bargs.embed, "'a-><expr>' or 'g-><expr>;...'");
    blow->add_option("--chern", bargs.chern, "';'-separated chern representatives c_0;c_1;...");
    blow->add_flag("--chern-auto", bargs.chern_auto,
                   "derive c(nu) from c(CP(n)) and --sub-total-chern");
    blow->add_option("--sub-total-chern", bargs.sub_total_chern,
                     "total chern class of the submanifold (default 1)");
    blow->add_option("--l", bargs.l, "binds the symbol l in expressions");
    blow->add_option("--l-m", bargs.lm, "expected l_M (checked against the computed value)");
    blow->add_option("--top", bargs.top, "truncation bound (default n+2)");
    blow->add_option("--out", bargs.out, "persist the model as JSON");
    blow->add_flag("--json", bargs.json, "machine-readable output");

    auto* mas = app.add_subcommand("massey", "triple Massey product in a model or presentation");
    mas->add_option("file", file, "model JSON or presentation file")->required();
    mas->add_option("--classes", classes, "three ';'-separated cocycle expressions")->required();
    mas->add_flag("--json", as_json, "machine-readable output");

    auto* ver = app.add_subcommand("verify", "run an acceptance suite");
    ver->add_option("suite", suite, "mcduff | cp5-family | axioms")->required();
    ver->add_flag("--json", as_json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (coh->parsed()) return cmd_cohomology(file, window, want_ring, as_json);
        if (blow->parsed()) return cmd_blowup(bargs);
        if (mas->parsed()) return cmd_massey(file, classes, as_json);
        if (ver->parsed()) return cmd_verify(suite, as_json);
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
