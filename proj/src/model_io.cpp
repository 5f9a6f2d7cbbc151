#include "blowup/model_io.hpp"

#include <fstream>

#include "blowup/errors.hpp"

namespace blowup {

using nlohmann::json;
using nlohmann::ordered_json;

nlohmann::ordered_json algebra_to_json(const DegreewiseAlgebra& a, ordered_json provenance) {
    ordered_json j;
    j["format"] = "blowup-model";
    j["version"] = 1;
    j["label"] = a.label;
    j["top_degree"] = a.N;
    j["connected"] = a.declared_connected;
    j["unit_index"] = a.unit_index;
    j["basis"] = a.names;

    ordered_json gens = ordered_json::array();
    for (const auto& g : a.generators)
        gens.push_back({{"name", g.name}, {"degree", g.degree}, {"power", g.power}});
    j["generators"] = gens;

    ordered_json diffs = ordered_json::array();
    for (int d = 0; d < a.N; ++d) {
        ordered_json entries = ordered_json::array();
        for (int i = 0; i < a.diff[d].rows(); ++i)
            for (int c = 0; c < a.diff[d].cols(); ++c)
                if (a.diff[d].at(i, c) != 0)
                    entries.push_back({i, c, scalar_to_string(a.diff[d].at(i, c))});
        diffs.push_back(std::move(entries));
    }
    j["diff"] = diffs;

    ordered_json mult = ordered_json::array();
    for (int d = 0; d <= a.N; ++d)
        for (int e = 0; d + e <= a.N; ++e) {
            ordered_json entries = ordered_json::array();
            for (int i = 0; i < a.dim(d); ++i)
                for (int k = 0; k < a.dim(e); ++k) {
                    const SVec& sv = a.basis_product(d, e, i, k);
                    if (sv.empty()) continue;
                    ordered_json targets = ordered_json::array();
                    for (const auto& [t, c] : sv) targets.push_back({t, scalar_to_string(c)});
                    entries.push_back({i, k, std::move(targets)});
                }
            if (!entries.empty()) mult.push_back({{"d", d}, {"e", e}, {"entries", entries}});
        }
    j["mult"] = mult;
    if (!provenance.is_null() && !provenance.empty()) j["provenance"] = std::move(provenance);
    return j;
}

LoadedModel algebra_from_json(const json& j) {
    if (!j.contains("format") || j["format"] != "blowup-model")
        throw InputError("model file: missing or wrong format header");
    if (!j.contains("version") || j["version"] != 1)
        throw InputError("model file: unsupported version");
    auto a = std::make_shared<DegreewiseAlgebra>();
    a->label = j.value("label", std::string("model"));
    a->N = j.at("top_degree").get<int>();
    a->declared_connected = j.value("connected", true);
    a->unit_index = j.at("unit_index").get<int>();
    a->names = j.at("basis").get<std::vector<std::vector<std::string>>>();
    if (int(a->names.size()) != a->N + 1)
        throw InputError("model file: basis table does not match top_degree");
    for (const auto& g : j.value("generators", json::array()))
        a->generators.push_back(
            {g.at("name").get<std::string>(), g.at("degree").get<int>(), g.value("power", 0)});

    a->diff.assign(a->N + 1, Matrix());
    const auto& diffs = j.at("diff");
    if (int(diffs.size()) != a->N) throw InputError("model file: diff table has wrong length");
    for (int d = 0; d <= a->N; ++d) {
        Matrix m(a->dim(d + 1), a->dim(d));
        if (d < a->N)
            for (const auto& ent : diffs[d]) {
                int r = ent.at(0).get<int>(), c = ent.at(1).get<int>();
                if (r < 0 || r >= m.rows() || c < 0 || c >= m.cols())
                    throw InputError("model file: diff entry out of range");
                m.at(r, c) = parse_scalar(ent.at(2).get<std::string>());
            }
        a->diff[d] = std::move(m);
    }

    a->mult.assign(a->N + 1, {});
    for (int d = 0; d <= a->N; ++d) {
        a->mult[d].assign(a->N - d + 1, {});
        for (int e = 0; d + e <= a->N; ++e)
            a->mult[d][e].assign(std::size_t(a->dim(d)) * a->dim(e), {});
    }
    for (const auto& block : j.at("mult")) {
        int d = block.at("d").get<int>(), e = block.at("e").get<int>();
        if (d < 0 || e < 0 || d + e > a->N) throw InputError("model file: mult block out of range");
        for (const auto& ent : block.at("entries")) {
            int i = ent.at(0).get<int>(), k = ent.at(1).get<int>();
            if (i < 0 || i >= a->dim(d) || k < 0 || k >= a->dim(e))
                throw InputError("model file: mult entry out of range");
            SVec sv;
            for (const auto& t : ent.at(2)) {
                int tix = t.at(0).get<int>();
                if (tix < 0 || tix >= a->dim(d + e))
                    throw InputError("model file: mult target out of range");
                sv.emplace_back(tix, parse_scalar(t.at(1).get<std::string>()));
            }
            a->mult[d][e][std::size_t(i) * a->dim(e) + k] = std::move(sv);
        }
    }

    ValidationReport rep = validate(*a);
    if (!rep.ok()) throw InputError("model file fails CDGA validation: " + rep.summary());

    LoadedModel out;
    out.algebra = std::move(a);
    if (j.contains("provenance")) out.provenance = j["provenance"];
    return out;
}

void save_model(const std::string& path, const DegreewiseAlgebra& a, ordered_json provenance) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write model file '" + path + "'");
    out << algebra_to_json(a, std::move(provenance)).dump(1) << "\n";
}

LoadedModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open model file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("model file '" + path + "' is not valid JSON: " + e.what());
    }
    return algebra_from_json(j);
}

}  // namespace blowup
