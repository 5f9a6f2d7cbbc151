#include "blowup/report.hpp"

#include <sstream>

namespace blowup {

using nlohmann::ordered_json;

ordered_json Report::to_json(bool with_timing) const {
    ordered_json j;
    j["kind"] = kind;
    j["inputs"] = inputs;
    if (betti) j["betti"] = *betti;
    if (!ring.is_null()) j["ring"] = ring;
    if (!massey.is_null()) j["massey"] = massey;
    if (poincare_duality) j["poincare_duality"] = *poincare_duality;
    if (cross_check) j["cross_check"] = *cross_check;
    if (!validation.empty()) j["validation"] = validation;
    if (with_timing) j["timing_ms"] = timing_ms;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "== " << kind << " ==\n";
    if (!inputs.is_null() && !inputs.empty()) os << "inputs: " << inputs.dump() << "\n";
    if (betti) {
        os << "betti:";
        for (int b : *betti) os << " " << b;
        os << "\n";
    }
    if (!ring.is_null()) {
        os << "ring classes:\n";
        for (const auto& deg : ring["classes"])
            for (const auto& c : deg) os << "  " << c.get<std::string>() << "\n";
        os << "nonzero products: " << ring["products"].size() << "\n";
    }
    if (!massey.is_null()) {
        os << "massey <" << massey["alpha"].get<std::string>() << ", "
           << massey["beta"].get<std::string>() << ", " << massey["gamma"].get<std::string>()
           << ">\n";
        os << "  representative: " << massey["representative"].get<std::string>() << " (degree "
           << massey["degree"].get<int>() << ")\n";
        os << "  indeterminacy dimension: " << massey["indeterminacy_dim"].get<int>() << "\n";
        os << "  contains zero: " << (massey["contains_zero"].get<bool>() ? "yes" : "no") << "\n";
        os << "  nontrivial: " << (massey["contains_zero"].get<bool>() ? "no" : "yes") << "\n";
    }
    if (poincare_duality)
        os << "poincare_duality: " << (*poincare_duality ? "true" : "false") << "\n";
    if (cross_check) os << "cross_check: " << (*cross_check ? "true" : "false") << "\n";
    if (!validation.empty()) os << "validation: " << validation << "\n";
    os << "timing_ms: " << timing_ms << "\n";
    return os.str();
}

ordered_json ring_to_json(const CohomologyRing& ring) {
    ordered_json j;
    j["dims"] = ring.dims;
    ordered_json classes = ordered_json::array();
    for (const auto& deg : ring.class_names) {
        ordered_json row = ordered_json::array();
        for (const auto& n : deg) row.push_back(n);
        classes.push_back(std::move(row));
    }
    j["classes"] = classes;
    ordered_json products = ordered_json::array();
    for (int d = ring.lo; d <= ring.hi; ++d)
        for (int e = d; d + e <= ring.hi; ++e)
            for (int i = 0; i < ring.dim(d); ++i)
                for (int k = 0; k < ring.dim(e); ++k) {
                    const SVec& sv = ring.cup_product(d, e, i, k);
                    if (sv.empty()) continue;
                    ordered_json targets = ordered_json::array();
                    for (const auto& [t, c] : sv) targets.push_back({t, scalar_to_string(c)});
                    products.push_back(
                        {{"degrees", {d, e}}, {"indices", {i, k}}, {"value", targets}});
                }
    j["products"] = products;
    return j;
}

ordered_json massey_to_json(const MasseyReport& rep, const DegreewiseAlgebra& a) {
    ordered_json j;
    j["alpha"] = a.element_str(rep.alpha.degree, rep.alpha.cocycle);
    j["beta"] = a.element_str(rep.beta.degree, rep.beta.cocycle);
    j["gamma"] = a.element_str(rep.gamma.degree, rep.gamma.cocycle);
    j["degree"] = rep.rep_degree;
    j["representative"] = a.element_str(rep.rep_degree, rep.representative_cocycle);
    ordered_json cls = ordered_json::array();
    for (const auto& c : rep.representative_class) cls.push_back(scalar_to_string(c));
    j["representative_class"] = cls;
    j["indeterminacy_dim"] = int(rep.indeterminacy_basis.size());
    j["contains_zero"] = rep.contains_zero;
    return j;
}

}  // namespace blowup
