#ifndef BLOWUP_MODEL_IO_HPP
#define BLOWUP_MODEL_IO_HPP

#include <json.hpp>

#include "blowup/algebra.hpp"

namespace blowup {

// Self-describing persistence of a degreewise algebra (basis, structure
// constants, differential) with a versioned header and free-form provenance.
nlohmann::ordered_json algebra_to_json(const DegreewiseAlgebra& a,
                                       nlohmann::ordered_json provenance = {});

struct LoadedModel {
    AlgebraPtr algebra;
    nlohmann::ordered_json provenance;
};

LoadedModel algebra_from_json(const nlohmann::json& j);

void save_model(const std::string& path, const DegreewiseAlgebra& a,
                nlohmann::ordered_json provenance = {});
LoadedModel load_model(const std::string& path);

}  // namespace blowup

#endif
