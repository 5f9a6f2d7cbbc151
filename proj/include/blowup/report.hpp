#ifndef BLOWUP_REPORT_HPP
#define BLOWUP_REPORT_HPP

#include <json.hpp>

#include "blowup/cohomology.hpp"
#include "blowup/massey.hpp"

namespace blowup {

// Uniform result carrier for the CLI: the JSON and the human rendering
// expose the same numeric content; timing is the one unstable field.
struct Report {
    std::string kind;
    nlohmann::ordered_json inputs;
    std::optional<std::vector<int>> betti;  // degrees 0..len-1
    nlohmann::ordered_json ring;            // null unless requested
    nlohmann::ordered_json massey;
    std::optional<bool> poincare_duality;
    std::optional<bool> cross_check;
    std::string validation;
    double timing_ms = 0;

    nlohmann::ordered_json to_json(bool with_timing = true) const;
    std::string to_text() const;
};

nlohmann::ordered_json ring_to_json(const CohomologyRing& ring);
nlohmann::ordered_json massey_to_json(const MasseyReport& rep, const DegreewiseAlgebra& a);

}  // namespace blowup

#endif
