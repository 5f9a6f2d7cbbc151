#ifndef BLOWUP_CDGA_FILE_HPP
#define BLOWUP_CDGA_FILE_HPP

#include <optional>

#include "blowup/expr.hpp"

namespace blowup {

// Text presentation of a CDGA. Line-oriented:
//   name <label>
//   truncate_above <N>
//   gen <name> <degree>
//   rel <name>^<power>
//   diff <name> = <expression>
//   orientation <expression>
//   symplectic_form <expression>
// '#' starts a comment. Rationals are written p/q.
struct PresentationFile {
    std::string name;
    int truncate_above = -1;
    std::vector<std::pair<std::string, int>> generators;
    std::vector<std::pair<std::string, int>> relations;           // name, power
    std::vector<std::pair<std::string, std::string>> diffs;       // name, expression
    std::optional<std::string> orientation;
    std::optional<std::string> symplectic_form;
};

PresentationFile parse_presentation_file(const std::string& text);
PresentationFile load_presentation_file(const std::string& path);
std::string emit_presentation_file(const PresentationFile& f);

// Builds and validates the algebra; errors carry line/field context where
// the parser can supply it.
AlgebraPtr build_algebra(const PresentationFile& f);

struct DistinguishedElements {
    std::optional<HomogeneousElement> orientation;
    std::optional<HomogeneousElement> symplectic_form;
};

DistinguishedElements evaluate_distinguished(const DegreewiseAlgebra& a,
                                             const PresentationFile& f);

}  // namespace blowup

#endif
