#ifndef BLOWUP_MASSEY_HPP
#define BLOWUP_MASSEY_HPP

#include "blowup/cohomology.hpp"

namespace blowup {

struct CohomologyClass {
    int degree = 0;
    Vec cocycle;  // representative in the algebra's basis
};

struct MasseyReport {
    CohomologyClass alpha, beta, gamma;
    int rep_degree = 0;
    Vec representative_cocycle;            // xi*c - (-1)^{|a|} a*eta
    Vec representative_class;              // coordinates in H^{rep_degree}
    std::vector<Vec> indeterminacy_basis;  // subspace of H^{rep_degree}
    bool contains_zero = false;
    Vec xi, eta;  // bounding cochains used
};

struct MasseyOptions {
    // Cocycles added to the bounding cochains; any admissible re-choice of
    // xi or eta differs from the solver's pick by such a cocycle.
    std::optional<Vec> xi_perturbation;
    std::optional<Vec> eta_perturbation;
};

// Triple Massey product <[alpha],[beta],[gamma]>. Requires the consecutive
// cup products to vanish in cohomology; reports a representative class, the
// standard indeterminacy [alpha] H + H [gamma], and a membership verdict
// for zero.
MasseyReport massey_triple(const DegreewiseAlgebra& a, const CohomologyClass& alpha,
                           const CohomologyClass& beta, const CohomologyClass& gamma,
                           const MasseyOptions& opt = {});

}  // namespace blowup

#endif
