#ifndef BLOWUP_RING_PRESENTATION_HPP
#define BLOWUP_RING_PRESENTATION_HPP

#include "blowup/blowup_model.hpp"

namespace blowup {

// Inputs of the cohomology-algebra description of a blow-up: the two
// cohomology rings, the induced shriek and restriction maps, and the Chern
// classes, all on the level of classes.
struct BlowupPresentation {
    CohomologyRing HW, HV;
    int k = 0;
    int n = 0, m = 0;
    std::vector<Matrix> f_star;    // per degree d = 0..m: HV.dim(d) x HW.dim(d)
    std::vector<Matrix> f_shriek;  // per degree d = 0..m: HW.dim(d+2k) x HV.dim(d)
    std::vector<Vec> chern;        // classes c_i in H^{2i}(V), i = 0..k-1, c_0 = 1
};

// Class-level data extracted from a validated model triple.
BlowupPresentation presentation_from_model(const EmbeddingModel& e,
                                           const ModuleMorphism& phi_shriek,
                                           const ChernData& chern);

struct PresentationResult {
    CohomologyRing ring;  // the quotient (H(W) (+) H(V) (x) L^+(x)) / I
    std::vector<int> ambient_dims;
    std::vector<int> ideal_dims;
};

// Degreewise quotient by the ideal generated by
// { f^!(v) + sum_i (v c_i) x^{k-i} : v in H(V) }, computed up to n and
// verified to collapse above n.
PresentationResult blowup_presentation(const BlowupPresentation& p);

struct CompareResult {
    bool equal = true;
    std::string detail;
};

// Graded dims and all cup-rank profiles, compared exactly through degree top.
CompareResult compare_with_direct(const CohomologyRing& presentation,
                                  const CohomologyRing& direct, int top);

// Basis-free numeric profile of a graded ring.
struct RingFingerprint {
    std::vector<int> betti;
    std::vector<std::vector<int>> cup_ranks;  // [d][e], d+e <= top
    std::vector<int> annihilator_dims;
    bool operator==(const RingFingerprint&) const = default;
};

RingFingerprint fingerprint(const CohomologyRing& ring);

// The blow-up family CP(5) along the degree-l embedded CP(1).
CohomologyRing cp5_blowup_presentation(int l);

// h(l) = (6l-2)^4 / l^5, exact; distinguishes the family members.
Scalar cp5_separating_invariant(int l);

}  // namespace blowup

#endif
