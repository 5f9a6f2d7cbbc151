#ifndef BLOWUP_BLOWUP_MODEL_HPP
#define BLOWUP_BLOWUP_MODEL_HPP

#include "blowup/embedding.hpp"

namespace blowup {

// CDGA model of the complement W \ V: the semi-trivial cones on phi^! and
// on the degree-vanishing composite phi phi^!, connected by phi (+) id.
struct ComplementModel {
    SemiTrivialCone source;  // R (+) s s^{-r} Q
    SemiTrivialCone target;  // Q (+) s s^{-r} Q
    AlgebraMorphism map;     // phi (+) id, a validated CDGA morphism
};

ComplementModel complement_model(const EmbeddingModel& e, const ModuleMorphism& phi_shriek);

// Model of the projectivized bundle: proj: (Q (x) L(x,z); Dz = sum gamma_i
// x^{k-i}) -> (Q (x) L(z); Dz = 0), x -> 0.
struct ProjectivizationModel {
    AlgebraPtr total;
    AlgebraPtr sphere;  // model of the sphere bundle
    AlgebraMorphism proj;
};

ProjectivizationModel projectivization_model(AlgebraPtr Q, const ChernData& chern, int N);

// The blow-up CDGA B(R,Q) = (R (+) Q (x) L^+(x,z), D) with its inclusion
// iota: R -> B. Basis layout per degree: R part, then q (x) x^j (j >= 1,
// ordered by j), then q (x) x^j z (j >= 0).
struct BlowupModel {
    AlgebraPtr algebra;
    AlgebraMorphism iota;
    EmbeddingModel embedding;
    ChernData chern;
    ModuleMorphism phi_shriek;

    // index bookkeeping per degree of the algebra
    struct Layout {
        int r_dim = 0;
        std::vector<std::pair<int, int>> x_part;  // (j, q-degree) blocks in order
        std::vector<std::pair<int, int>> z_part;  // (j, q-degree) blocks in order
    };
    std::vector<Layout> layout;

    int r_index(int /*t*/, int i) const { return i; }
    int x_index(int t, int j, int qi) const;  // q (x) x^j
    int z_index(int t, int j, int qi) const;  // q (x) x^j z
};

BlowupModel blowup_model(const EmbeddingModel& e, const ModuleMorphism& phi_shriek,
                         const ChernData& chern, int N = -1);

}  // namespace blowup

#endif
