#ifndef BLOWUP_HOMOTOPY_HPP
#define BLOWUP_HOMOTOPY_HPP

#include <optional>

#include "blowup/morphism.hpp"

namespace blowup {

// Chain homotopy h between two module chain maps: d_X h + h d_A = f0 - f1,
// with h linear over the base of degree -1.
struct HomotopyWitness {
    ModuleMorphism f0, f1;
    std::vector<Matrix> h;  // h[d - source lo]: target dim(d-1) x source dim(d)
};

// Solves the homotopy equation exactly; nullopt when no witness exists.
std::optional<HomotopyWitness> homotopy_between(const ModuleMorphism& f0,
                                                const ModuleMorphism& f1);

// Exact re-check of the witness equation and base-linearity of h.
bool check_homotopy(const HomotopyWitness& w);

// The complex Hom_R(M, N): in each degree i a basis of the R-linear maps
// raising degree by i, with differential D(f) = d_N f - (-1)^i f d_M, whose
// degree-0 cycles are exactly the chain maps.
struct HomComplex {
    ModulePtr source, target;
    int lo = 0, hi = -1;                           // window of map degrees
    std::vector<int> dims;                         // dim Hom^i
    std::vector<std::vector<ModuleMorphism>> basis;  // basis maps per degree
    std::vector<Matrix> diff;                      // D: Hom^i -> Hom^{i+1}
};

HomComplex hom_complex(ModulePtr m, ModulePtr n, int lo, int hi);

// Semi-trivial CDGA structure on the mapping cone A (+) sM of a module map
// f: M -> A (A as a module over itself). Suspension classes multiply to
// zero. Requires one of the two hypotheses under which Leibniz holds:
// concentration of M in [p, 2p-1], or f an ideal inclusion (injective).
struct SemiTrivialCone {
    AlgebraPtr algebra;
    AlgebraPtr cone_base;      // A
    ModulePtr coned;           // M
    std::vector<int> base_dims;  // per degree: A-part occupies indices [0, base_dims[d])

    int base_index(int /*d*/, int i) const { return i; }
    int susp_index(int d, int j) const { return base_dims[d] + j; }  // class s(m), m in M^{d+1}
    AlgebraMorphism inclusion() const;  // A -> cone, an algebra map
};

SemiTrivialCone semi_trivial_cone_cdga(const ModuleMorphism& f);

}  // namespace blowup

#endif
