#ifndef BLOWUP_MORPHISM_HPP
#define BLOWUP_MORPHISM_HPP

#include "blowup/dgmodule.hpp"

namespace blowup {

// Degree-preserving algebra map given by one matrix per source degree.
struct AlgebraMorphism {
    std::string label;
    AlgebraPtr source, target;
    std::vector<Matrix> mats;  // mats[d]: target dim(d) x source dim(d), d = 0..source N

    Vec apply(int d, const Vec& x) const;
};

// Chain map, multiplicative on all basis pairs within bound, unit to unit.
ValidationReport validate(const AlgebraMorphism& f);

// Degree-shift module map over a common base algebra.
struct ModuleMorphism {
    std::string label;
    ModulePtr source, target;
    int shift = 0;
    std::vector<Matrix> mats;  // mats[d - source lo]: target dim(d+shift) x source dim(d)

    Vec apply(int d, const Vec& x) const;
    const Matrix& mat(int d) const;
};

// target.diff o f = (-1)^shift f o source.diff and
// f(r.m) = (-1)^{shift |r|} r.f(m) on all basis pairs within bound.
ValidationReport validate(const ModuleMorphism& f);

ModuleMorphism identity_morphism(ModulePtr m);
ModuleMorphism zero_morphism(ModulePtr source, ModulePtr target, int shift = 0);
ModuleMorphism morphism_difference(const ModuleMorphism& f0, const ModuleMorphism& f1);

// Turn a degree-preserving algebra map into the module map between the
// rank-one free modules (target restricted to a source-module along f).
ModuleMorphism as_module_morphism(const AlgebraMorphism& f);

// M over the target of phi, viewed as a module over phi's source.
ModulePtr restrict_scalars(const AlgebraMorphism& phi, ModulePtr m);

// Mapping cone of a degree-0 module chain map f: A -> B, the module
// B (+) sA with d(b, sa) = (d_B b + f(a), -s d_A a). Validates f first.
ModulePtr mapping_cone(const ModuleMorphism& f);

}  // namespace blowup

#endif
