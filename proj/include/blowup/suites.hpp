#ifndef BLOWUP_SUITES_HPP
#define BLOWUP_SUITES_HPP

#include <string>
#include <vector>

#include "blowup/blowup_model.hpp"
#include "blowup/massey.hpp"
#include "blowup/ring_presentation.hpp"

namespace blowup {

struct SuiteCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<SuiteCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// McDuff blow-up of CP(6) along the Kodaira-Thurston manifold: validation,
// vanishing above dimension, Poincare duality, Betti additivity, the
// nontrivial Massey product, and the Theorem-style presentation cross-check.
SuiteResult run_suite_mcduff();

// CP(5) along degree-l CP(1): pairwise distinct separating invariants for
// l = 1..10, common Betti numbers for l = 1..5, presentation cross-checks.
SuiteResult run_suite_cp5_family();

// Randomized constructor fuzz: every generated presentation passes the full
// axiom validation.
SuiteResult run_suite_axioms(int count = 100, unsigned seed = 1);

// Shared construction helpers for the worked examples.
struct McduffData {
    SymplecticEmbeddingData symplectic;
    EmbeddingModel embedding;
    ModuleMorphism shriek;
    ChernData chern;
};

McduffData mcduff_inputs(int n = 6);

struct Cp5Cp1Data {
    SymplecticEmbeddingData symplectic;
    EmbeddingModel embedding;
    ModuleMorphism shriek;
    ChernData chern;
};

Cp5Cp1Data cp5_cp1_inputs(int l);

}  // namespace blowup

#endif
