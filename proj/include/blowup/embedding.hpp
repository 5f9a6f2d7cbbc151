#ifndef BLOWUP_EMBEDDING_HPP
#define BLOWUP_EMBEDDING_HPP

#include "blowup/cohomology.hpp"

namespace blowup {

// A CDGA model phi: R -> Q of an embedding V^m in W^n together with
// orientation cocycles, under the truncation and stable-range hypotheses:
// R connected with R^{>= n+1} = 0, Q connected with Q^{>= m+2} = 0,
// dim H^n(R) = 1 = dim H^m(Q) spanned by the orientations, H^1(phi)
// injective, n >= 2m+3, even codimension.
struct EmbeddingModel {
    AlgebraPtr R, Q;
    AlgebraMorphism phi;
    int n = 0, m = 0;
    Vec u_W;  // orientation cocycle in R^n
    Vec u_V;  // orientation cocycle in Q^m

    int r() const { return n - m; }
    int k() const { return (n - m) / 2; }
};

// Validates every invariant; throws HypothesisError naming the violation.
EmbeddingModel make_embedding_model(AlgebraPtr R, AlgebraPtr Q, AlgebraMorphism phi, int n, int m,
                                    Vec u_W, Vec u_V);

// Chern-class representatives gamma[i] in Q^{2i} n ker d for i < k, with
// gamma[0] = 1; gamma[k] is implicitly zero by the dimension hypothesis.
struct ChernData {
    int k = 0;
    std::vector<Vec> gamma;
};

ChernData make_chern_data(AlgebraPtr Q, int k, std::vector<Vec> gamma);

// A symplectic manifold model with a distinguished symplectic cocycle and
// orientation: [omega^m] = l_M [u_M] with l_M > 0.
struct SymplecticEmbeddingData {
    AlgebraPtr Q;
    Vec omega;  // cocycle in Q^2
    Vec u_M;    // orientation cocycle in Q^{2m}
    int m = 0;  // half-dimension of V
    int n = 0;  // complex dimension of the ambient CP(n)
    Scalar l_M;
};

SymplecticEmbeddingData make_symplectic_data(AlgebraPtr Q, Vec omega, Vec u_M, int m, int n);

// The CP(n) embedding model: R = Lambda(a)/(a^{n+1}), phi(a^j) = omega^j.
EmbeddingModel cp_embedding(const SymplecticEmbeddingData& s);

// Q as an R-module along phi, suspended by -r.
ModulePtr shriek_source(const EmbeddingModel& e);

// Shriek map found by exact linear solving: an R-linear chain map
// s^{-r}Q -> R with H^n sending the suspended orientation to u_W. The pivot
// order varies the representative within its homotopy class.
ModuleMorphism shriek_solve(const EmbeddingModel& e, PivotOrder order = PivotOrder::MinBits);

// The omega-complement I with Q = I (+) Lambda(omega)/(omega^{m+1}),
// computed by the descending recursion through the even degrees.
struct OmegaComplement {
    std::vector<std::vector<Vec>> piece;  // basis of I^d for d = 0..Q->N

    const std::vector<Vec>& at(int d) const { return piece.at(d); }
};

OmegaComplement omega_complement(const SymplecticEmbeddingData& s,
                                 bool reverse_complement_choice = false);

// Closed-form shriek map for symplectic embeddings into CP(n):
// omega^j -> l_M a^{j+k}, I -> 0.
ModuleMorphism shriek_cpn(const SymplecticEmbeddingData& s, const EmbeddingModel& e);

// c(nu) = pulled_c_W / total_c_V by truncated power-series inversion in
// H(Q). Entries are cocycles in Q^{2i}; entry 0 must represent 1.
ChernData chern_normal(AlgebraPtr Q, const std::vector<Vec>& total_c_V,
                       const std::vector<Vec>& pulled_c_W, int k, int top);

}  // namespace blowup

#endif
