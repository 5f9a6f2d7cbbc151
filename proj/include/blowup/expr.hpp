#ifndef BLOWUP_EXPR_HPP
#define BLOWUP_EXPR_HPP

#include <map>
#include <string>

#include "blowup/algebra.hpp"

namespace blowup {

// A polynomial over named generators in normal form: sum of (coefficient,
// exponent vector). Koszul signs are applied while multiplying.
struct Poly {
    std::vector<std::pair<Scalar, std::vector<int>>> terms;
};

// Parses +, -, *, ^ with rational coefficients over the generator list;
// extra scalar symbols (e.g. the family parameter l) may be bound to values.
Poly parse_poly(const std::string& text, const std::vector<GeneratorInfo>& gens,
                const std::map<std::string, Scalar>& symbols = {});

struct HomogeneousElement {
    int degree = 0;
    Vec coords;
};

// Evaluates a polynomial as a homogeneous element of a presentation-backed
// algebra; terms killed by relations or the truncation vanish silently.
HomogeneousElement evaluate_homogeneous(const DegreewiseAlgebra& a, const Poly& p);

HomogeneousElement evaluate_expression(const DegreewiseAlgebra& a, const std::string& text,
                                       const std::map<std::string, Scalar>& symbols = {});

// Linear combination of literal basis names ("2*u*x + y*x"); addresses
// classes in non-presentation algebras such as blow-up models.
HomogeneousElement parse_basis_combination(const DegreewiseAlgebra& a, const std::string& text);

}  // namespace blowup

#endif
