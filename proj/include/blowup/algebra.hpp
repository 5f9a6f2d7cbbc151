#ifndef BLOWUP_ALGEBRA_HPP
#define BLOWUP_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blowup/linalg.hpp"

namespace blowup {

// Sparse element in a degree's basis: sorted (index, coefficient) pairs.
using SVec = std::vector<std::pair<int, Scalar>>;

SVec to_sparse(const Vec& v);
Vec to_dense(const SVec& s, int dim);

struct GeneratorInfo {
    std::string name;
    int degree = 0;
    // p > 0 imposes g^p = 0. Odd generators square to zero regardless.
    int power = 0;
};

// A CDGA presented degreewise: named basis in each degree 0..N, sparse
// multiplication structure constants, differential matrices. Products
// landing above N are silently zero; cohomology queries are valid up to N-1.
struct DegreewiseAlgebra {
    std::string label;
    int N = 0;
    std::vector<std::vector<std::string>> names;  // size N+1
    std::vector<Matrix> diff;                     // diff[d]: dim(d+1) x dim(d)
    // mult[d][e][i*dim(e)+j] over basis of degree d+e, stored for d+e <= N
    std::vector<std::vector<std::vector<SVec>>> mult;
    int unit_index = 0;
    bool declared_connected = true;
    std::vector<GeneratorInfo> generators;  // presentation metadata, may be empty
    // exponent vector of each basis monomial over `generators`; filled only
    // for algebras built from a presentation over the trivial base
    std::vector<std::vector<std::vector<int>>> basis_exponents;

    int top_degree() const { return N; }
    int dim(int d) const { return (d < 0 || d > N) ? 0 : int(names[d].size()); }
    const SVec& basis_product(int d, int e, int i, int j) const;
    Vec mul(int d, const Vec& x, int e, const Vec& y) const;
    Vec d_of(int d, const Vec& x) const;
    Vec unit() const;

    std::optional<int> basis_index(int d, const std::string& name) const;
    std::string element_str(int d, const Vec& x) const;
};

using AlgebraPtr = std::shared_ptr<const DegreewiseAlgebra>;

struct ValidationIssue {
    std::string rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string summary(std::size_t max_items = 8) const;
};

// Checks every CDGA axiom instance within the degree bound: unit,
// graded commutativity, associativity, d^2 = 0, Leibniz, connectedness.
ValidationReport validate(const DegreewiseAlgebra& a);

// ---- constructors ----------------------------------------------------

// (Lambda(g)/(g^p), 0) with |g| even, truncated above N.
AlgebraPtr truncated_polynomial(const std::string& name, int gen_degree, int power, int N);

namespace detail {
struct ExtensionCore;
}

// Free graded-commutative presentation. Relations are single-generator
// power truncations (GeneratorInfo::power); differentials of generators are
// polynomial elements, extended by Leibniz. Throws PresentationError when
// the result fails validation (d^2 or Leibniz).
class PresentationBuilder {
public:
    PresentationBuilder(std::string label, int N);

    int add_generator(const std::string& name, int degree, int power = 0);

    // Element assembly against the monomial basis (usable before build()).
    int monomial_index(int degree, const std::vector<int>& exponents) const;
    int basis_dim(int degree) const;
    Vec element(int degree, const std::vector<std::pair<Scalar, std::vector<int>>>& terms) const;

    // Image of d(generator) as an element of degree |g|+1.
    void set_diff(int gen, const Vec& image);

    AlgebraPtr build() const;

private:
    const detail::ExtensionCore& core() const;

    std::string label_;
    int N_;
    std::vector<GeneratorInfo> gens_;
    std::vector<std::optional<Vec>> diffs_;
    mutable std::shared_ptr<detail::ExtensionCore> core_;
};

AlgebraPtr cdga_from_presentation(const std::string& label,
                                  const std::vector<GeneratorInfo>& gens,
                                  const std::vector<std::pair<int, std::vector<std::pair<Scalar, std::vector<int>>>>>& diffs,
                                  int N);

// Relative Sullivan extension A -> A (x) Lambda(new gens). Generator
// differentials may hit the whole extension (set via set_diff after basis
// inspection); build() extends by Leibniz and validates.
class FreeExtensionBuilder {
public:
    FreeExtensionBuilder(AlgebraPtr base, std::vector<GeneratorInfo> new_gens, int N,
                         std::string label = "");

    int basis_dim(int degree) const;
    // Index of (base element i of degree bd) * (ext monomial with given exponents).
    int pair_index(int degree, int base_degree, int base_ix, const std::vector<int>& exponents) const;
    Vec embed_base(int degree, const Vec& base_elem) const;  // a (x) 1

    void set_diff(int gen, const Vec& image);  // image in extension degree |g|+1

    AlgebraPtr build() const;

private:
    AlgebraPtr base_;
    std::vector<GeneratorInfo> gens_;
    int N_;
    std::string label_;
    std::vector<std::optional<Vec>> diffs_;
    std::shared_ptr<detail::ExtensionCore> core_;
};

}  // namespace blowup

#endif
