#ifndef BLOWUP_DGMODULE_HPP
#define BLOWUP_DGMODULE_HPP

#include "blowup/algebra.hpp"

namespace blowup {

// Differential graded module over a DegreewiseAlgebra. Negative degrees are
// allowed (suspensions); the base algebra never has them.
struct DgModule {
    std::string label;
    AlgebraPtr base;
    int lo = 0, hi = -1;  // supported degree range, empty when hi < lo
    std::vector<std::vector<std::string>> names;  // index d - lo
    std::vector<Matrix> diff;                     // diff[d-lo]: dim(d+1) x dim(d)
    // action[b][d-lo]: base basis of degree b acting on module degree d,
    // stored for 0 <= b <= base->N and lo <= d <= hi with b + d <= hi
    std::vector<std::vector<std::vector<SVec>>> action;

    int dim(int d) const { return (d < lo || d > hi) ? 0 : int(names[d - lo].size()); }
    const SVec& act(int b, int d, int i, int j) const;
    Vec act_elem(int b, const Vec& r, int d, const Vec& m) const;
    Vec d_of(int d, const Vec& x) const;
    std::string element_str(int d, const Vec& x) const;
    std::optional<int> basis_index(int d, const std::string& name) const;
};

using ModulePtr = std::shared_ptr<const DgModule>;

// d^2 = 0, module Leibniz, unit identity, action associativity.
ValidationReport validate(const DgModule& m);

// Same base algebra, degree range, differentials and action tables.
bool structurally_equal(const DgModule& a, const DgModule& b);

// The algebra as a rank-one free module over itself.
ModulePtr module_over_self(AlgebraPtr a);

// k-th suspension: (s^k M)^j = M^{k+j}, r.(s^k x) = (-1)^{|r|k} s^k(r.x),
// d(s^k x) = (-1)^k s^k(dx).
ModulePtr suspension(ModulePtr m, int k);

}  // namespace blowup

#endif
