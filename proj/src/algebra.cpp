#include "blowup/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

SVec to_sparse(const Vec& v) {
    SVec s;
    for (int i = 0; i < int(v.size()); ++i)
        if (v[i] != 0) s.emplace_back(i, v[i]);
    return s;
}

Vec to_dense(const SVec& s, int dim) {
    Vec v = zero_vec(dim);
    for (const auto& [i, c] : s) v[i] = c;
    return v;
}

static const SVec kEmptySVec;

const SVec& DegreewiseAlgebra::basis_product(int d, int e, int i, int j) const {
    if (d < 0 || e < 0 || d + e > N) return kEmptySVec;
    return mult[d][e][std::size_t(i) * dim(e) + j];
}

Vec DegreewiseAlgebra::mul(int d, const Vec& x, int e, const Vec& y) const {
    Vec out = zero_vec(dim(d + e));
    if (d + e > N || d < 0 || e < 0) return out;
    for (int i = 0; i < int(x.size()); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < int(y.size()); ++j) {
            if (y[j] == 0) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [t, s] : basis_product(d, e, i, j)) out[t] += c * s;
        }
    }
    return out;
}

Vec DegreewiseAlgebra::d_of(int d, const Vec& x) const {
    if (d < 0 || d >= N) return zero_vec(dim(d + 1));
    return diff[d].apply(x);
}

Vec DegreewiseAlgebra::unit() const {
    Vec u = zero_vec(dim(0));
    u[unit_index] = 1;
    return u;
}

std::optional<int> DegreewiseAlgebra::basis_index(int d, const std::string& name) const {
    if (d < 0 || d > N) return std::nullopt;
    for (int i = 0; i < dim(d); ++i)
        if (names[d][i] == name) return i;
    return std::nullopt;
}

std::string DegreewiseAlgebra::element_str(int d, const Vec& x) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < int(x.size()); ++i) {
        if (x[i] == 0) continue;
        Scalar c = x[i];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        const std::string& nm = names[d][i];
        if (nm == "1")
            os << scalar_to_string(c);
        else if (c == 1)
            os << nm;
        else
            os << scalar_to_string(c) << "*" << nm;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string ValidationReport::summary(std::size_t max_items) const {
    if (ok()) return "valid";
    std::ostringstream os;
    os << issues.size() << " violation(s):";
    for (std::size_t i = 0; i < issues.size() && i < max_items; ++i)
        os << "\n  [" << issues[i].rule << "] " << issues[i].detail;
    if (issues.size() > max_items) os << "\n  ...";
    return os.str();
}

namespace {

int parity_sign(long long k) {
    return (k % 2 == 0) ? 1 : -1;
}

bool svec_equal(const SVec& a, const SVec& b, int sign) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].first != b[i].first) return false;
        if (sign > 0 ? a[i].second != b[i].second : a[i].second != -b[i].second) return false;
    }
    return true;
}

}  // namespace

ValidationReport validate(const DegreewiseAlgebra& a) {
    ValidationReport rep;
    auto issue = [&](const std::string& rule, const std::string& detail) {
        if (rep.issues.size() < 500) rep.issues.push_back({rule, detail});
    };
    const int N = a.N;

    if (a.declared_connected && a.dim(0) != 1)
        issue("connected", "basis[0] has dimension " + std::to_string(a.dim(0)));
    if (a.dim(0) == 0) {
        issue("unit", "degree 0 is empty, no unit");
        return rep;
    }

    // unit acts as two-sided identity
    for (int e = 0; e <= N; ++e)
        for (int j = 0; j < a.dim(e); ++j) {
            SVec want{{j, Scalar(1)}};
            if (!svec_equal(a.basis_product(0, e, a.unit_index, j), want, 1))
                issue("unit", "1*" + a.names[e][j] + " != " + a.names[e][j]);
            if (!svec_equal(a.basis_product(e, 0, j, a.unit_index), want, 1))
                issue("unit", a.names[e][j] + "*1 != " + a.names[e][j]);
        }

    // graded commutativity
    for (int d = 0; d <= N; ++d)
        for (int e = d; d + e <= N; ++e)
            for (int i = 0; i < a.dim(d); ++i)
                for (int j = 0; j < a.dim(e); ++j)
                    if (!svec_equal(a.basis_product(d, e, i, j), a.basis_product(e, d, j, i),
                                    parity_sign(1LL * d * e)))
                        issue("commutativity",
                              a.names[d][i] + "*" + a.names[e][j] + " differs from +/- reverse");

    // associativity on all triples within bound
    for (int d = 0; d <= N; ++d)
        for (int e = 0; d + e <= N; ++e)
            for (int f = 0; d + e + f <= N; ++f) {
                if (a.dim(d) == 0 || a.dim(e) == 0 || a.dim(f) == 0) continue;
                const int tdim = a.dim(d + e + f);
                for (int i = 0; i < a.dim(d); ++i)
                    for (int j = 0; j < a.dim(e); ++j) {
                        const SVec& ij = a.basis_product(d, e, i, j);
                        for (int k = 0; k < a.dim(f); ++k) {
                            const SVec& jk = a.basis_product(e, f, j, k);
                            if (ij.empty() && jk.empty()) continue;
                            Vec lhs = zero_vec(tdim), rhs = zero_vec(tdim);
                            for (const auto& [m, c] : ij)
                                for (const auto& [t, s] : a.basis_product(d + e, f, m, k))
                                    lhs[t] += c * s;
                            for (const auto& [m, c] : jk)
                                for (const auto& [t, s] : a.basis_product(d, e + f, i, m))
                                    rhs[t] += c * s;
                            if (lhs != rhs)
                                issue("associativity", "(" + a.names[d][i] + "*" + a.names[e][j] +
                                                           ")*" + a.names[f][k]);
                        }
                    }
            }

    // differential shape and d^2 = 0
    for (int d = 0; d < N; ++d)
        if (a.diff[d].cols() != a.dim(d) || a.diff[d].rows() != a.dim(d + 1)) {
            issue("differential", "diff[" + std::to_string(d) + "] has wrong shape");
            return rep;
        }
    for (int d = 0; d + 2 <= N; ++d)
        if (!(a.diff[d + 1] * a.diff[d]).is_zero())
            issue("d_squared", "d(d(x)) != 0 in degree " + std::to_string(d));

    // Leibniz on all pairs within bound
    for (int d = 0; d <= N; ++d)
        for (int e = 0; d + e <= N - 1; ++e)
            for (int i = 0; i < a.dim(d); ++i) {
                Vec ei = zero_vec(a.dim(d));
                ei[i] = 1;
                Vec di = a.d_of(d, ei);
                for (int j = 0; j < a.dim(e); ++j) {
                    Vec ej = zero_vec(a.dim(e));
                    ej[j] = 1;
                    Vec lhs = a.d_of(d + e, to_dense(a.basis_product(d, e, i, j), a.dim(d + e)));
                    Vec rhs = a.mul(d + 1, di, e, ej);
                    add_scaled(rhs, a.mul(d, ei, e + 1, a.d_of(e, ej)), Scalar(parity_sign(d)));
                    if (lhs != rhs)
                        issue("leibniz", "d(" + a.names[d][i] + "*" + a.names[e][j] + ")");
                }
            }

    return rep;
}

// ---- extension engine -------------------------------------------------

namespace detail {

namespace {

std::string mono_name(const std::vector<GeneratorInfo>& gens, const std::vector<int>& exp) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (exp[i] == 0) continue;
        if (!first) os << "*";
        os << gens[i].name;
        if (exp[i] > 1) os << "^" << exp[i];
        first = false;
    }
    if (first) return "1";
    return os.str();
}

std::string combine_names(const std::string& a, const std::string& b) {
    if (a == "1") return b;
    if (b == "1") return a;
    return a + "*" + b;
}

int max_exponent(const GeneratorInfo& g, int N) {
    int cap = (g.degree % 2 != 0) ? 1 : N / g.degree;
    if (g.power > 0) cap = std::min(cap, g.power - 1);
    return cap;
}

}  // namespace

struct ExtensionCore {
    AlgebraPtr base;
    std::vector<GeneratorInfo> gens;
    int N;

    std::vector<std::vector<int>> mono_exp;  // id -> exponents
    std::vector<int> mono_deg;
    std::map<std::vector<int>, int> mono_ids;
    std::vector<std::vector<int>> monos_by_degree;

    struct Entry {
        int mono;
        int b_deg;
        int b_ix;
    };
    std::vector<std::vector<Entry>> basis;                 // per degree
    std::vector<std::map<std::pair<int, int>, int>> find;  // (mono, b_ix) -> index

    ExtensionCore(AlgebraPtr base_in, std::vector<GeneratorInfo> gens_in, int n)
        : base(std::move(base_in)), gens(std::move(gens_in)), N(n) {
        for (const auto& g : gens) {
            if (g.degree < 1) throw InputError("generator '" + g.name + "' must have degree >= 1");
            if (g.power < 0) throw InputError("negative relation power on '" + g.name + "'");
        }
        monos_by_degree.assign(N + 1, {});
        std::vector<int> exp(gens.size(), 0);
        dfs(0, 0, exp);
        enumerate_basis();
    }

    void dfs(std::size_t gi, int deg, std::vector<int>& exp) {
        if (gi == gens.size()) {
            int id = int(mono_exp.size());
            mono_exp.push_back(exp);
            mono_deg.push_back(deg);
            mono_ids[exp] = id;
            monos_by_degree[deg].push_back(id);
            return;
        }
        int cap = max_exponent(gens[gi], N);
        for (int e = 0; e <= cap && deg + e * gens[gi].degree <= N; ++e) {
            exp[gi] = e;
            dfs(gi + 1, deg + e * gens[gi].degree, exp);
        }
        exp[gi] = 0;
    }

    void enumerate_basis() {
        basis.assign(N + 1, {});
        find.assign(N + 1, {});
        for (int t = 0; t <= N; ++t)
            for (int u = 0; u <= t; ++u)
                for (int m : monos_by_degree[u])
                    for (int b = 0; b < base->dim(t - u); ++b) {
                        find[t][{m, b}] = int(basis[t].size());
                        basis[t].push_back({m, t - u, b});
                    }
    }

    int dim(int t) const { return (t < 0 || t > N) ? 0 : int(basis[t].size()); }

    int unit_mono() const { return mono_ids.at(std::vector<int>(gens.size(), 0)); }

    // product of normal-form monomials: nullopt when killed, else (sign, id)
    std::optional<std::pair<int, int>> mono_mul(int m1, int m2) const {
        const auto& e1 = mono_exp[m1];
        const auto& e2 = mono_exp[m2];
        if (mono_deg[m1] + mono_deg[m2] > N) return std::nullopt;
        std::vector<int> e(gens.size());
        long long crossings = 0;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            e[j] = e1[j] + e2[j];
            bool odd_j = gens[j].degree % 2 != 0;
            if (odd_j && e[j] >= 2) return std::nullopt;
            if (gens[j].power > 0 && e[j] >= gens[j].power) return std::nullopt;
            if (odd_j && e2[j] == 1)
                for (std::size_t i = j + 1; i < gens.size(); ++i)
                    if (gens[i].degree % 2 != 0) crossings += e1[i];
        }
        auto it = mono_ids.find(e);
        if (it == mono_ids.end()) return std::nullopt;
        return std::make_pair(parity_sign(crossings), it->second);
    }

    DegreewiseAlgebra assemble(const std::vector<std::optional<Vec>>& gen_diffs,
                               const std::string& label) const {
        DegreewiseAlgebra A;
        A.label = label;
        A.N = N;
        A.unit_index = find[0].at({unit_mono(), base->unit_index});
        A.generators = base->generators;
        A.generators.insert(A.generators.end(), gens.begin(), gens.end());
        A.declared_connected = base->declared_connected;

        A.names.assign(N + 1, {});
        for (int t = 0; t <= N; ++t)
            for (const auto& en : basis[t])
                A.names[t].push_back(combine_names(base->names[en.b_deg][en.b_ix],
                                                   mono_name(gens, mono_exp[en.mono])));

        // over the trivial base the basis is exactly the monomials
        bool base_trivial = base->generators.empty();
        for (int d = 0; d <= base->N && base_trivial; ++d)
            if (base->dim(d) != (d == 0 ? 1 : 0)) base_trivial = false;
        if (base_trivial) {
            A.basis_exponents.assign(N + 1, {});
            for (int t = 0; t <= N; ++t)
                for (const auto& en : basis[t]) A.basis_exponents[t].push_back(mono_exp[en.mono]);
        }

        // (a (x) w)(a' (x) w') = (-1)^{|w||a'|} (a a') (x) (w w')
        A.mult.assign(N + 1, {});
        for (int d = 0; d <= N; ++d) {
            A.mult[d].assign(N - d + 1, {});
            for (int e = 0; d + e <= N; ++e) {
                auto& table = A.mult[d][e];
                table.assign(std::size_t(dim(d)) * dim(e), {});
                for (int i = 0; i < dim(d); ++i) {
                    const Entry& x = basis[d][i];
                    int wdeg = mono_deg[x.mono];
                    for (int j = 0; j < dim(e); ++j) {
                        const Entry& y = basis[e][j];
                        auto wm = mono_mul(x.mono, y.mono);
                        if (!wm) continue;
                        const SVec& bp = base->basis_product(x.b_deg, y.b_deg, x.b_ix, y.b_ix);
                        if (bp.empty()) continue;
                        int sign = wm->first * parity_sign(1LL * wdeg * y.b_deg);
                        SVec out;
                        for (const auto& [b2, c] : bp)
                            out.emplace_back(find[d + e].at({wm->second, b2}), Scalar(sign) * c);
                        std::sort(out.begin(), out.end(),
                                  [](const auto& p, const auto& q) { return p.first < q.first; });
                        table[std::size_t(i) * dim(e) + j] = std::move(out);
                    }
                }
            }
        }

        // differential, extended from the generators by the Leibniz rule
        auto elem_of_mono = [&](int m) {
            Vec v = zero_vec(dim(mono_deg[m]));
            v[find[mono_deg[m]].at({m, base->unit_index})] = 1;
            return v;
        };
        auto gen_diff = [&](std::size_t g) -> Vec {
            int target = gens[g].degree + 1;
            if (g < gen_diffs.size() && gen_diffs[g]) {
                if (int(gen_diffs[g]->size()) != dim(target))
                    throw InputError("differential image of '" + gens[g].name +
                                     "' has wrong dimension");
                return *gen_diffs[g];
            }
            return zero_vec(dim(target));
        };
        std::vector<std::optional<Vec>> dmono(mono_exp.size());
        std::function<const Vec&(int)> dw = [&](int m) -> const Vec& {
            if (dmono[m]) return *dmono[m];
            const auto& e = mono_exp[m];
            int deg = mono_deg[m];
            std::size_t g = 0;
            while (g < gens.size() && e[g] == 0) ++g;
            if (g == gens.size()) {
                dmono[m] = zero_vec(dim(deg + 1));
                return *dmono[m];
            }
            const int eg = e[g];
            const int gdeg = gens[g].degree;
            std::vector<int> rest = e;
            rest[g] = 0;
            const int m_rest = mono_ids.at(rest);
            const int rest_deg = deg - eg * gdeg;

            // D(g^eg): for odd g this is just Dg; for even g it is eg*g^(eg-1)*Dg
            Vec dge;
            if (eg == 1) {
                dge = gen_diff(g);
            } else {
                std::vector<int> pw(gens.size(), 0);
                pw[g] = eg - 1;
                dge = A.mul((eg - 1) * gdeg, elem_of_mono(mono_ids.at(pw)), gdeg + 1, gen_diff(g));
                for (auto& c : dge) c *= eg;
            }
            // D(g^eg w') = D(g^eg) w' + (-1)^{eg|g|} g^eg D(w')
            Vec out = A.mul(eg * gdeg + 1, dge, rest_deg, elem_of_mono(m_rest));
            std::vector<int> only_g(gens.size(), 0);
            only_g[g] = eg;
            Vec tail = A.mul(eg * gdeg, elem_of_mono(mono_ids.at(only_g)), rest_deg + 1, dw(m_rest));
            add_scaled(out, tail, Scalar(parity_sign(1LL * eg * gdeg)));
            dmono[m] = std::move(out);
            return *dmono[m];
        };

        A.diff.assign(N + 1, Matrix());
        for (int t = 0; t <= N; ++t) {
            Matrix m(dim(t + 1), dim(t));
            // images above the bound are truncated away
            if (t < N) {
                for (int i = 0; i < dim(t); ++i) {
                    const Entry& x = basis[t][i];
                    // d(a (x) w) = (d a) (x) w + (-1)^{|a|} (a (x) 1) D(w)
                    Vec col = zero_vec(dim(t + 1));
                    if (x.b_deg < base->N) {
                        Vec da = base->diff[x.b_deg].col(x.b_ix);
                        for (int b2 = 0; b2 < int(da.size()); ++b2) {
                            if (da[b2] == 0) continue;
                            auto it = find[t + 1].find({x.mono, b2});
                            if (it != find[t + 1].end()) col[it->second] += da[b2];
                        }
                    }
                    Vec a_elem = zero_vec(dim(x.b_deg));
                    a_elem[find[x.b_deg].at({unit_mono(), x.b_ix})] = 1;
                    Vec tail = A.mul(x.b_deg, a_elem, mono_deg[x.mono] + 1, dw(x.mono));
                    add_scaled(col, tail, Scalar(parity_sign(x.b_deg)));
                    m.set_col(i, col);
                }
            }
            A.diff[t] = std::move(m);
        }
        return A;
    }
};

}  // namespace detail

namespace {

AlgebraPtr trivial_base(int N) {
    auto A = std::make_shared<DegreewiseAlgebra>();
    A->label = "Q";
    A->N = N;
    A->names.assign(N + 1, {});
    A->names[0] = {"1"};
    A->diff.assign(N + 1, Matrix());
    for (int d = 0; d < N; ++d) A->diff[d] = Matrix(A->dim(d + 1), A->dim(d));
    A->mult.assign(N + 1, {});
    for (int d = 0; d <= N; ++d) A->mult[d].assign(N - d + 1, {});
    A->mult[0][0] = {SVec{{0, Scalar(1)}}};
    A->unit_index = 0;
    return A;
}

AlgebraPtr finish_build(DegreewiseAlgebra A) {
    ValidationReport rep = validate(A);
    if (!rep.ok()) throw PresentationError("presentation yields an invalid CDGA: " + rep.summary());
    return std::make_shared<DegreewiseAlgebra>(std::move(A));
}

}  // namespace

AlgebraPtr truncated_polynomial(const std::string& name, int gen_degree, int power, int N) {
    if (gen_degree % 2 != 0 || gen_degree <= 0)
        throw InputError("truncated_polynomial: generator degree must be even and positive");
    if (power < 1) throw InputError("truncated_polynomial: power must be >= 1");
    PresentationBuilder b("Lambda(" + name + ")/(" + name + "^" + std::to_string(power) + ")", N);
    b.add_generator(name, gen_degree, power);
    return b.build();
}

PresentationBuilder::PresentationBuilder(std::string label, int N)
    : label_(std::move(label)), N_(N) {
    if (N < 0) throw InputError("top degree must be >= 0");
}

int PresentationBuilder::add_generator(const std::string& name, int degree, int power) {
    if (degree < 1) throw InputError("generator '" + name + "' must have degree >= 1");
    for (const auto& g : gens_)
        if (g.name == name) throw InputError("duplicate generator '" + name + "'");
    gens_.push_back({name, degree, power});
    diffs_.push_back(std::nullopt);
    core_.reset();
    return int(gens_.size()) - 1;
}

const detail::ExtensionCore& PresentationBuilder::core() const {
    if (!core_) core_ = std::make_shared<detail::ExtensionCore>(trivial_base(N_), gens_, N_);
    return *core_;
}

int PresentationBuilder::monomial_index(int degree, const std::vector<int>& exponents) const {
    const auto& c = core();
    auto it = c.mono_ids.find(exponents);
    if (it == c.mono_ids.end()) throw InputError("monomial not in basis (relation or bound)");
    if (c.mono_deg[it->second] != degree) throw InputError("monomial has wrong degree");
    return c.find[degree].at({it->second, 0});
}

int PresentationBuilder::basis_dim(int degree) const {
    return core().dim(degree);
}

Vec PresentationBuilder::element(
    int degree, const std::vector<std::pair<Scalar, std::vector<int>>>& terms) const {
    const auto& c = core();
    Vec v = zero_vec(c.dim(degree));
    for (const auto& [coef, exp] : terms) {
        auto it = c.mono_ids.find(exp);
        if (it == c.mono_ids.end()) continue;  // killed by a relation or the bound
        if (c.mono_deg[it->second] != degree)
            throw InputError("presentation element is not homogeneous of degree " +
                             std::to_string(degree));
        v[c.find[degree].at({it->second, 0})] += coef;
    }
    return v;
}

void PresentationBuilder::set_diff(int gen, const Vec& image) {
    diffs_.at(gen) = image;
}

AlgebraPtr PresentationBuilder::build() const {
    return finish_build(core().assemble(diffs_, label_));
}

AlgebraPtr cdga_from_presentation(
    const std::string& label, const std::vector<GeneratorInfo>& gens,
    const std::vector<std::pair<int, std::vector<std::pair<Scalar, std::vector<int>>>>>& diffs,
    int N) {
    PresentationBuilder b(label, N);
    for (const auto& g : gens) b.add_generator(g.name, g.degree, g.power);
    for (const auto& [gi, poly] : diffs) {
        int target = gens.at(gi).degree + 1;
        b.set_diff(gi, b.element(target, poly));
    }
    return b.build();
}

FreeExtensionBuilder::FreeExtensionBuilder(AlgebraPtr base, std::vector<GeneratorInfo> new_gens,
                                           int N, std::string label)
    : base_(std::move(base)), gens_(std::move(new_gens)), N_(N), label_(std::move(label)) {
    if (!base_) throw InputError("free extension needs a base algebra");
    diffs_.assign(gens_.size(), std::nullopt);
    if (label_.empty()) label_ = base_->label + "(x)Lambda";
    core_ = std::make_shared<detail::ExtensionCore>(base_, gens_, N_);
}

int FreeExtensionBuilder::basis_dim(int degree) const {
    return core_->dim(degree);
}

int FreeExtensionBuilder::pair_index(int degree, int base_degree, int base_ix,
                                     const std::vector<int>& exponents) const {
    auto it = core_->mono_ids.find(exponents);
    if (it == core_->mono_ids.end()) throw InputError("extension monomial not in basis");
    if (core_->mono_deg[it->second] + base_degree != degree)
        throw InputError("pair_index: degree mismatch");
    return core_->find[degree].at({it->second, base_ix});
}

Vec FreeExtensionBuilder::embed_base(int degree, const Vec& base_elem) const {
    Vec out = zero_vec(core_->dim(degree));
    int m1 = core_->unit_mono();
    for (int b = 0; b < int(base_elem.size()); ++b)
        if (base_elem[b] != 0) out[core_->find[degree].at({m1, b})] = base_elem[b];
    return out;
}

void FreeExtensionBuilder::set_diff(int gen, const Vec& image) {
    diffs_.at(gen) = image;
}

AlgebraPtr FreeExtensionBuilder::build() const {
    return finish_build(core_->assemble(diffs_, label_));
}

}  // namespace blowup
