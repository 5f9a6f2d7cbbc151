#include "blowup/dgmodule.hpp"

#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

static const SVec kEmptySVec;

namespace {
int parity_sign(long long k) {
    return (k % 2 == 0) ? 1 : -1;
}
}  // namespace

const SVec& DgModule::act(int b, int d, int i, int j) const {
    if (b < 0 || b > base->N || d < lo || d > hi || b + d > hi) return kEmptySVec;
    return action[b][d - lo][std::size_t(i) * dim(d) + j];
}

Vec DgModule::act_elem(int b, const Vec& r, int d, const Vec& m) const {
    Vec out = zero_vec(dim(b + d));
    if (out.empty()) return out;
    for (int i = 0; i < int(r.size()); ++i) {
        if (r[i] == 0) continue;
        for (int j = 0; j < int(m.size()); ++j) {
            if (m[j] == 0) continue;
            Scalar c = r[i] * m[j];
            for (const auto& [t, s] : act(b, d, i, j)) out[t] += c * s;
        }
    }
    return out;
}

Vec DgModule::d_of(int d, const Vec& x) const {
    if (d < lo || d >= hi) return zero_vec(dim(d + 1));
    return diff[d - lo].apply(x);
}

std::string DgModule::element_str(int d, const Vec& x) const {
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
        if (c == 1)
            os << names[d - lo][i];
        else
            os << scalar_to_string(c) << "*" << names[d - lo][i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::optional<int> DgModule::basis_index(int d, const std::string& name) const {
    if (d < lo || d > hi) return std::nullopt;
    for (int i = 0; i < dim(d); ++i)
        if (names[d - lo][i] == name) return i;
    return std::nullopt;
}

ValidationReport validate(const DgModule& m) {
    ValidationReport rep;
    auto issue = [&](const std::string& rule, const std::string& detail) {
        if (rep.issues.size() < 500) rep.issues.push_back({rule, detail});
    };
    if (m.hi < m.lo) return rep;  // empty module

    for (int d = m.lo; d <= m.hi; ++d) {
        const Matrix& dm = m.diff[d - m.lo];
        if (dm.cols() != m.dim(d) || dm.rows() != m.dim(d + 1)) {
            issue("differential", "diff at degree " + std::to_string(d) + " has wrong shape");
            return rep;
        }
    }
    for (int d = m.lo; d < m.hi; ++d)
        if (!(m.diff[d + 1 - m.lo] * m.diff[d - m.lo]).is_zero())
            issue("d_squared", "d(d(x)) != 0 in degree " + std::to_string(d));

    // unit acts as identity
    const int ui = m.base->unit_index;
    for (int d = m.lo; d <= m.hi; ++d)
        for (int j = 0; j < m.dim(d); ++j) {
            const SVec& u = m.act(0, d, ui, j);
            if (u.size() != 1 || u[0].first != j || u[0].second != 1)
                issue("unit_action", "1*m != m at degree " + std::to_string(d));
        }

    // action associativity: r.(r'.m) = (r r').m
    for (int b = 0; b <= m.base->N; ++b)
        for (int b2 = 0; b + b2 <= m.base->N; ++b2)
            for (int d = m.lo; d <= m.hi && b + b2 + d <= m.hi; ++d)
                for (int i = 0; i < m.base->dim(b); ++i)
                    for (int i2 = 0; i2 < m.base->dim(b2); ++i2) {
                        const SVec& rr = m.base->basis_product(b, b2, i, i2);
                        for (int j = 0; j < m.dim(d); ++j) {
                            const SVec& inner = m.act(b2, d, i2, j);
                            if (rr.empty() && inner.empty()) continue;
                            Vec lhs = zero_vec(m.dim(b + b2 + d));
                            for (const auto& [t, c] : inner)
                                for (const auto& [t2, s] : m.act(b, b2 + d, i, t)) lhs[t2] += c * s;
                            Vec rhs = zero_vec(m.dim(b + b2 + d));
                            for (const auto& [t, c] : rr)
                                for (const auto& [t2, s] : m.act(b + b2, d, t, j)) rhs[t2] += c * s;
                            if (lhs != rhs)
                                issue("action_associativity",
                                      "(r r').m != r.(r'.m) at degrees (" + std::to_string(b) + "," +
                                          std::to_string(b2) + "," + std::to_string(d) + ")");
                        }
                    }

    // module Leibniz: d(r.m) = (dr).m + (-1)^{|r|} r.(dm)
    for (int b = 0; b <= m.base->N; ++b)
        for (int d = m.lo; d <= m.hi && b + d <= m.hi; ++d) {
            for (int i = 0; i < m.base->dim(b); ++i) {
                Vec r = zero_vec(m.base->dim(b));
                r[i] = 1;
                Vec dr = m.base->d_of(b, r);
                for (int j = 0; j < m.dim(d); ++j) {
                    Vec x = zero_vec(m.dim(d));
                    x[j] = 1;
                    Vec lhs = m.d_of(b + d, m.act_elem(b, r, d, x));
                    Vec rhs = m.act_elem(b + 1, dr, d, x);
                    add_scaled(rhs, m.act_elem(b, r, d + 1, m.d_of(d, x)),
                               Scalar(parity_sign(b)));
                    if (lhs != rhs)
                        issue("module_leibniz", "d(r.m) fails at degrees (" + std::to_string(b) +
                                                    "," + std::to_string(d) + ")");
                }
            }
        }

    return rep;
}

bool structurally_equal(const DgModule& a, const DgModule& b) {
    if (a.base != b.base || a.lo != b.lo || a.hi != b.hi) return false;
    for (int d = a.lo; d <= a.hi; ++d)
        if (a.dim(d) != b.dim(d)) return false;
    if (a.diff != b.diff) return false;
    return a.action == b.action;
}

ModulePtr module_over_self(AlgebraPtr a) {
    if (!a) throw InputError("module_over_self: null algebra");
    auto m = std::make_shared<DgModule>();
    m->label = a->label;
    m->base = a;
    m->lo = 0;
    m->hi = a->N;
    m->names = a->names;
    m->diff = a->diff;
    m->action.assign(a->N + 1, {});
    for (int b = 0; b <= a->N; ++b) {
        m->action[b].assign(a->N + 1, {});
        for (int d = 0; b + d <= a->N; ++d) m->action[b][d] = a->mult[b][d];
    }
    return m;
}

ModulePtr suspension(ModulePtr m, int k) {
    if (!m) throw InputError("suspension: null module");
    if (k == 0) return m;
    auto s = std::make_shared<DgModule>();
    s->base = m->base;
    s->lo = m->lo - k;
    s->hi = m->hi - k;
    std::string prefix = (k == 1) ? "s" : "s^" + std::to_string(k);
    s->label = prefix + "(" + m->label + ")";
    s->names.assign(s->hi - s->lo + 1, {});
    for (int j = s->lo; j <= s->hi; ++j)
        for (const auto& nm : m->names[j + k - m->lo])
            s->names[j - s->lo].push_back(prefix + "(" + nm + ")");
    s->diff.assign(s->hi - s->lo + 1, Matrix());
    for (int j = s->lo; j <= s->hi; ++j)
        s->diff[j - s->lo] = m->diff[j + k - m->lo].scaled_by(Scalar(parity_sign(k)));
    const int bn = m->base->N;
    s->action.assign(bn + 1, {});
    for (int b = 0; b <= bn; ++b) {
        s->action[b].assign(s->hi - s->lo + 1, {});
        for (int j = s->lo; j <= s->hi && b + j <= s->hi; ++j) {
            auto table = m->action[b][j + k - m->lo];
            if (parity_sign(1LL * b * k) < 0)
                for (auto& sv : table)
                    for (auto& [t, c] : sv) c = -c;
            s->action[b][j - s->lo] = std::move(table);
        }
    }
    return s;
}

}  // namespace blowup
