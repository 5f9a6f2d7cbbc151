#include "blowup/expr.hpp"

#include <cctype>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    std::vector<std::string> names;
    std::vector<bool> odd;
    const std::map<std::string, Scalar>& symbols;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("expression error at position " + std::to_string(pos) + ": " + what +
                         " in '" + s + "'");
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Poly parse_expr() {
        Poly acc = parse_term();
        while (true) {
            if (eat('+')) {
                Poly t = parse_term();
                acc.terms.insert(acc.terms.end(), t.terms.begin(), t.terms.end());
            } else if (eat('-')) {
                Poly t = parse_term();
                for (auto& [c, e] : t.terms) acc.terms.emplace_back(-c, e);
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (peek() == '*') {
            eat('*');
            acc = poly_mul(acc, parse_factor());
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        if (peek() == '^') {
            eat('^');
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("expected an integer exponent");
            long e = std::stol(s.substr(start, pos - start));
            Poly acc;
            acc.terms.emplace_back(Scalar(1), std::vector<int>(names.size(), 0));
            for (long i = 0; i < e; ++i) acc = poly_mul(acc, base);
            return acc;
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly e = parse_expr();
            if (!eat(')')) fail("missing ')'");
            return e;
        }
        if (c == '-') {
            ++pos;
            Poly e = parse_factor();
            for (auto& [cc, ee] : e.terms) cc = -cc;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string lit = s.substr(start, pos - start);
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                std::size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (dstart == pos) fail("expected a denominator");
                lit += "/" + s.substr(dstart, pos - dstart);
            }
            Poly p;
            p.terms.emplace_back(parse_scalar(lit), std::vector<int>(names.size(), 0));
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '_' || s[pos] == '\''))
                ++pos;
            std::string name = s.substr(start, pos - start);
            for (std::size_t g = 0; g < names.size(); ++g)
                if (names[g] == name) {
                    Poly p;
                    std::vector<int> e(names.size(), 0);
                    e[g] = 1;
                    p.terms.emplace_back(Scalar(1), std::move(e));
                    return p;
                }
            auto it = symbols.find(name);
            if (it != symbols.end()) {
                Poly p;
                p.terms.emplace_back(it->second, std::vector<int>(names.size(), 0));
                return p;
            }
            fail("unknown symbol '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    // product in normal form; moving odd generators into place applies the
    // Koszul sign, and odd squares vanish
    Poly poly_mul(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ca, ea] : a.terms)
            for (const auto& [cb, eb] : b.terms) {
                long long crossings = 0;
                bool dead = false;
                std::vector<int> e(names.size());
                for (std::size_t j = 0; j < names.size(); ++j) e[j] = ea[j] + eb[j];
                for (std::size_t j = 0; j < names.size() && !dead; ++j) {
                    if (!eb[j] || !odd[j]) continue;
                    if (ea[j]) {
                        dead = true;
                        break;
                    }
                    for (std::size_t i = j + 1; i < names.size(); ++i)
                        if (odd[i]) crossings += 1LL * ea[i] * eb[j];
                }
                if (dead) continue;
                Scalar c = ca * cb;
                if (crossings % 2 != 0) c = -c;
                out.terms.emplace_back(std::move(c), std::move(e));
            }
        return out;
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<GeneratorInfo>& gens,
                const std::map<std::string, Scalar>& symbols) {
    Parser p{text, 0, {}, {}, symbols};
    for (const auto& g : gens) {
        p.names.push_back(g.name);
        p.odd.push_back(g.degree % 2 != 0);
    }
    Poly e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

HomogeneousElement evaluate_homogeneous(const DegreewiseAlgebra& a, const Poly& p) {
    if (a.basis_exponents.empty() && !a.generators.empty() && !p.terms.empty())
        throw InputError("expressions need a presentation-backed algebra");
    HomogeneousElement out;
    out.degree = -1;
    for (const auto& [c, e] : p.terms) {
        if (c == 0) continue;
        int deg = 0;
        for (std::size_t g = 0; g < a.generators.size(); ++g) deg += e[g] * a.generators[g].degree;
        if (out.degree < 0) {
            out.degree = deg;
            out.coords = zero_vec(a.dim(deg));
        } else if (deg != out.degree) {
            throw InputError("expression is not homogeneous: degree " + std::to_string(deg) +
                             " vs " + std::to_string(out.degree));
        }
        if (deg > a.N) continue;  // truncated away
        for (int i = 0; i < a.dim(deg); ++i)
            if (a.basis_exponents[deg][i] == e) {
                out.coords[i] += c;
                break;
            }
        // monomials killed by a relation are simply absent from the basis
    }
    if (out.degree < 0) {
        out.degree = 0;
        out.coords = zero_vec(a.dim(0));
    }
    return out;
}

HomogeneousElement evaluate_expression(const DegreewiseAlgebra& a, const std::string& text,
                                       const std::map<std::string, Scalar>& symbols) {
    return evaluate_homogeneous(a, parse_poly(text, a.generators, symbols));
}

HomogeneousElement parse_basis_combination(const DegreewiseAlgebra& a, const std::string& text) {
    HomogeneousElement out;
    out.degree = -1;
    std::size_t pos = 0;
    Scalar sign(1);
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size()) throw InputError("empty class expression");
    while (pos < text.size()) {
        if (text[pos] == '+') {
            ++pos;
            skip_ws();
            continue;
        }
        if (text[pos] == '-') {
            sign = -sign;
            ++pos;
            skip_ws();
            continue;
        }
        Scalar coef = sign;
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                ++pos;
            coef = sign * parse_scalar(text.substr(start, pos - start));
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
        std::string name = text.substr(start, pos - start);
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
            name.pop_back();
        if (name.empty()) throw InputError("empty basis name in '" + text + "'");
        bool found = false;
        for (int d = 0; d <= a.N && !found; ++d) {
            auto ix = a.basis_index(d, name);
            if (!ix) continue;
            found = true;
            if (out.degree < 0) {
                out.degree = d;
                out.coords = zero_vec(a.dim(d));
            } else if (out.degree != d) {
                throw InputError("mixed degrees in class expression '" + text + "'");
            }
            out.coords[*ix] += coef;
        }
        if (!found) throw InputError("unknown basis element '" + name + "'");
        sign = 1;
        skip_ws();
    }
    if (out.degree < 0) throw InputError("empty class expression");
    return out;
}

}  // namespace blowup
