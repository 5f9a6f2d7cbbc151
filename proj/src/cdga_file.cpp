#include "blowup/cdga_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

[[noreturn]] void fail_line(int line, const std::string& what) {
    throw InputError("presentation file, line " + std::to_string(line) + ": " + what);
}

}  // namespace

PresentationFile parse_presentation_file(const std::string& text) {
    PresentationFile f;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest = trim(line.substr(key.size()));
        if (key == "name") {
            if (rest.empty()) fail_line(lineno, "name needs a value");
            f.name = rest;
        } else if (key == "truncate_above") {
            try {
                f.truncate_above = std::stoi(rest);
            } catch (...) {
                fail_line(lineno, "truncate_above needs an integer");
            }
            if (f.truncate_above < 0) fail_line(lineno, "truncate_above must be >= 0");
        } else if (key == "gen") {
            std::istringstream gs(rest);
            std::string gname;
            int degree = 0;
            if (!(gs >> gname >> degree)) fail_line(lineno, "gen needs a name and a degree");
            if (degree < 1) fail_line(lineno, "generator degree must be >= 1");
            f.generators.emplace_back(gname, degree);
        } else if (key == "rel") {
            auto caret = rest.find('^');
            if (caret == std::string::npos)
                fail_line(lineno, "unsupported relation shape; only <gen>^<power> is supported");
            std::string gname = trim(rest.substr(0, caret));
            std::string pw = trim(rest.substr(caret + 1));
            int power = 0;
            try {
                power = std::stoi(pw);
            } catch (...) {
                fail_line(lineno, "relation power must be an integer");
            }
            if (power < 1) fail_line(lineno, "relation power must be >= 1");
            if (gname.empty() || gname.find_first_of("*+-() ") != std::string::npos)
                fail_line(lineno, "unsupported relation shape; only <gen>^<power> is supported");
            f.relations.emplace_back(gname, power);
        } else if (key == "diff") {
            auto eq = rest.find('=');
            if (eq == std::string::npos) fail_line(lineno, "diff needs '<gen> = <expression>'");
            std::string gname = trim(rest.substr(0, eq));
            std::string expr = trim(rest.substr(eq + 1));
            if (gname.empty() || expr.empty())
                fail_line(lineno, "diff needs '<gen> = <expression>'");
            f.diffs.emplace_back(gname, expr);
        } else if (key == "orientation") {
            f.orientation = rest;
        } else if (key == "symplectic_form") {
            f.symplectic_form = rest;
        } else {
            fail_line(lineno, "unknown directive '" + key + "'");
        }
    }
    if (f.truncate_above < 0) throw InputError("presentation file: missing truncate_above");
    if (f.generators.empty()) throw InputError("presentation file: no generators");
    return f;
}

PresentationFile load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open presentation file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation_file(ss.str());
}

std::string emit_presentation_file(const PresentationFile& f) {
    std::ostringstream os;
    os << "name " << f.name << "\n";
    os << "truncate_above " << f.truncate_above << "\n";
    for (const auto& [g, d] : f.generators) os << "gen " << g << " " << d << "\n";
    for (const auto& [g, p] : f.relations) os << "rel " << g << "^" << p << "\n";
    for (const auto& [g, e] : f.diffs) os << "diff " << g << " = " << e << "\n";
    if (f.orientation) os << "orientation " << *f.orientation << "\n";
    if (f.symplectic_form) os << "symplectic_form " << *f.symplectic_form << "\n";
    return os.str();
}

AlgebraPtr build_algebra(const PresentationFile& f) {
    PresentationBuilder b(f.name.empty() ? "cdga" : f.name, f.truncate_above);
    std::vector<GeneratorInfo> gens;
    for (const auto& [g, d] : f.generators) {
        int power = 0;
        for (const auto& [rg, p] : f.relations)
            if (rg == g) power = p;
        b.add_generator(g, d, power);
        gens.push_back({g, d, power});
    }
    for (const auto& [rg, p] : f.relations) {
        bool known = false;
        for (const auto& [g, d] : f.generators) known = known || g == rg;
        if (!known) throw InputError("relation on unknown generator '" + rg + "'");
    }
    for (const auto& [gname, expr] : f.diffs) {
        int gi = -1, gdeg = 0;
        for (int i = 0; i < int(f.generators.size()); ++i)
            if (f.generators[i].first == gname) {
                gi = i;
                gdeg = f.generators[i].second;
            }
        if (gi < 0) throw InputError("diff on unknown generator '" + gname + "'");
        Poly p = parse_poly(expr, gens);
        // assemble in the target degree of the builder's basis
        std::vector<std::pair<Scalar, std::vector<int>>> terms;
        for (const auto& [c, e] : p.terms) {
            int deg = 0;
            for (std::size_t g = 0; g < gens.size(); ++g) deg += e[g] * gens[g].degree;
            if (deg != gdeg + 1)
                throw InputError("d(" + gname + ") must be homogeneous of degree " +
                                 std::to_string(gdeg + 1));
            terms.emplace_back(c, e);
        }
        b.set_diff(gi, b.element(gdeg + 1, terms));
    }
    return b.build();
}

DistinguishedElements evaluate_distinguished(const DegreewiseAlgebra& a,
                                             const PresentationFile& f) {
    DistinguishedElements out;
    if (f.orientation) out.orientation = evaluate_expression(a, *f.orientation);
    if (f.symplectic_form) out.symplectic_form = evaluate_expression(a, *f.symplectic_form);
    return out;
}

}  // namespace blowup
