#ifndef HILBZETA_FORMAT_HPP
#define HILBZETA_FORMAT_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include <hilbzeta/l_polynomial.hpp>
#include <hilbzeta/motive.hpp>
#include <hilbzeta/semigroup.hpp>
#include <hilbzeta/semimodule.hpp>
#include <hilbzeta/tree.hpp>

namespace hilbzeta
{

inline constexpr int schema_version = 1;

// ---- JSON ----

inline nlohmann::json to_json(const gamma_semimodule &d)
{
    return {{"min_gens", d.min_gens()}, {"gaps", d.gaps()}, {"ell", d.ell()}};
}

inline nlohmann::json to_json(const monomial_form &f)
{
    struct visitor {
        nlohmann::json operator()(const form_msb &x) const
        {
            return {{"form", "m,s,b"}, {"m", x.m}, {"s", x.s}, {"b", x.b}};
        }
        nlohmann::json operator()(const form_mr &x) const
        {
            return {{"form", "m,r"}, {"m", x.m}, {"r", x.r}};
        }
        nlohmann::json operator()(const form_m &x) const
        {
            return {{"form", "m"}, {"m", x.m}};
        }
        nlohmann::json operator()(const not_monomial &) const
        {
            return {{"form", "none"}};
        }
    };
    auto j = std::visit(visitor{}, f);
    j["label"] = to_string(f);
    return j;
}

inline nlohmann::json to_json(const semimodule_tree &tree)
{
    nlohmann::json levels = nlohmann::json::array();
    nlohmann::json parents = nlohmann::json::array();
    for (std::size_t k = 0; k < tree.levels.size(); ++k) {
        nlohmann::json lvl = nlohmann::json::array();
        nlohmann::json par = nlohmann::json::array();
        for (std::size_t j = 0; j < tree.levels[k].size(); ++j) {
            lvl.push_back(to_json(tree.levels[k][j]));
            if (tree.parents[k][j]) {
                par.push_back(*tree.parents[k][j]);
            } else {
                par.push_back(nullptr);
            }
        }
        levels.push_back(std::move(lvl));
        parents.push_back(std::move(par));
    }
    return {{"schema_version", schema_version},
            {"generators", tree.semigroup->generators()},
            {"conductor", tree.semigroup->conductor()},
            {"levels", std::move(levels)},
            {"parents", std::move(parents)}};
}

// Level classes [C^[1]], ..., [C^[c]] read back from the zeta function.
inline std::vector<l_polynomial> level_classes(const hilbert_zeta &z)
{
    std::vector<l_polynomial> out;
    for (std::size_t ell = 1; ell < z.poly.size(); ++ell) {
        out.push_back(z.poly[ell]);
    }
    if (z.conductor > 0) {
        out.push_back(z.tail);
    }
    return out;
}

inline nlohmann::json to_json(const hilbert_zeta &z)
{
    nlohmann::json classes = nlohmann::json::array();
    const auto lc = level_classes(z);
    for (std::size_t k = 0; k < lc.size(); ++k) {
        classes.push_back({{"ell", k + 1}, {"coeffs", lc[k].coeffs()}});
    }
    nlohmann::json poly = nlohmann::json::array();
    for (const auto &p : z.poly) {
        poly.push_back(p.coeffs());
    }
    return {{"schema_version", schema_version},
            {"generators", z.generators},
            {"conductor", z.conductor},
            {"delta", z.delta},
            {"classification", to_json(z.classification)},
            {"applicability", std::string(to_string(z.status))},
            {"bound_certified", z.bound_certified},
            {"classes", std::move(classes)},
            {"zeta", {{"poly", std::move(poly)}, {"tail", z.tail.coeffs()}}}};
}

// ---- LaTeX ----

// Coefficients in \mathbb{L}, spaced as in "1 + \mathbb{L} + 2\mathbb{L}^{2}+ 3\mathbb{L}^{3}".
inline std::string to_latex(const l_polynomial &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    std::size_t prev = 0;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const integer c = p.coeffs()[k];
        if (c == 0) {
            continue;
        }
        const integer mag = c < 0 ? -c : c;
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            const char *sign = c < 0 ? "-" : "+";
            out += prev >= 2 ? std::string(sign) + " " : std::string(" ") + sign + " ";
        }
        if (k == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) {
                out += std::to_string(mag);
            }
            out += "\\mathbb{L}";
            if (k >= 2) {
                out += "^{" + std::to_string(k) + "}";
            }
        }
        prev = k;
    }
    return out;
}

inline std::string to_latex(const hilbert_zeta &z)
{
    std::ostringstream os;
    os << "% hilbzeta schema_version " << schema_version << "\n";
    os << "% semigroup <";
    for (std::size_t i = 0; i < z.generators.size(); ++i) {
        os << (i ? "," : "") << z.generators[i];
    }
    os << ">, c = " << z.conductor << ", " << to_string(z.classification) << ", " << to_string(z.status);
    if (!z.bound_certified) {
        os << ", uncertified bound";
    }
    os << "\n";
    if (z.conductor == 0) {
        os << "$$Z^{Hilb}_{(C,O)}(q)= \\frac{1}{1-q}$$\n";
        return os.str();
    }
    const auto lc = level_classes(z);
    os << "$$\\begin{aligned}\n";
    for (std::size_t k = 0; k < lc.size(); ++k) {
        os << (k == 0 ? "\\relax " : "") << "[C^{[" << k + 1 << "]}] &= " << to_latex(lc[k])
           << (k + 1 < lc.size() ? "\\\\" : "") << "\n";
    }
    os << "\\end{aligned}$$\n";
    const integer c = z.conductor;
    os << "$$Z^{Hilb}_{(C,O)}(q)= 1+";
    if (c >= 2) {
        os << "\\sum_{\\ell=1}^{" << c - 1 << "}[C^{[\\ell]}]q^{\\ell}+";
    }
    os << "[C^{[" << c << "]}](q^{" << c << "}+q^{" << c + 1 << "}+\\dots)$$\n";
    os << "$$Z^{Hilb}_{(C,O)}(q)= 1";
    for (integer ell = 1; ell < c; ++ell) {
        os << " + (" << to_latex(z.poly[static_cast<std::size_t>(ell)]) << ")q^{" << ell << "}";
    }
    os << " + (" << to_latex(z.tail) << ")\\frac{q^{" << c << "}}{1-q}$$\n";
    return os.str();
}

// ---- plain text ----

inline std::string generators_text(const std::vector<integer> &gens)
{
    std::string out = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        out += (i ? "," : "") + std::to_string(gens[i]);
    }
    return out + ">";
}

inline std::string to_text(const hilbert_zeta &z)
{
    std::ostringstream os;
    os << "semigroup: " << generators_text(z.generators) << "\n";
    os << "conductor: " << z.conductor << "\n";
    os << "delta: " << z.delta << "\n";
    os << "classification: " << to_string(z.classification) << "\n";
    os << "applicability: " << to_string(z.status) << "\n";
    os << "bound: " << (z.bound_certified ? "certified" : "uncertified") << "\n";
    const auto lc = level_classes(z);
    for (std::size_t k = 0; k < lc.size(); ++k) {
        os << "[C^[" << k + 1 << "]] = " << to_text(lc[k]) << "\n";
    }
    os << "Z(q) = ";
    if (z.conductor == 0) {
        os << "1/(1-q)\n";
        return os.str();
    }
    os << "1";
    for (integer ell = 1; ell < z.conductor; ++ell) {
        os << " + (" << to_text(z.poly[static_cast<std::size_t>(ell)]) << ") q^" << ell;
    }
    os << " + (" << to_text(z.tail) << ") q^" << z.conductor << "/(1-q)\n";
    return os.str();
}

inline std::string to_text(const semimodule_tree &tree)
{
    std::ostringstream os;
    os << "semigroup: " << generators_text(tree.semigroup->generators()) << "\n";
    os << "conductor: " << tree.semigroup->conductor() << "\n";
    os << "euler:";
    for (auto chi : tree.euler()) {
        os << " " << chi;
    }
    os << "\n";
    for (std::size_t k = 0; k < tree.levels.size(); ++k) {
        os << "D_" << k + 1 << ":";
        for (std::size_t j = 0; j < tree.levels[k].size(); ++j) {
            os << " " << generator_label(tree.levels[k][j]);
            if (tree.parents[k][j]) {
                os << "->" << generator_label(tree.levels[k - 1][*tree.parents[k][j]]);
            }
        }
        os << "\n";
    }
    return os.str();
}

// DOT with each node's stratum class appended to its label.
inline std::string export_dot(const semimodule_tree &tree, const motivic_class_table &classes)
{
    return export_dot(tree, [&](std::size_t k, std::size_t j) {
        return generator_label(tree.levels[k][j]) + " : "
               + to_text(l_polynomial::lefschetz_power(classes.cell_degree[k][j]));
    });
}

} // namespace hilbzeta

#endif
