#ifndef HILBZETA_CLI_HPP
#define HILBZETA_CLI_HPP

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include <hilbzeta/error.hpp>
#include <hilbzeta/format.hpp>
#include <hilbzeta/motive.hpp>
#include <hilbzeta/oracle.hpp>
#include <hilbzeta/semigroup.hpp>
#include <hilbzeta/semimodule.hpp>
#include <hilbzeta/tree.hpp>

namespace hilbzeta::cli
{

enum class command { zeta, tree, check };
enum class output_format { text, json, dot, latex };

inline std::optional<output_format> parse_format(std::string_view s)
{
    if (s == "text") {
        return output_format::text;
    }
    if (s == "json") {
        return output_format::json;
    }
    if (s == "dot") {
        return output_format::dot;
    }
    if (s == "latex") {
        return output_format::latex;
    }
    return std::nullopt;
}

struct run_config {
    command cmd = command::zeta;
    std::vector<integer> generators;
    std::optional<integer> bound;
    // Accept a bound below the effective bound; output is marked uncertified.
    bool unsafe = false;
    output_format format = output_format::text;
    bool oracle_verify = false;
};

namespace detail
{

inline std::string dump(const nlohmann::json &j)
{
    return j.dump(2) + "\n";
}

inline nlohmann::json check_report(const numerical_semigroup &s)
{
    const auto form = classify_monomial(s);
    const bool criterion = satisfies_gap_criterion(s);
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["generators"] = s.generators();
    j["input_generators"] = s.input_generators();
    j["reduced"] = s.was_reduced();
    j["conductor"] = s.conductor();
    j["delta"] = s.delta();
    j["gaps"] = s.gaps();
    j["effective_bound"] = effective_bound(s);
    j["bound"] = s.bound();
    j["bound_certified"] = s.bound_certified();
    j["classification"] = to_json(form);
    j["gap_criterion"] = criterion;
    // Equivalence of the closed forms with the gap criterion (N excluded).
    j["classification_consistent"] = s.is_full() || criterion == is_monomial(form);
    j["gorenstein"] = s.is_gorenstein();
    j["conductor_bounds_hold"] = s.is_full() || (s.delta() + 1 <= s.conductor() && s.conductor() <= 2 * s.delta());
    j["applicability"] = std::string(to_string(applicability_of(s, form)));
    return j;
}

inline std::string check_text(const nlohmann::json &j)
{
    std::ostringstream os;
    os << "semigroup: " << generators_text(j["generators"].get<std::vector<integer>>()) << "\n";
    if (j["reduced"].get<bool>()) {
        os << "reduced from: " << generators_text(j["input_generators"].get<std::vector<integer>>()) << "\n";
    }
    os << "conductor: " << j["conductor"].get<integer>() << "\n";
    os << "delta: " << j["delta"].get<integer>() << "\n";
    os << "gaps:";
    for (auto g : j["gaps"]) {
        os << " " << g.get<integer>();
    }
    os << "\n";
    os << "classification: " << j["classification"]["label"].get<std::string>() << "\n";
    os << "gap criterion: " << (j["gap_criterion"].get<bool>() ? "holds" : "fails") << "\n";
    os << "classification consistent: " << (j["classification_consistent"].get<bool>() ? "yes" : "no") << "\n";
    os << "gorenstein (c = 2 delta): " << (j["gorenstein"].get<bool>() ? "yes" : "no") << "\n";
    os << "delta + 1 <= c <= 2 delta: " << (j["conductor_bounds_hold"].get<bool>() ? "yes" : "no") << "\n";
    os << "effective bound: " << j["effective_bound"].get<integer>() << "\n";
    os << "bound: " << j["bound"].get<integer>() << (j["bound_certified"].get<bool>() ? "" : " (uncertified)")
       << "\n";
    os << "applicability: " << j["applicability"].get<std::string>() << "\n";
    return os.str();
}

inline void verify_or_throw(const semimodule_tree &tree)
{
    const auto msg = oracle::verify_tree(tree);
    if (!msg.empty()) {
        throw error(errc::oracle_mismatch, msg);
    }
}

} // namespace detail

// Executes one command. The document goes to `out`, diagnostics to `err`;
// the return value is the process exit status.
inline int run(const run_config &cfg, std::ostream &out, std::ostream &err)
{
    try {
        semigroup_options opts;
        opts.bound = cfg.bound;
        opts.allow_below_effective = cfg.unsafe;
        auto s = make_semigroup(cfg.generators, opts);
        if (cfg.bound && *cfg.bound < effective_bound(*s) && !cfg.unsafe) {
            throw error(errc::bound_too_small, "bound " + std::to_string(*cfg.bound) + " is below the effective bound "
                                                   + std::to_string(effective_bound(*s)) + " (use --unsafe)");
        }
        if (s->was_reduced()) {
            err << "note: generators reduced to " << generators_text(s->generators()) << "\n";
        }

        switch (cfg.cmd) {
            case command::check: {
                if (cfg.format != output_format::text && cfg.format != output_format::json) {
                    throw error(errc::invalid_argument, "check supports text and json output");
                }
                if (cfg.oracle_verify && !s->is_full()) {
                    detail::verify_or_throw(build_tree(s));
                }
                const auto report = detail::check_report(*s);
                out << (cfg.format == output_format::json ? detail::dump(report) : detail::check_text(report));
                return 0;
            }
            case command::tree: {
                if (cfg.format == output_format::latex) {
                    throw error(errc::invalid_argument, "tree supports text, json and dot output");
                }
                const auto tree = build_tree(s);
                if (cfg.oracle_verify) {
                    detail::verify_or_throw(tree);
                }
                if (cfg.format == output_format::json) {
                    out << detail::dump(to_json(tree));
                } else if (cfg.format == output_format::dot) {
                    out << export_dot(tree);
                } else {
                    out << to_text(tree);
                }
                return 0;
            }
            case command::zeta: {
                hilbert_zeta z;
                std::optional<semimodule_tree> tree;
                std::optional<motivic_class_table> classes;
                if (s->is_full()) {
                    if (cfg.format == output_format::dot) {
                        throw error(errc::degenerate_semigroup, "Gamma = N has no tree to draw");
                    }
                    z = zeta(s);
                } else {
                    tree = build_tree(s);
                    if (cfg.oracle_verify) {
                        detail::verify_or_throw(*tree);
                    }
                    classes = compute_classes(*tree);
                    z = assemble_zeta(*tree, *classes);
                }
                if (z.status == applicability::uncertified) {
                    err << "warning: " << generators_text(z.generators)
                        << " is neither monomial nor two-generated; the class relation is not proven here\n";
                }
                if (!z.bound_certified) {
                    err << "warning: bound below the effective bound; result uncertified\n";
                }
                switch (cfg.format) {
                    case output_format::json:
                        out << detail::dump(to_json(z));
                        break;
                    case output_format::latex:
                        out << to_latex(z);
                        break;
                    case output_format::dot:
                        out << export_dot(*tree, *classes);
                        break;
                    case output_format::text:
                        out << to_text(z);
                        break;
                }
                return 0;
            }
        }
        return 1;
    } catch (const error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.code());
    }
}

} // namespace hilbzeta::cli

#endif
