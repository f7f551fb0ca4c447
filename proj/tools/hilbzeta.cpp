#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hilbzeta/cli.hpp>

namespace
{

// "4,5,6" or "4 5 6" -> {4, 5, 6}
bool parse_generators(const std::string &text, std::vector<hilbzeta::integer> &out)
{
    std::string token;
    auto flush = [&]() {
        if (token.empty()) {
            return true;
        }
        std::size_t pos = 0;
        try {
            out.push_back(std::stoll(token, &pos));
        } catch (const std::exception &) {
            return false;
        }
        const bool ok = pos == token.size();
        token.clear();
        return ok;
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ') {
            if (!flush()) {
                return false;
            }
        } else {
            token += ch;
        }
    }
    return flush();
}

} // namespace

int main(int argc, char **argv)
{
    using namespace hilbzeta::cli;

    CLI::App app{"Motivic Hilbert zeta functions of unibranch curve singularities"};
    app.require_subcommand(1);

    std::string gens_text;
    std::string format_text;
    long long bound = 0;
    std::vector<CLI::Option *> bound_opts;
    run_config cfg;

    if (const char *env = std::getenv("HILBZETA_FORMAT")) {
        format_text = env;
    }

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("-g,--gens", gens_text, "semigroup generators, e.g. 4,5,6")->required();
        bound_opts.push_back(sub->add_option("-b,--bound", bound, "membership table bound (default: effective bound)"));
        sub->add_flag("--unsafe", cfg.unsafe, "allow a bound below the effective bound");
        sub->add_option("-f,--format", format_text, "text | json | dot | latex (env HILBZETA_FORMAT)");
        sub->add_flag("--oracle-verify", cfg.oracle_verify, "check the tree against brute-force enumeration");
    };
    auto *zeta_cmd = app.add_subcommand("zeta", "compute the motivic Hilbert zeta function");
    auto *tree_cmd = app.add_subcommand("tree", "build the semimodule tree");
    auto *check_cmd = app.add_subcommand("check", "classify the semigroup and report its invariants");
    add_common(zeta_cmd);
    add_common(tree_cmd);
    add_common(check_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    if (zeta_cmd->parsed()) {
        cfg.cmd = command::zeta;
    } else if (tree_cmd->parsed()) {
        cfg.cmd = command::tree;
    } else {
        cfg.cmd = command::check;
    }
    if (!parse_generators(gens_text, cfg.generators)) {
        std::cerr << "error: cannot parse generators '" << gens_text << "'\n";
        return 1;
    }
    for (auto *opt : bound_opts) {
        if (opt->count() > 0) {
            cfg.bound = bound;
        }
    }
    if (!format_text.empty()) {
        auto f = parse_format(format_text);
        if (!f) {
            std::cerr << "error: unknown format '" << format_text << "'\n";
            return 1;
        }
        cfg.format = *f;
    }
    return run(cfg, std::cout, std::cerr);
}
