#ifndef HILBZETA_TREE_HPP
#define HILBZETA_TREE_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <hilbzeta/error.hpp>
#include <hilbzeta/semimodule.hpp>

namespace hilbzeta
{

// The levelled tree G_Gamma. levels[k] holds the semimodules of colength
// k + 1 sorted by canonical key; parents[k][j] is the index in levels[k - 1]
// of the Frobenius adjunction of levels[k][j] (nullopt on the root level).
struct semimodule_tree {
    semigroup_ptr semigroup;
    std::vector<std::vector<gamma_semimodule>> levels;
    std::vector<std::vector<std::optional<std::size_t>>> parents;

    std::size_t depth() const noexcept
    {
        return levels.size();
    }

    // chi_ell = #D_ell, for ell = 1..depth.
    std::vector<std::size_t> euler() const
    {
        std::vector<std::size_t> out;
        out.reserve(levels.size());
        for (const auto &lvl : levels) {
            out.push_back(lvl.size());
        }
        return out;
    }

    // Index of the node with the given gap set at colength ell, if present.
    std::optional<std::size_t> find(integer ell, const std::vector<integer> &key) const
    {
        if (ell < 1 || static_cast<std::size_t>(ell) > levels.size()) {
            return std::nullopt;
        }
        const auto &lvl = levels[static_cast<std::size_t>(ell - 1)];
        auto it = std::lower_bound(lvl.begin(), lvl.end(), key,
                                   [](const gamma_semimodule &d, const std::vector<integer> &k) {
                                       return d.canonical_key() < k;
                                   });
        if (it == lvl.end() || it->canonical_key() != key) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - lvl.begin());
    }
};

// Builds D_1, ..., D_depth by deleting every minimal generator of every node
// of the previous level. depth defaults to the conductor; a larger depth is
// only useful for checking stabilisation.
inline semimodule_tree build_tree(semigroup_ptr s, std::optional<integer> depth = std::nullopt)
{
    if (s->is_full()) {
        throw error(errc::degenerate_semigroup, "Gamma = N has no singular strata");
    }
    const integer target = depth.value_or(s->conductor());
    if (target < 1) {
        throw error(errc::invalid_argument, "tree depth must be at least 1");
    }

    semimodule_tree tree;
    tree.semigroup = s;
    tree.levels.push_back({gamma_semimodule::maximal_ideal(s)});
    tree.parents.push_back({std::nullopt});

    for (integer ell = 1; ell < target; ++ell) {
        const auto &prev = tree.levels.back();
        std::map<std::vector<integer>, gamma_semimodule> next;
        for (const auto &delta : prev) {
            for (std::size_t i = 1; i <= delta.min_gens().size(); ++i) {
                auto child = delta.delete_generator(i);
                auto key = child.canonical_key();
                next.try_emplace(std::move(key), std::move(child));
            }
        }

        std::vector<gamma_semimodule> level;
        std::vector<std::optional<std::size_t>> parent;
        level.reserve(next.size());
        parent.reserve(next.size());
        for (auto &[key, child] : next) {
            const auto up = child.adjoin_frobenius();
            const auto idx = tree.find(ell, up.canonical_key());
            if (!idx) {
                throw error(errc::invalid_semimodule, "Frobenius adjunction left the previous level");
            }
            parent.push_back(idx);
            level.push_back(std::move(child));
        }
        tree.levels.push_back(std::move(level));
        tree.parents.push_back(std::move(parent));
    }
    return tree;
}

inline semimodule_tree build_tree(const numerical_semigroup &s, std::optional<integer> depth = std::nullopt)
{
    return build_tree(std::make_shared<const numerical_semigroup>(s), depth);
}

// "(g1,g2,...)"
inline std::string generator_label(const gamma_semimodule &d)
{
    std::string out = "(";
    for (std::size_t i = 0; i < d.min_gens().size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += std::to_string(d.min_gens()[i]);
    }
    return out + ")";
}

// Graphviz rendering: one node per semimodule, one edge per parent link,
// nodes of equal colength on the same rank. label(k, j) names levels[k][j].
template <std::invocable<std::size_t, std::size_t> LabelFn>
std::string export_dot(const semimodule_tree &tree, LabelFn &&label)
{
    if (tree.levels.empty()) {
        throw error(errc::degenerate_semigroup, "empty tree");
    }
    std::ostringstream os;
    os << "digraph G_Gamma {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=plaintext];\n";
    for (std::size_t k = 0; k < tree.levels.size(); ++k) {
        os << "  { rank=same;";
        for (std::size_t j = 0; j < tree.levels[k].size(); ++j) {
            os << " n" << k + 1 << "_" << j << ";";
        }
        os << " }\n";
        for (std::size_t j = 0; j < tree.levels[k].size(); ++j) {
            os << "  n" << k + 1 << "_" << j << " [label=\"" << label(k, j) << "\"];\n";
        }
    }
    for (std::size_t k = 1; k < tree.levels.size(); ++k) {
        for (std::size_t j = 0; j < tree.levels[k].size(); ++j) {
            os << "  n" << k + 1 << "_" << j << " -> n" << k << "_" << *tree.parents[k][j] << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

// Nodes labelled by their generator tuples, e.g. "(3,4)".
inline std::string export_dot(const semimodule_tree &tree)
{
    return export_dot(tree, [&](std::size_t k, std::size_t j) { return generator_label(tree.levels[k][j]); });
}

} // namespace hilbzeta

#endif
