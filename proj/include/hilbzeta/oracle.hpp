#ifndef HILBZETA_ORACLE_HPP
#define HILBZETA_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <hilbzeta/error.hpp>
#include <hilbzeta/semigroup.hpp>
#include <hilbzeta/semimodule.hpp>
#include <hilbzeta/tree.hpp>

// Definition-level reference implementations. Nothing in here calls the
// generator, syzygy or tree routines it is meant to check.
namespace hilbzeta::oracle
{

namespace detail
{

inline void extend_ideals(const numerical_semigroup &s, integer ell, integer bound, std::vector<integer> &current,
                          std::set<std::vector<integer>> &out)
{
    if (static_cast<integer>(current.size()) == ell) {
        out.insert(current);
        return;
    }
    // Elements are added in increasing order; every predecessor x - g of a
    // candidate x is smaller, so closure can be checked against `current`.
    for (integer x = current.back() + 1; x <= bound; ++x) {
        if (!s.contains(x)) {
            continue;
        }
        bool closed = true;
        for (auto g : s.generators()) {
            if (x - g >= 0 && s.contains(x - g) && !std::binary_search(current.begin(), current.end(), x - g)) {
                closed = false;
                break;
            }
        }
        if (closed) {
            current.push_back(x);
            extend_ideals(s, ell, bound, current, out);
            current.pop_back();
        }
    }
}

} // namespace detail

// All gap sets G of size ell with 0 in G that are closed under subtracting
// generators inside Gamma n [0, bound]. These are exactly the canonical keys
// of the Gamma-semimodules of colength ell.
inline std::set<std::vector<integer>> enumerate_semimodules(const numerical_semigroup &s, integer ell, integer bound)
{
    if (ell < 1) {
        throw error(errc::invalid_argument, "colength must be at least 1");
    }
    if (bound > s.bound()) {
        throw error(errc::out_of_bound, "enumeration bound exceeds the membership table");
    }
    std::set<std::vector<integer>> out;
    std::vector<integer> current{0};
    detail::extend_ideals(s, ell, bound, current, out);
    return out;
}

// Brute-force generators of a set closed under + Gamma: x is kept iff no
// smaller element y of the set has x - y in Gamma.
inline std::vector<integer> brute_min_generators_of(const numerical_semigroup &s, const std::vector<integer> &elements)
{
    std::vector<integer> gens;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        bool generated = false;
        for (std::size_t j = 0; j < i && !generated; ++j) {
            generated = s.contains(elements[i] - elements[j]);
        }
        if (!generated) {
            gens.push_back(elements[i]);
        }
    }
    return gens;
}

inline std::vector<integer> elements_from_gaps(const numerical_semigroup &s, const std::vector<integer> &gaps,
                                               integer bound)
{
    std::vector<integer> out;
    for (integer n = 0; n <= bound; ++n) {
        if (s.contains(n) && std::find(gaps.begin(), gaps.end(), n) == gaps.end()) {
            out.push_back(n);
        }
    }
    return out;
}

inline std::vector<integer> brute_min_generators(const gamma_semimodule &d)
{
    const auto &s = d.semigroup();
    return brute_min_generators_of(s, elements_from_gaps(s, d.gaps(), s.bound()));
}

// Every sigma <= bound of the form g_i + b_1 = g_j + b_2 with g_i != g_j
// minimal generators and b_1, b_2 in Gamma, produced by enumerating the
// pairs rather than by filtering elements of Delta.
inline std::vector<integer> brute_syzygy_elements(const gamma_semimodule &d, integer bound)
{
    const auto &s = d.semigroup();
    if (bound > s.bound()) {
        throw error(errc::out_of_bound, "syzygy bound exceeds the membership table");
    }
    const auto gens = brute_min_generators(d);
    std::set<integer> found;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            for (integer b = 0; gens[i] + b <= bound; ++b) {
                const integer sigma = gens[i] + b;
                if (s.contains(b) && sigma >= gens[j] && s.contains(sigma - gens[j])) {
                    found.insert(sigma);
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

inline std::vector<integer> brute_syzygy_min_generators(const gamma_semimodule &d, integer bound)
{
    return brute_min_generators_of(d.semigroup(), brute_syzygy_elements(d, bound));
}

// Compares every level of a tree with the exhaustive enumeration, and every
// node's generators and syzygies with the brute-force versions. Returns a
// description of the first disagreement, empty when everything matches.
inline std::string verify_tree(const semimodule_tree &tree)
{
    const auto &s = *tree.semigroup;
    for (std::size_t k = 0; k < tree.levels.size(); ++k) {
        const integer ell = static_cast<integer>(k) + 1;
        const auto expected = enumerate_semimodules(s, ell, s.bound());
        std::set<std::vector<integer>> actual;
        for (const auto &d : tree.levels[k]) {
            actual.insert(d.canonical_key());
        }
        if (actual != expected || actual.size() != tree.levels[k].size()) {
            return "level " + std::to_string(ell) + ": tree has " + std::to_string(tree.levels[k].size())
                   + " semimodules, enumeration has " + std::to_string(expected.size());
        }
        for (const auto &d : tree.levels[k]) {
            if (brute_min_generators(d) != d.min_gens()) {
                return "level " + std::to_string(ell) + ": generator mismatch at " + generator_label(d);
            }
            const auto syz = d.syzygy();
            if (brute_syzygy_elements(d, s.bound()) != syz.elements) {
                return "level " + std::to_string(ell) + ": syzygy mismatch at " + generator_label(d);
            }
        }
    }
    return {};
}

} // namespace hilbzeta::oracle

#endif
