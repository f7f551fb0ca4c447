#ifndef HILBZETA_MOTIVE_HPP
#define HILBZETA_MOTIVE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <hilbzeta/error.hpp>
#include <hilbzeta/l_polynomial.hpp>
#include <hilbzeta/semigroup.hpp>
#include <hilbzeta/semimodule.hpp>
#include <hilbzeta/tree.hpp>

namespace hilbzeta
{

// The two counts entering the L-exponent of an edge Delta -> m(Delta).
struct exponent_counts {
    // #{minimal generators of Delta below gamma_Delta}
    integer generators_below = 0;
    // #{minimal generators of Syz(Delta) below gamma_Delta}
    integer syzygies_below = 0;

    integer exponent() const noexcept
    {
        return generators_below - syzygies_below;
    }
};

inline exponent_counts class_exponent_counts(const gamma_semimodule &d)
{
    const integer frob = d.frobenius_element();
    exponent_counts out;
    for (auto g : d.min_gens()) {
        if (g < frob) {
            ++out.generators_below;
        }
    }
    for (auto sigma : d.syzygy().min_gens) {
        if (sigma < frob) {
            ++out.syzygies_below;
        }
    }
    return out;
}

// [C^[Delta]] = [C^[m(Delta)]] * L^(class_exponent(Delta)).
inline integer class_exponent(const gamma_semimodule &d)
{
    return class_exponent_counts(d).exponent();
}

// Classes of all strata of a tree. cell_degree[k][j] is d with
// [C^[Delta]] = L^d for Delta = tree.levels[k][j].
struct motivic_class_table {
    std::vector<std::vector<integer>> cell_degree;
    std::map<std::vector<integer>, l_polynomial> cell_class;
    // level_class[k] = [C^[k + 1]]
    std::vector<l_polynomial> level_class;
};

inline motivic_class_table compute_classes(const semimodule_tree &tree)
{
    motivic_class_table out;
    out.cell_degree.resize(tree.levels.size());
    out.level_class.resize(tree.levels.size());
    for (std::size_t k = 0; k < tree.levels.size(); ++k) {
        const auto &level = tree.levels[k];
        auto &degrees = out.cell_degree[k];
        degrees.reserve(level.size());
        l_polynomial sum;
        for (std::size_t j = 0; j < level.size(); ++j) {
            // The parent of the root is Gamma itself, with class 1.
            const integer base = k == 0 ? 0 : out.cell_degree[k - 1][*tree.parents[k][j]];
            const integer d = base + class_exponent(level[j]);
            if (d < 0) {
                throw error(errc::negative_exponent_underflow,
                            "stratum " + generator_label(level[j]) + " would have class L^" + std::to_string(d));
            }
            degrees.push_back(d);
            auto cls = l_polynomial::lefschetz_power(d);
            sum += cls;
            out.cell_class.emplace(level[j].canonical_key(), std::move(cls));
        }
        out.level_class[k] = std::move(sum);
    }
    return out;
}

// Whether the edge relation is proven for this semigroup.
enum class applicability {
    certified_monomial,
    certified_two_generated,
    uncertified,
    smooth,
};

constexpr std::string_view to_string(applicability a) noexcept
{
    switch (a) {
        case applicability::certified_monomial:
            return "certified-monomial";
        case applicability::certified_two_generated:
            return "certified-two-generated";
        case applicability::uncertified:
            return "uncertified";
        case applicability::smooth:
            return "smooth";
    }
    return "unknown";
}

inline applicability applicability_of(const numerical_semigroup &s, const monomial_form &form)
{
    if (s.is_full()) {
        return applicability::smooth;
    }
    if (is_monomial(form)) {
        return applicability::certified_monomial;
    }
    if (s.generators().size() == 2) {
        return applicability::certified_two_generated;
    }
    return applicability::uncertified;
}

// Z(q) = sum_{ell < c} poly[ell] q^ell + tail * q^c / (1 - q).
struct hilbert_zeta {
    std::vector<integer> generators;
    integer conductor = 0;
    integer delta = 0;
    monomial_form classification = not_monomial{};
    applicability status = applicability::uncertified;
    bool bound_certified = true;
    std::vector<l_polynomial> poly;
    l_polynomial tail;

    // Coefficient of q^n.
    const l_polynomial &coefficient(integer n) const
    {
        if (n < 0) {
            throw error(errc::invalid_argument, "negative power of q");
        }
        if (n < static_cast<integer>(poly.size())) {
            return poly[static_cast<std::size_t>(n)];
        }
        return tail;
    }
};

inline hilbert_zeta assemble_zeta(const semimodule_tree &tree, const motivic_class_table &classes)
{
    const auto &s = *tree.semigroup;
    if (classes.level_class.size() < static_cast<std::size_t>(s.conductor())) {
        throw error(errc::invalid_argument, "class table shallower than the conductor");
    }
    hilbert_zeta z;
    z.generators = s.generators();
    z.conductor = s.conductor();
    z.delta = s.delta();
    z.classification = classify_monomial(s);
    z.status = applicability_of(s, z.classification);
    z.bound_certified = s.bound_certified();
    z.poly.push_back(l_polynomial::one());
    for (integer ell = 1; ell < s.conductor(); ++ell) {
        z.poly.push_back(classes.level_class[static_cast<std::size_t>(ell - 1)]);
    }
    z.tail = classes.level_class[static_cast<std::size_t>(s.conductor() - 1)];
    return z;
}

inline hilbert_zeta zeta(semigroup_ptr s)
{
    if (s->is_full()) {
        hilbert_zeta z;
        z.generators = s->generators();
        z.status = applicability::smooth;
        z.bound_certified = s->bound_certified();
        z.tail = l_polynomial::one();
        return z;
    }
    const auto tree = build_tree(s);
    return assemble_zeta(tree, compute_classes(tree));
}

inline hilbert_zeta zeta(const numerical_semigroup &s)
{
    return zeta(std::make_shared<const numerical_semigroup>(s));
}

} // namespace hilbzeta

#endif
