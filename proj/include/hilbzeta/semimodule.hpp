#ifndef HILBZETA_SEMIMODULE_HPP
#define HILBZETA_SEMIMODULE_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <hilbzeta/checked.hpp>
#include <hilbzeta/error.hpp>
#include <hilbzeta/semigroup.hpp>

namespace hilbzeta
{

using semigroup_ptr = std::shared_ptr<const numerical_semigroup>;

inline semigroup_ptr make_semigroup(std::span<const integer> gens, const semigroup_options &opts = {})
{
    return std::make_shared<const numerical_semigroup>(numerical_semigroup::from_generators(gens, opts));
}

inline semigroup_ptr make_semigroup(std::initializer_list<integer> gens, const semigroup_options &opts = {})
{
    return make_semigroup(std::span<const integer>(gens.begin(), gens.size()), opts);
}

// Minimal generators of a Gamma-semimodule given by its elements in
// ascending order: an element is kept unless it differs from an already kept
// generator by a semigroup element.
inline std::vector<integer> minimal_generators_of(const numerical_semigroup &s, std::span<const integer> elements)
{
    std::vector<integer> gens;
    for (auto a : elements) {
        bool generated = false;
        for (auto x : gens) {
            if (s.contains(a - x)) {
                generated = true;
                break;
            }
        }
        if (!generated) {
            gens.push_back(a);
        }
    }
    return gens;
}

// Elements of Delta admitting decompositions through two distinct minimal
// generators, truncated at the table bound.
//
// Only the minimal generators at or below `limit` are exact; the syzygy
// module itself continues past any truncation.
struct syzygy_set {
    std::vector<integer> elements;
    std::vector<integer> min_gens;
    integer limit = 0;
};

// A Gamma-subsemimodule Delta of Gamma, stored by its finite gap set
// Gamma \ Delta. Minimal generators are computed on construction.
class gamma_semimodule
{
public:
    // Delta = Gamma.
    static gamma_semimodule full(semigroup_ptr s)
    {
        return gamma_semimodule(std::move(s), {});
    }

    // Delta_1 = Gamma \ {0}.
    static gamma_semimodule maximal_ideal(semigroup_ptr s)
    {
        return gamma_semimodule(std::move(s), {0});
    }

    // Validates the gap set: members of Gamma, containing 0 when nonempty, and
    // closed under subtracting generators of Gamma.
    static gamma_semimodule from_gaps(semigroup_ptr s, std::vector<integer> gaps)
    {
        std::sort(gaps.begin(), gaps.end());
        if (std::adjacent_find(gaps.begin(), gaps.end()) != gaps.end()) {
            throw error(errc::invalid_semimodule, "repeated gap");
        }
        if (!gaps.empty() && gaps.front() != 0) {
            throw error(errc::invalid_semimodule, "nonempty gap set must contain 0");
        }
        for (auto x : gaps) {
            if (x > s->bound() || !s->contains(x)) {
                throw error(errc::invalid_semimodule, std::to_string(x) + " is not a semigroup element in the table");
            }
            for (auto g : s->generators()) {
                if (x - g >= 0 && s->contains(x - g) && !std::binary_search(gaps.begin(), gaps.end(), x - g)) {
                    throw error(errc::invalid_semimodule, "gap set not closed: " + std::to_string(x) + " present, "
                                                              + std::to_string(x - g) + " missing");
                }
            }
        }
        return gamma_semimodule(std::move(s), std::move(gaps));
    }

    // Delta = U (g + Gamma).
    static gamma_semimodule generated_by(semigroup_ptr s, std::span<const integer> gens)
    {
        if (gens.empty()) {
            throw error(errc::invalid_argument, "a semimodule needs at least one generator");
        }
        const integer lo = *std::min_element(gens.begin(), gens.end());
        const integer top = checked_add(lo, s->conductor());
        if (top > s->bound()) {
            throw error(errc::bound_too_small, "generators exceed the membership bound");
        }
        for (auto g : gens) {
            if (!s->contains(g)) {
                throw error(errc::invalid_semimodule, std::to_string(g) + " is not in the semigroup");
            }
        }
        // Everything from lo + c on is reached from lo, so gaps lie below it.
        std::vector<integer> gaps;
        for (integer y = 0; y < top; ++y) {
            if (!s->contains(y)) {
                continue;
            }
            const bool reached =
                std::any_of(gens.begin(), gens.end(), [&](integer g) { return y >= g && s->contains(y - g); });
            if (!reached) {
                gaps.push_back(y);
            }
        }
        return from_gaps(std::move(s), std::move(gaps));
    }

    static gamma_semimodule generated_by(semigroup_ptr s, std::initializer_list<integer> gens)
    {
        return generated_by(std::move(s), std::span<const integer>(gens.begin(), gens.size()));
    }

    const numerical_semigroup &semigroup() const noexcept
    {
        return *m_semigroup;
    }
    const semigroup_ptr &semigroup_handle() const noexcept
    {
        return m_semigroup;
    }
    const std::vector<integer> &gaps() const noexcept
    {
        return m_gaps;
    }
    // Colength #(Gamma \ Delta).
    integer ell() const noexcept
    {
        return static_cast<integer>(m_gaps.size());
    }
    const std::vector<integer> &min_gens() const noexcept
    {
        return m_min_gens;
    }

    bool contains(integer n) const
    {
        return m_semigroup->contains(n) && !std::binary_search(m_gaps.begin(), m_gaps.end(), n);
    }

    // Ascending elements of Delta in [0, bound].
    std::vector<integer> elements() const
    {
        return elements_up_to(m_semigroup->bound());
    }

    std::vector<integer> elements_up_to(integer limit) const
    {
        std::vector<integer> out;
        for (integer n = 0; n <= std::min(limit, m_semigroup->bound()); ++n) {
            if (contains(n)) {
                out.push_back(n);
            }
        }
        return out;
    }

    // max(Gamma \ Delta).
    integer frobenius_element() const
    {
        if (m_gaps.empty()) {
            throw error(errc::full_module, "the Frobenius element of Gamma itself is undefined");
        }
        return m_gaps.back();
    }

    // Delta \ {gamma_i}, generators indexed ascending from 1.
    gamma_semimodule delete_generator(std::size_t i) const
    {
        if (i < 1 || i > m_min_gens.size()) {
            throw error(errc::index_out_of_range, "generator index " + std::to_string(i) + " not in [1, "
                                                      + std::to_string(m_min_gens.size()) + "]");
        }
        std::vector<integer> gaps = m_gaps;
        gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), m_min_gens[i - 1]), m_min_gens[i - 1]);
        return gamma_semimodule(m_semigroup, std::move(gaps));
    }

    // m(Delta) = Delta u {gamma_Delta}.
    gamma_semimodule adjoin_frobenius() const
    {
        if (m_gaps.empty()) {
            throw error(errc::full_module, "cannot adjoin to Gamma itself");
        }
        return gamma_semimodule(m_semigroup, std::vector<integer>(m_gaps.begin(), m_gaps.end() - 1));
    }

    // Every minimal generator lies at or below max(gamma_Delta, c - 1) + alpha_1,
    // and within c - 1 of the smallest element of Delta.
    integer generator_bound() const
    {
        if (m_gaps.empty()) {
            return 0;
        }
        const auto &s = *m_semigroup;
        const integer spread = std::max<integer>(s.conductor() - 1, 0);
        integer limit = checked_add(std::max(m_gaps.back(), spread), s.smallest_generator());
        for (integer n = 0; n <= std::min(limit, s.bound()); ++n) {
            if (contains(n)) {
                limit = std::min(limit, checked_add(n, spread));
                break;
            }
        }
        return limit;
    }

    syzygy_set syzygy() const
    {
        syzygy_set out;
        out.limit = m_semigroup->bound();
        if (m_min_gens.size() < 2) {
            return out;
        }
        if (m_semigroup->bound() < frobenius_element()) {
            throw error(errc::bound_too_small, "table bound " + std::to_string(m_semigroup->bound())
                                                   + " cannot certify syzygies below "
                                                   + std::to_string(frobenius_element()));
        }
        for (integer a = 0; a <= m_semigroup->bound(); ++a) {
            if (!contains(a)) {
                continue;
            }
            int count = 0;
            for (auto g : m_min_gens) {
                if (a >= g && m_semigroup->contains(a - g)) {
                    ++count;
                }
                if (count >= 2) {
                    break;
                }
            }
            if (count == 2) {
                out.elements.push_back(a);
            }
        }
        out.min_gens = minimal_generators_of(*m_semigroup, out.elements);
        return out;
    }

    // Ordered tuple identifying Delta within its semigroup.
    const std::vector<integer> &canonical_key() const noexcept
    {
        return m_gaps;
    }

    friend bool operator==(const gamma_semimodule &a, const gamma_semimodule &b)
    {
        return a.m_gaps == b.m_gaps
               && (a.m_semigroup == b.m_semigroup || *a.m_semigroup == *b.m_semigroup);
    }

private:
    gamma_semimodule(semigroup_ptr s, std::vector<integer> gaps) : m_semigroup(std::move(s)), m_gaps(std::move(gaps))
    {
        if (m_gaps.empty()) {
            m_min_gens = {0};
            return;
        }
        const integer need = generator_bound();
        if (m_semigroup->bound() < need) {
            throw error(errc::bound_too_small, "table bound " + std::to_string(m_semigroup->bound())
                                                   + " cannot certify generators up to " + std::to_string(need));
        }
        m_min_gens = minimal_generators_of(*m_semigroup, elements_up_to(need));
        if (static_cast<integer>(m_min_gens.size()) > m_semigroup->smallest_generator()) {
            throw error(errc::invalid_semimodule, "more than alpha_1 minimal generators");
        }
    }

    semigroup_ptr m_semigroup;
    std::vector<integer> m_gaps;
    std::vector<integer> m_min_gens;
};

// Free-function spellings of the per-module primitives.
inline gamma_semimodule full(semigroup_ptr s)
{
    return gamma_semimodule::full(std::move(s));
}
inline gamma_semimodule maximal_ideal(semigroup_ptr s)
{
    return gamma_semimodule::maximal_ideal(std::move(s));
}
inline const std::vector<integer> &minimal_generators(const gamma_semimodule &d)
{
    return d.min_gens();
}
inline integer frobenius_element(const gamma_semimodule &d)
{
    return d.frobenius_element();
}
inline syzygy_set syzygy(const gamma_semimodule &d)
{
    return d.syzygy();
}
inline gamma_semimodule delete_generator(const gamma_semimodule &d, std::size_t i)
{
    return d.delete_generator(i);
}
inline gamma_semimodule adjoin_frobenius(const gamma_semimodule &d)
{
    return d.adjoin_frobenius();
}
inline const std::vector<integer> &canonical_key(const gamma_semimodule &d)
{
    return d.canonical_key();
}

} // namespace hilbzeta

#endif
