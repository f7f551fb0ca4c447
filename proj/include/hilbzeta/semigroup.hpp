#ifndef HILBZETA_SEMIGROUP_HPP
#define HILBZETA_SEMIGROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <hilbzeta/checked.hpp>
#include <hilbzeta/error.hpp>

namespace hilbzeta
{

// Largest membership table we are willing to allocate.
inline constexpr integer max_table_size = integer(1) << 27;

struct semigroup_options {
    // Requested truncation bound. By default the table covers exactly the
    // effective bound; larger requests are honoured as given.
    std::optional<integer> bound;
    // Permit a bound below the effective bound (results become uncertified).
    bool allow_below_effective = false;
};

class numerical_semigroup;

integer effective_bound(const numerical_semigroup &);

// A numerical semigroup <a_1, ..., a_e> with gcd 1, together with a
// membership table over [0, bound()].
class numerical_semigroup
{
public:
    static numerical_semigroup from_generators(std::span<const integer> gens, const semigroup_options &opts = {})
    {
        if (gens.empty()) {
            throw error(errc::empty_generators, "at least one generator is required");
        }
        std::vector<integer> input(gens.begin(), gens.end());
        integer g = 0;
        for (auto a : input) {
            if (a < 1) {
                throw error(errc::invalid_argument, "generators must be positive, got " + std::to_string(a));
            }
            g = std::gcd(g, a);
        }
        if (g != 1) {
            throw error(errc::gcd_not_one, "gcd of the generators is " + std::to_string(g));
        }

        std::vector<integer> sorted = input;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        const integer smallest = sorted.front();
        const integer largest = sorted.back();

        // Frobenius number < smallest * largest, so a table of that size plus
        // one run of `smallest` consecutive members always locates the conductor.
        const integer probe = checked_add(checked_mul(smallest, largest), smallest);
        if (probe > max_table_size) {
            throw error(errc::overflow, "generators too large for the membership table");
        }
        std::vector<std::uint8_t> probe_table = sieve(sorted, probe);

        integer conductor = 0;
        {
            integer run = 0;
            for (integer n = 0; n <= probe; ++n) {
                if (probe_table[static_cast<std::size_t>(n)] != 0u) {
                    if (++run == smallest) {
                        conductor = n - smallest + 1;
                        break;
                    }
                } else {
                    run = 0;
                }
            }
        }

        numerical_semigroup s;
        s.m_input = input;
        s.m_conductor = conductor;
        for (integer n = 0; n < conductor; ++n) {
            if (probe_table[static_cast<std::size_t>(n)] == 0u) {
                s.m_gaps.push_back(n);
            }
        }

        // Minimal system: drop every generator expressible as a sum of two
        // nonzero semigroup elements.
        for (auto a : sorted) {
            bool decomposable = false;
            for (integer x = 1; x < a && !decomposable; ++x) {
                decomposable = probe_table[static_cast<std::size_t>(x)] != 0u
                               && probe_table[static_cast<std::size_t>(a - x)] != 0u;
            }
            if (!decomposable) {
                s.m_generators.push_back(a);
            }
        }
        s.m_reduced = s.m_generators != input;

        // For N itself the effective bound is 0; keep alpha_1 visible so that
        // the maximal ideal still has a generator inside the table.
        const integer eff = std::max(effective_bound(s), conductor + s.smallest_generator());
        integer bound = eff;
        if (opts.bound) {
            if (*opts.bound < 0) {
                throw error(errc::invalid_argument, "bound must be non-negative");
            }
            if (*opts.bound >= eff || opts.allow_below_effective) {
                bound = *opts.bound;
            }
        }
        if (bound < conductor) {
            throw error(errc::bound_too_small, "bound " + std::to_string(bound) + " is below the conductor "
                                                   + std::to_string(conductor));
        }
        if (bound + 1 > max_table_size) {
            throw error(errc::overflow, "bound " + std::to_string(bound) + " exceeds the table limit");
        }
        s.m_bound = bound;
        s.m_member.assign(static_cast<std::size_t>(bound + 1), 1u);
        for (auto gap : s.m_gaps) {
            s.m_member[static_cast<std::size_t>(gap)] = 0u;
        }
        return s;
    }

    static numerical_semigroup from_generators(std::initializer_list<integer> gens, const semigroup_options &opts = {})
    {
        return from_generators(std::span<const integer>(gens.begin(), gens.size()), opts);
    }

    // Membership; hard error above the table bound.
    bool contains(integer n) const
    {
        if (n < 0) {
            return false;
        }
        if (n > m_bound) {
            throw error(errc::out_of_bound,
                        std::to_string(n) + " exceeds the membership bound " + std::to_string(m_bound));
        }
        return m_member[static_cast<std::size_t>(n)] != 0u;
    }

    const std::vector<integer> &generators() const noexcept
    {
        return m_generators;
    }
    const std::vector<integer> &input_generators() const noexcept
    {
        return m_input;
    }
    // True when the input list was not already the minimal system.
    bool was_reduced() const noexcept
    {
        return m_reduced;
    }
    integer conductor() const noexcept
    {
        return m_conductor;
    }
    const std::vector<integer> &gaps() const noexcept
    {
        return m_gaps;
    }
    integer delta() const noexcept
    {
        return static_cast<integer>(m_gaps.size());
    }
    integer bound() const noexcept
    {
        return m_bound;
    }
    // alpha_1, the multiplicity.
    integer smallest_generator() const noexcept
    {
        return m_generators.front();
    }
    bool is_full() const noexcept
    {
        return m_conductor == 0;
    }
    bool is_gorenstein() const noexcept
    {
        return m_conductor == 2 * delta();
    }
    // The table reaches the effective bound, so every algorithm downstream is exact.
    bool bound_certified() const
    {
        return m_bound >= effective_bound(*this);
    }

    friend bool operator==(const numerical_semigroup &a, const numerical_semigroup &b)
    {
        return a.m_generators == b.m_generators && a.m_bound == b.m_bound;
    }

private:
    numerical_semigroup() = default;

    static std::vector<std::uint8_t> sieve(const std::vector<integer> &gens, integer limit)
    {
        std::vector<std::uint8_t> t(static_cast<std::size_t>(limit + 1), 0u);
        t[0] = 1u;
        for (integer n = 1; n <= limit; ++n) {
            for (auto g : gens) {
                if (g > n) {
                    break;
                }
                if (t[static_cast<std::size_t>(n - g)] != 0u) {
                    t[static_cast<std::size_t>(n)] = 1u;
                    break;
                }
            }
        }
        return t;
    }

    std::vector<integer> m_input;
    std::vector<integer> m_generators;
    std::vector<integer> m_gaps;
    std::vector<std::uint8_t> m_member;
    integer m_conductor = 0;
    integer m_bound = 0;
    bool m_reduced = false;
};

// (c - 1)(alpha_1 + 2), or 0 for the smooth case.
inline integer effective_bound(const numerical_semigroup &s)
{
    if (s.conductor() == 0) {
        return 0;
    }
    return checked_mul(s.conductor() - 1, checked_add(s.smallest_generator(), 2));
}

// min{n : [n, oo) in S u (x + S)} for a gap x.
inline integer c_of_gap(const numerical_semigroup &s, integer x)
{
    if (x < 0 || x >= s.conductor() || s.contains(x)) {
        throw error(errc::not_a_gap, std::to_string(x) + " is not a gap");
    }
    for (integer y = s.conductor() - 1; y >= 0; --y) {
        const bool covered = s.contains(y) || (y >= x && s.contains(y - x));
        if (!covered) {
            return y + 1;
        }
    }
    return 0;
}

// Criterion: for every gap x, S n (x + S) lies in [c(x), oo).
inline bool satisfies_gap_criterion(const numerical_semigroup &s)
{
    for (auto x : s.gaps()) {
        const integer cx = c_of_gap(s, x);
        for (integer y = x; y < cx; ++y) {
            if (s.contains(y) && s.contains(y - x)) {
                return false;
            }
        }
    }
    return true;
}

// {i m : 0 <= i <= s} u [s m + b, oo)
struct form_msb {
    integer m, s, b;
    friend bool operator==(const form_msb &, const form_msb &) = default;
};
// {0} u [m, m + r - 1] u [m + r + 1, oo)
struct form_mr {
    integer m, r;
    friend bool operator==(const form_mr &, const form_mr &) = default;
};
// {0, m} u [m + 2, 2m] u [2m + 2, oo)
struct form_m {
    integer m;
    friend bool operator==(const form_m &, const form_m &) = default;
};
struct not_monomial {
    friend bool operator==(const not_monomial &, const not_monomial &) = default;
};

using monomial_form = std::variant<form_msb, form_mr, form_m, not_monomial>;

inline bool is_monomial(const monomial_form &f) noexcept
{
    return !std::holds_alternative<not_monomial>(f);
}

inline std::string to_string(const monomial_form &f)
{
    struct visitor {
        std::string operator()(const form_msb &x) const
        {
            return "Gamma_{" + std::to_string(x.m) + "," + std::to_string(x.s) + "," + std::to_string(x.b) + "}";
        }
        std::string operator()(const form_mr &x) const
        {
            return "Gamma_{" + std::to_string(x.m) + "," + std::to_string(x.r) + "}";
        }
        std::string operator()(const form_m &x) const
        {
            return "Gamma_{" + std::to_string(x.m) + "}";
        }
        std::string operator()(const not_monomial &) const
        {
            return "not monomial";
        }
    };
    return std::visit(visitor{}, f);
}

namespace detail
{

// Compares s against a closed form given as a predicate, on [0, top] where
// top is at least both conductors.
template <typename Pred>
bool matches_form(const numerical_semigroup &s, integer top, Pred &&in_form)
{
    for (integer n = 0; n <= top; ++n) {
        const bool member = n >= s.conductor() || s.contains(n);
        if (member != in_form(n)) {
            return false;
        }
    }
    return true;
}

} // namespace detail

// Matches s against the three monomial closed forms. Every form has
// multiplicity m, so m is pinned to alpha_1 and the remaining parameters are
// searched exhaustively up to the conductor.
inline monomial_form classify_monomial(const numerical_semigroup &s)
{
    if (s.is_full()) {
        return not_monomial{};
    }
    const integer m = s.smallest_generator();
    const integer c = s.conductor();

    if (m >= 2) {
        for (integer k = 1; k * m <= c + m; ++k) {
            for (integer b = 1; b < m; ++b) {
                const integer tail = k * m + b;
                const bool ok = detail::matches_form(s, std::max(c, tail), [&](integer n) {
                    return n >= tail || (n % m == 0 && n / m <= k);
                });
                if (ok) {
                    return form_msb{m, k, b};
                }
            }
        }
    }
    for (integer r = 2; r <= m - 1; ++r) {
        const bool ok = detail::matches_form(s, std::max(c, m + r + 1), [&](integer n) {
            return n == 0 || (n >= m && n <= m + r - 1) || n >= m + r + 1;
        });
        if (ok) {
            return form_mr{m, r};
        }
    }
    if (m >= 3) {
        const bool ok = detail::matches_form(s, std::max(c, 2 * m + 2), [&](integer n) {
            return n == 0 || n == m || (n >= m + 2 && n <= 2 * m) || n >= 2 * m + 2;
        });
        if (ok) {
            return form_m{m};
        }
    }
    return not_monomial{};
}

} // namespace hilbzeta

#endif
