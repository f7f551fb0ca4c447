#ifndef HILBZETA_L_POLYNOMIAL_HPP
#define HILBZETA_L_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <hilbzeta/checked.hpp>

namespace hilbzeta
{

// Element of Z[L], L the class of the affine line. Dense ascending
// coefficients with no trailing zeros; the zero polynomial is empty.
class l_polynomial
{
public:
    l_polynomial() = default;
    l_polynomial(std::initializer_list<integer> coeffs) : m_coeffs(coeffs)
    {
        trim();
    }
    explicit l_polynomial(std::vector<integer> coeffs) : m_coeffs(std::move(coeffs))
    {
        trim();
    }

    static l_polynomial one()
    {
        return l_polynomial{1};
    }

    // L^k.
    static l_polynomial lefschetz_power(integer k)
    {
        if (k < 0) {
            throw error(errc::invalid_argument, "negative power of L");
        }
        std::vector<integer> c(static_cast<std::size_t>(k) + 1, 0);
        c.back() = 1;
        return l_polynomial(std::move(c));
    }

    const std::vector<integer> &coeffs() const noexcept
    {
        return m_coeffs;
    }
    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    // Degree; -1 for the zero polynomial.
    integer degree() const noexcept
    {
        return static_cast<integer>(m_coeffs.size()) - 1;
    }
    integer operator[](std::size_t k) const noexcept
    {
        return k < m_coeffs.size() ? m_coeffs[k] : 0;
    }

    // If this is c * L^d with c == 1, returns d.
    std::optional<integer> monomial_degree() const
    {
        if (m_coeffs.empty() || m_coeffs.back() != 1) {
            return std::nullopt;
        }
        for (std::size_t k = 0; k + 1 < m_coeffs.size(); ++k) {
            if (m_coeffs[k] != 0) {
                return std::nullopt;
            }
        }
        return degree();
    }

    l_polynomial &operator+=(const l_polynomial &o)
    {
        if (o.m_coeffs.size() > m_coeffs.size()) {
            m_coeffs.resize(o.m_coeffs.size(), 0);
        }
        for (std::size_t k = 0; k < o.m_coeffs.size(); ++k) {
            m_coeffs[k] = checked_add(m_coeffs[k], o.m_coeffs[k]);
        }
        trim();
        return *this;
    }

    friend l_polynomial operator+(l_polynomial a, const l_polynomial &b)
    {
        a += b;
        return a;
    }

    friend l_polynomial operator*(const l_polynomial &a, const l_polynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<integer> c(a.m_coeffs.size() + b.m_coeffs.size() - 1, 0);
        for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
            for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
                c[i + j] = checked_add(c[i + j], checked_mul(a.m_coeffs[i], b.m_coeffs[j]));
            }
        }
        return l_polynomial(std::move(c));
    }

    // Multiplication by L^k, k >= 0.
    l_polynomial shifted(integer k) const
    {
        if (k < 0) {
            throw error(errc::invalid_argument, "negative power of L");
        }
        if (is_zero()) {
            return {};
        }
        std::vector<integer> c(static_cast<std::size_t>(k), 0);
        c.insert(c.end(), m_coeffs.begin(), m_coeffs.end());
        return l_polynomial(std::move(c));
    }

    // Horner evaluation at an integer point.
    integer evaluate(integer x) const
    {
        integer acc = 0;
        for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
            acc = checked_add(checked_mul(acc, x), *it);
        }
        return acc;
    }

    friend bool operator==(const l_polynomial &, const l_polynomial &) = default;

    friend std::ostream &operator<<(std::ostream &os, const l_polynomial &p)
    {
        return os << to_text(p);
    }

    // Plain rendering, e.g. "1 + L + 2L^2".
    friend std::string to_text(const l_polynomial &p)
    {
        if (p.is_zero()) {
            return "0";
        }
        std::string out;
        for (std::size_t k = 0; k < p.m_coeffs.size(); ++k) {
            const integer c = p.m_coeffs[k];
            if (c == 0) {
                continue;
            }
            if (out.empty()) {
                out += c < 0 ? "-" : "";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            const integer mag = c < 0 ? -c : c;
            if (k == 0) {
                out += std::to_string(mag);
                continue;
            }
            if (mag != 1) {
                out += std::to_string(mag);
            }
            out += "L";
            if (k > 1) {
                out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim()
    {
        while (!m_coeffs.empty() && m_coeffs.back() == 0) {
            m_coeffs.pop_back();
        }
    }

    std::vector<integer> m_coeffs;
};

} // namespace hilbzeta

#endif
