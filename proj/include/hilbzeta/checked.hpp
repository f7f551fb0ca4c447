#ifndef HILBZETA_CHECKED_HPP
#define HILBZETA_CHECKED_HPP

#include <cstdint>
#include <string>

#include <hilbzeta/error.hpp>

namespace hilbzeta
{

using integer = std::int64_t;

inline integer checked_add(integer a, integer b)
{
    integer r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw error(errc::overflow, std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

inline integer checked_sub(integer a, integer b)
{
    integer r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw error(errc::overflow, std::to_string(a) + " - " + std::to_string(b));
    }
    return r;
}

inline integer checked_mul(integer a, integer b)
{
    integer r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw error(errc::overflow, std::to_string(a) + " * " + std::to_string(b));
    }
    return r;
}

} // namespace hilbzeta

#endif
