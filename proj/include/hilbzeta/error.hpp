#ifndef HILBZETA_ERROR_HPP
#define HILBZETA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hilbzeta
{

enum class errc {
    empty_generators,
    gcd_not_one,
    invalid_argument,
    out_of_bound,
    not_a_gap,
    bound_too_small,
    full_module,
    index_out_of_range,
    invalid_semimodule,
    degenerate_semigroup,
    negative_exponent_underflow,
    overflow,
    oracle_mismatch,
};

constexpr std::string_view to_string(errc e) noexcept
{
    switch (e) {
        case errc::empty_generators:
            return "EmptyGenerators";
        case errc::gcd_not_one:
            return "GcdNotOne";
        case errc::invalid_argument:
            return "InvalidArgument";
        case errc::out_of_bound:
            return "OutOfBound";
        case errc::not_a_gap:
            return "NotAGap";
        case errc::bound_too_small:
            return "BoundTooSmall";
        case errc::full_module:
            return "FullModule";
        case errc::index_out_of_range:
            return "IndexOutOfRange";
        case errc::invalid_semimodule:
            return "InvalidSemimodule";
        case errc::degenerate_semigroup:
            return "DegenerateSemigroup";
        case errc::negative_exponent_underflow:
            return "NegativeExponentUnderflow";
        case errc::overflow:
            return "Overflow";
        case errc::oracle_mismatch:
            return "OracleMismatch";
    }
    return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error
{
public:
    error(errc code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), m_code(code)
    {
    }

    errc code() const noexcept
    {
        return m_code;
    }

private:
    errc m_code;
};

// Process exit status used by the command line tool.
constexpr int exit_code(errc e) noexcept
{
    switch (e) {
        case errc::bound_too_small:
        case errc::out_of_bound:
            return 2;
        case errc::oracle_mismatch:
            return 3;
        case errc::negative_exponent_underflow:
            return 4;
        default:
            return 1;
    }
}

} // namespace hilbzeta

#endif
