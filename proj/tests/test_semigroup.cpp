#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include <hilbzeta/semigroup.hpp>

#include "family.hpp"

using namespace hilbzeta;
using hilbzeta::testing::members_by_closure;
using hilbzeta::testing::semigroups_up_to_conductor;

namespace
{

// min{n : [n, oo) in S u (x + S)} by scanning a closure-computed table.
integer brute_c_of_gap(const std::vector<integer> &gens, integer x)
{
    const integer limit = 200;
    const auto in = members_by_closure(gens, limit);
    integer best = 0;
    for (integer y = 0; y <= limit - x; ++y) {
        const bool covered = in[static_cast<std::size_t>(y)] || (y >= x && in[static_cast<std::size_t>(y - x)]);
        if (!covered) {
            best = y + 1;
        }
    }
    return best;
}

} // namespace

TEST(FromGenerators, E6Conductor)
{
    auto s = numerical_semigroup::from_generators({3, 4});
    EXPECT_EQ(s.conductor(), 6);
    EXPECT_EQ(s.delta(), 3);
    EXPECT_EQ(s.gaps(), (std::vector<integer>{1, 2, 5}));
}

TEST(FromGenerators, FullSemigroup)
{
    auto s = numerical_semigroup::from_generators({1});
    EXPECT_EQ(s.conductor(), 0);
    EXPECT_EQ(s.delta(), 0);
    EXPECT_TRUE(s.gaps().empty());
    EXPECT_TRUE(s.is_full());
}

TEST(FromGenerators, W8TruncatedTable)
{
    auto s = numerical_semigroup::from_generators({4, 5, 6});
    EXPECT_EQ(s.conductor(), 8);
    EXPECT_EQ(s.bound(), 42);
    EXPECT_FALSE(s.contains(7));
    // {0, 4, 5, 6, 8} u [9, 42]
    std::vector<integer> listed;
    for (integer n = 0; n <= 42; ++n) {
        if (s.contains(n)) {
            listed.push_back(n);
        }
    }
    std::vector<integer> expected{0, 4, 5, 6, 8};
    for (integer n = 9; n <= 42; ++n) {
        expected.push_back(n);
    }
    EXPECT_EQ(listed, expected);
}

TEST(FromGenerators, ReducesToMinimalSystem)
{
    const std::vector<integer> input{2, 3, 4};
    auto s = numerical_semigroup::from_generators(input);
    // Oracle: a generator is redundant iff the others already produce it.
    std::vector<integer> expected;
    for (std::size_t i = 0; i < input.size(); ++i) {
        std::vector<integer> others;
        for (std::size_t j = 0; j < input.size(); ++j) {
            if (j != i) {
                others.push_back(input[j]);
            }
        }
        if (!members_by_closure(others, input[i])[static_cast<std::size_t>(input[i])]) {
            expected.push_back(input[i]);
        }
    }
    EXPECT_EQ(expected, (std::vector<integer>{2, 3}));
    EXPECT_EQ(s.generators(), expected);
    EXPECT_TRUE(s.was_reduced());
    EXPECT_EQ(s.input_generators(), input);
}

TEST(FromGenerators, Errors)
{
    try {
        (void)numerical_semigroup::from_generators(std::span<const integer>{});
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::empty_generators);
    }
    try {
        (void)numerical_semigroup::from_generators({6, 10});
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::gcd_not_one);
    }
    try {
        (void)numerical_semigroup::from_generators({0, 3});
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::invalid_argument);
    }
}

TEST(FromGenerators, OversizedInputIsAHardError)
{
    try {
        (void)numerical_semigroup::from_generators({1000000007, 1000000009});
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::overflow);
    }
    EXPECT_THROW((void)checked_mul(integer(1) << 40, integer(1) << 40), error);
}

TEST(FromGenerators, BoundPolicy)
{
    semigroup_options raise;
    raise.bound = 60;
    EXPECT_EQ(numerical_semigroup::from_generators({4, 5, 6}, raise).bound(), 60);

    semigroup_options lower;
    lower.bound = 20;
    auto strict = numerical_semigroup::from_generators({4, 5, 6}, lower);
    EXPECT_EQ(strict.bound(), 42);
    EXPECT_TRUE(strict.bound_certified());

    lower.allow_below_effective = true;
    auto unsafe = numerical_semigroup::from_generators({4, 5, 6}, lower);
    EXPECT_EQ(unsafe.bound(), 20);
    EXPECT_FALSE(unsafe.bound_certified());

    lower.bound = 5;
    try {
        (void)numerical_semigroup::from_generators({4, 5, 6}, lower);
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::bound_too_small);
    }
}

TEST(Contains, Examples)
{
    auto w8 = numerical_semigroup::from_generators({4, 5, 6});
    EXPECT_FALSE(w8.contains(7));
    EXPECT_TRUE(w8.contains(0));
    auto e6 = numerical_semigroup::from_generators({3, 4});
    EXPECT_FALSE(members_by_closure({3, 4}, 5)[5]);
    EXPECT_FALSE(e6.contains(5));
    EXPECT_TRUE(e6.contains(0));
}

TEST(Contains, OutOfBound)
{
    auto s = numerical_semigroup::from_generators({3, 4});
    EXPECT_TRUE(s.contains(s.bound()));
    try {
        (void)s.contains(s.bound() + 1);
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::out_of_bound);
    }
}

TEST(CofGap, BruteForceValues)
{
    EXPECT_EQ(brute_c_of_gap({3, 4}, 5), 3);
    EXPECT_EQ(brute_c_of_gap({3, 4}, 1), 3);
    EXPECT_EQ(brute_c_of_gap({4, 5, 6}, 2), 4);

    auto e6 = numerical_semigroup::from_generators({3, 4});
    auto w8 = numerical_semigroup::from_generators({4, 5, 6});
    EXPECT_EQ(c_of_gap(e6, 5), 3);
    EXPECT_EQ(c_of_gap(e6, 1), 3);
    EXPECT_EQ(c_of_gap(w8, 2), 4);
}

TEST(CofGap, AgreesWithScanOnFamily)
{
    for (const auto &gens : semigroups_up_to_conductor(10)) {
        auto s = numerical_semigroup::from_generators(gens);
        for (auto x : s.gaps()) {
            EXPECT_EQ(c_of_gap(s, x), brute_c_of_gap(gens, x));
        }
    }
}

TEST(CofGap, RejectsMembers)
{
    auto s = numerical_semigroup::from_generators({3, 4});
    try {
        (void)c_of_gap(s, 4);
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::not_a_gap);
    }
    EXPECT_THROW((void)c_of_gap(s, 6), error);
}

TEST(ClassifyMonomial, Examples)
{
    EXPECT_EQ(classify_monomial(numerical_semigroup::from_generators({4, 5, 6})), monomial_form(form_mr{4, 3}));
    EXPECT_EQ(classify_monomial(numerical_semigroup::from_generators({3, 4})), monomial_form(form_mr{3, 2}));
    EXPECT_EQ(classify_monomial(numerical_semigroup::from_generators({4, 7})), monomial_form(not_monomial{}));
    // {0, 3} u [5, 6] u [8, oo)
    EXPECT_EQ(classify_monomial(numerical_semigroup::from_generators({3, 5})), monomial_form(form_m{3}));
    // {0, 2, 4} u [5, oo)
    EXPECT_EQ(classify_monomial(numerical_semigroup::from_generators({2, 5})), monomial_form(form_msb{2, 2, 1}));
    EXPECT_EQ(to_string(classify_monomial(numerical_semigroup::from_generators({4, 5, 6}))), "Gamma_{4,3}");
}

TEST(ClassifyMonomial, MatchesGapCriterionUpToConductor30)
{
    std::size_t count = 0;
    std::size_t monomial = 0;
    for (const auto &gens : semigroups_up_to_conductor(30)) {
        auto s = numerical_semigroup::from_generators(gens);
        const bool form = is_monomial(classify_monomial(s));
        ASSERT_EQ(form, satisfies_gap_criterion(s)) << hilbzeta::testing::show(gens);
        ++count;
        monomial += form ? 1 : 0;
    }
    EXPECT_GT(count, 10000u);
    EXPECT_GT(monomial, 0u);
}

TEST(EffectiveBound, Examples)
{
    EXPECT_EQ(effective_bound(numerical_semigroup::from_generators({4, 5, 6})), 42);
    EXPECT_EQ(effective_bound(numerical_semigroup::from_generators({3, 4})), (6 - 1) * (3 + 2));
    EXPECT_EQ(effective_bound(numerical_semigroup::from_generators({1})), 0);
}

TEST(SemigroupInvariants, Family)
{
    for (const auto &gens : semigroups_up_to_conductor(16)) {
        auto s = numerical_semigroup::from_generators(gens);
        const integer b = s.bound();
        const auto ref = members_by_closure(gens, b);
        for (integer n = 0; n <= b; ++n) {
            ASSERT_EQ(s.contains(n), ref[static_cast<std::size_t>(n)]);
        }
        for (integer a = 0; a <= b; ++a) {
            for (integer c = 0; a + c <= b; ++c) {
                if (s.contains(a) && s.contains(c)) {
                    ASSERT_TRUE(s.contains(a + c));
                }
            }
        }
        const integer c = s.conductor();
        for (integer n = c; n <= b; ++n) {
            ASSERT_TRUE(s.contains(n));
        }
        ASSERT_FALSE(s.contains(c - 1));
        EXPECT_EQ(c, s.gaps().back() + 1);
        EXPECT_EQ(s.delta(), static_cast<integer>(s.gaps().size()));
        EXPECT_LE(s.delta() + 1, c);
        EXPECT_LE(c, 2 * s.delta());
        EXPECT_EQ(s.generators(), gens);
        if (gens.size() == 2) {
            EXPECT_TRUE(s.is_gorenstein());
        }
        EXPECT_GE(b, effective_bound(s));
    }
}
