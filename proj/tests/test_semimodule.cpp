#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include <hilbzeta/semimodule.hpp>
#include <hilbzeta/tree.hpp>

#include "family.hpp"

using namespace hilbzeta;
using hilbzeta::testing::members_by_closure;
using hilbzeta::testing::semigroups_up_to_conductor;

namespace
{

using ivec = std::vector<integer>;

// Elements of U (g + S) up to limit, from a closure-computed membership table.
ivec span_elements(const ivec &sg_gens, const ivec &gens, integer limit)
{
    const auto in = members_by_closure(sg_gens, limit);
    ivec out;
    for (integer y = 0; y <= limit; ++y) {
        for (auto g : gens) {
            if (y >= g && in[static_cast<std::size_t>(y - g)]) {
                out.push_back(y);
                break;
            }
        }
    }
    return out;
}

// x in Delta is a generator iff x is not in y + S for a smaller y in Delta.
ivec definition_generators(const ivec &sg_gens, const ivec &elements, integer limit)
{
    const auto in = members_by_closure(sg_gens, limit);
    ivec out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        bool covered = false;
        for (std::size_t j = 0; j < i && !covered; ++j) {
            covered = in[static_cast<std::size_t>(elements[i] - elements[j])];
        }
        if (!covered) {
            out.push_back(elements[i]);
        }
    }
    return out;
}

// sigma = g_i + b_1 = g_j + b_2 for distinct generators, sigma <= limit.
ivec definition_syzygies(const ivec &sg_gens, const ivec &gens, integer limit)
{
    const auto in = members_by_closure(sg_gens, limit);
    ivec out;
    for (integer sigma = 0; sigma <= limit; ++sigma) {
        int hits = 0;
        for (auto g : gens) {
            hits += (sigma >= g && in[static_cast<std::size_t>(sigma - g)]) ? 1 : 0;
        }
        if (hits >= 2) {
            out.push_back(sigma);
        }
    }
    return out;
}

} // namespace

TEST(Full, Examples)
{
    auto e6 = make_semigroup({3, 4});
    EXPECT_EQ(full(e6).ell(), 0);
    EXPECT_TRUE(full(make_semigroup({4, 5, 6})).gaps().empty());
    EXPECT_EQ(full(make_semigroup({2, 3})).min_gens(), ivec{0});
}

TEST(MaximalIdeal, Examples)
{
    EXPECT_EQ(maximal_ideal(make_semigroup({3, 4})).min_gens(), (ivec{3, 4}));
    EXPECT_EQ(maximal_ideal(make_semigroup({4, 5, 6})).min_gens(), (ivec{4, 5, 6}));
    auto smooth = maximal_ideal(make_semigroup({1}));
    EXPECT_EQ(smooth.gaps(), ivec{0});
    EXPECT_EQ(smooth.min_gens(), ivec{1});
}

TEST(MinimalGenerators, Examples)
{
    auto e6 = make_semigroup({3, 4});
    EXPECT_EQ(minimal_generators(gamma_semimodule::generated_by(e6, {6, 7, 8})), (ivec{6, 7, 8}));
    EXPECT_EQ(minimal_generators(full(e6)), ivec{0});
    // {3, 6, 7, 8, 9, ...}
    auto d = gamma_semimodule::from_gaps(e6, {0, 4});
    EXPECT_EQ(minimal_generators(d), (ivec{3, 8}));
}

TEST(MinimalGenerators, RandomSemimodulesMatchDefinition)
{
    std::mt19937 rng(20241016);
    const std::vector<ivec> semigroups{{3, 4}, {4, 5, 6}, {4, 7}, {3, 5, 7}, {5, 6, 9}, {2, 7}};
    for (const auto &sg : semigroups) {
        auto s = make_semigroup(sg);
        ivec pool;
        for (integer n = 1; n + s->conductor() <= s->bound(); ++n) {
            if (s->contains(n)) {
                pool.push_back(n);
            }
        }
        for (int trial = 0; trial < 200; ++trial) {
            std::uniform_int_distribution<int> count(1, 4);
            ivec gens;
            for (int k = count(rng); k > 0; --k) {
                gens.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
            }
            auto d = gamma_semimodule::generated_by(s, gens);
            const auto elems = span_elements(sg, gens, s->bound());
            EXPECT_EQ(d.elements(), elems);
            EXPECT_EQ(d.min_gens(), definition_generators(sg, elems, s->bound()));
        }
    }
}

TEST(FrobeniusElement, Examples)
{
    auto d = gamma_semimodule::generated_by(make_semigroup({4, 7}), {8, 11});
    EXPECT_EQ(frobenius_element(d), 21);
    EXPECT_EQ(frobenius_element(maximal_ideal(make_semigroup({4, 5, 6}))), 0);
    auto e = gamma_semimodule::generated_by(make_semigroup({3, 4}), {4, 6});
    EXPECT_EQ(e.gaps(), (ivec{0, 3}));
    EXPECT_EQ(frobenius_element(e), 3);
}

TEST(FrobeniusElement, FullModuleError)
{
    try {
        (void)frobenius_element(full(make_semigroup({3, 4})));
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::full_module);
    }
}

TEST(Syzygy, WorkedExample)
{
    auto s = make_semigroup({4, 7});
    auto d = gamma_semimodule::generated_by(s, {8, 11});
    const auto syz = syzygy(d);
    EXPECT_EQ(syz.min_gens, (ivec{15, 32}));
    const auto expected = definition_syzygies({4, 7}, {8, 11}, s->bound());
    EXPECT_EQ(syz.elements, expected);
    ASSERT_GE(expected.size(), 3u);
    EXPECT_EQ((ivec{expected[0], expected[1], expected[2]}), (ivec{15, 19, 22}));
}

TEST(Syzygy, PrincipalHasNone)
{
    auto d = gamma_semimodule::generated_by(make_semigroup({3, 4}), {4});
    const auto syz = syzygy(d);
    EXPECT_TRUE(syz.elements.empty());
    EXPECT_TRUE(syz.min_gens.empty());
}

TEST(Syzygy, ThreeGenerators)
{
    auto s = make_semigroup({3, 4});
    auto d = gamma_semimodule::generated_by(s, {6, 7, 8});
    const auto elems = definition_syzygies({3, 4}, {6, 7, 8}, s->bound());
    EXPECT_EQ(definition_generators({3, 4}, elems, s->bound()), (ivec{10, 11, 12}));
    EXPECT_EQ(syzygy(d).min_gens, (ivec{10, 11, 12}));
    EXPECT_EQ(syzygy(d).elements, elems);
}

TEST(Syzygy, MinimalGeneratorsPairwiseIncomparable)
{
    auto s = make_semigroup({4, 5, 6});
    for (const auto &level : build_tree(s).levels) {
        for (const auto &d : level) {
            const auto g = syzygy(d).min_gens;
            for (auto a : g) {
                for (auto b : g) {
                    if (a < b) {
                        EXPECT_FALSE(s->contains(b - a));
                    }
                }
            }
        }
    }
}

TEST(DeleteGenerator, E6Examples)
{
    auto s = make_semigroup({3, 4});
    auto root = maximal_ideal(s);
    EXPECT_EQ(delete_generator(root, 1).min_gens(), (ivec{4, 6}));
    EXPECT_EQ(delete_generator(root, 2).min_gens(), (ivec{3, 8}));
    EXPECT_EQ(delete_generator(delete_generator(root, 1), 1).min_gens(), (ivec{6, 7, 8}));
    EXPECT_EQ(delete_generator(full(s), 1), root);
}

TEST(DeleteGenerator, IndexOutOfRange)
{
    auto root = maximal_ideal(make_semigroup({3, 4}));
    for (std::size_t bad : {std::size_t{0}, std::size_t{3}}) {
        try {
            (void)delete_generator(root, bad);
            FAIL();
        } catch (const error &e) {
            EXPECT_EQ(e.code(), errc::index_out_of_range);
        }
    }
}

TEST(AdjoinFrobenius, Examples)
{
    auto d = gamma_semimodule::generated_by(make_semigroup({4, 7}), {8, 11});
    EXPECT_EQ(adjoin_frobenius(d).min_gens(), (ivec{8, 11, 21}));
    auto e6 = make_semigroup({3, 4});
    EXPECT_EQ(adjoin_frobenius(gamma_semimodule::generated_by(e6, {4, 6})).min_gens(), (ivec{3, 4}));
    EXPECT_EQ(adjoin_frobenius(maximal_ideal(e6)), full(e6));
    try {
        (void)adjoin_frobenius(full(e6));
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::full_module);
    }
}

TEST(CanonicalKey, Examples)
{
    auto e6 = make_semigroup({3, 4});
    EXPECT_EQ(canonical_key(gamma_semimodule::generated_by(e6, {3, 8})), (ivec{0, 4}));
    EXPECT_TRUE(canonical_key(full(e6)).empty());
    std::set<ivec> keys;
    auto tree = build_tree(make_semigroup({4, 5, 6}), 2);
    for (const auto &d : tree.levels[1]) {
        keys.insert(canonical_key(d));
    }
    EXPECT_EQ(keys.size(), 3u);
}

TEST(FromGaps, Validation)
{
    auto e6 = make_semigroup({3, 4});
    auto expect_invalid = [&](ivec gaps) {
        try {
            (void)gamma_semimodule::from_gaps(e6, std::move(gaps));
            FAIL();
        } catch (const error &e) {
            EXPECT_EQ(e.code(), errc::invalid_semimodule);
        }
    };
    expect_invalid({3});       // 0 missing
    expect_invalid({0, 7});    // 7 - 3 = 4 and 7 - 4 = 3 missing
    expect_invalid({0, 5});    // 5 is a gap of Gamma
    expect_invalid({0, 0});
    EXPECT_NO_THROW((void)gamma_semimodule::from_gaps(e6, {0, 3, 4, 7}));
}

TEST(SemimoduleProperties, TreesUpToConductor12)
{
    for (const auto &gens : semigroups_up_to_conductor(12)) {
        auto s = make_semigroup(gens);
        const auto tree = build_tree(s);
        for (const auto &level : tree.levels) {
            for (const auto &d : level) {
                const auto up = adjoin_frobenius(d);
                EXPECT_EQ(up.ell(), d.ell() - 1);
                const auto &ug = up.min_gens();
                auto it = std::find(ug.begin(), ug.end(), frobenius_element(d));
                ASSERT_NE(it, ug.end());
                const auto back = delete_generator(up, static_cast<std::size_t>(it - ug.begin()) + 1);
                EXPECT_EQ(back, d);

                const auto &g = d.min_gens();
                // Colength c + 1 is past what the default table certifies.
                for (std::size_t i = 1; d.ell() < s->conductor() && i <= g.size(); ++i) {
                    EXPECT_EQ(delete_generator(d, i).ell(), d.ell() + 1);
                }
                for (auto a : g) {
                    for (auto b : g) {
                        if (a < b) {
                            EXPECT_FALSE(s->contains(b - a));
                        }
                    }
                }
                EXPECT_LE(g.back() - g.front(), s->conductor() - 1);
                EXPECT_LE(static_cast<integer>(g.size()), s->smallest_generator());
            }
        }
    }
}

TEST(BoundCertification, TooSmallTableIsReported)
{
    semigroup_options opts;
    opts.bound = 20;
    opts.allow_below_effective = true;
    // Generators of Gamma \ {0} can reach c - 1 + alpha_1 = 21.
    auto s = make_semigroup({4, 7}, opts);
    try {
        (void)maximal_ideal(s);
        FAIL();
    } catch (const error &e) {
        EXPECT_EQ(e.code(), errc::bound_too_small);
    }
}
