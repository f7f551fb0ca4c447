// Empirical scaling of the zeta computation against the operation-count
// estimate sum_ell c * chi_ell * n* * alpha_1 * (n* - ell), where n* is the
// number of semigroup elements below the effective bound. Documentation only.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <hilbzeta/format.hpp>
#include <hilbzeta/hilbzeta.hpp>

int main(int argc, char **argv)
{
    using namespace hilbzeta;
    std::vector<std::vector<integer>> family = {{2, 3}, {3, 4},    {3, 5},    {4, 5, 6}, {4, 7},
                                                {5, 6}, {5, 7},    {4, 9},    {5, 8},    {6, 7},
                                                {5, 9}, {6, 7, 8}, {5, 6, 7}, {7, 8}};
    int repeats = argc > 1 ? std::atoi(argv[1]) : 3;

    std::printf("%-14s %4s %4s %6s %8s %14s %12s %12s\n", "semigroup", "c", "a1", "n*", "sum_chi", "estimate",
                "seconds", "ns/unit");
    for (const auto &gens : family) {
        auto s = make_semigroup(gens);
        const integer c = s->conductor();
        const integer n_star = effective_bound(*s) - s->delta();

        double best = 1e300;
        semimodule_tree tree;
        for (int r = 0; r < repeats; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            tree = build_tree(s);
            auto classes = compute_classes(tree);
            auto z = assemble_zeta(tree, classes);
            const auto t1 = std::chrono::steady_clock::now();
            best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
            (void)z;
        }

        double estimate = 0;
        std::size_t total = 0;
        const auto chi = tree.euler();
        for (std::size_t k = 0; k < chi.size(); ++k) {
            const double ell = static_cast<double>(k + 1);
            estimate += static_cast<double>(c) * static_cast<double>(chi[k]) * static_cast<double>(n_star)
                        * static_cast<double>(s->smallest_generator()) * (static_cast<double>(n_star) - ell);
            total += chi[k];
        }
        std::printf("%-14s %4lld %4lld %6lld %8zu %14.3e %12.6f %12.4f\n", generators_text(s->generators()).c_str(),
                    static_cast<long long>(c), static_cast<long long>(s->smallest_generator()),
                    static_cast<long long>(n_star), total, estimate, best, best * 1e9 / estimate);
    }
    return 0;
}
