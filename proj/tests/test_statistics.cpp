#include <doctest.h>

#include <cstdlib>
#include <map>
#include <vector>

#include "emcomb/bigint.hpp"
#include "emcomb/composition.hpp"
#include "emcomb/emc.hpp"
#include "emcomb/statistics.hpp"
#include "oracles.hpp"

using namespace emcomb;

TEST_SUITE("statistics") {

TEST_CASE("weighted total") {
    CHECK(weighted_total(Composition({5, 0, 5})) == 10);
    CHECK(weighted_total(Composition({7})) == 0);
    CHECK(weighted_total(Composition({0, 0, 0, 6})) == 18);

    SUBCASE("equals the diagram size") {
        for (int s = 0; s <= 6; ++s)
            for (int n = 1; n <= 6; ++n)
                for (const Composition& c : all_compositions(s, n))
                    CHECK(weighted_total(c) == diagram_of(c).size());
    }
}

TEST_CASE("weighted difference") {
    CHECK(weighted_difference({Composition({5, 5, 0}), Composition({0, 5, 5})}) ==
          DValue({-10}));
    CHECK(weighted_difference({Composition({1, 2, 1}), Composition({1, 2, 1})}) ==
          DValue({0}));
    // three histograms with totals (1,1,0)
    CHECK(weighted_difference({Composition({1, 1}), Composition({1, 1}), Composition({2, 0})}) ==
          DValue({1, 1}));
    CHECK_THROWS_AS(weighted_difference({Composition({2, 0}), Composition({1, 1, 0})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(weighted_difference({Composition({2, 0})}), std::invalid_argument);
}

TEST_CASE("plane partitions in a box") {
    CHECK(pp_box(1, 1, 1) == 2);
    CHECK(pp_box(1, 1, 2) == 3);
    CHECK(pp_box(2, 2, 2) == 20);
    CHECK(pp_box(0, 5, 5) == 1);
    CHECK(pp_box(5, 0, 5) == 1);
    CHECK(pp_box(5, 5, 0) == 1);

    SUBCASE("brute-force enumeration agrees") {
        for (int x = 0; x <= 3; ++x)
            for (int y = 0; y <= 3; ++y)
                for (int z = 0; z <= 3; ++z) CHECK(pp_box(x, y, z) == oracles::pp_brute(x, y, z));
    }

    SUBCASE("height one counts Young diagrams in the box") {
        for (int x = 0; x <= 7; ++x)
            for (int y = 0; y <= 7; ++y) CHECK(pp_box(x, y, 1) == binomial(x + y, x));
    }
}

TEST_CASE("height-two closed form") {
    CHECK(pp_2(1, 1) == 3);
    for (int x = 0; x <= 8; ++x) {
        CHECK(pp_2(x, 0) == 1);
        for (int y = 0; y <= 8; ++y) CHECK(pp_2(x, y) == pp_box(x, y, 2));
    }
    CHECK(pp_2(3, 2) == oracles::pp_brute(3, 2, 2));
}

TEST_CASE("proportion of pairs with emc equal to the absolute difference") {
    CHECK(proportion_emc_eq_absd(3, 3) == BigRat(9, 10));
    for (long long s = 1; s <= 20; ++s) CHECK(proportion_emc_eq_absd(s, 1) == 1);

    SUBCASE("plane-partition form of the same quantity") {
        for (long long s = 1; s <= 8; ++s) {
            for (long long n = 2; n <= 8; ++n) {
                const BigInt cnt = binomial(s + n - 1, n - 1);
                const BigRat via_pp(BigInt(2) * pp_2(static_cast<int>(s), static_cast<int>(n) - 1) - cnt,
                                    cnt * cnt);
                CHECK(proportion_emc_eq_absd(s, n) == via_pp);
            }
        }
    }

    SUBCASE("counted exactly by enumeration") {
        for (long long s = 1; s <= 4; ++s) {
            for (int n = 1; n <= 4; ++n) {
                BigInt hits = 0;
                const std::vector<Composition> comps = all_compositions(s, n);
                for (const Composition& a : comps) {
                    for (const Composition& b : comps) {
                        const long long d = weighted_total(a) - weighted_total(b);
                        if (emc({a, b}) == std::llabs(d)) hits += 1;
                    }
                }
                const BigInt cnt = composition_count(s, n);
                CHECK(proportion_emc_eq_absd(s, n) == BigRat(hits, cnt * cnt));
            }
        }
    }

    SUBCASE("approaches 2/n for many data points") {
        // n=2 is exact: every pair of two-bin histograms sits on the diagonal
        CHECK(proportion_emc_eq_absd(1000, 2) == 1);
        for (long long n = 2; n <= 5; ++n) {
            const BigRat limit(2, n);
            const BigRat near = proportion_emc_eq_absd(1000, n) - limit;
            const BigRat far = proportion_emc_eq_absd(100000, n) - limit;
            CHECK(near >= 0);
            CHECK(far >= 0);
            CHECK(near < BigRat(3, 1000));
            CHECK(far < BigRat(3, 100000));
            if (n > 2) CHECK(far < near / 50);
        }
    }
}

TEST_CASE("tail threshold") {
    CHECK(tail_threshold(3, 4) == 4);
    for (long long s = 1; s <= 10; ++s) CHECK(tail_threshold(s, 2) == 0);
    for (long long n = 1; n <= 10; ++n) CHECK(tail_threshold(1, n) == 0);

    SUBCASE("every pair at or past the threshold sits on the diagonal") {
        for (long long s = 1; s <= 4; ++s) {
            for (int n = 2; n <= 4; ++n) {
                const long long thr = tail_threshold(s, n);
                const std::vector<Composition> comps = all_compositions(s, n);
                for (const Composition& a : comps) {
                    for (const Composition& b : comps) {
                        const long long d =
                            std::llabs(weighted_total(a) - weighted_total(b));
                        if (d >= thr) CHECK(emc({a, b}) == d);
                    }
                }
            }
        }
    }

    SUBCASE("threshold is tight at s=3, n=4") {
        // some pair one step below the threshold must leave the diagonal
        const long long thr = tail_threshold(3, 4);
        bool found = false;
        const std::vector<Composition> comps = all_compositions(3, 4);
        for (const Composition& a : comps)
            for (const Composition& b : comps) {
                const long long d = std::llabs(weighted_total(a) - weighted_total(b));
                if (d == thr - 1 && emc({a, b}) != d) found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("pairs with zero difference and emc two") {
    CHECK(count_emc2_d0(1, 2) == 0);
    CHECK(count_emc2_d0(2, 3) == 2);

    SUBCASE("matches the distribution table") {
        for (long long s = 1; s <= 5; ++s)
            for (int n = 1; n <= 5; ++n)
                CHECK(count_emc2_d0(s, n) ==
                      emc_vs_d_table(s, n, 2).count_at(DValue({0}), 2));
    }
}

TEST_CASE("emc versus difference tables") {
    SUBCASE("smallest table by hand") {
        const DistributionTable t = emc_vs_d_table(1, 2, 2);
        CHECK(t.s() == 1);
        CHECK(t.n() == 2);
        CHECK(t.d() == 2);
        CHECK(t.with_emc());
        CHECK(t.entries().size() == 3);
        CHECK(t.count_at(DValue({0}), 0) == 2);
        CHECK(t.count_at(DValue({1}), 1) == 1);
        CHECK(t.count_at(DValue({-1}), 1) == 1);
    }

    SUBCASE("totals, mirror symmetry, parity, bounds, ordering") {
        for (long long s = 1; s <= 4; ++s) {
            for (int n = 2; n <= 4; ++n) {
                const DistributionTable t = emc_vs_d_table(s, n, 2);
                const BigInt cnt = composition_count(s, n);
                CHECK(t.total() == cnt * cnt);
                std::map<long long, long long> max_absd_by_emc;
                for (const auto& [key, c] : t.entries()) {
                    const long long dv = key.dvalue[0];
                    CHECK(c == t.count_at(DValue({-dv}), key.emc));
                    CHECK((key.emc - dv) % 2 == 0);
                    CHECK(key.emc >= std::llabs(dv));
                    CHECK(key.emc <= s * (n - 1));
                    auto& best = max_absd_by_emc[key.emc];
                    best = std::max(best, std::llabs(dv));
                }
                // lopsided extremes: the diagonal is populated at every emc level
                for (const auto& [e, best] : max_absd_by_emc) CHECK(best == e);
            }
        }
    }

    SUBCASE("pair tables are invariant under conjugation duality") {
        for (long long s = 1; s <= 5; ++s) {
            for (int n = 1; n <= 5; ++n) {
                const DistributionTable a = emc_vs_d_table(s, n, 2);
                const DistributionTable b = emc_vs_d_table(n - 1, static_cast<int>(s) + 1, 2);
                CHECK(a.entries() == b.entries());
            }
        }
    }

    SUBCASE("diagonal membership is diagram containment") {
        for (long long s = 1; s <= 5; ++s) {
            for (int n = 1; n <= 5; ++n) {
                const std::vector<Composition> comps = all_compositions(s, n);
                for (const Composition& a : comps) {
                    for (const Composition& b : comps) {
                        const YoungDiagram da = diagram_of(a), db = diagram_of(b);
                        const long long d =
                            std::llabs(weighted_total(a) - weighted_total(b));
                        const bool nested = contains(da, db) || contains(db, da);
                        CHECK((emc({a, b}) == d) == nested);
                    }
                }
            }
        }
    }

    SUBCASE("three histograms, keys carry two coordinates") {
        const DistributionTable t = emc_vs_d_table(1, 2, 3);
        CHECK(t.total() == 8);
        CHECK(t.count_at(DValue({0, 0}), 0) == 2);
        // totals (1,0,0), (0,1,0), (0,0,1) and complements, each emc 1
        CHECK(t.count_at(DValue({1, 0}), 1) == 1);
        CHECK(t.count_at(DValue({0, 1}), 1) == 1);
        CHECK(t.count_at(DValue({-1, -1}), 1) == 1);
        CHECK(t.count_at(DValue({0, -1}), 1) == 1);
        CHECK(t.count_at(DValue({-1, 0}), 1) == 1);
        CHECK(t.count_at(DValue({1, 1}), 1) == 1);
    }

    SUBCASE("budget refusals") {
        EnumerationBudget tiny;
        tiny.max_tuples = 10;
        CHECK_THROWS_AS(emc_vs_d_table(2, 3, 2, tiny), BudgetError);
        CHECK_THROWS_AS(emc_vs_d_table(10, 10, 4), BudgetError);
        CHECK_NOTHROW(emc_vs_d_table(1, 2, 2, tiny));
    }
}

} // TEST_SUITE
