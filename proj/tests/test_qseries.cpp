#include <doctest.h>

#include <map>
#include <vector>

#include "emcomb/bigint.hpp"
#include "emcomb/composition.hpp"
#include "emcomb/emc.hpp"
#include "emcomb/qseries.hpp"
#include "emcomb/statistics.hpp"
#include "oracles.hpp"

using namespace emcomb;

namespace {
// counts diagrams inside the s-by-(n-1) box grouped by size
std::map<long long, BigInt> box_size_counts(int s, int n) {
    std::map<long long, BigInt> counts;
    for (const Composition& a : all_compositions(s, n)) counts[diagram_of(a).size()] += 1;
    return counts;
}
} // namespace

TEST_SUITE("qseries") {

TEST_CASE("bracket binomial small values") {
    CHECK(qbin_bracket(0, 0) == LaurentPoly::constant(1, 1));

    LaurentPoly two_one(1);
    two_one.add_term({0}, 1);
    two_one.add_term({1}, 1);
    CHECK(qbin_bracket(2, 1) == two_one);

    LaurentPoly four_two(1);
    four_two.add_term({0}, 1);
    four_two.add_term({1}, 1);
    four_two.add_term({2}, 2);
    four_two.add_term({3}, 1);
    four_two.add_term({4}, 1);
    CHECK(qbin_bracket(4, 2) == four_two);

    CHECK_THROWS_AS(qbin_bracket(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(qbin_bracket(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(qbin_bracket(-1, 0), std::invalid_argument);
}

TEST_CASE("bracket counts diagrams in a box by size") {
    for (int s = 1; s <= 6; ++s) {
        for (int n = 1; n <= 6; ++n) {
            const LaurentPoly p = qbin_bracket(s + n - 1, s);
            const auto counts = box_size_counts(s, n);
            BigInt listed = 0;
            for (const auto& [e, c] : p.terms()) {
                auto it = counts.find(e[0]);
                REQUIRE(it != counts.end());
                CHECK(c == it->second);
                listed += 1;
            }
            CHECK(listed == BigInt(counts.size()));
            CHECK(p.coefficient_sum() == binomial(s + n - 1, s));
            CHECK(p.coeff({static_cast<int>(s) * (n - 1)}) == 1);
        }
    }
}

TEST_CASE("bracket symmetry in the lower index") {
    for (int a = 0; a <= 9; ++a)
        for (int b = 0; b <= a; ++b) CHECK(qbin_bracket(a, b) == qbin_bracket(a, a - b));
}

TEST_CASE("paren guise") {
    LaurentPoly p21(1);
    p21.add_term({-1}, 1);
    p21.add_term({1}, 1);
    CHECK(qbin_paren(2, 1) == p21);

    LaurentPoly p31(1);
    p31.add_term({-2}, 1);
    p31.add_term({0}, 1);
    p31.add_term({2}, 1);
    CHECK(qbin_paren(3, 1) == p31);

    SUBCASE("palindrome under exponent reversal") {
        const LaurentPoly p = qbin_paren(5, 2);
        const LaurentPoly rev = p.map_exponents(
            1, [](const LaurentPoly::Exponents& e) -> LaurentPoly::Exponents { return {-e[0]}; });
        CHECK(rev == p);
    }

    SUBCASE("paren equals bracket after doubling q and centering") {
        for (int s = 0; s <= 6; ++s) {
            for (int n = 1; n <= 6; ++n) {
                const int a = s + n - 1;
                const LaurentPoly paren = qbin_paren(a, s);
                const int shift = s * (n - 1);
                const LaurentPoly converted = qbin_bracket(a, s).map_exponents(
                    1, [shift](const LaurentPoly::Exponents& e) -> LaurentPoly::Exponents {
                        return {2 * e[0] - shift};
                    });
                CHECK(paren == converted);
            }
        }
    }
}

TEST_CASE("series base cases") {
    const TruncatedSeries h11 = genfun_H(1, 1, 7);
    for (int k = 0; k <= 7; ++k) CHECK(h11[k] == LaurentPoly::constant(3, 1));

    const TruncatedSeries h03 = genfun_H(0, 3, 4);
    const TruncatedSeries h30 = genfun_H(3, 0, 4);
    for (int k = 0; k <= 4; ++k) {
        CHECK(h03[k].is_zero());
        CHECK(h30[k].is_zero());
    }
}

TEST_CASE("two-bin series matches its closed form through t^8") {
    CHECK(genfun_H(2, 2, 8) == oracles::h2_closed_form(8));
}

TEST_CASE("three-bin series t^2 coefficient, pinned expansion") {
    const TruncatedSeries h33 = genfun_H(3, 3, 2);
    CHECK(h33[2] == oracles::h3_t2_printed());
    CHECK(h33[2].coefficient_sum() == binomial(4, 2) * binomial(4, 2));
    CHECK(h33[0] == LaurentPoly::constant(3, 1));
}

TEST_CASE("series coefficients count pairs by emc and totals") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            const TruncatedSeries h = genfun_H(n, m, 4);
            for (int s = 0; s <= 4; ++s) {
                LaurentPoly expect(3);
                for (const Composition& a : all_compositions(s, n)) {
                    for (const Composition& b : all_compositions(s, m)) {
                        // emc needs one common bin count, so pad the narrow side
                        const int width = std::max(n, m);
                        std::vector<int> ea(a.entries().begin(), a.entries().end());
                        std::vector<int> eb(b.entries().begin(), b.entries().end());
                        ea.resize(static_cast<std::size_t>(width), 0);
                        eb.resize(static_cast<std::size_t>(width), 0);
                        const long long e = emc({Composition(ea), Composition(eb)});
                        expect.add_term({static_cast<int>(e),
                                         static_cast<int>(weighted_total(a)),
                                         static_cast<int>(weighted_total(b))},
                                        1);
                    }
                }
                CHECK(h[s] == expect);
            }
        }
    }
}

TEST_CASE("distribution read off the series") {
    SUBCASE("smallest case, by hand") {
        const DistributionTable t = distribution_from_genfun(1, 2);
        CHECK(t.total() == 4);
        CHECK(t.count_at(DValue({0}), 0) == 2);
        CHECK(t.count_at(DValue({1}), 1) == 1);
        CHECK(t.count_at(DValue({-1}), 1) == 1);
    }

    SUBCASE("totals and origin mass") {
        for (int s = 1; s <= 5; ++s) {
            for (int n = 2; n <= 5; ++n) {
                const DistributionTable t = distribution_from_genfun(s, n);
                const BigInt cnt = binomial(s + n - 1, s);
                CHECK(t.total() == cnt * cnt);
                CHECK(t.count_at(DValue({0}), 0) == cnt);
            }
        }
    }

    SUBCASE("agrees with direct enumeration") {
        for (int s = 1; s <= 4; ++s) {
            for (int n = 2; n <= 4; ++n) {
                const DistributionTable brute = emc_vs_d_table(s, n, 2);
                const DistributionTable series = distribution_from_genfun(s, n);
                CHECK(brute.entries() == series.entries());
            }
        }
    }
}

} // TEST_SUITE
