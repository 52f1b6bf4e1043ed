#include "emcomb/statistics.hpp"

#include <stdexcept>

#include "emcomb/emc.hpp"

namespace emcomb {

long long weighted_total(const Composition& c) {
    long long t = 0;
    for (int i = 0; i < c.n(); ++i) t += static_cast<long long>(i) * c[i];
    return t;
}

DValue weighted_difference(const std::vector<Composition>& tuple) {
    if (tuple.size() < 2) throw std::invalid_argument("a tuple needs at least two histograms");
    std::vector<long long> totals;
    totals.reserve(tuple.size());
    for (const Composition& c : tuple) {
        if (c.s() != tuple.front().s() || c.n() != tuple.front().n())
            throw std::invalid_argument("tuple histograms must share bin count and data point count");
        totals.push_back(weighted_total(c));
    }
    return DValue::from_totals(totals);
}

BigInt pp_box(int x, int y, int z) {
    if (x < 0 || y < 0 || z < 0) throw std::invalid_argument("pp_box needs nonnegative box sides");
    // the quotient is integral only in aggregate, so divide once at the end
    BigInt num = 1, den = 1;
    for (int i = 1; i <= x; ++i)
        for (int j = 1; j <= y; ++j)
            for (int k = 1; k <= z; ++k) {
                num *= i + j + k - 1;
                den *= i + j + k - 2;
            }
    return num / den;
}

BigInt pp_2(int x, int y) {
    if (x < 0 || y < 0) throw std::invalid_argument("pp_2 needs nonnegative box sides");
    return rising(x + 1, y) * rising(x + 2, y) / (factorial(y) * factorial(y + 1));
}

BigRat proportion_emc_eq_absd(long long s, long long n) {
    if (s < 1 || n < 1) throw std::invalid_argument("proportion needs s, n >= 1");
    const BigRat first(BigInt(2) * (s + n), BigInt(n) * (s + 1));
    return first - BigRat(factorial(n - 1), rising(s + 1, n - 1));
}

long long tail_threshold(long long s, long long n) {
    if (s < 1 || n < 1) throw std::invalid_argument("tail_threshold needs s, n >= 1");
    return (s - 1) * (n - 2);
}

BigInt count_emc2_d0(long long s, int n) {
    if (s < 1 || n < 1) throw std::invalid_argument("count_emc2_d0 needs s, n >= 1");
    BigInt total = 0;
    for (const Composition& c : CompositionRange(s, n)) {
        const long long k = corners(diagram_of(c));
        total += BigInt(k) * (k - 1);
    }
    return total;
}

DistributionTable emc_vs_d_table(long long s, int n, int d, const EnumerationBudget& budget) {
    if (s < 0 || n < 1 || d < 2)
        throw std::invalid_argument("emc_vs_d_table needs s >= 0, n >= 1, d >= 2");
    const BigInt single = composition_count(s, n);
    BigInt tuples = 1;
    for (int i = 0; i < d; ++i) tuples *= single;
    if (tuples > budget.max_tuples)
        throw BudgetError("enumeration budget exceeded: " + tuples.str() + " tuples > " +
                          budget.max_tuples.str());

    const std::vector<Composition> comps = all_compositions(s, n);
    std::vector<YoungDiagram> diagrams;
    std::vector<long long> totals;
    diagrams.reserve(comps.size());
    totals.reserve(comps.size());
    for (const Composition& c : comps) {
        diagrams.push_back(diagram_of(c));
        totals.push_back(weighted_total(c));
    }

    DistributionTable table(s, n, d, true);
    const std::size_t count = comps.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    std::vector<YoungDiagram> pick(static_cast<std::size_t>(d),
                                   YoungDiagram::empty(s, n - 1));
    std::vector<long long> tpick(static_cast<std::size_t>(d), 0);
    while (true) {
        for (int i = 0; i < d; ++i) {
            pick[static_cast<std::size_t>(i)] = diagrams[idx[static_cast<std::size_t>(i)]];
            tpick[static_cast<std::size_t>(i)] = totals[idx[static_cast<std::size_t>(i)]];
        }
        table.add(DValue::from_totals(tpick), unimodal_symdiff(pick), 1);

        int axis = d - 1;
        while (axis >= 0 && ++idx[static_cast<std::size_t>(axis)] == count) {
            idx[static_cast<std::size_t>(axis)] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    return table;
}

} // namespace emcomb
