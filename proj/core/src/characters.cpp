#include "emcomb/characters.hpp"

#include <cmath>
#include <stdexcept>

#include "emcomb/qseries.hpp"

namespace emcomb {

LaurentPoly char_V(long long s, int n, int d) {
    if (s < 0 || n < 1 || d < 2) throw std::invalid_argument("char_V needs s >= 0, n >= 1, d >= 2");
    if (s + n - 1 > 1'000'000)
        throw std::invalid_argument("char_V bracket degree too large");
    const LaurentPoly bracket = qbin_bracket(static_cast<int>(s + n - 1), static_cast<int>(s));

    const int arity = d - 1;
    LaurentPoly p = LaurentPoly::constant(arity, 1);
    for (int i = 0; i < arity; ++i) {
        const LaurentPoly factor = bracket.map_exponents(
            arity, [arity, i](const LaurentPoly::Exponents& e) {
                LaurentPoly::Exponents ne(static_cast<std::size_t>(arity), 0);
                ne[static_cast<std::size_t>(i)] = e[0];
                return ne;
            });
        p = p * factor;
    }
    // x_d = (x_1...x_{d-1})^{-1}: each q^w term of the last factor shifts
    // every exponent down by w
    LaurentPoly out(arity);
    const LaurentPoly::Exponents ones(static_cast<std::size_t>(arity), 1);
    for (const auto& [e, c] : bracket.terms()) {
        LaurentPoly::Exponents delta(static_cast<std::size_t>(arity), -e[0]);
        out += p.shifted(delta).scaled(c);
    }
    return out;
}

DistributionTable d_distribution_bruteforce(long long s, int n, int d,
                                            const EnumerationBudget& budget) {
    if (s < 0 || n < 1 || d < 2)
        throw std::invalid_argument("d_distribution_bruteforce needs s >= 0, n >= 1, d >= 2");
    const BigInt single = composition_count(s, n);
    BigInt tuples = 1;
    for (int i = 0; i < d; ++i) tuples *= single;
    if (tuples > budget.max_tuples)
        throw BudgetError("enumeration budget exceeded: " + tuples.str() + " tuples > " +
                          budget.max_tuples.str());

    std::vector<long long> totals;
    for (const Composition& c : CompositionRange(s, n)) totals.push_back(weighted_total(c));

    DistributionTable table(s, n, d, false);
    const std::size_t count = totals.size();
    std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
    std::vector<long long> tpick(static_cast<std::size_t>(d), 0);
    while (true) {
        for (int i = 0; i < d; ++i) tpick[static_cast<std::size_t>(i)] = totals[idx[static_cast<std::size_t>(i)]];
        table.add(DValue::from_totals(tpick), 1);

        int axis = d - 1;
        while (axis >= 0 && ++idx[static_cast<std::size_t>(axis)] == count) {
            idx[static_cast<std::size_t>(axis)] = 0;
            --axis;
        }
        if (axis < 0) break;
    }
    return table;
}

DistributionTable table_of_character(const LaurentPoly& ch, long long s, int n) {
    DistributionTable table(s, n, ch.arity() + 1, false);
    for (const auto& [e, c] : ch.terms()) {
        std::vector<long long> w(e.begin(), e.end());
        table.add(DValue(std::move(w)), c);
    }
    return table;
}

bool is_dominant_sl3(long long w1, long long w2) {
    return 2 * w1 - w2 >= 0 && 2 * w2 - w1 >= 0;
}

VirtualDecomposition decompose_sl3(const LaurentPoly& ch) {
    if (ch.arity() != 2)
        throw std::invalid_argument("decompose_sl3 needs a two-variable (d=3) character");
    // Weyl denominator (1 - x1^-1)(1 - x2^-1)(1 - (x1 x2)^-1), expanded
    LaurentPoly denom(2);
    denom.add_term({0, 0}, 1);
    denom.add_term({-1, 0}, -1);
    denom.add_term({0, -1}, -1);
    denom.add_term({-2, -1}, 1);
    denom.add_term({-1, -2}, 1);
    denom.add_term({-2, -2}, -1);

    const LaurentPoly product = ch * denom;
    VirtualDecomposition out;
    for (const auto& [e, c] : product.terms()) {
        if (is_dominant_sl3(e[0], e[1]))
            out[{static_cast<long long>(e[0]), static_cast<long long>(e[1])}] = c;
    }
    return out;
}

std::pair<double, double> cartesian_sl3(long long w1, long long w2) {
    const double x = static_cast<double>(w1) - 0.5 * static_cast<double>(w2);
    const double y = std::sqrt(3.0) / 2.0 * static_cast<double>(w2);
    return {x, y};
}

std::vector<WeightPoint> weight_diagram_export(const DistributionTable& dtable, bool cartesian) {
    if (cartesian && dtable.d() != 3)
        throw std::invalid_argument("cartesian plot coordinates are defined for d = 3");
    const DistributionTable flat = dtable.with_emc() ? dtable.marginal_over_emc() : dtable;
    std::vector<WeightPoint> rows;
    rows.reserve(flat.entries().size());
    for (const auto& [k, c] : flat.entries()) {
        WeightPoint p;
        p.w = k.dvalue;
        p.count = c;
        if (cartesian) {
            p.has_xy = true;
            std::tie(p.px, p.py) = cartesian_sl3(k.dvalue[0], k.dvalue[1]);
        }
        rows.push_back(std::move(p));
    }
    return rows;
}

std::vector<WeightPoint> weight_diagram_export(const LaurentPoly& ch, long long s, int n,
                                               bool cartesian) {
    return weight_diagram_export(table_of_character(ch, s, n), cartesian);
}

} // namespace emcomb
