#include "emcomb/qseries.hpp"

#include <cstdlib>
#include <stdexcept>

namespace emcomb {

LaurentPoly qbin_bracket(int a, int b) {
    if (a < 0) throw std::invalid_argument("qbin_bracket needs a >= 0");
    if (b < 0 || b > a) throw std::invalid_argument("qbin_bracket needs 0 <= b <= a");
    // row by row up the Pascal triangle; row[j] = [i over j]
    std::vector<LaurentPoly> row(static_cast<std::size_t>(b) + 1, LaurentPoly(1));
    row[0] = LaurentPoly::constant(1, 1);
    for (int i = 1; i <= a; ++i) {
        const int jmax = std::min(i, b);
        for (int j = jmax; j >= 1; --j) {
            // [i j] = [i-1 j-1] + q^j [i-1 j]
            LaurentPoly next = row[static_cast<std::size_t>(j - 1)];
            next += row[static_cast<std::size_t>(j)].shifted({j});
            row[static_cast<std::size_t>(j)] = std::move(next);
        }
    }
    return row[static_cast<std::size_t>(b)];
}

LaurentPoly qbin_paren(int a, int b) {
    const int shift = b * (a - b);
    return qbin_bracket(a, b).map_exponents(
        1, [shift](const LaurentPoly::Exponents& e) -> LaurentPoly::Exponents {
            return {2 * e[0] - shift};
        });
}

TruncatedSeries::TruncatedSeries(int arity, int tmax)
    : arity_(arity), tmax_(tmax),
      coeffs_(static_cast<std::size_t>(tmax) + 1, LaurentPoly(arity)) {
    if (tmax < 0) throw std::invalid_argument("series truncation order must be nonnegative");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.arity_ != arity_ || o.tmax_ != tmax_)
        throw std::invalid_argument("series shapes must match");
    for (int k = 0; k <= tmax_; ++k) coeffs_[static_cast<std::size_t>(k)] += o.coeffs_[static_cast<std::size_t>(k)];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.arity_ != arity_ || o.tmax_ != tmax_)
        throw std::invalid_argument("series shapes must match");
    for (int k = 0; k <= tmax_; ++k) coeffs_[static_cast<std::size_t>(k)] -= o.coeffs_[static_cast<std::size_t>(k)];
    return *this;
}

TruncatedSeries TruncatedSeries::divided_by_one_minus(const LaurentPoly::Exponents& mono) const {
    if (static_cast<int>(mono.size()) != arity_)
        throw std::invalid_argument("monomial arity must match series arity");
    TruncatedSeries out(arity_, tmax_);
    out[0] = coeffs_[0];
    for (int k = 1; k <= tmax_; ++k)
        out[k] = coeffs_[static_cast<std::size_t>(k)] + out[k - 1].shifted(mono);
    return out;
}

TruncatedSeries genfun_H(int n, int m, int tmax) {
    if (n < 0 || m < 0) throw std::invalid_argument("genfun_H needs n, m >= 0");
    if (n == 0 || m == 0) return TruncatedSeries(3, tmax);

    // fill the grid up to (n, m); H(1,1) = 1/(1-t), boundary rows are zero
    std::vector<std::vector<TruncatedSeries>> h(
        static_cast<std::size_t>(n) + 1,
        std::vector<TruncatedSeries>(static_cast<std::size_t>(m) + 1, TruncatedSeries(3, tmax)));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            if (i == 1 && j == 1) {
                for (int k = 0; k <= tmax; ++k) h[1][1][k] = LaurentPoly::constant(3, 1);
                continue;
            }
            TruncatedSeries num = h[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
            num += h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
            num -= h[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                num.divided_by_one_minus({std::abs(i - j), i - 1, j - 1});
        }
    }
    return h[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

DistributionTable distribution_from_genfun(long long s, int n) {
    if (s < 0 || n < 1) throw std::invalid_argument("distribution needs s >= 0 and n >= 1");
    if (s > 1'000'000) throw std::invalid_argument("series truncation order too large");
    const TruncatedSeries series = genfun_H(n, n, static_cast<int>(s));
    const LaurentPoly& at_s = series[static_cast<int>(s)];
    DistributionTable table(s, n, 2, true);
    for (const auto& [e, c] : at_s.terms()) {
        // e = (emc, T(alpha), T(beta))
        table.add(DValue({static_cast<long long>(e[1]) - e[2]}), e[0], c);
    }
    return table;
}

} // namespace emcomb
