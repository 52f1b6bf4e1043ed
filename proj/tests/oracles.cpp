#include "oracles.hpp"

#include <stdexcept>

namespace oracles {

using emcomb::BigInt;
using emcomb::Composition;
using emcomb::LaurentPoly;
using emcomb::TruncatedSeries;
using emcomb::YoungDiagram;

namespace {
long long pp_fill(std::vector<std::vector<int>>& grid, int x, int y, int z, int cell) {
    if (cell == x * y) return 1;
    const int i = cell / y, j = cell % y;
    const int up = i > 0 ? grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : z;
    const int left = j > 0 ? grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] : z;
    long long total = 0;
    for (int v = 0; v <= std::min(up, left); ++v) {
        grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        total += pp_fill(grid, x, y, z, cell + 1);
    }
    return total;
}
} // namespace

long long pp_brute(int x, int y, int z) {
    if (x == 0 || y == 0 || z == 0) return 1;
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(x),
                                       std::vector<int>(static_cast<std::size_t>(y), 0));
    return pp_fill(grid, x, y, z, 0);
}

int removable_cells(const YoungDiagram& d) {
    int count = 0;
    const auto& rows = d.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        // removing the last cell of row i keeps rows weakly decreasing iff
        // the next row is strictly shorter (or absent)
        const int below = i + 1 < rows.size() ? rows[i + 1] : 0;
        if (rows[i] - 1 >= below) ++count;
    }
    return count;
}

namespace {
// weakly increasing rows over {1,2,3} encoded by value counts
std::vector<std::vector<int>> rows_of_length(int len) {
    std::vector<std::vector<int>> out;
    for (int ones = 0; ones <= len; ++ones)
        for (int twos = 0; twos + ones <= len; ++twos) {
            std::vector<int> row;
            row.insert(row.end(), static_cast<std::size_t>(ones), 1);
            row.insert(row.end(), static_cast<std::size_t>(twos), 2);
            row.insert(row.end(), static_cast<std::size_t>(len - ones - twos), 3);
            out.push_back(std::move(row));
        }
    return out;
}
} // namespace

LaurentPoly sl3_irrep_character(long long w1, long long w2) {
    if (2 * w1 - w2 < 0 || 2 * w2 - w1 < 0)
        throw std::invalid_argument("sl3 character oracle needs a dominant weight");
    // two-row shape: lam1 = w1 + w2, lam2 = 2*w2 - w1; |shape| = 3*w2
    const long long lam1 = w1 + w2, lam2 = 2 * w2 - w1;
    const long long c = (lam1 + lam2) / 3;
    LaurentPoly ch(2);
    const auto top = rows_of_length(static_cast<int>(lam1));
    const auto bottom = rows_of_length(static_cast<int>(lam2));
    for (const auto& r1 : top) {
        for (const auto& r2 : bottom) {
            bool strict = true;
            for (std::size_t j = 0; j < r2.size() && strict; ++j) strict = r2[j] > r1[j];
            if (!strict) continue;
            long long m1 = 0, m3 = 0;
            const auto tally = [&m1, &m3](int v) {
                if (v == 1) ++m1;
                if (v == 3) ++m3;
            };
            for (int v : r1) tally(v);
            for (int v : r2) tally(v);
            ch.add_term({static_cast<int>(m1 - c), static_cast<int>(c - m3)}, 1);
        }
    }
    return ch;
}

TruncatedSeries h2_closed_form(int tmax) {
    TruncatedSeries num(3, tmax);
    num[0] = LaurentPoly::constant(3, 1);
    if (tmax >= 2) num[2] = LaurentPoly::monomial({2, 1, 1}, -1);
    return num.divided_by_one_minus({0, 0, 0})
        .divided_by_one_minus({0, 1, 1})
        .divided_by_one_minus({1, 1, 0})
        .divided_by_one_minus({1, 0, 1});
}

LaurentPoly h3_t2_printed() {
    LaurentPoly p(3);
    const auto add = [&p](int e, int a, int b, int coef) { p.add_term({e, a, b}, coef); };
    add(0, 0, 0, 1); add(0, 1, 1, 1); add(0, 2, 2, 2); add(0, 3, 3, 1); add(0, 4, 4, 1);
    add(1, 1, 0, 1); add(1, 0, 1, 1); add(1, 2, 1, 2); add(1, 1, 2, 2);
    add(1, 3, 2, 2); add(1, 2, 3, 2); add(1, 4, 3, 1); add(1, 3, 4, 1);
    add(2, 2, 0, 2); add(2, 3, 1, 1); add(2, 0, 2, 2); add(2, 2, 2, 2);
    add(2, 4, 2, 2); add(2, 1, 3, 1); add(2, 2, 4, 2);
    add(3, 3, 0, 1); add(3, 4, 1, 1); add(3, 0, 3, 1); add(3, 1, 4, 1);
    add(4, 4, 0, 1); add(4, 0, 4, 1);
    return p;
}

Composition random_composition(std::mt19937_64& rng, int s, int n) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    std::uniform_int_distribution<int> bin(0, n - 1);
    for (int i = 0; i < s; ++i) ++a[static_cast<std::size_t>(bin(rng))];
    return Composition(std::move(a));
}

} // namespace oracles
