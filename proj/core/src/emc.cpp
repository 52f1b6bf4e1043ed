#include "emcomb/emc.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace emcomb {

long long cost(std::span<const int> position) {
    if (position.empty()) throw std::invalid_argument("cost needs at least one coordinate");
    std::vector<int> x(position.begin(), position.end());
    std::sort(x.begin(), x.end());
    const std::size_t d = x.size();
    long long total = 0;
    for (std::size_t i = 0; i < d / 2; ++i) total += x[d - 1 - i] - x[i];
    return total;
}

long long cost_median_oracle(std::span<const int> position) {
    if (position.empty()) throw std::invalid_argument("cost needs at least one coordinate");
    const int lo = *std::min_element(position.begin(), position.end());
    const int hi = *std::max_element(position.begin(), position.end());
    long long best = std::numeric_limits<long long>::max();
    for (int t = lo; t <= hi; ++t) {
        long long c = 0;
        for (int xi : position) c += std::abs(static_cast<long long>(xi) - t);
        best = std::min(best, c);
    }
    return best;
}

namespace {
// EMC <= s*(n-1)*floor(d/2); everything here stays in 64 bits once that does
void check_emc_range(long long s, int n, int d) {
    const long long cap = std::numeric_limits<long long>::max();
    if (s > 0 && n > 1 && s > cap / (n - 1) / std::max(1, d / 2))
        throw std::overflow_error("emc bound exceeds the 64-bit range");
}
} // namespace

WordMatrix::WordMatrix(const std::vector<Composition>& tuple) {
    if (tuple.size() < 2) throw std::invalid_argument("a tuple needs at least two histograms");
    s_ = tuple.front().s();
    n_ = tuple.front().n();
    check_emc_range(s_, n_, static_cast<int>(tuple.size()));
    words_.reserve(tuple.size());
    for (const Composition& c : tuple) {
        if (c.s() != s_ || c.n() != n_)
            throw std::invalid_argument("tuple histograms must share bin count and data point count");
        words_.push_back(word_of(c));
    }
}

std::vector<int> WordMatrix::column(long long j) const {
    if (j < 0 || j >= s_) throw std::invalid_argument("word matrix column out of range");
    std::vector<int> col(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) col[i] = words_[i][j];
    return col;
}

long long emc_rsk(const std::vector<Composition>& tuple) {
    const WordMatrix m(tuple);
    std::vector<int> col(static_cast<std::size_t>(m.d()));
    long long total = 0;
    for (long long j = 0; j < m.s(); ++j) {
        for (int i = 0; i < m.d(); ++i) col[static_cast<std::size_t>(i)] = m.row(i)[j];
        total += cost(col);
    }
    return total;
}

RskTrace emc_rsk_trace(const std::vector<Composition>& tuple) {
    const WordMatrix m(tuple);
    RskTrace trace;
    for (long long j = 0; j < m.s(); ++j) {
        trace.columns.push_back(m.column(j));
        trace.column_costs.push_back(cost(trace.columns.back()));
        trace.total += trace.column_costs.back();
    }
    return trace;
}

namespace {
void check_common_box(const std::vector<YoungDiagram>& diagrams) {
    if (diagrams.empty()) throw std::invalid_argument("need at least one diagram");
    for (const YoungDiagram& d : diagrams)
        if (d.max_rows() != diagrams.front().max_rows() || d.max_cols() != diagrams.front().max_cols())
            throw std::invalid_argument("diagrams must share a bounding box");
}

// per row: k(c) = number of diagrams whose row covers column c, contribution
// sum_c min(k(c), d - k(c)); cnt is scratch of size max_cols + 1
long long row_cost(const std::vector<YoungDiagram>& diagrams, long long i, std::vector<int>& cnt) {
    const int d = static_cast<int>(diagrams.size());
    int width = 0;
    std::fill(cnt.begin(), cnt.end(), 0);
    for (const YoungDiagram& dg : diagrams) {
        const int r = dg.row(i);
        ++cnt[static_cast<std::size_t>(r)];
        width = std::max(width, r);
    }
    long long total = 0;
    int k = d - cnt[0]; // rows longer than column 0
    for (int c = 0; c < width; ++c) {
        total += std::min(k, d - k);
        k -= cnt[static_cast<std::size_t>(c + 1)];
    }
    return total;
}
} // namespace

long long unimodal_symdiff(const std::vector<YoungDiagram>& diagrams) {
    check_common_box(diagrams);
    long long occupied = 0;
    for (const YoungDiagram& d : diagrams)
        occupied = std::max(occupied, static_cast<long long>(d.rows().size()));
    std::vector<int> cnt(static_cast<std::size_t>(diagrams.front().max_cols()) + 1);
    long long total = 0;
    for (long long i = 0; i < occupied; ++i) total += row_cost(diagrams, i, cnt);
    return total;
}

SymdiffTrace unimodal_symdiff_trace(const std::vector<YoungDiagram>& diagrams) {
    check_common_box(diagrams);
    const int d = static_cast<int>(diagrams.size());
    const int width = diagrams.front().max_cols();
    long long occupied = 0;
    for (const YoungDiagram& dg : diagrams)
        occupied = std::max(occupied, static_cast<long long>(dg.rows().size()));
    SymdiffTrace trace;
    for (long long i = 0; i < occupied; ++i) {
        std::vector<int> row(static_cast<std::size_t>(width), 0);
        for (int c = 0; c < width; ++c) {
            int k = 0;
            for (const YoungDiagram& dg : diagrams)
                if (dg.row(i) > c) ++k;
            row[static_cast<std::size_t>(c)] = std::min(k, d - k);
            trace.total += row[static_cast<std::size_t>(c)];
        }
        trace.cell_weights.push_back(std::move(row));
    }
    return trace;
}

long long emc(const std::vector<Composition>& tuple) {
    if (tuple.size() < 2) throw std::invalid_argument("a tuple needs at least two histograms");
    check_emc_range(tuple.front().s(), tuple.front().n(), static_cast<int>(tuple.size()));
    std::vector<YoungDiagram> diagrams;
    diagrams.reserve(tuple.size());
    for (const Composition& c : tuple) {
        if (c.s() != tuple.front().s() || c.n() != tuple.front().n())
            throw std::invalid_argument("tuple histograms must share bin count and data point count");
        diagrams.push_back(diagram_of(c));
    }
    return unimodal_symdiff(diagrams);
}

namespace {
struct TransportSearch {
    int d = 0, n = 0;
    long long cells = 0;
    std::vector<std::vector<int>> residual;  // residual[i][v]
    std::vector<std::vector<int>> coords;    // coords[t] decoded lex, axis 0 major
    std::vector<long long> cell_cost;
    long long best = 0;
    long long nodes = 0;
    static constexpr long long kNodeBudget = 20'000'000;

    void dfs(long long t, long long cost_so_far) {
        if (++nodes > kNodeBudget)
            throw BudgetError("transport oracle search budget exceeded");
        if (cost_so_far >= best) return;
        if (t == cells) {
            if (residual[0][static_cast<std::size_t>(n - 1)] == 0) best = cost_so_far;
            return;
        }
        const auto& x = coords[static_cast<std::size_t>(t)];
        // once the lex order leaves axis-0 block j-1 its residual is unreachable
        if (x[0] > 0) {
            bool first_of_block = true;
            for (int i = 1; i < d; ++i)
                if (x[static_cast<std::size_t>(i)] != 0) { first_of_block = false; break; }
            if (first_of_block && residual[0][static_cast<std::size_t>(x[0] - 1)] != 0) return;
        }
        int u = std::numeric_limits<int>::max();
        for (int i = 0; i < d; ++i)
            u = std::min(u, residual[static_cast<std::size_t>(i)][static_cast<std::size_t>(x[static_cast<std::size_t>(i)])]);
        for (int v = u; v >= 0; --v) {
            for (int i = 0; i < d; ++i)
                residual[static_cast<std::size_t>(i)][static_cast<std::size_t>(x[static_cast<std::size_t>(i)])] -= v;
            dfs(t + 1, cost_so_far + v * cell_cost[static_cast<std::size_t>(t)]);
            for (int i = 0; i < d; ++i)
                residual[static_cast<std::size_t>(i)][static_cast<std::size_t>(x[static_cast<std::size_t>(i)])] += v;
        }
    }
};
} // namespace

long long emc_transport_oracle(const std::vector<Composition>& tuple) {
    const WordMatrix m(tuple);
    const int d = m.d();
    const int n = m.n();
    const long long s = m.s();

    long long cells = 1;
    for (int i = 0; i < d; ++i) {
        cells *= n;
        if (cells > 64) throw BudgetError("transport oracle refuses instances with n^d > 64");
    }
    if (!(s <= 6 || (d == 2 && s <= 24)))
        throw BudgetError("transport oracle refuses instances with s this large");

    TransportSearch ts;
    ts.d = d;
    ts.n = n;
    ts.cells = cells;
    for (const Composition& c : tuple) ts.residual.push_back(c.entries());
    ts.coords.resize(static_cast<std::size_t>(cells));
    ts.cell_cost.resize(static_cast<std::size_t>(cells));
    for (long long t = 0; t < cells; ++t) {
        std::vector<int> x(static_cast<std::size_t>(d));
        long long rem = t;
        for (int i = d - 1; i >= 0; --i) {
            x[static_cast<std::size_t>(i)] = static_cast<int>(rem % n);
            rem /= n;
        }
        ts.cell_cost[static_cast<std::size_t>(t)] = cost(x);
        ts.coords[static_cast<std::size_t>(t)] = std::move(x);
    }
    ts.best = s * (n - 1) * (d / 2) + 1; // any feasible plan costs less
    ts.dfs(0, 0);
    return ts.best;
}

long long emc_prefix_oracle(const Composition& a, const Composition& b) {
    if (a.s() != b.s() || a.n() != b.n())
        throw std::invalid_argument("tuple histograms must share bin count and data point count");
    long long diff = 0, total = 0;
    for (int j = 0; j < a.n(); ++j) {
        diff += a[j] - b[j];
        total += std::abs(diff);
    }
    return total;
}

} // namespace emcomb
