#pragma once

#include <span>
#include <vector>

#include "emcomb/composition.hpp"
#include "emcomb/error.hpp"

namespace emcomb {

// transport cost of equalizing one data point per histogram at the given bin
// positions: sum over i < d/2 of (sorted[d-1-i] - sorted[i])
long long cost(std::span<const int> position);

// same value, by exhausting integer meeting points (independent route)
long long cost_median_oracle(std::span<const int> position);

// the d words of a tuple stacked as rows; all histograms must share s and n
class WordMatrix {
public:
    explicit WordMatrix(const std::vector<Composition>& tuple);

    int d() const { return static_cast<int>(words_.size()); }
    long long s() const { return s_; }
    int n() const { return n_; }
    const Word& row(int i) const { return words_[static_cast<std::size_t>(i)]; }
    std::vector<int> column(long long j) const;

private:
    std::vector<Word> words_;
    long long s_ = 0;
    int n_ = 0;
};

// earth mover's coefficient: minimum total transport cost to make the d
// histograms of the tuple identical, moving one data point one bin at cost 1
long long emc(const std::vector<Composition>& tuple);

// column-by-column route through the word matrix
long long emc_rsk(const std::vector<Composition>& tuple);

// cellwise min(k, d-k) over the common bounding box, where k is the number
// of diagrams containing the cell
long long unimodal_symdiff(const std::vector<YoungDiagram>& diagrams);

// exhaustive search over transport plans; refuses instances outside
// n^d <= 64 with s <= 6 (s <= 24 when d == 2) by throwing BudgetError
long long emc_transport_oracle(const std::vector<Composition>& tuple);

// two-histogram shortcut: sum of |prefix difference| over bins
long long emc_prefix_oracle(const Composition& a, const Composition& b);

struct RskTrace {
    std::vector<std::vector<int>> columns; // s columns of d bin indices
    std::vector<long long> column_costs;
    long long total = 0;
};
RskTrace emc_rsk_trace(const std::vector<Composition>& tuple);

struct SymdiffTrace {
    // min(k, d-k) for each cell of the occupied rows, full box width
    std::vector<std::vector<int>> cell_weights;
    long long total = 0;
};
SymdiffTrace unimodal_symdiff_trace(const std::vector<YoungDiagram>& diagrams);

} // namespace emcomb
