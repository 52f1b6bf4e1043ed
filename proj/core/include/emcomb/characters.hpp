#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "emcomb/distribution.hpp"
#include "emcomb/laurent.hpp"
#include "emcomb/statistics.hpp"

namespace emcomb {

// character of V = (Sym^s C^n)^{tensor d} as a Laurent polynomial in
// x_1..x_{d-1}: the product of d Gaussian binomials [s+n-1 over s], the last
// one evaluated at x_d = (x_1...x_{d-1})^{-1}. The coefficient at exponent
// vector w counts the d-tuples of histograms whose D-value is w.
LaurentPoly char_V(long long s, int n, int d);

// independent route to the same map by enumerating C(s,n)^d
DistributionTable d_distribution_bruteforce(long long s, int n, int d,
                                            const EnumerationBudget& budget = {});

DistributionTable table_of_character(const LaurentPoly& ch, long long s, int n);

// signed multiplicities of a d=3 character, keyed by dominant weight in
// sigma coordinates; negative values mark virtual summands
using VirtualDecomposition = std::map<std::array<long long, 2>, BigInt>;

// w1*sigma1 + w2*sigma2 is dominant iff 2w1-w2 >= 0 and 2w2-w1 >= 0
bool is_dominant_sl3(long long w1, long long w2);

VirtualDecomposition decompose_sl3(const LaurentPoly& ch);

// plot embedding with sigma1 at 0 degrees and sigma2 at 120 degrees,
// unit steps along both axes
std::pair<double, double> cartesian_sl3(long long w1, long long w2);

struct WeightPoint {
    std::vector<long long> w;
    BigInt count;
    bool has_xy = false; // px,py filled only for d == 3
    double px = 0.0;
    double py = 0.0;
};

// rows of a weight diagram, sorted by coordinate vector
std::vector<WeightPoint> weight_diagram_export(const DistributionTable& dtable, bool cartesian);
std::vector<WeightPoint> weight_diagram_export(const LaurentPoly& ch, long long s, int n,
                                               bool cartesian);

} // namespace emcomb
