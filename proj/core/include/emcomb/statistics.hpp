#pragma once

#include <vector>

#include "emcomb/composition.hpp"
#include "emcomb/distribution.hpp"
#include "emcomb/error.hpp"

namespace emcomb {

// T(a_0,...,a_{n-1}) = sum of i * a_i; equals the diagram size
long long weighted_total(const Composition& c);

// canonical D-value of the tuple's weighted totals
DValue weighted_difference(const std::vector<Composition>& tuple);

// plane partitions in an x * y box with entries at most z
BigInt pp_box(int x, int y, int z);

// closed form for height 2: (x+1)...(x+y) * (x+2)...(x+y+1) / (y! (y+1)!)
BigInt pp_2(int x, int y);

// exact proportion of ordered pairs over C(s,n)^2 with EMC = |D|:
// 2(s+n)/(n(s+1)) - (n-1)!/((s+1)...(s+n-1))
BigRat proportion_emc_eq_absd(long long s, long long n);

// (s-1)(n-2); every pair with |D| at or above this has EMC = |D|
long long tail_threshold(long long s, long long n);

// sum over diagrams in Y(s,n-1) of corners*(corners-1); counts the ordered
// pairs sitting at (D,EMC) = (0,2)
BigInt count_emc2_d0(long long s, int n);

struct EnumerationBudget {
    BigInt max_tuples = 10'000'000;
};

// exhaustive table over C(s,n)^d keyed by (D-value, EMC); throws BudgetError
// when binom(s+n-1,s)^d exceeds the budget
DistributionTable emc_vs_d_table(long long s, int n, int d,
                                 const EnumerationBudget& budget = {});

} // namespace emcomb
