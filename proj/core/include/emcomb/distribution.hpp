#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "emcomb/bigint.hpp"

namespace emcomb {

// weighted-difference class of a tuple: totals mod the all-ones shift,
// canonical representative has the last coordinate subtracted off and dropped
class DValue {
public:
    explicit DValue(std::vector<long long> coords) : coords_(std::move(coords)) {}

    static DValue from_totals(std::span<const long long> totals);

    const std::vector<long long>& coords() const { return coords_; }
    int arity() const { return static_cast<int>(coords_.size()); } // d - 1

    friend bool operator==(const DValue& a, const DValue& b) = default;
    friend auto operator<=>(const DValue& a, const DValue& b) { return a.coords_ <=> b.coords_; }

private:
    std::vector<long long> coords_;
};

struct DistKey {
    std::vector<long long> dvalue;
    long long emc = 0; // meaningful only when the table carries emc
    friend auto operator<=>(const DistKey&, const DistKey&) = default;
};

// counts of histogram tuples grouped by weighted-difference class and,
// optionally, by earth mover's coefficient
class DistributionTable {
public:
    DistributionTable(long long s, int n, int d, bool with_emc)
        : s_(s), n_(n), d_(d), with_emc_(with_emc) {}

    long long s() const { return s_; }
    int n() const { return n_; }
    int d() const { return d_; }
    bool with_emc() const { return with_emc_; }

    void add(const DValue& dv, long long emc, const BigInt& count);
    void add(const DValue& dv, const BigInt& count); // D-only tables
    const std::map<DistKey, BigInt>& entries() const { return entries_; }
    BigInt count_at(const DValue& dv, long long emc) const;
    BigInt count_at(const DValue& dv) const;
    BigInt total() const;

    DistributionTable marginal_over_emc() const;

private:
    long long s_;
    int n_;
    int d_;
    bool with_emc_;
    std::map<DistKey, BigInt> entries_;
};

// d == 2 header "D,EMC,count"; d >= 3 header "w1,...,w_{d-1},EMC,count";
// tables without emc drop that column
std::string to_csv(const DistributionTable& table);
// counts serialized as decimal strings
std::string to_json(const DistributionTable& table);

} // namespace emcomb
