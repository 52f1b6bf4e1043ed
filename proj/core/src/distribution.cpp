#include "emcomb/distribution.hpp"

#include <stdexcept>

#include <json.hpp>

namespace emcomb {

DValue DValue::from_totals(std::span<const long long> totals) {
    if (totals.empty()) throw std::invalid_argument("need at least one total");
    std::vector<long long> coords(totals.begin(), totals.end() - 1);
    for (long long& c : coords) c -= totals.back();
    return DValue(std::move(coords));
}

void DistributionTable::add(const DValue& dv, long long emc, const BigInt& count) {
    if (!with_emc_) throw std::invalid_argument("this table does not carry emc");
    if (dv.arity() != d_ - 1) throw std::invalid_argument("weighted-difference arity must be d-1");
    if (count == 0) return;
    entries_[DistKey{dv.coords(), emc}] += count;
}

void DistributionTable::add(const DValue& dv, const BigInt& count) {
    if (with_emc_) throw std::invalid_argument("this table carries emc, pass one");
    if (dv.arity() != d_ - 1) throw std::invalid_argument("weighted-difference arity must be d-1");
    if (count == 0) return;
    entries_[DistKey{dv.coords(), 0}] += count;
}

BigInt DistributionTable::count_at(const DValue& dv, long long emc) const {
    const auto it = entries_.find(DistKey{dv.coords(), emc});
    return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt DistributionTable::count_at(const DValue& dv) const { return count_at(dv, 0); }

BigInt DistributionTable::total() const {
    BigInt t = 0;
    for (const auto& [k, c] : entries_) t += c;
    return t;
}

DistributionTable DistributionTable::marginal_over_emc() const {
    DistributionTable out(s_, n_, d_, false);
    for (const auto& [k, c] : entries_) out.add(DValue(k.dvalue), c);
    return out;
}

std::string to_csv(const DistributionTable& table) {
    std::string out;
    if (table.d() == 2) {
        out += "D";
    } else {
        for (int i = 1; i < table.d(); ++i) {
            if (i > 1) out += ',';
            out += 'w' + std::to_string(i);
        }
    }
    if (table.with_emc()) out += ",EMC";
    out += ",count\n";
    for (const auto& [k, c] : table.entries()) {
        std::string row;
        for (std::size_t i = 0; i < k.dvalue.size(); ++i) {
            if (i) row += ',';
            row += std::to_string(k.dvalue[i]);
        }
        if (table.with_emc()) row += ',' + std::to_string(k.emc);
        row += ',' + c.str();
        out += row;
        out += '\n';
    }
    return out;
}

std::string to_json(const DistributionTable& table) {
    nlohmann::ordered_json j;
    j["s"] = table.s();
    j["n"] = table.n();
    j["d"] = table.d();
    j["with_emc"] = table.with_emc();
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& [k, c] : table.entries()) {
        nlohmann::ordered_json row;
        row["d"] = k.dvalue;
        if (table.with_emc()) row["emc"] = k.emc;
        row["count"] = c.str();
        j["entries"].push_back(std::move(row));
    }
    return j.dump();
}

} // namespace emcomb
