#pragma once

#include <stdexcept>
#include <string>

namespace emcomb {

// thrown when an exhaustive routine would exceed its enumeration budget
// or an oracle is asked for an instance outside its tractability guard
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace emcomb
