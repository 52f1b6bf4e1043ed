#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "emcomb/bigint.hpp"

namespace emcomb {

// sparse Laurent polynomial in a fixed number of variables, exact integer
// coefficients, exponents may be negative; zero coefficients are never stored
class LaurentPoly {
public:
    using Exponents = std::vector<int>;

    explicit LaurentPoly(int arity);
    static LaurentPoly constant(int arity, BigInt c);
    static LaurentPoly monomial(Exponents e, BigInt c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    BigInt coeff(const Exponents& e) const;

    LaurentPoly& add_term(const Exponents& e, const BigInt& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly shifted(const Exponents& delta) const; // multiply by one monomial
    LaurentPoly scaled(const BigInt& c) const;
    BigInt coefficient_sum() const; // evaluation at all variables = 1

    // termwise exponent rewrite, for substitutions that send monomials to
    // monomials; coefficients landing on one exponent accumulate
    LaurentPoly map_exponents(int new_arity,
                              const std::function<Exponents(const Exponents&)>& fn) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

private:
    int arity_ = 0;
    std::map<Exponents, BigInt> terms_;
};

// terms sorted by total degree, ties by lexicographic exponent vector
std::string to_canonical_string(const LaurentPoly& p, std::span<const std::string> var_names);

} // namespace emcomb
