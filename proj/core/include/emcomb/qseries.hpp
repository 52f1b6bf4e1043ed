#pragma once

#include <vector>

#include "emcomb/distribution.hpp"
#include "emcomb/laurent.hpp"

namespace emcomb {

// Gaussian binomial [a over b] in q, built by the Pascal recurrence
// [a b] = [a-1 b-1] + q^b [a-1 b]; throws unless 0 <= b <= a
LaurentPoly qbin_bracket(int a, int b);

// centered Laurent guise: substitute q^2 for q in [a b] and shift exponents
// by -b(a-b), giving a palindrome symmetric about q^0
LaurentPoly qbin_paren(int a, int b);

// power series in t truncated at t^tmax, coefficients are Laurent
// polynomials of a fixed arity
class TruncatedSeries {
public:
    TruncatedSeries(int arity, int tmax);

    int arity() const { return arity_; }
    int tmax() const { return tmax_; }
    LaurentPoly& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
    const LaurentPoly& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    // divide by (1 - m t) where m is one monomial in the coefficient
    // variables: r_k = self_k + m * r_{k-1}
    TruncatedSeries divided_by_one_minus(const LaurentPoly::Exponents& mono) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    int arity_;
    int tmax_;
    std::vector<LaurentPoly> coeffs_;
};

// joint generating function over pairs (alpha, beta) with alpha in C(s,n),
// beta in C(s,m): coefficient of t^s collects q^emc x^T(alpha) y^T(beta);
// coefficient variables ordered (q, x, y)
TruncatedSeries genfun_H(int n, int m, int tmax);

// two-histogram distribution read off genfun_H(n, n, s) at t^s
DistributionTable distribution_from_genfun(long long s, int n);

} // namespace emcomb
