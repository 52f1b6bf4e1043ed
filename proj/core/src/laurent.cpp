#include "emcomb/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace emcomb {

LaurentPoly::LaurentPoly(int arity) : arity_(arity) {
    if (arity < 0) throw std::invalid_argument("polynomial arity must be nonnegative");
}

LaurentPoly LaurentPoly::constant(int arity, BigInt c) {
    LaurentPoly p(arity);
    if (c != 0) p.terms_.emplace(Exponents(static_cast<std::size_t>(arity), 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::monomial(Exponents e, BigInt c) {
    LaurentPoly p(static_cast<int>(e.size()));
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

BigInt LaurentPoly::coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly& LaurentPoly::add_term(const Exponents& e, const BigInt& c) {
    if (static_cast<int>(e.size()) != arity_)
        throw std::invalid_argument("exponent vector length must equal arity");
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.arity_ != arity_) throw std::invalid_argument("polynomial arities must match");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.arity_ != arity_) throw std::invalid_argument("polynomial arities must match");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("polynomial arities must match");
    LaurentPoly out(a.arity_);
    LaurentPoly::Exponents e(static_cast<std::size_t>(a.arity_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::shifted(const Exponents& delta) const {
    if (static_cast<int>(delta.size()) != arity_)
        throw std::invalid_argument("exponent vector length must equal arity");
    LaurentPoly out(arity_);
    Exponents e(delta.size());
    for (const auto& [ee, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ee[i] + delta[i];
        out.terms_.emplace(e, c);
    }
    return out;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    LaurentPoly out(arity_);
    if (c == 0) return out;
    for (const auto& [e, cc] : terms_) out.terms_.emplace(e, cc * c);
    return out;
}

BigInt LaurentPoly::coefficient_sum() const {
    BigInt total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

LaurentPoly LaurentPoly::map_exponents(
    int new_arity, const std::function<Exponents(const Exponents&)>& fn) const {
    LaurentPoly out(new_arity);
    for (const auto& [e, c] : terms_) {
        Exponents ne = fn(e);
        if (static_cast<int>(ne.size()) != new_arity)
            throw std::invalid_argument("exponent map produced wrong arity");
        out.add_term(ne, c);
    }
    return out;
}

namespace {
long long total_degree(const LaurentPoly::Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0LL);
}
} // namespace

std::string to_canonical_string(const LaurentPoly& p, std::span<const std::string> var_names) {
    if (static_cast<int>(var_names.size()) != p.arity())
        throw std::invalid_argument("need one variable name per polynomial variable");
    if (p.is_zero()) return "0";

    std::vector<const std::pair<const LaurentPoly::Exponents, BigInt>*> order;
    order.reserve(p.term_count());
    for (const auto& term : p.terms()) order.push_back(&term);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        const long long da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da < db;
        return a->first < b->first;
    });

    std::string out;
    for (std::size_t t = 0; t < order.size(); ++t) {
        const auto& [e, c] = *order[t];
        const bool negative = c < 0;
        if (t == 0) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const BigInt mag = negative ? BigInt(-c) : c;

        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += var_names[i];
            if (e[i] != 1) mono += '^' + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + '*';
            out += mono;
        }
    }
    return out;
}

} // namespace emcomb
