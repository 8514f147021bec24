#include "hilb/ratfunc.hpp"

#include <algorithm>

namespace hilb {

LaurentPoly weight_factor(Flavor flavor, Weight w) {
    if (w == Weight{0, 0})
        throw std::domain_error("zero weight has no Euler factor");
    if (flavor == Flavor::K) {
        LaurentPoly p(1);
        p += LaurentPoly::monomial(-w.first, -w.second, -1);
        return p;
    }
    LaurentPoly p = LaurentPoly::monomial(1, 0, w.first);
    p += LaurentPoly::monomial(0, 1, w.second);
    return p;
}

Denominator::Denominator(Flavor flavor, const WeightMultiset& weights)
    : flavor_(flavor) {
    for (Weight w : weights) push(w);
}

int Denominator::factor_count() const {
    int n = 0;
    for (const auto& [w, m] : factors_) n += m;
    return n;
}

void Denominator::push(Weight w, int multiplicity) {
    if (w == Weight{0, 0})
        throw std::domain_error("zero weight has no Euler factor");
    factors_[w] += multiplicity;
}

LaurentPoly Denominator::expand() const {
    LaurentPoly acc(1);
    for (const auto& [w, m] : factors_) {
        LaurentPoly f = weight_factor(flavor_, w);
        for (int k = 0; k < m; ++k) acc *= f;
    }
    return acc;
}

Denominator Denominator::lcm(const Denominator& a, const Denominator& b) {
    if (a.flavor_ != b.flavor_)
        throw std::invalid_argument("denominator flavors differ");
    Denominator out = a;
    for (const auto& [w, m] : b.factors_) {
        int& cur = out.factors_[w];
        cur = std::max(cur, m);
    }
    return out;
}

LaurentPoly Denominator::expand_complement(const Denominator& sub) const {
    LaurentPoly acc(1);
    for (const auto& [w, m] : factors_) {
        auto it = sub.factors_.find(w);
        int missing = m - (it == sub.factors_.end() ? 0 : it->second);
        if (missing < 0)
            throw std::invalid_argument("complement of a non-divisor");
        LaurentPoly f = weight_factor(flavor_, w);
        for (int k = 0; k < missing; ++k) acc *= f;
    }
    return acc;
}

Denominator Denominator::swap_qt() const {
    Denominator out(flavor_);
    for (const auto& [w, m] : factors_) out.push({w.second, w.first}, m);
    return out;
}

RatFunc& RatFunc::operator*=(const LaurentPoly& p) {
    num_ *= p;
    return *this;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.flavor() != b.flavor())
        throw std::invalid_argument("rational function flavors differ");
    Denominator den = a.den_;
    for (const auto& [w, m] : b.den_.factors()) den.push(w, m);
    return {a.num_ * b.num_, den};
}

RatFunc& RatFunc::scale(const Rational& c) {
    num_.scale(c);
    return *this;
}

bool RatFunc::equals(const RatFunc& other) const {
    if (flavor() != other.flavor())
        throw std::invalid_argument("rational function flavors differ");
    return num_ * other.den_.expand() == other.num_ * den_.expand();
}

RatFunc RatFunc::dual() const {
    if (flavor() != Flavor::K)
        throw std::invalid_argument("dual is a K-theory operation");
    // 1/(1-q^i t^j) = (-q^{-i} t^{-j}) / (1 - q^{-i} t^{-j}), so the factor
    // multiset is preserved and the monomials move to the numerator.
    LaurentPoly num = num_.dual();
    for (const auto& [w, m] : den_.factors())
        for (int k = 0; k < m; ++k)
            num *= LaurentPoly::monomial(-w.first, -w.second, -1);
    return {std::move(num), den_};
}

RatFunc RatFunc::swap_qt() const {
    return {num_.swap_qt(), den_.swap_qt()};
}

LaurentPoly RatFunc::to_laurent() const {
    if (den_.trivial()) return num_;
    return divide_exact(num_, den_.expand());
}

RatFunc ratfunc_sum(std::span<const RatFunc> fs) {
    if (fs.empty()) throw std::invalid_argument("empty rational function sum");
    Denominator common = fs[0].den();
    for (std::size_t k = 1; k < fs.size(); ++k)
        common = Denominator::lcm(common, fs[k].den());
    LaurentPoly num;
    for (const RatFunc& f : fs) num += f.num() * common.expand_complement(f.den());
    return {std::move(num), std::move(common)};
}

std::optional<LaurentPoly> limit_q(const RatFunc& f, LimitDirection dir) {
    LaurentPoly num = f.num();
    LaurentPoly den = f.den().expand();
    if (dir == LimitDirection::INFINITY_) {
        num = num.substitute_powers(-1, 1);
        den = den.substitute_powers(-1, 1);
    }
    if (num.is_zero()) return LaurentPoly(0);
    int n0 = num.min_q_degree();
    int d0 = den.min_q_degree();
    if (n0 < d0) return std::nullopt;
    if (n0 > d0) return LaurentPoly(0);
    // Ratio of the lowest-order coefficients, which must itself be Laurent
    // in t for the limits the localization formulas produce.
    return divide_exact(num.q_coefficient(n0), den.q_coefficient(d0));
}

}  // namespace hilb
