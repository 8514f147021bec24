#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hilb/laurent.hpp"

namespace hilb {

// The two localization flavors: a weight (i,j) contributes the Euler factor
// 1 - q^{-i} t^{-j} in K-theory and the linear form i*q + j*t in cohomology.
enum class Flavor { K, H };

using Weight = std::pair<int, int>;
using WeightMultiset = std::vector<Weight>;

LaurentPoly weight_factor(Flavor flavor, Weight w);

// Multiset of weight factors kept unexpanded. Cancellation is syntactic:
// identical weights cancel, nothing else.
class Denominator {
  public:
    explicit Denominator(Flavor flavor) : flavor_(flavor) {}
    Denominator(Flavor flavor, const WeightMultiset& weights);

    Flavor flavor() const { return flavor_; }
    const std::map<Weight, int>& factors() const { return factors_; }
    bool trivial() const { return factors_.empty(); }
    int factor_count() const;

    void push(Weight w, int multiplicity = 1);
    LaurentPoly expand() const;

    static Denominator lcm(const Denominator& a, const Denominator& b);
    // Product of the factors of *this missing from sub (sub must divide).
    LaurentPoly expand_complement(const Denominator& sub) const;

    Denominator swap_qt() const;

    friend bool operator==(const Denominator&, const Denominator&) = default;

  private:
    Flavor flavor_;
    std::map<Weight, int> factors_;
};

// num / prod(den): the only rational functions the localization formulas
// produce. Denominators are expanded no earlier than division or limit time.
class RatFunc {
  public:
    explicit RatFunc(Flavor flavor) : num_(0), den_(flavor) {}
    RatFunc(LaurentPoly num, Denominator den)
        : num_(std::move(num)), den_(std::move(den)) {}

    const LaurentPoly& num() const { return num_; }
    const Denominator& den() const { return den_; }
    Flavor flavor() const { return den_.flavor(); }

    RatFunc& operator*=(const LaurentPoly& p);
    friend RatFunc operator*(RatFunc f, const LaurentPoly& p) { return f *= p; }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return {-num_, den_}; }
    RatFunc& scale(const Rational& c);

    // Value-semantics equality via cross multiplication.
    bool equals(const RatFunc& other) const;

    RatFunc dual() const;     // q -> 1/q, t -> 1/t (K flavor only)
    RatFunc swap_qt() const;  // q <-> t

    // Exact quotient; IntegralityError when the denominator fails to divide.
    LaurentPoly to_laurent() const;

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

  private:
    LaurentPoly num_;
    Denominator den_;
};

// Exact sum over the least common multiset of denominators.
RatFunc ratfunc_sum(std::span<const RatFunc> fs);

enum class LimitDirection { ZERO, INFINITY_ };

// Limit of f as q -> 0 or q -> infinity, as a Laurent polynomial in t;
// std::nullopt means the limit diverges.
std::optional<LaurentPoly> limit_q(const RatFunc& f, LimitDirection dir);

}  // namespace hilb
