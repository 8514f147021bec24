#pragma once

#include <vector>

#include "hilb/laurent.hpp"

namespace hilb {

// Truncated univariate power series with exact rational coefficients.
// Arithmetic is exact up to the stated order; mixing orders truncates to the
// smaller one.
class PowerSeries {
  public:
    explicit PowerSeries(int order) : coeffs_(order + 1, Rational(0)) {}
    PowerSeries(int order, std::vector<Rational> coeffs);

    static PowerSeries variable(int order);        // x
    static PowerSeries constant(int order, const Rational& c);
    static PowerSeries exp(int order, const Rational& scale);  // e^{scale * x}

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const { return coeffs_.at(k); }

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    PowerSeries& scale(const Rational& c);

    // exp of a series with zero constant term.
    PowerSeries exp_of() const;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    // Evaluates the polynomial with the given coefficients (low degree
    // first) at e^{scale * x}.
    static PowerSeries compose_with_exp(const std::vector<Rational>& poly,
                                        int order, const Rational& scale);

  private:
    std::vector<Rational> coeffs_;
};

}  // namespace hilb
