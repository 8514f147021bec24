#include "hilb/series.hpp"

#include <algorithm>

namespace hilb {

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Rational(0));
}

PowerSeries PowerSeries::variable(int order) {
    PowerSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

PowerSeries PowerSeries::constant(int order, const Rational& c) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::exp(int order, const Rational& scale) {
    PowerSeries s(order);
    Rational term(1);
    for (int k = 0; k <= order; ++k) {
        s.coeffs_[k] = term;
        term = term * scale / (k + 1);
    }
    return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    int order = std::min(a.order(), b.order());
    PowerSeries out(order);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order && j <= b.order(); ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return out;
}

PowerSeries& PowerSeries::scale(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
}

PowerSeries PowerSeries::compose_with_exp(const std::vector<Rational>& poly,
                                          int order, const Rational& scale) {
    PowerSeries out(order);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] == 0) continue;
        PowerSeries term = exp(order, scale * static_cast<long>(i));
        term.scale(poly[i]);
        out += term;
    }
    return out;
}

PowerSeries PowerSeries::exp_of() const {
    if (coeffs_[0] != 0)
        throw std::domain_error("exp of a series with nonzero constant term");
    int n = order();
    PowerSeries out = constant(n, 1);
    PowerSeries power = constant(n, 1);
    Rational factorial(1);
    for (int k = 1; k <= n; ++k) {
        power = power * *this;
        factorial *= k;
        PowerSeries term = power;
        term.scale(1 / factorial);
        out += term;
    }
    return out;
}

}  // namespace hilb
