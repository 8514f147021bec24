#pragma once

#include "hilb/localization.hpp"

namespace hilb {

// Class on the nested Hilbert scheme Hilb^{n,n+1} in the fixed-point model:
// one value per nested fixed point.
class NestedClass {
  public:
    NestedClass(Theory theory, int n);

    Theory theory() const { return theory_; }
    int n() const { return n_; }

    const LaurentPoly& at(const NestedPoint& pt) const;
    void set(const NestedPoint& pt, LaurentPoly value);
    const std::map<NestedPoint, LaurentPoly>& values() const { return values_; }

    friend NestedClass operator*(const NestedClass& a, const NestedClass& b);
    NestedClass& operator-=(const NestedClass& rhs);
    friend NestedClass operator-(NestedClass a, const NestedClass& b) { return a -= b; }

    friend bool operator==(const NestedClass&, const NestedClass&) = default;

  private:
    Theory theory_;
    int n_;
    std::map<NestedPoint, LaurentPoly> values_;
};

// Restriction of the tautological line bundle Q^m at a nested fixed point:
// (q^k t^l)^m for the corner (k,l).
LaurentPoly restrict_Q(const NestedPoint& pt, int power);

// c_1(Q) at a nested fixed point: k*q + l*t.
LaurentPoly restrict_c1Q(const NestedPoint& pt);

NestedClass nested_unit(Theory theory, int n);
NestedClass nested_Q_power(int n, int m);     // K-theory class Q^m
NestedClass nested_c1Q_power(int n, int m);   // cohomology class c_1(Q)^m

// Ratio of Euler classes eu(T Hilb^{n+1}) / eu(T Hilb^{n,n+1}) at a nested
// point, with coinciding weights cancelled before anything is expanded.
RatFunc r_function(const NestedPoint& pt);
RatFunc r_tilde(const NestedPoint& pt);  // q^k t^l * r
RatFunc r_function_H(const NestedPoint& pt);

// The appendix function library.
struct AppendixFunc {
    enum Kind { W, U, R } kind = W;
    int a = 0, b = 0;   // W_{a,b} or U_{a,b}
    NestedPoint point;  // R_{lambda,c}

    static AppendixFunc make_W(int a, int b) { return {W, a, b, {}}; }
    static AppendixFunc make_U(int a, int b) { return {U, a, b, {}}; }
    static AppendixFunc make_R(NestedPoint pt) { return {R, 0, 0, std::move(pt)}; }
};

RatFunc appendix_eval(const AppendixFunc& f);

// Localization pushforward along pi: Hilb^{n,n+1} -> Hilb^{n+1}. Every
// restriction must clear its denominator exactly; failure to do so throws
// IntegralityError and falsifies the theorem being exercised.
EquivClass push_K(const NestedClass& cls);
EquivClass push_H(const NestedClass& cls);

// The un-divided local sum at one target fixed point, for limit arguments.
RatFunc push_ratfunc_at(const NestedClass& cls, const Partition& lambda);

// Pullbacks along the two projections: p restricts through the partition
// with the corner removed, pi through the partition itself.
NestedClass pullback_p(const EquivClass& cl);
NestedClass pullback_pi(const EquivClass& cl);

struct AppendixReport {
    int checks = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// Verifies, for every nonempty partition of at most lambda_max boxes and
// every corner: r~ agrees with the W/U product, the inversion identity, the
// q->0 limits against the corner-interval formula, and the existence of the
// q->infinity limits used by the column-removal induction.
AppendixReport verify_appendix(int lambda_max);

}  // namespace hilb
