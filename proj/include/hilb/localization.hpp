#pragma once

#include <map>
#include <optional>
#include <string>

#include "hilb/partition.hpp"
#include "hilb/ratfunc.hpp"
#include "hilb/symfunc.hpp"

namespace hilb {

enum class Theory { K, H };
enum class Torus { T, Ty, NONE };

// Fixed point of the nested Hilbert scheme: a partition of n+1 together with
// one of its corners.
struct NestedPoint {
    Partition lambda;
    BoxCoord corner;

    friend auto operator<=>(const NestedPoint&, const NestedPoint&) = default;
};

std::vector<NestedPoint> nested_fixed_points(int n);  // over Hilb^{n,n+1}

// Tangent weights of Hilb^n at the fixed point lambda: each box contributes
// (-a, b+1) and (a+1, -b), listed box-major with rows ordered top to bottom.
WeightMultiset tangent_weights_hilb(const Partition& lambda);

// Tangent weights of the nested scheme at (lambda, c): boxes below the added
// box have their south-east arrow shortened vertically, boxes to its left
// the north-west arrow horizontally.
WeightMultiset tangent_weights_nested(const NestedPoint& pt);

Denominator euler_K(const WeightMultiset& weights);
LaurentPoly euler_H(const WeightMultiset& weights);

// Fixed-point model of an equivariant K-theory or cohomology class on
// Hilb^n: one restriction per partition of n. Equality of classes is
// equality of all restrictions.
class EquivClass {
  public:
    EquivClass(Theory theory, Torus torus, int n);

    Theory theory() const { return theory_; }
    Torus torus() const { return torus_; }
    int n() const { return n_; }

    const LaurentPoly& at(const Partition& lambda) const;
    void set(const Partition& lambda, LaurentPoly value);
    const std::map<Partition, LaurentPoly>& restrictions() const {
        return restrictions_;
    }

    EquivClass& operator+=(const EquivClass& rhs);
    EquivClass& operator-=(const EquivClass& rhs);
    friend EquivClass operator+(EquivClass a, const EquivClass& b) { return a += b; }
    friend EquivClass operator-(EquivClass a, const EquivClass& b) { return a -= b; }
    friend EquivClass operator*(const EquivClass& a, const EquivClass& b);
    EquivClass& scale(const Rational& c);
    EquivClass& scale_poly(const LaurentPoly& p);

    friend bool operator==(const EquivClass&, const EquivClass&) = default;

    EquivClass dual() const;  // q -> 1/q, t -> 1/t on every restriction (K)

    friend EquivClass specialize_class(const EquivClass& cl, Torus target);

  private:
    Theory theory_;
    Torus torus_;
    int n_;
    std::map<Partition, LaurentPoly> restrictions_;
};

// Restriction of a class given by a symmetric expression: the variables are
// the box monomials q^i t^j of lambda in K-theory and the linear forms
// i*q + j*t in cohomology; p_0 evaluates to the point count.
LaurentPoly kirwan_restrict_K(const SymExpr& expr, const Partition& lambda, int n);
LaurentPoly kirwan_restrict_H(const SymExpr& expr, const Partition& lambda, int n);

EquivClass kirwan_K(const SymExpr& expr, int n);
EquivClass kirwan_H(const SymExpr& expr, int n);

// Restriction to the subtorus T_y (q=1 in K-theory, q=0 in cohomology) or to
// the trivial group. The trivial-group form is only legal for classes whose
// restrictions are already constant; fixed-point restriction is not
// injective nonequivariantly, so nothing else is representable this way.
EquivClass specialize_class(const EquivClass& cl, Torus target);

std::string equiv_class_to_json(const EquivClass& cl);
EquivClass equiv_class_from_json(const std::string& text);

// Operator output: the class JSON plus its source point count and how it was
// computed ("localization", "recursion", "kirwan").
std::string operator_result_to_json(const EquivClass& cl, int source_n,
                                    const std::string& provenance);

// One row of the tangent-weight table: a box with its two weights, flags for
// the entries modified by the nested-scheme rule, and whether this box is
// the added one.
struct WeightTableRow {
    BoxCoord box;
    Weight first;   // (-a, b+1)
    Weight second;  // (a+1, -b)
    bool first_modified = false;
    bool second_modified = false;
    bool added = false;
};

std::vector<WeightTableRow> weight_table(const Partition& lambda,
                                         std::optional<BoxCoord> corner);
std::string format_weight_table(const std::vector<WeightTableRow>& rows);

}  // namespace hilb
