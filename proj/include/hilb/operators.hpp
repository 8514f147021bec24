#pragma once

#include "hilb/pushforward.hpp"

namespace hilb {

// The runtime guard of the basis method: a reduction produced a coefficient
// that is not a polynomial, so the free-basis assumption failed.
struct SoundnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The Nakajima classes failed to form a basis (singular matrix).
struct BasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Creation operator q_1 = pi_* p^* on equivariant cohomology.
EquivClass q1_H(const EquivClass& cl);

// Auxiliary operator rho = -pi_*(c_1(Q) . p^* -).
EquivClass rho_H(const EquivClass& cl);

// Higher creation operators via q_i = (rho q_{i-1} - q_{i-1} rho) / (i-1).
EquivClass qm_H(int m, const EquivClass& cl);

// K-theoretic creation operator pi_*(p^*(-) . Q^m).
EquivClass qK_1m(int m, const EquivClass& cl);

// Adams operation: q -> q^m, t -> t^m on every restriction.
EquivClass adams_class(int m, const EquivClass& cl);

// Bott cannibalistic class (1 - L^m)/(1 - L) of the line class q^i t^j.
RatFunc bott_theta(int m, Weight line);

// The line-bundle identity behind the Adams-Riemann-Roch pushforward
// computation, checked as a rational-function identity in a symbolic line
// class (q plays the role of the line variable): for m >= 2,
//   L^m = L^m theta^m((tL)^{-1}) - t^{-1} L^{m-1} theta^{m-1}((tL)^{-1}).
bool adams_bott_identity(int m);

// (1 - t^{-m}) / (1 - t^{-1}) as an exact Laurent polynomial in t, for any
// integer m.
LaurentPoly geom_ratio(int m);

// Formal counterparts of q_1, rho, q_m on power-sum expressions (the
// closed-form subset expansions extended linearly, with the recursion for
// higher operators). Point counts stay symbolic through p_0.
SymExpr formal_q1(const SymExpr& expr);
SymExpr formal_rho(const SymExpr& expr);
SymExpr formal_qm(int m, const SymExpr& expr);

// Equivariant Nakajima basis of H_T^*(Hilb^n): the classes q_lambda(1) for
// all partitions of n, their restriction matrix, and the fraction-free
// elimination data used to solve against the basis. Construction fails with
// BasisError if the matrix is singular. Instances are cached per n.
class NakajimaBasis {
  public:
    static const NakajimaBasis& get(int n);

    int n() const { return n_; }
    const std::vector<Partition>& order() const { return order_; }
    const EquivClass& basis_class(const Partition& lambda) const;
    const std::vector<std::vector<LaurentPoly>>& matrix() const { return matrix_; }
    const LaurentPoly& determinant() const { return det_; }

    // Solves cl = sum_lambda c_lambda(q,t) q_lambda(1) exactly, checks that
    // every coefficient is a polynomial, and returns the constant terms
    // c_lambda(0,0): the nonequivariant coordinates of cl.
    std::vector<Rational> reduce(const EquivClass& cl) const;

  private:
    explicit NakajimaBasis(int n);

    int n_;
    std::vector<Partition> order_;
    std::vector<EquivClass> classes_;
    std::vector<std::vector<LaurentPoly>> matrix_;     // A[row][col]
    std::vector<std::vector<LaurentPoly>> upper_;      // U with T A = U
    std::vector<std::vector<LaurentPoly>> transform_;  // T
    LaurentPoly det_;
};

// Nonequivariant coordinates of an equivariant cohomology class in the
// Nakajima basis; the only sound equality test for nonequivariant
// statements.
std::vector<Rational> nonequiv_reduce(const EquivClass& cl);

// Coefficients a_{0,m}..a_{m,m} of the degree-2m pushforward, derived
// through the Chern-character power-series route.
std::vector<Rational> derive_a_coeffs(int m);

// The same coefficients from the closed-form polynomial
// x^m (x+1) - (x-1)^m x.
std::vector<Rational> closed_form_a_coeffs(int m);

}  // namespace hilb
