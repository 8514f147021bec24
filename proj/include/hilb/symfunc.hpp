#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hilb/laurent.hpp"

namespace hilb {

// Generator of the symmetric-function algebra: a power sum p_k (any integer
// k; negative only in K-theory) or an elementary symmetric polynomial e_k
// (k >= 0). p_0 is kept symbolic and resolves to the point count only at
// Kirwan evaluation time.
struct SymGenerator {
    enum Kind { P, E };
    Kind kind = P;
    int index = 0;

    friend auto operator<=>(const SymGenerator&, const SymGenerator&) = default;
};

// Multiset of generators, kept sorted descending (p-words in decreasing
// index order, the normal form used throughout).
using SymWord = std::vector<SymGenerator>;

// Formal rational-linear combination of generator words.
class SymExpr {
  public:
    SymExpr() = default;

    static SymExpr constant(const Rational& c);
    static SymExpr p(int k);  // power sum generator
    static SymExpr e(int k);  // elementary symmetric generator; e_0 == 1

    const std::map<SymWord, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SymExpr& operator+=(const SymExpr& rhs);
    SymExpr& operator-=(const SymExpr& rhs);
    friend SymExpr operator+(SymExpr a, const SymExpr& b) { return a += b; }
    friend SymExpr operator-(SymExpr a, const SymExpr& b) { return a -= b; }
    friend SymExpr operator*(const SymExpr& a, const SymExpr& b);
    SymExpr& scale(const Rational& c);

    friend bool operator==(const SymExpr&, const SymExpr&) = default;

    bool uses_e() const;
    bool uses_negative_p() const;

    // Rewrites every e_k via Newton's identities; result is pure p-basis.
    SymExpr e_to_p() const;

    // Adams substitution p_k -> p_{km}; m nonzero, pure p-basis input.
    SymExpr adams_substitute(int m) const;

    // Evaluates each word as a product of generator values.
    LaurentPoly evaluate(
        const std::function<LaurentPoly(const SymGenerator&)>& gen_value) const;

    // CLI syntax, e.g. "p1^2*p3 - 2*e2" or "p-1"; integers and fractions
    // like 3/2 are accepted as coefficients.
    static SymExpr parse(const std::string& text);
    std::string to_string() const;

  private:
    void add_term(const SymWord& word, const Rational& c);

    std::map<SymWord, Rational> terms_;

    friend SymExpr p_word(const std::vector<int>& indices, const Rational& c);
};

// Convenience: c * p_{k_1} ... p_{k_r}.
SymExpr p_word(const std::vector<int>& indices, const Rational& c = 1);

// Closed-form subset expansions over A in {1..l} for a sequence lambda of
// non-negative integers: the right-hand sides of the creation-operator
// formulas, as p-basis expressions with p_0 left symbolic.
struct ExpansionMode {
    enum Kind { Q1, RHO, QM } kind = Q1;
    int m = 1;  // only used by QM

    static ExpansionMode q1() { return {Q1, 1}; }
    static ExpansionMode rho() { return {RHO, 1}; }
    static ExpansionMode qm(int m) { return {QM, m}; }
};

SymExpr subsets_expansion(const std::vector<int>& lambda, ExpansionMode mode);

}  // namespace hilb
