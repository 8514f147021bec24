#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilb {

using Rational = mpq_class;

// Exponent pair (e_q, e_t) of a monomial q^{e_q} t^{e_t}.
using Exponent = std::pair<int, int>;

// Raised when a quotient that a theorem promises to be a Laurent polynomial
// fails to divide exactly. This doubles as a falsification signal.
struct IntegralityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact bivariate Laurent polynomial in (q,t) with rational coefficients.
// No zero coefficients are stored; terms are kept in lexicographic exponent
// order, which fixes the serialization order.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT: constant polynomial
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(int e_q, int e_t, const Rational& c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }

    Rational coeff(int e_q, int e_t) const;
    void set_coeff(int e_q, int e_t, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }
    LaurentPoly operator-() const;
    LaurentPoly& scale(const Rational& c);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    // q -> q^{m_q}, t -> t^{m_t} on every term (m_q, m_t nonzero).
    LaurentPoly substitute_powers(int m_q, int m_t) const;
    LaurentPoly dual() const { return substitute_powers(-1, -1); }
    LaurentPoly swap_qt() const;

    // Exact evaluation; std::nullopt keeps the variable symbolic. Specializing
    // a variable to 0 when it occurs with negative exponent is a pole error.
    LaurentPoly specialize(std::optional<Rational> q_value,
                           std::optional<Rational> t_value) const;

    int min_q_degree() const;  // throws on zero polynomial
    int max_q_degree() const;
    int min_t_degree() const;
    int max_t_degree() const;

    // Coefficient of q^{e_q}, as a Laurent polynomial in t alone.
    LaurentPoly q_coefficient(int e_q) const;

    // True if every exponent is non-negative (restriction of an honest
    // cohomology class).
    bool is_polynomial() const;

    // Total-degree homogeneity; degree of the zero polynomial is undefined
    // and reported as homogeneous.
    bool is_homogeneous() const;

    std::string to_string() const;  // human-readable, deterministic

  private:
    std::map<Exponent, Rational> terms_;
};

// Quotient of exact multivariate division; throws IntegralityError when den
// does not divide num. Term order: graded lexicographic on (e_q, e_t) after
// shifting to non-negative exponents.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace hilb
