#include "hilb/operators.hpp"

#include <memory>
#include <mutex>

#include "hilb/series.hpp"

namespace hilb {

namespace {

void require_equivariant_H(const EquivClass& cl, const char* who) {
    if (cl.theory() != Theory::H || cl.torus() != Torus::T)
        throw std::invalid_argument(std::string(who) +
                                    " acts on T-equivariant cohomology classes");
}

NestedClass c1Q_class(int n) { return nested_c1Q_power(n, 1); }

}  // namespace

EquivClass q1_H(const EquivClass& cl) {
    require_equivariant_H(cl, "q_1");
    return push_H(pullback_p(cl));
}

EquivClass rho_H(const EquivClass& cl) {
    require_equivariant_H(cl, "rho");
    EquivClass out = push_H(c1Q_class(cl.n()) * pullback_p(cl));
    out.scale(-1);
    return out;
}

EquivClass qm_H(int m, const EquivClass& cl) {
    if (m < 1) throw std::invalid_argument("creation operators need m >= 1");
    if (m == 1) return q1_H(cl);
    EquivClass out = rho_H(qm_H(m - 1, cl)) - qm_H(m - 1, rho_H(cl));
    out.scale(Rational(1, m - 1));
    return out;
}

EquivClass qK_1m(int m, const EquivClass& cl) {
    if (cl.theory() != Theory::K || cl.torus() != Torus::T)
        throw std::invalid_argument("qK_{1,m} acts on T-equivariant K-theory");
    return push_K(pullback_p(cl) * nested_Q_power(cl.n(), m));
}

EquivClass adams_class(int m, const EquivClass& cl) {
    if (cl.theory() != Theory::K)
        throw std::invalid_argument("Adams operations act on K-theory");
    if (m == 0) throw std::invalid_argument("Adams operations need m != 0");
    EquivClass out = cl;
    for (const auto& [lam, value] : cl.restrictions())
        out.set(lam, value.substitute_powers(m, m));
    return out;
}

RatFunc bott_theta(int m, Weight line) {
    if (line == Weight{0, 0})
        throw std::domain_error("Bott class of the trivial line class");
    LaurentPoly num =
        LaurentPoly(1) - LaurentPoly::monomial(m * line.first, m * line.second);
    Denominator den(Flavor::K);
    den.push({-line.first, -line.second});
    return {std::move(num), std::move(den)};
}

bool adams_bott_identity(int m) {
    if (m < 2) throw std::invalid_argument("the identity is stated for m >= 2");
    // L = q, so (tL)^{-1} is the line class q^{-1} t^{-1}.
    Weight inv_tL{-1, -1};
    RatFunc rhs = bott_theta(m, inv_tL) * LaurentPoly::monomial(m, 0);
    RatFunc second = bott_theta(m - 1, inv_tL) * LaurentPoly::monomial(m - 1, -1);
    std::vector<RatFunc> sum{rhs, -second};
    RatFunc lhs(LaurentPoly::monomial(m, 0), Denominator(Flavor::K));
    return ratfunc_sum(sum).equals(lhs);
}

LaurentPoly geom_ratio(int m) {
    LaurentPoly out;
    if (m >= 0) {
        for (int j = 0; j < m; ++j) out += LaurentPoly::monomial(0, -j);
    } else {
        for (int j = 1; j <= -m; ++j) out -= LaurentPoly::monomial(0, j);
    }
    return out;
}

namespace {

SymExpr formal_expand(const SymExpr& expr, ExpansionMode mode) {
    SymExpr in_p = expr.e_to_p();
    SymExpr out;
    for (const auto& [word, coeff] : in_p.terms()) {
        std::vector<int> lambda;
        lambda.reserve(word.size());
        for (const auto& g : word) {
            if (g.index < 0)
                throw std::domain_error(
                    "cohomological creation operators need non-negative power sums");
            lambda.push_back(g.index);
        }
        SymExpr term = subsets_expansion(lambda, mode);
        term.scale(coeff);
        out += term;
    }
    return out;
}

}  // namespace

SymExpr formal_q1(const SymExpr& expr) {
    return formal_expand(expr, ExpansionMode::q1());
}

SymExpr formal_rho(const SymExpr& expr) {
    return formal_expand(expr, ExpansionMode::rho());
}

SymExpr formal_qm(int m, const SymExpr& expr) {
    if (m < 1) throw std::invalid_argument("creation operators need m >= 1");
    if (m == 1) return formal_q1(expr);
    SymExpr out = formal_rho(formal_qm(m - 1, expr)) -
                  formal_qm(m - 1, formal_rho(expr));
    out.scale(Rational(1, m - 1));
    return out;
}

namespace {

using Matrix = std::vector<std::vector<LaurentPoly>>;

// Fraction-free Gaussian elimination of [A | I]; every intermediate entry is
// a minor of the row-permuted input, so the one-step divisions are exact.
// Returns false (singular) when no pivot can be found.
bool bareiss_eliminate(Matrix& m, int rows, int& sign) {
    sign = 1;
    LaurentPoly prev(1);
    int cols = static_cast<int>(m[0].size());
    for (int k = 0; k < rows; ++k) {
        int pivot = -1;
        for (int i = k; i < rows; ++i)
            if (!m[i][k].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) return false;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < rows; ++i) {
            for (int j = k + 1; j < cols; ++j)
                m[i][j] =
                    divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = LaurentPoly(0);
        }
        prev = m[k][k];
    }
    return true;
}

}  // namespace

NakajimaBasis::NakajimaBasis(int n) : n_(n) {
    order_ = enumerate_partitions(n);
    const int r = static_cast<int>(order_.size());

    EquivClass unit(Theory::H, Torus::T, 0);
    unit.set(Partition{}, LaurentPoly(1));
    for (const Partition& lam : order_) {
        EquivClass cl = unit;
        for (int part : lam.parts()) cl = qm_H(part, cl);
        classes_.push_back(std::move(cl));
    }

    matrix_.assign(r, std::vector<LaurentPoly>(r));
    for (int row = 0; row < r; ++row)
        for (int col = 0; col < r; ++col)
            matrix_[row][col] = classes_[col].at(order_[row]);

    Matrix work(r, std::vector<LaurentPoly>(2 * r));
    for (int row = 0; row < r; ++row) {
        for (int col = 0; col < r; ++col) work[row][col] = matrix_[row][col];
        work[row][r + row] = LaurentPoly(1);
    }
    int sign = 1;
    if (!bareiss_eliminate(work, r, sign))
        throw BasisError("Nakajima classes are linearly dependent at n = " +
                         std::to_string(n));
    upper_.assign(r, std::vector<LaurentPoly>(r));
    transform_.assign(r, std::vector<LaurentPoly>(r));
    for (int row = 0; row < r; ++row)
        for (int col = 0; col < r; ++col) {
            upper_[row][col] = work[row][col];
            transform_[row][col] = work[row][r + col];
        }
    det_ = upper_[r - 1][r - 1];
    if (sign < 0) det_ = -det_;
    if (det_.is_zero())
        throw BasisError("Nakajima basis determinant vanishes at n = " +
                         std::to_string(n));
}

const NakajimaBasis& NakajimaBasis::get(int n) {
    static std::mutex guard;
    static std::map<int, std::unique_ptr<NakajimaBasis>> cache;
    std::lock_guard<std::mutex> lock(guard);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::unique_ptr<NakajimaBasis>(new NakajimaBasis(n)))
                 .first;
    return *it->second;
}

const EquivClass& NakajimaBasis::basis_class(const Partition& lambda) const {
    for (std::size_t k = 0; k < order_.size(); ++k)
        if (order_[k] == lambda) return classes_[k];
    throw std::invalid_argument("not a partition of n");
}

std::vector<Rational> NakajimaBasis::reduce(const EquivClass& cl) const {
    require_equivariant_H(cl, "nonequiv_reduce");
    if (cl.n() != n_)
        throw std::invalid_argument("class lives on the wrong Hilbert scheme");
    const int r = static_cast<int>(order_.size());
    for (const auto& [lam, value] : cl.restrictions())
        if (!value.is_polynomial())
            throw std::invalid_argument(
                "restrictions of a genuine equivariant class must be polynomial");

    // U x = T b, solved bottom-up; the solution is polynomial exactly when
    // cl lies in the span, which the free-basis property guarantees.
    std::vector<LaurentPoly> rhs(r);
    for (int row = 0; row < r; ++row)
        for (int col = 0; col < r; ++col)
            rhs[row] += transform_[row][col] * cl.at(order_[col]);

    std::vector<LaurentPoly> coeffs(r);
    for (int row = r - 1; row >= 0; --row) {
        LaurentPoly acc = rhs[row];
        for (int col = row + 1; col < r; ++col)
            acc -= upper_[row][col] * coeffs[col];
        try {
            coeffs[row] = divide_exact(acc, upper_[row][row]);
        } catch (const IntegralityError&) {
            throw SoundnessError(
                "basis coefficient is not a rational-function multiple; "
                "free-basis assumption violated at n = " + std::to_string(n_));
        }
        if (!coeffs[row].is_polynomial())
            throw SoundnessError(
                "basis coefficient has a pole: nonequivariant reduction is "
                "unsound at n = " + std::to_string(n_));
    }

    std::vector<Rational> out(r);
    for (int k = 0; k < r; ++k) out[k] = coeffs[k].coeff(0, 0);
    return out;
}

std::vector<Rational> nonequiv_reduce(const EquivClass& cl) {
    return NakajimaBasis::get(cl.n()).reduce(cl);
}

namespace {

// Dense polynomial in one variable, low degree first.
using Poly = std::vector<Rational>;

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational acc(1);
    for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
    return acc;
}

// Coefficient list of A_{s,m}, the polynomial with
// pi_*((Q-1)^m) = sum_s A_{s,m}(t^{-1}) P_s; from the binomial expansion
// and the closed-form pushforward of Q^j.
Poly coefficients_A(int s, int m) {
    if (s == -1) return {Rational((m % 2 == 0) ? 1 : -1)};
    Poly out(s + 1, Rational(0));
    Rational sign((m - s) % 2 == 0 ? 1 : -1);
    for (int i = 0; i < s; ++i) out[i] += sign * binomial(m, s);
    for (int i = 1; i <= s; ++i) out[i] += sign * binomial(m, s + 1);
    return out;
}

}  // namespace

std::vector<Rational> derive_a_coeffs(int m) {
    if (m < 0) throw std::invalid_argument("m must be non-negative");
    const int order = m;
    std::vector<Rational> out(m + 1, Rational(0));
    Rational k_factorial(1);
    for (int k = 0; k <= m; ++k) {
        if (k > 0) k_factorial *= k;
        PowerSeries b(order);
        for (int s = -1; s <= m; ++s) {
            Rational s_pow(1);
            for (int i = 0; i < k; ++i) s_pow *= s;
            if (s_pow == 0) continue;
            PowerSeries a_at_exp =
                PowerSeries::compose_with_exp(coefficients_A(s, m), order, -1);
            a_at_exp.scale(s_pow / k_factorial);
            b += a_at_exp;
        }
        out[k] = b.coeff(m - k);
    }
    return out;
}

std::vector<Rational> closed_form_a_coeffs(int m) {
    if (m < 0) throw std::invalid_argument("m must be non-negative");
    // x^m (x+1) - (x-1)^m x
    Poly poly(m + 2, Rational(0));
    poly[m] += 1;
    poly[m + 1] += 1;
    for (int j = 0; j <= m; ++j) {
        Rational c = binomial(m, j);
        if ((m - j) % 2 == 1) c = -c;
        poly[j + 1] -= c;
    }
    if (poly[m + 1] != 0) throw std::logic_error("degree m+1 must cancel");
    poly.resize(m + 1);
    return poly;
}

}  // namespace hilb
