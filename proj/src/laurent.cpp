#include "hilb/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace hilb {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

LaurentPoly LaurentPoly::monomial(int e_q, int e_t, const Rational& c) {
    LaurentPoly p;
    if (c != 0) p.terms_[{e_q, e_t}] = c;
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Rational LaurentPoly::coeff(int e_q, int e_t) const {
    auto it = terms_.find({e_q, e_t});
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(int e_q, int e_t, const Rational& c) {
    if (c == 0)
        terms_.erase({e_q, e_t});
    else
        terms_[{e_q, e_t}] = c;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) {
        auto [it, inserted] = terms_.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e{ea.first + eb.first, ea.second + eb.second};
            auto [it, inserted] = out.terms_.emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly& LaurentPoly::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
}

LaurentPoly LaurentPoly::substitute_powers(int m_q, int m_t) const {
    if (m_q == 0 || m_t == 0)
        throw std::invalid_argument("substitution exponents must be nonzero");
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_[{e.first * m_q, e.second * m_t}] = c;
    return out;
}

LaurentPoly LaurentPoly::swap_qt() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[{e.second, e.first}] = c;
    return out;
}

namespace {

Rational int_pow(const Rational& base, int e) {
    if (e == 0) return 1;
    if (base == 0) {
        if (e < 0) throw std::domain_error("pole: zero raised to negative power");
        return 0;
    }
    Rational b = base;
    bool invert = e < 0;
    unsigned long n = invert ? -static_cast<long>(e) : e;
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (invert) acc = 1 / acc;
    return acc;
}

}  // namespace

LaurentPoly LaurentPoly::specialize(std::optional<Rational> q_value,
                                    std::optional<Rational> t_value) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        Exponent rest = e;
        if (q_value) {
            if (*q_value == 0 && e.first < 0)
                throw std::domain_error("pole: q=0 hits a negative exponent");
            v *= int_pow(*q_value, e.first);
            rest.first = 0;
        }
        if (t_value) {
            if (*t_value == 0 && e.second < 0)
                throw std::domain_error("pole: t=0 hits a negative exponent");
            v *= int_pow(*t_value, e.second);
            rest.second = 0;
        }
        if (v == 0) continue;
        auto [it, inserted] = out.terms_.emplace(rest, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

int LaurentPoly::min_q_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    int m = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) m = std::min(m, e.first);
    return m;
}

int LaurentPoly::max_q_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    int m = terms_.begin()->first.first;
    for (const auto& [e, c] : terms_) m = std::max(m, e.first);
    return m;
}

int LaurentPoly::min_t_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    int m = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) m = std::min(m, e.second);
    return m;
}

int LaurentPoly::max_t_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    int m = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) m = std::max(m, e.second);
    return m;
}

LaurentPoly LaurentPoly::q_coefficient(int e_q) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        if (e.first == e_q) out.terms_[{0, e.second}] = c;
    return out;
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        if (e.first < 0 || e.second < 0) return false;
    return true;
}

bool LaurentPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.first + terms_.begin()->first.second;
    for (const auto& [e, c] : terms_)
        if (e.first + e.second != d) return false;
    return true;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_var = e.first != 0 || e.second != 0;
        if (a != 1 || !has_var) {
            os << a;
            if (has_var) os << "*";
        }
        if (e.first != 0) {
            os << "q";
            if (e.first != 1) os << "^" << e.first;
        }
        if (e.second != 0) {
            if (e.first != 0) os << "*";
            os << "t";
            if (e.second != 1) os << "^" << e.second;
        }
    }
    return os.str();
}

namespace {

// Graded-lex comparison on shifted exponents.
bool grlex_less(const Exponent& a, const Exponent& b) {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da < db;
    return a < b;
}

Exponent leading_exponent(const LaurentPoly& p) {
    auto it = p.terms().begin();
    Exponent best = it->first;
    for (++it; it != p.terms().end(); ++it)
        if (grlex_less(best, it->first)) best = it->first;
    return best;
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return {};

    // Shift each operand by its own minimal exponents. Minimal exponents are
    // additive under multiplication, so after the shift the exact quotient is
    // an honest polynomial with minimal exponents zero.
    int nq = num.min_q_degree(), nt = num.min_t_degree();
    int dq = den.min_q_degree(), dt = den.min_t_degree();
    LaurentPoly r = LaurentPoly::monomial(-nq, -nt) * num;
    LaurentPoly d = LaurentPoly::monomial(-dq, -dt) * den;

    Exponent lead_d = leading_exponent(d);
    Rational lead_c = d.coeff(lead_d.first, lead_d.second);

    LaurentPoly quotient;
    while (!r.is_zero()) {
        Exponent lead_r = leading_exponent(r);
        int eq = lead_r.first - lead_d.first;
        int et = lead_r.second - lead_d.second;
        if (eq < 0 || et < 0)
            throw IntegralityError("exact division failed: " + num.to_string() +
                                   " is not divisible by " + den.to_string());
        LaurentPoly term = LaurentPoly::monomial(
            eq, et, r.coeff(lead_r.first, lead_r.second) / lead_c);
        quotient += term;
        r -= term * d;
    }
    return LaurentPoly::monomial(nq - dq, nt - dt) * quotient;
}

}  // namespace hilb
