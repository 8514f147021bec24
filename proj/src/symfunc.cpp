#include "hilb/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace hilb {

namespace {

void normalize(SymWord& w) { std::sort(w.rbegin(), w.rend()); }

}  // namespace

SymExpr SymExpr::constant(const Rational& c) {
    SymExpr out;
    out.add_term({}, c);
    return out;
}

SymExpr SymExpr::p(int k) {
    SymExpr out;
    out.add_term({SymGenerator{SymGenerator::P, k}}, 1);
    return out;
}

SymExpr SymExpr::e(int k) {
    if (k < 0) throw std::invalid_argument("e_k needs k >= 0");
    if (k == 0) return constant(1);
    SymExpr out;
    out.add_term({SymGenerator{SymGenerator::E, k}}, 1);
    return out;
}

void SymExpr::add_term(const SymWord& word, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(word, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymExpr& SymExpr::operator+=(const SymExpr& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

SymExpr& SymExpr::operator-=(const SymExpr& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

SymExpr operator*(const SymExpr& a, const SymExpr& b) {
    SymExpr out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            SymWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            normalize(w);
            out.add_term(w, ca * cb);
        }
    return out;
}

SymExpr& SymExpr::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [w, v] : terms_) v *= c;
    }
    return *this;
}

bool SymExpr::uses_e() const {
    for (const auto& [w, c] : terms_)
        for (const auto& g : w)
            if (g.kind == SymGenerator::E) return true;
    return false;
}

bool SymExpr::uses_negative_p() const {
    for (const auto& [w, c] : terms_)
        for (const auto& g : w)
            if (g.kind == SymGenerator::P && g.index < 0) return true;
    return false;
}

namespace {

// e_k in the p-basis via Newton's identity k*e_k = sum (-1)^{i-1} e_{k-i} p_i.
// The cache is shared across worker threads.
SymExpr e_in_p(int k) {
    static std::mutex guard;
    static std::vector<SymExpr> cache{SymExpr::constant(1)};
    std::lock_guard<std::mutex> lock(guard);
    for (int m = static_cast<int>(cache.size()); m <= k; ++m) {
        SymExpr acc;
        for (int i = 1; i <= m; ++i) {
            SymExpr term = cache[m - i] * SymExpr::p(i);
            term.scale(Rational(i % 2 == 1 ? 1 : -1, m));
            acc += term;
        }
        cache.push_back(acc);
    }
    return cache[k];
}

}  // namespace

SymExpr SymExpr::e_to_p() const {
    SymExpr out;
    for (const auto& [w, c] : terms_) {
        SymExpr word_expr = constant(c);
        for (const auto& g : w) {
            if (g.kind == SymGenerator::E)
                word_expr = word_expr * e_in_p(g.index);
            else
                word_expr = word_expr * p(g.index);
        }
        out += word_expr;
    }
    return out;
}

SymExpr SymExpr::adams_substitute(int m) const {
    if (m == 0) throw std::invalid_argument("Adams substitution needs m != 0");
    if (uses_e())
        throw std::domain_error("Adams substitution requires the p-basis");
    SymExpr out;
    for (const auto& [w, c] : terms_) {
        SymWord subst = w;
        for (auto& g : subst) g.index *= m;
        normalize(subst);
        out.add_term(subst, c);
    }
    return out;
}

LaurentPoly SymExpr::evaluate(
    const std::function<LaurentPoly(const SymGenerator&)>& gen_value) const {
    LaurentPoly out;
    for (const auto& [w, c] : terms_) {
        LaurentPoly prod{c};
        for (const auto& g : w) prod *= gen_value(g);
        out += prod;
    }
    return out;
}

SymExpr p_word(const std::vector<int>& indices, const Rational& c) {
    SymWord w;
    w.reserve(indices.size());
    for (int k : indices) w.push_back(SymGenerator{SymGenerator::P, k});
    normalize(w);
    SymExpr out;
    out.add_term(w, c);
    return out;
}

SymExpr subsets_expansion(const std::vector<int>& lambda, ExpansionMode mode) {
    for (int v : lambda)
        if (v < 0) throw std::invalid_argument("lambda entries must be >= 0");
    if (mode.kind == ExpansionMode::QM && mode.m < 1)
        throw std::invalid_argument("qm expansion needs m >= 1");

    const int l = static_cast<int>(lambda.size());
    SymExpr out;
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
        int cardinality = 0;
        long weight = 0;  // l(A) = sum of removed entries
        std::vector<int> kept;
        for (int i = 0; i < l; ++i) {
            if (mask & (1u << i)) {
                ++cardinality;
                weight += lambda[i];
            } else {
                kept.push_back(lambda[i]);
            }
        }
        Rational coeff;
        int extra_index = 0;
        switch (mode.kind) {
            case ExpansionMode::Q1:
                coeff = Rational(weight + 1);
                if (cardinality % 2) coeff = -coeff;
                extra_index = static_cast<int>(weight);
                break;
            case ExpansionMode::RHO:
                coeff = Rational(weight + 2);
                if (cardinality % 2 == 0) coeff = -coeff;
                extra_index = static_cast<int>(weight) + 1;
                break;
            case ExpansionMode::QM: {
                Rational m_pow(1);
                for (int k = 0; k < cardinality; ++k) m_pow *= mode.m;
                coeff = m_pow * Rational(weight + mode.m);
                if ((cardinality + mode.m + 1) % 2) coeff = -coeff;
                extra_index = static_cast<int>(weight) + mode.m - 1;
                break;
            }
        }
        kept.push_back(extra_index);
        out += p_word(kept, coeff);
    }
    return out;
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }

    long parse_int() {
        skip_space();
        bool neg = eat('-');
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw std::invalid_argument("expected integer at position " +
                                        std::to_string(pos));
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return neg ? -v : v;
    }

    SymExpr parse_atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            SymExpr inner = parse_sum();
            if (!eat(')')) throw std::invalid_argument("missing ')'");
            return inner;
        }
        if (c == 'p' || c == 'e') {
            ++pos;
            long idx = parse_int();
            if (c == 'e') return SymExpr::e(static_cast<int>(idx));
            return SymExpr::p(static_cast<int>(idx));
        }
        long num = parse_int();
        if (eat('/')) {
            long den = parse_int();
            return SymExpr::constant(Rational(num, den));
        }
        return SymExpr::constant(Rational(num));
    }

    SymExpr parse_power() {
        SymExpr base = parse_atom();
        if (eat('^')) {
            long ex = parse_int();
            if (ex < 0) throw std::invalid_argument("negative exponent");
            SymExpr acc = SymExpr::constant(1);
            for (long k = 0; k < ex; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    SymExpr parse_product() {
        SymExpr acc = parse_power();
        while (true) {
            char c = peek();
            if (c == '*') {
                eat('*');
                acc = acc * parse_power();
            } else if (c == 'p' || c == 'e' || c == '(') {
                acc = acc * parse_power();  // implicit product
            } else {
                return acc;
            }
        }
    }

    SymExpr parse_sum() {
        SymExpr acc;
        bool neg = eat('-');
        SymExpr first = parse_product();
        if (neg) first.scale(-1);
        acc += first;
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos;
            SymExpr next = parse_product();
            if (c == '-') next.scale(-1);
            acc += next;
        }
    }
};

}  // namespace

SymExpr SymExpr::parse(const std::string& text) {
    Parser parser{text};
    SymExpr out = parser.parse_sum();
    parser.skip_space();
    if (parser.pos != text.size())
        throw std::invalid_argument("trailing input in expression: " + text);
    return out;
}

std::string SymExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
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
        if (a != 1 || w.empty()) {
            os << a;
            if (!w.empty()) os << "*";
        }
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k) os << "*";
            os << (w[k].kind == SymGenerator::P ? 'p' : 'e') << w[k].index;
        }
    }
    return os.str();
}

}  // namespace hilb
