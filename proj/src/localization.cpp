#include "hilb/localization.hpp"

#include <json.hpp>
#include <sstream>

namespace hilb {

std::vector<NestedPoint> nested_fixed_points(int n) {
    std::vector<NestedPoint> out;
    for (const Partition& lam : enumerate_partitions(n + 1))
        for (const BoxCoord& c : lam.corners()) out.push_back({lam, c});
    return out;
}

WeightMultiset tangent_weights_hilb(const Partition& lambda) {
    WeightMultiset out;
    out.reserve(2 * lambda.size());
    for (const BoxCoord& b : lambda.boxes()) {
        ArmLeg al = lambda.arm_leg(b);
        out.push_back({-al.arm, al.leg + 1});
        out.push_back({al.arm + 1, -al.leg});
    }
    return out;
}

WeightMultiset tangent_weights_nested(const NestedPoint& pt) {
    auto rows = weight_table(pt.lambda, pt.corner);
    WeightMultiset out;
    out.reserve(2 * rows.size());
    for (const auto& row : rows) {
        out.push_back(row.first);
        out.push_back(row.second);
    }
    return out;
}

Denominator euler_K(const WeightMultiset& weights) {
    return Denominator(Flavor::K, weights);
}

LaurentPoly euler_H(const WeightMultiset& weights) {
    LaurentPoly acc(1);
    for (Weight w : weights) acc *= weight_factor(Flavor::H, w);
    return acc;
}

EquivClass::EquivClass(Theory theory, Torus torus, int n)
    : theory_(theory), torus_(torus), n_(n) {
    for (const Partition& lam : enumerate_partitions(n))
        restrictions_.emplace(lam, LaurentPoly(0));
}

const LaurentPoly& EquivClass::at(const Partition& lambda) const {
    auto it = restrictions_.find(lambda);
    if (it == restrictions_.end())
        throw std::invalid_argument("partition is not a fixed point of Hilb^" +
                                    std::to_string(n_));
    return it->second;
}

void EquivClass::set(const Partition& lambda, LaurentPoly value) {
    auto it = restrictions_.find(lambda);
    if (it == restrictions_.end())
        throw std::invalid_argument("partition is not a fixed point of Hilb^" +
                                    std::to_string(n_));
    it->second = std::move(value);
}

namespace {

void check_compatible(const EquivClass& a, const EquivClass& b) {
    if (a.theory() != b.theory() || a.torus() != b.torus() || a.n() != b.n())
        throw std::invalid_argument("classes live in different rings");
}

}  // namespace

EquivClass& EquivClass::operator+=(const EquivClass& rhs) {
    check_compatible(*this, rhs);
    for (auto& [lam, value] : restrictions_) value += rhs.at(lam);
    return *this;
}

EquivClass& EquivClass::operator-=(const EquivClass& rhs) {
    check_compatible(*this, rhs);
    for (auto& [lam, value] : restrictions_) value -= rhs.at(lam);
    return *this;
}

EquivClass operator*(const EquivClass& a, const EquivClass& b) {
    check_compatible(a, b);
    EquivClass out = a;
    for (auto& [lam, value] : out.restrictions_) value *= b.at(lam);
    return out;
}

EquivClass& EquivClass::scale(const Rational& c) {
    for (auto& [lam, value] : restrictions_) value.scale(c);
    return *this;
}

EquivClass& EquivClass::scale_poly(const LaurentPoly& p) {
    for (auto& [lam, value] : restrictions_) value *= p;
    return *this;
}

EquivClass EquivClass::dual() const {
    if (theory_ != Theory::K)
        throw std::invalid_argument("dual is a K-theory operation");
    EquivClass out = *this;
    for (auto& [lam, value] : out.restrictions_) value = value.dual();
    return out;
}

namespace {

LaurentPoly box_value(Theory theory, const BoxCoord& b) {
    if (theory == Theory::K) return LaurentPoly::monomial(b.i, b.j);
    LaurentPoly v = LaurentPoly::monomial(1, 0, b.i);
    v += LaurentPoly::monomial(0, 1, b.j);
    return v;
}

LaurentPoly generator_value(Theory theory, const SymGenerator& g,
                            const Partition& lambda, int n) {
    if (g.kind == SymGenerator::P) {
        if (g.index == 0) return LaurentPoly(Rational(n));
        if (theory == Theory::H && g.index < 0)
            throw std::domain_error("negative power sums need K-theory");
        LaurentPoly sum;
        for (const BoxCoord& b : lambda.boxes()) {
            if (theory == Theory::K) {
                sum += LaurentPoly::monomial(g.index * b.i, g.index * b.j);
            } else {
                LaurentPoly v = box_value(theory, b);
                LaurentPoly pw(1);
                for (int k = 0; k < g.index; ++k) pw *= v;
                sum += pw;
            }
        }
        return sum;
    }
    // elementary symmetric polynomial of the box values
    if (g.index == 0) return LaurentPoly(1);
    auto boxes = lambda.boxes();
    if (g.index > static_cast<int>(boxes.size())) return LaurentPoly(0);
    std::vector<LaurentPoly> e(g.index + 1);
    e[0] = LaurentPoly(1);
    for (const BoxCoord& b : boxes) {
        LaurentPoly v = box_value(theory, b);
        for (int k = g.index; k >= 1; --k) e[k] += e[k - 1] * v;
    }
    return e[g.index];
}

}  // namespace

LaurentPoly kirwan_restrict_K(const SymExpr& expr, const Partition& lambda, int n) {
    return expr.evaluate([&](const SymGenerator& g) {
        return generator_value(Theory::K, g, lambda, n);
    });
}

LaurentPoly kirwan_restrict_H(const SymExpr& expr, const Partition& lambda, int n) {
    return expr.evaluate([&](const SymGenerator& g) {
        return generator_value(Theory::H, g, lambda, n);
    });
}

EquivClass kirwan_K(const SymExpr& expr, int n) {
    EquivClass out(Theory::K, Torus::T, n);
    for (const Partition& lam : enumerate_partitions(n))
        out.set(lam, kirwan_restrict_K(expr, lam, n));
    return out;
}

EquivClass kirwan_H(const SymExpr& expr, int n) {
    if (expr.uses_negative_p())
        throw std::domain_error("negative power sums need K-theory");
    EquivClass out(Theory::H, Torus::T, n);
    for (const Partition& lam : enumerate_partitions(n))
        out.set(lam, kirwan_restrict_H(expr, lam, n));
    return out;
}

EquivClass specialize_class(const EquivClass& cl, Torus target) {
    if (target == Torus::T) {
        if (cl.torus() != Torus::T)
            throw std::invalid_argument("cannot enlarge the torus of a class");
        return cl;
    }
    if (cl.torus() == Torus::NONE)
        throw std::invalid_argument("class carries no torus action");
    EquivClass out = cl;
    out.torus_ = target;
    const bool k_theory = cl.theory() == Theory::K;
    if (cl.torus() == Torus::T) {
        std::optional<Rational> q_value =
            k_theory ? Rational(1) : Rational(0);
        for (auto& [lam, value] : out.restrictions_)
            value = value.specialize(q_value, std::nullopt);
    }
    if (target == Torus::NONE) {
        for (auto& [lam, value] : out.restrictions_) {
            if (!value.is_constant())
                throw std::domain_error(
                    "trivial-group restriction is only sound for constant "
                    "restrictions; use the basis reduction instead");
        }
    }
    return out;
}

namespace {

using nlohmann::json;

json laurent_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({e.first, e.second, c.get_num().get_str(),
                         c.get_den().get_str()});
    return terms;
}

LaurentPoly laurent_from_json(const json& terms) {
    LaurentPoly p;
    for (const auto& rec : terms) {
        Rational c(mpz_class(rec.at(2).get<std::string>()),
                   mpz_class(rec.at(3).get<std::string>()));
        c.canonicalize();
        p += LaurentPoly::monomial(rec.at(0).get<int>(), rec.at(1).get<int>(), c);
    }
    return p;
}

std::string theory_name(Theory t) { return t == Theory::K ? "K" : "H"; }
std::string torus_name(Torus t) {
    switch (t) {
        case Torus::T: return "T";
        case Torus::Ty: return "Ty";
        default: return "none";
    }
}

}  // namespace

std::string equiv_class_to_json(const EquivClass& cl) {
    json j;
    j["theory"] = theory_name(cl.theory());
    j["torus"] = torus_name(cl.torus());
    j["n"] = cl.n();
    json restrictions = json::object();
    for (const auto& [lam, value] : cl.restrictions())
        restrictions[lam.to_string()] = laurent_to_json(value);
    j["restrictions"] = restrictions;
    return j.dump(2);
}

std::string operator_result_to_json(const EquivClass& cl, int source_n,
                                    const std::string& provenance) {
    json j = json::parse(equiv_class_to_json(cl));
    j["source_n"] = source_n;
    j["provenance"] = provenance;
    return j.dump(2) + "\n";
}

EquivClass equiv_class_from_json(const std::string& text) {
    json j = json::parse(text);
    Theory theory = j.at("theory").get<std::string>() == "K" ? Theory::K : Theory::H;
    std::string torus_text = j.at("torus").get<std::string>();
    Torus torus = torus_text == "T" ? Torus::T
                  : torus_text == "Ty" ? Torus::Ty
                                       : Torus::NONE;
    EquivClass out(theory, torus, j.at("n").get<int>());
    for (const auto& [key, value] : j.at("restrictions").items())
        out.set(Partition::parse(key), laurent_from_json(value));
    return out;
}

std::vector<WeightTableRow> weight_table(const Partition& lambda,
                                         std::optional<BoxCoord> corner) {
    if (corner) {
        auto cs = lambda.corners();
        if (std::find(cs.begin(), cs.end(), *corner) == cs.end())
            throw std::domain_error("marked box is not a corner of the partition");
    }
    std::vector<WeightTableRow> rows;
    for (const BoxCoord& b : lambda.boxes()) {
        ArmLeg al = lambda.arm_leg(b);
        WeightTableRow row;
        row.box = b;
        row.first = {-al.arm, al.leg + 1};
        row.second = {al.arm + 1, -al.leg};
        if (corner) {
            row.added = b == *corner;
            if (b.i == corner->i && b.j < corner->j) {
                row.first = {-al.arm, al.leg};  // box below: shorten vertically
                row.first_modified = true;
            }
            if (b.j == corner->j && b.i < corner->i) {
                row.second = {al.arm, -al.leg};  // box to the left: shorten horizontally
                row.second_modified = true;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string weight_text(Weight w, bool modified) {
    std::string s = "(" + std::to_string(w.first) + "," +
                    std::to_string(w.second) + ")";
    if (modified) s += "*";
    return s;
}

}  // namespace

std::string format_weight_table(const std::vector<WeightTableRow>& rows) {
    std::ostringstream os;
    for (const auto& row : rows) {
        os << "box (" << row.box.i << "," << row.box.j << "): "
           << weight_text(row.first, row.first_modified) << ", "
           << weight_text(row.second, row.second_modified);
        if (row.added) os << "  [added]";
        os << "\n";
    }
    return os.str();
}

}  // namespace hilb
