#include "hilb/pushforward.hpp"

#include <algorithm>

namespace hilb {

NestedClass::NestedClass(Theory theory, int n) : theory_(theory), n_(n) {
    for (const NestedPoint& pt : nested_fixed_points(n))
        values_.emplace(pt, LaurentPoly(0));
}

const LaurentPoly& NestedClass::at(const NestedPoint& pt) const {
    auto it = values_.find(pt);
    if (it == values_.end())
        throw std::invalid_argument("not a fixed point of Hilb^{n,n+1}");
    return it->second;
}

void NestedClass::set(const NestedPoint& pt, LaurentPoly value) {
    auto it = values_.find(pt);
    if (it == values_.end())
        throw std::invalid_argument("not a fixed point of Hilb^{n,n+1}");
    it->second = std::move(value);
}

NestedClass operator*(const NestedClass& a, const NestedClass& b) {
    if (a.theory_ != b.theory_ || a.n_ != b.n_)
        throw std::invalid_argument("nested classes live in different rings");
    NestedClass out = a;
    for (auto& [pt, value] : out.values_) value *= b.at(pt);
    return out;
}

NestedClass& NestedClass::operator-=(const NestedClass& rhs) {
    if (theory_ != rhs.theory_ || n_ != rhs.n_)
        throw std::invalid_argument("nested classes live in different rings");
    for (auto& [pt, value] : values_) value -= rhs.at(pt);
    return *this;
}

LaurentPoly restrict_Q(const NestedPoint& pt, int power) {
    return LaurentPoly::monomial(pt.corner.i * power, pt.corner.j * power);
}

LaurentPoly restrict_c1Q(const NestedPoint& pt) {
    LaurentPoly v = LaurentPoly::monomial(1, 0, pt.corner.i);
    v += LaurentPoly::monomial(0, 1, pt.corner.j);
    return v;
}

NestedClass nested_unit(Theory theory, int n) {
    NestedClass out(theory, n);
    for (const NestedPoint& pt : nested_fixed_points(n))
        out.set(pt, LaurentPoly(1));
    return out;
}

NestedClass nested_Q_power(int n, int m) {
    NestedClass out(Theory::K, n);
    for (const NestedPoint& pt : nested_fixed_points(n))
        out.set(pt, restrict_Q(pt, m));
    return out;
}

NestedClass nested_c1Q_power(int n, int m) {
    if (m < 0) throw std::invalid_argument("c_1 powers need m >= 0");
    NestedClass out(Theory::H, n);
    for (const NestedPoint& pt : nested_fixed_points(n)) {
        LaurentPoly v(1);
        for (int k = 0; k < m; ++k) v *= restrict_c1Q(pt);
        out.set(pt, v);
    }
    return out;
}

namespace {

// Weights of the target Hilbert scheme not shared with the nested scheme and
// vice versa; everything common cancels before expansion.
std::pair<WeightMultiset, WeightMultiset> euler_ratio_weights(const NestedPoint& pt) {
    WeightMultiset num = tangent_weights_hilb(pt.lambda);
    WeightMultiset den = tangent_weights_nested(pt);
    std::sort(num.begin(), num.end());
    std::sort(den.begin(), den.end());
    WeightMultiset num_only, den_only;
    std::set_difference(num.begin(), num.end(), den.begin(), den.end(),
                        std::back_inserter(num_only));
    std::set_difference(den.begin(), den.end(), num.begin(), num.end(),
                        std::back_inserter(den_only));
    return {num_only, den_only};
}

RatFunc euler_ratio(const NestedPoint& pt, Flavor flavor) {
    auto [num_only, den_only] = euler_ratio_weights(pt);
    LaurentPoly num(1);
    for (Weight w : num_only) num *= weight_factor(flavor, w);
    return {std::move(num), Denominator(flavor, den_only)};
}

}  // namespace

RatFunc r_function(const NestedPoint& pt) { return euler_ratio(pt, Flavor::K); }

RatFunc r_tilde(const NestedPoint& pt) {
    RatFunc r = r_function(pt);
    r *= LaurentPoly::monomial(pt.corner.i, pt.corner.j);
    return r;
}

RatFunc r_function_H(const NestedPoint& pt) { return euler_ratio(pt, Flavor::H); }

namespace {

RatFunc appendix_W(int a, int b) {
    // (q^{a+1} - t^b) / (q^a - t^b), denominator as q^a (1 - q^{-a} t^b)
    LaurentPoly num = LaurentPoly::monomial(1, 0) - LaurentPoly::monomial(-a, b);
    Denominator den(Flavor::K);
    den.push({a, -b});
    return {std::move(num), std::move(den)};
}

RatFunc appendix_U(int a, int b) {
    LaurentPoly num = LaurentPoly(1) - LaurentPoly::monomial(-a, b + 1);
    Denominator den(Flavor::K);
    den.push({a, -b});
    return {std::move(num), std::move(den)};
}

}  // namespace

RatFunc appendix_eval(const AppendixFunc& f) {
    switch (f.kind) {
        case AppendixFunc::W:
            return appendix_W(f.a, f.b);
        case AppendixFunc::U:
            return appendix_U(f.a, f.b);
        case AppendixFunc::R: {
            const Partition& lam = f.point.lambda;
            const BoxCoord c = f.point.corner;
            RatFunc acc(LaurentPoly(1), Denominator(Flavor::K));
            for (int d = 0; d < c.j; ++d) {
                ArmLeg al = lam.arm_leg({c.i, d});
                acc = acc * appendix_U(al.arm, al.leg);
            }
            for (int s = 0; s < c.i; ++s) {
                ArmLeg al = lam.arm_leg({s, c.j});
                acc = acc * appendix_W(al.arm, al.leg);
            }
            return acc;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

EquivClass push_impl(const NestedClass& cls, Flavor flavor) {
    int target = cls.n() + 1;
    EquivClass out(flavor == Flavor::K ? Theory::K : Theory::H, Torus::T, target);
    for (const Partition& lam : enumerate_partitions(target)) {
        std::vector<RatFunc> contributions;
        for (const BoxCoord& c : lam.corners()) {
            NestedPoint pt{lam, c};
            RatFunc term = euler_ratio(pt, flavor);
            term *= cls.at(pt);
            contributions.push_back(std::move(term));
        }
        try {
            out.set(lam, ratfunc_sum(contributions).to_laurent());
        } catch (const IntegralityError& err) {
            throw IntegralityError("pushforward restriction at " +
                                   lam.to_string() + " is not integral: " +
                                   err.what());
        }
    }
    return out;
}

}  // namespace

EquivClass push_K(const NestedClass& cls) {
    if (cls.theory() != Theory::K)
        throw std::invalid_argument("push_K needs a K-theory class");
    return push_impl(cls, Flavor::K);
}

EquivClass push_H(const NestedClass& cls) {
    if (cls.theory() != Theory::H)
        throw std::invalid_argument("push_H needs a cohomology class");
    return push_impl(cls, Flavor::H);
}

RatFunc push_ratfunc_at(const NestedClass& cls, const Partition& lambda) {
    Flavor flavor = cls.theory() == Theory::K ? Flavor::K : Flavor::H;
    std::vector<RatFunc> contributions;
    for (const BoxCoord& c : lambda.corners()) {
        NestedPoint pt{lambda, c};
        RatFunc term = euler_ratio(pt, flavor);
        term *= cls.at(pt);
        contributions.push_back(std::move(term));
    }
    return ratfunc_sum(contributions);
}

NestedClass pullback_p(const EquivClass& cl) {
    NestedClass out(cl.theory(), cl.n());
    for (const NestedPoint& pt : nested_fixed_points(cl.n()))
        out.set(pt, cl.at(pt.lambda.remove_corner(pt.corner)));
    return out;
}

NestedClass pullback_pi(const EquivClass& cl) {
    if (cl.n() < 1)
        throw std::invalid_argument("pullback along pi needs a class on Hilb^{n+1}");
    NestedClass out(cl.theory(), cl.n() - 1);
    for (const NestedPoint& pt : nested_fixed_points(cl.n() - 1))
        out.set(pt, cl.at(pt.lambda));
    return out;
}

namespace {

void check(AppendixReport& report, bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) report.violations.push_back(what);
}

}  // namespace

AppendixReport verify_appendix(int lambda_max) {
    if (lambda_max < 1) throw std::invalid_argument("lambda_max must be >= 1");
    AppendixReport report;

    // W/U basics on a small parameter grid
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            if (a == 0 && b == 0) continue;
            RatFunc w = appendix_W(a, b), u = appendix_U(a, b);
            check(report, w.equals(appendix_U(b, a).swap_qt()),
                  "W_{a,b}(q,t) != U_{b,a}(t,q) at a=" + std::to_string(a) +
                      " b=" + std::to_string(b));
            RatFunc wi = w.dual();
            wi *= LaurentPoly::monomial(1, 0);
            check(report, wi.equals(w), "W inversion fails");
            RatFunc ui = u.dual();
            ui *= LaurentPoly::monomial(0, 1);
            check(report, ui.equals(u), "U inversion fails");
            if (a != 0) {
                auto wl = limit_q(w, LimitDirection::ZERO);
                check(report, wl && *wl == LaurentPoly(1), "lim W != 1");
                auto ul = limit_q(u, LimitDirection::ZERO);
                check(report, ul && *ul == LaurentPoly::monomial(0, 1),
                      "lim U != t");
                auto uinf = limit_q(u, LimitDirection::INFINITY_);
                check(report, uinf && *uinf == LaurentPoly(1),
                      "lim U at infinity != 1");
            }
        }

    for (int n = 1; n <= lambda_max; ++n) {
        for (const Partition& lam : enumerate_partitions(n)) {
            auto corners = lam.corners();
            for (std::size_t idx = 0; idx < corners.size(); ++idx) {
                const BoxCoord c = corners[idx];
                NestedPoint pt{lam, c};
                std::string where = "lambda=" + lam.to_string() + " corner=(" +
                                    std::to_string(c.i) + "," +
                                    std::to_string(c.j) + ")";
                RatFunc R = appendix_eval(AppendixFunc::make_R(pt));

                check(report, R.equals(r_tilde(pt)), "R != r~ at " + where);

                RatFunc inv = R.dual();
                inv *= LaurentPoly::monomial(c.i, c.j);
                check(report, inv.equals(R), "inversion identity fails at " + where);

                RatFunc rt = r_tilde(pt);
                RatFunc rt_inv = rt.dual();
                rt_inv *= LaurentPoly::monomial(c.i, c.j);
                check(report, rt_inv.equals(rt),
                      "tau(r~) != q^{-k} t^{-l} r~ at " + where);

                // q -> 0 limit: the run of t-powers between consecutive
                // corner rows, with the row below the lowest corner at -1.
                int row_low =
                    idx + 1 < corners.size() ? corners[idx + 1].j : -1;
                LaurentPoly expected;
                for (int j = row_low + 1; j <= c.j; ++j)
                    expected += LaurentPoly::monomial(0, j);
                auto lim0 = limit_q(R, LimitDirection::ZERO);
                check(report, lim0 && *lim0 == expected,
                      "q->0 limit mismatch at " + where);

                if (c.i != 0) {
                    NestedPoint shifted{lam.remove_first_column(),
                                        BoxCoord{c.i - 1, c.j}};
                    RatFunc Rs = appendix_eval(AppendixFunc::make_R(shifted));

                    // removing the first column peels off one W factor
                    ArmLeg al = lam.arm_leg({0, c.j});
                    check(report,
                          R.equals(Rs * appendix_eval(
                                       AppendixFunc::make_W(al.arm, al.leg))),
                          "column-removal factorization fails at " + where);

                    Rs *= LaurentPoly::monomial(1, 0);
                    std::vector<RatFunc> diff{R, -Rs};
                    auto lim = limit_q(ratfunc_sum(diff), LimitDirection::INFINITY_);
                    check(report, lim.has_value(),
                          "q->infinity limit of R - q R~ missing at " + where);
                } else {
                    auto lim = limit_q(R, LimitDirection::INFINITY_);
                    check(report, lim.has_value(),
                          "q->infinity limit of R missing at " + where);
                }
            }
        }
    }
    return report;
}

}  // namespace hilb
