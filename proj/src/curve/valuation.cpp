#include "galpoint/valuation.hpp"

#include <algorithm>
#include <numeric>

#include "galpoint/error.hpp"
#include "galpoint/extension.hpp"
#include "local.hpp"

namespace galpoint {

LocalValue local_value(const PlaneCurve& C, const ProjPoint& p, const TriPoly& G) {
    require(C.contains(p.coords()), ErrorCode::NotOnCurve, p.to_string() + " is not on the curve");
    if (G.is_zero() || C.reduce(G).is_zero()) return {};
    const int cap = C.degree() * std::max(G.total_degree(), 0) + 1;
    int prec = std::min(8, cap);
    for (;;) {
        const BranchExpansion br = C.branch(p, prec);
        const UniPoly val = detail::eval_local(detail::localize(G, p, br.parameter, br.dependent), br.series, prec);
        if (!val.is_zero()) return {val.order(), val.coeff(val.order())};
        if (prec >= cap) break;
        prec = std::min(2 * prec, cap);
    }
    fail(ErrorCode::PrecisionExhausted, "valuation at " + p.to_string() + " exceeds the intersection bound");
}

int local_valuation(const PlaneCurve& C, const ProjPoint& p, const TriPoly& G) {
    const LocalValue lv = local_value(C, p, G);
    require(lv.order.has_value(), ErrorCode::IdenticallyZero, "form vanishes identically on the curve");
    return *lv.order;
}

std::uint32_t splitting_degree(const PlaneCurve& C, const TriPoly& G) {
    const Field& k = C.field();
    const CurveReducer& red = C.reducer();
    const TriPoly Fs = red.sheared() ? C.form().substitute_linear(red.shear()) : C.form();
    const TriPoly Gs = red.sheared() ? G.substitute_linear(red.shear()) : G;
    const int v = red.variable();
    const int u = (v == 0) ? 1 : 0;
    const int w = (v == 2) ? 1 : 2;
    Vec3 eu = {k.zero(), k.zero(), k.zero()}, ev = eu, ew = eu;
    eu[u] = k.one();
    ev[v] = k.one();
    ew[w] = k.one();

    std::uint32_t result = 1;
    Rng rng(0);
    // Degrees of the common v-roots above one base point (given over an extension).
    auto fiber = [&](const WorkingField& wf, const Vec3& base) {
        const UniPoly a = detail::embed_form(Fs, wf).along(base, {wf.embed(ev[0]), wf.embed(ev[1]), wf.embed(ev[2])});
        const UniPoly b = detail::embed_form(Gs, wf).along(base, {wf.embed(ev[0]), wf.embed(ev[1]), wf.embed(ev[2])});
        const UniPoly g = gcd(a, b);
        for (const auto& [f, m] : factor_univariate(g, rng).factors)
            result = std::lcm(result, wf.relative_degree() * static_cast<std::uint32_t>(f.degree()));
    };

    const TriPoly R = resultant(Fs, Gs, v).value;
    if (R.is_zero()) return 1;
    for (const auto& [phi, m] : factor_univariate(R.along(ew, eu), rng).factors) {
        const auto d = static_cast<std::uint32_t>(phi.degree());
        std::uint64_t qd = 1;
        for (std::uint32_t i = 0; i < d; ++i) qd *= k.size();
        if (qd > (1u << 20)) {
            result = std::lcm(result, d);
            continue;
        }
        const FieldPtr& base = C.field_ptr();
        WorkingField wf(base, d);
        std::vector<FieldElement> coeffs;
        for (const auto& c : phi.coeffs()) coeffs.push_back(wf.embed(c));
        const FieldElement u0 = roots_in_field(UniPoly(*wf.work(), coeffs), rng).front().value;
        Vec3 pt = {wf.work()->zero(), wf.work()->zero(), wf.work()->zero()};
        pt[u] = u0;
        pt[w] = wf.work()->one();
        fiber(wf, pt);
    }
    if (R(eu).is_zero()) {
        WorkingField wf(C.field_ptr(), 1);
        fiber(wf, eu);
    }
    return result;
}

Divisor intersection_divisor(const PlaneCurve& C, const TriPoly& G) {
    G.require_form("intersecting form");
    require(G.field().same_as(C.field()), ErrorCode::FieldMismatch, "form is not over the working field");
    require(!C.reduce(G).is_zero(), ErrorCode::IdenticallyZero, "form vanishes identically on the curve");
    Divisor d;
    int total = 0;
    for (const auto& p : C.rational_points()) {
        if (!G(p.coords()).is_zero()) continue;
        require(C.is_smooth_at(p.coords()), ErrorCode::SingularPoint,
                p.to_string() + " is a singular point of the curve");
        const int m = local_valuation(C, p, G);
        add_point(d, p, m);
        total += m;
    }
    const int expected = C.degree() * G.total_degree();
    if (total < expected)
        fail(ErrorCode::ExtensionRequired, "only " + std::to_string(total) + " of " + std::to_string(expected) +
                                               " intersection points are rational; splitting degree " +
                                               std::to_string(splitting_degree(C, G)));
    require(total == expected, ErrorCode::Internal, "intersection multiplicities exceed the Bezout number");
    return d;
}

Divisor line_intersection_divisor(const PlaneCurve& C, const TriPoly& L) {
    require(!L.is_zero() && L.is_homogeneous() && L.total_degree() == 1, ErrorCode::InvalidArgument,
            "expected a nonzero linear form, got " + L.to_string());
    return intersection_divisor(C, L);
}

}  // namespace galpoint
