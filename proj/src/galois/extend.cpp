#include "galpoint/error.hpp"
#include "galpoint/galois.hpp"
#include "galpoint/valuation.hpp"

namespace galpoint {

namespace {

// Rows of cross(M a, b) = 0 in the nine unknown entries of M.
void incidence_rows(Matrix& m, const Vec3& a, const Vec3& b) {
    const Field& k = m.field();
    for (int r = 0; r < 3; ++r) {
        const int s = (r + 1) % 3, t = (r + 2) % 3;
        // (M a)_s b_t - (M a)_t b_s
        std::vector<FieldElement> row(9, k.zero());
        for (int c = 0; c < 3; ++c) {
            row[3 * s + c] += a[c] * b[t];
            row[3 * t + c] -= a[c] * b[s];
        }
        m.append_row(row);
    }
}

}  // namespace

InflectionCheck is_total_inflection(const AutGroup& G, const ProjPoint& p) {
    InflectionCheck out;
    out.vacuous = G.order() == 1;
    out.total = true;
    for (const auto& s : G.elements())
        if (s.apply(p) != p) out.total = false;
    const PlaneCurve& C = *G.curve();
    if (out.total && !out.vacuous && C.degree() == static_cast<int>(G.order()) + 1) {
        Vec3 grad;
        for (int v = 0; v < 3; ++v) grad[v] = C.partial(v)(p.coords());
        out.tangent_order = local_valuation(C, p, TriPoly::linear(grad));
        require(*out.tangent_order == C.degree(), ErrorCode::CertificationFailed,
                "a point fixed by the whole group is not a total inflection at " + p.to_string());
    }
    return out;
}

bool linear_extension_holds(const EmbeddingModel& model, const ProjMap& sigma, const ProjMap& m) {
    const Field& k = model.source->field();
    const auto& M = m.matrix();
    const std::array<RatFunc, 3> lhs = {pullback(sigma, model.f), pullback(sigma, model.g),
                                        RatFunc::constant(model.source, k.one())};
    std::array<RatFunc, 3> rhs = lhs;
    for (int r = 0; r < 3; ++r) rhs[r] = model.f * M[3 * r] + model.g * M[3 * r + 1] + M[3 * r + 2];
    for (int r = 0; r < 3; ++r) {
        const int s = (r + 1) % 3;
        if (!(lhs[r] * rhs[s] - lhs[s] * rhs[r]).is_zero()) return false;
    }
    return true;
}

ProjMap build_linear_extension(const EmbeddingModel& model, const ProjMap& sigma) {
    const Field& k = model.source->field();
    Matrix sys(k, 0, 9);
    for (const auto& p : model.source->rational_points())
        incidence_rows(sys, image_point(model.f, model.g, p).coords(),
                       image_point(model.f, model.g, sigma.apply(p)).coords());
    const auto kernel = sys.kernel();
    require(kernel.size() == 1, ErrorCode::CertificationFailed,
            kernel.empty() ? "no linear map matches sigma on the image points"
                           : "the image points do not determine a unique linear map");
    Mat3 m;
    for (int i = 0; i < 9; ++i) m[i] = kernel[0][i];
    require(!mat3_det(m).is_zero(), ErrorCode::CertificationFailed, "the matching linear map is singular");
    const ProjMap out(m);
    require(linear_extension_holds(model, sigma, out), ErrorCode::CertificationFailed,
            "phi o sigma and sigma~ o phi differ as rational maps");
    return out;
}

AutGroup transport_group(const AutGroup& G, const EmbeddingModel& model, const CurvePtr& image) {
    std::vector<ProjMap> gens;
    for (const auto& s : G.generators()) gens.push_back(build_linear_extension(model, s));
    AutGroup out = group_closure(gens, image, G.order());
    require(out.order() == G.order(), ErrorCode::CertificationFailed, "the transported group has a different order");
    return out;
}

ExtensionReport check_extendability(const ExtensionSetup& s) {
    require(s.groups.size() == 3 && s.points.size() == 3, ErrorCode::PreconditionFailed,
            "extendability needs three groups and three points");
    require(s.model.degree >= 4, ErrorCode::HypothesisViolation,
            "the image has degree " + std::to_string(s.model.degree) + "; the criterion needs degree at least 4");
    require(s.groups[0].contains(s.sigma), ErrorCode::PreconditionFailed, "sigma is not in G1");
    require(s.sigma.apply(s.points[1]) == s.points[2], ErrorCode::PreconditionFailed, "sigma does not map P2 to P3");

    ExtensionReport r;
    r.fast_path = true;
    for (std::size_t i = 0; i < 3; ++i) {
        const InflectionCheck ic = is_total_inflection(s.groups[i], s.points[i]);
        r.fast_path = r.fast_path && ic.total && !ic.vacuous;
    }
    if (r.fast_path) r.transcript.push_back("P1, P2, P3 are total inflection points: (a), (b), (c) follow");

    const bool a = s.sigma.apply(s.points[0]) == s.points[0];
    r.conditions.push_back({"a", a ? Verdict::Positive : Verdict::Negative,
                            "sigma(P1) = " + s.sigma.apply(s.points[0]).to_string()});

    r.third = certify_galois_point(s.model, image_point(s.model, s.points[2]), s.groups[2], s.seed);
    const bool b = r.third->inner && r.third->artin;
    r.conditions.push_back({"b", b ? Verdict::Positive : Verdict::Negative,
                            "phi(P3) = " + r.third->center.to_string() + (b ? " is" : " is not") +
                                " an inner Galois point with group G3"});

    Divisor t3 = orbit_sum(s.groups[2], s.points[2]);
    add_point(t3, s.points[2], 1);
    r.pulled = pullback(s.sigma, t3);
    r.expected = orbit_sum(s.groups[1], s.points[1]);
    add_point(r.expected, s.points[1], 1);
    const bool c = r.pulled == r.expected;
    r.conditions.push_back({"c", c ? Verdict::Positive : Verdict::Negative,
                            "sigma^*(" + to_string(t3) + ") = " + to_string(r.pulled) + ", P2 + sum G2(P2) = " +
                                to_string(r.expected)});
    r.transcript.push_back("divisor path: (a) " + std::string(to_string(r.conditions[0].verdict)) + ", (b) " +
                           to_string(r.conditions[1].verdict) + ", (c) " + to_string(r.conditions[2].verdict));

    r.extendable = a && b && c;
    if (r.fast_path) r.fast_path_agrees = r.extendable;
    if (r.extendable) {
        r.sigma_tilde = build_linear_extension(s.model, s.sigma);
        r.identity_certified = true;
        r.transcript.push_back("sigma~ = " + r.sigma_tilde->to_string() + " and phi o sigma = sigma~ o phi mod F");
    }
    return r;
}

}  // namespace galpoint
