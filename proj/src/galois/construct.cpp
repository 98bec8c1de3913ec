#include <algorithm>

#include "galpoint/error.hpp"
#include "galpoint/galois.hpp"

namespace galpoint {

namespace {

// l0 f + l1 g + l2 as a function on the source.
RatFunc pull_line(const EmbeddingModel& m, const std::vector<FieldElement>& l) {
    return m.f * l[0] + m.g * l[1] + l[2];
}

bool collinear(const std::vector<ProjPoint>& pts) {
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            for (std::size_t c = b + 1; c < pts.size(); ++c) {
                Mat3 m;
                for (int r = 0; r < 3; ++r) {
                    m[3 * r] = pts[a][r];
                    m[3 * r + 1] = pts[b][r];
                    m[3 * r + 2] = pts[c][r];
                }
                if (!mat3_det(m).is_zero()) return false;
            }
    return true;
}

bool general_position(const std::vector<ProjPoint>& pts) {
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            if (pts[a] == pts[b]) return false;
            for (std::size_t c = b + 1; c < pts.size(); ++c)
                if (collinear({pts[a], pts[b], pts[c]})) return false;
        }
    return true;
}

Vec3 unit(const Field& k, int i) {
    Vec3 v = {k.zero(), k.zero(), k.zero()};
    v[i] = k.one();
    return v;
}

}  // namespace

GaloisCertificate certify_galois_point(const EmbeddingModel& model, const ProjPoint& center, const AutGroup& G,
                                       std::uint64_t seed, int fiber_trials) {
    const Field& k = model.source->field();
    Matrix row(k, 0, 3);
    row.append_row({center[0], center[1], center[2]});
    const auto lines = row.kernel();
    const RatFunc projection = pull_line(model, lines[0]) / pull_line(model, lines[1]);
    const bool inner = model.phi(center.coords()).is_zero();
    GaloisCertificate cert{center, inner, G, projection, 0, is_invariant(projection, G), false, std::nullopt};
    cert.degree = function_degree(projection, seed);
    cert.artin = cert.invariant && cert.degree == static_cast<int>(G.order());
    if (inner) {
        bool smooth = false;
        for (int v = 0; v < 3; ++v) smooth = smooth || !model.phi.partial(v)(center.coords()).is_zero();
        cert.artin = cert.artin && smooth;
    }
    if (fiber_trials > 0) cert.fibers = generic_fiber_orbit_test(projection, G, fiber_trials, seed);
    return cert;
}

Construction construct(const GaloisSetup& setup, Scheme scheme) {
    ConditionReport report = check(setup, scheme);
    require(report.holds, ErrorCode::PreconditionFailed,
            "the criteria are not satisfied: condition (" + report.first_failure + ") fails");
    const Field& k = setup.curve->field();
    const bool inner = is_inner(scheme);
    const std::size_t n = point_count(scheme);

    RatFunc f = report.functions[0], g = report.functions[1];
    std::vector<FieldElement> scaling = {k.one(), k.one()};
    if (setup.seed != 0) {
        Rng rng(setup.seed);
        for (auto& c : scaling) {
            do c = k.random(rng);
            while (c.is_zero());
        }
        f = f * scaling[0];
        g = g * scaling[1];
    }
    EmbeddingModel model = implicitize(f, g, setup.seed);
    const int order = static_cast<int>(setup.groups[0].order());
    const int expected = inner ? order + 1 : order;
    require(model.degree == expected, ErrorCode::DegreeMismatch,
            "image has degree " + std::to_string(model.degree) + ", expected " + std::to_string(expected));
    CurvePtr image = validate_curve(model.phi, setup.curve->field_ptr(), setup.seed);

    std::vector<ProjPoint> marks = {ProjPoint(unit(k, 1)), ProjPoint(unit(k, 0))};
    std::vector<FieldElement> coeffs;
    std::optional<ProjPoint> source_third;
    if (n == 3) {
        const RatFunc one = RatFunc::constant(setup.curve, k.one());
        const SpanCertificate sc = span_coefficients(report.functions[2], {one, f, g});
        require(sc.coefficients.has_value(), ErrorCode::CertificationFailed, "h left the span of 1, f, g");
        coeffs = *sc.coefficients;
        require(!(coeffs[1].is_zero() && coeffs[2].is_zero()), ErrorCode::CertificationFailed, "h is constant");
        marks.push_back(ProjPoint(Vec3{-coeffs[2], coeffs[1], k.zero()}));
    }
    require(collinear(marks), ErrorCode::CertificationFailed, "marks are not collinear");

    std::optional<ProjPoint> image_q;
    if (inner) {
        for (std::size_t i = 0; i < n; ++i)
            require(image_point(model, setup.points[i]) == marks[i], ErrorCode::CertificationFailed,
                    "the image of P" + std::to_string(i + 1) + " is not " + marks[i].to_string());
        if (n == 3) {
            const Divisor& D = *report.common->D;
            const Divisor hd = divisor_of_function(report.functions[2]) + D;
            std::vector<ProjPoint> meet;
            for (const auto& [p, m] : D)
                if (hd.count(p)) meet.push_back(p);
            require(meet.size() == 1 && meet[0] == setup.points[2], ErrorCode::CertificationFailed,
                    "supp(D) and supp((h) + D) do not meet exactly in P3");
            require(image_point(model, meet[0]) == marks[2], ErrorCode::CertificationFailed,
                    "the two routes to the third center disagree");
            source_third = meet[0];
        }
    } else {
        for (const auto& m : marks)
            require(!model.phi(m.coords()).is_zero(), ErrorCode::CertificationFailed,
                    m.to_string() + " lies on the image, not an outer point");
        image_q = image_point(model, *setup.q);
        require((*image_q)[2].is_zero(), ErrorCode::CertificationFailed, "phi(Q) is off the line through the centers");
    }

    std::vector<GaloisCertificate> certs;
    for (std::size_t i = 0; i < n; ++i) {
        certs.push_back(certify_galois_point(model, marks[i], setup.groups[i], setup.seed));
        require(certs.back().artin && certs.back().inner == inner, ErrorCode::CertificationFailed,
                marks[i].to_string() + " is not certified as a Galois point with group G" + std::to_string(i + 1));
    }
    return Construction{std::move(report), std::move(model), std::move(image), std::move(marks), std::move(coeffs),
                        source_third, std::move(certs), image_q, std::move(scaling)};
}

Construction construct_three_inner(const GaloisSetup& setup) { return construct(setup, Scheme::ThreeInner); }
Construction construct_three_outer(const GaloisSetup& setup) { return construct(setup, Scheme::ThreeOuter); }

bool maps_related(const EmbeddingModel& a, const EmbeddingModel& b, const ProjMap& m) {
    const auto& M = m.matrix();
    const Field& k = a.source->field();
    const std::array<RatFunc, 3> pa = {a.f, a.g, RatFunc::constant(a.source, k.one())};
    std::array<RatFunc, 3> mb = pa;
    for (int r = 0; r < 3; ++r) mb[r] = b.f * M[3 * r] + b.g * M[3 * r + 1] + M[3 * r + 2];
    for (int r = 0; r < 3; ++r) {
        const int s = (r + 1) % 3;
        if (!(pa[r] * mb[s] - pa[s] * mb[r]).is_zero()) return false;
    }
    return true;
}

UniquenessResult uniqueness_compare(const GaloisSetup& setup, Scheme scheme, std::uint64_t seed_a,
                                    std::uint64_t seed_b) {
    for (std::size_t i = 0; i < std::min<std::size_t>(2, setup.groups.size()); ++i)
        require(setup.groups[i].order() >= 3, ErrorCode::HypothesisViolation,
                "uniqueness is only claimed for groups of order at least three");
    GaloisSetup sa = setup, sb = setup;
    sa.seed = seed_a;
    sb.seed = seed_b;
    Construction a = construct(sa, scheme);
    Construction b = construct(sb, scheme);

    std::vector<ProjPoint> marks_a = a.marks, marks_b = b.marks;
    std::vector<ProjPoint> chosen_a;
    for (const auto& p : setup.curve->rational_points()) {
        if (chosen_a.size() == 4) break;
        const ProjPoint ia = image_point(a.model, p);
        std::vector<ProjPoint> trial = chosen_a;
        trial.push_back(ia);
        if (!general_position(trial)) continue;
        chosen_a.push_back(ia);
        marks_a.push_back(ia);
        marks_b.push_back(image_point(b.model, p));
    }
    EquivalenceResult eq = projective_equivalence(a.model.phi, marks_a, b.model.phi, marks_b);
    require(eq.map.has_value(), ErrorCode::EquivalenceNotFound, "no projective equivalence: " + eq.note);
    const bool agree = maps_related(a.model, b.model, *eq.map);
    require(agree, ErrorCode::EquivalenceNotFound, "the equivalence does not carry one embedding onto the other");
    return UniquenessResult{std::move(a), std::move(b), std::move(eq), agree};
}

}  // namespace galpoint
