#include <algorithm>
#include <set>

#include "galpoint/error.hpp"
#include "galpoint/galois.hpp"
#include "galpoint/valuation.hpp"

namespace galpoint {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

bool same_curve(const PlaneCurve& a, const PlaneCurve& b) {
    return &a == &b || (a.field().same_as(b.field()) && a.form() == b.form());
}

void validate_setup(const GaloisSetup& s, Scheme scheme) {
    require(s.curve != nullptr, ErrorCode::PreconditionFailed, "setup has no curve");
    const std::size_t n = point_count(scheme);
    require(s.groups.size() == n, ErrorCode::PreconditionFailed,
            std::string(to_string(scheme)) + " needs " + std::to_string(n) + " groups");
    require(s.invariants.empty() || s.invariants.size() == n, ErrorCode::PreconditionFailed,
            "invariant list does not match the groups");
    for (std::size_t i = 0; i < n; ++i) {
        require(s.groups[i].curve() && same_curve(*s.groups[i].curve(), *s.curve), ErrorCode::PreconditionFailed,
                "group " + idx(i) + " acts on a different curve");
        if (!s.invariants.empty() && s.invariants[i])
            require(same_curve(s.invariants[i]->curve(), *s.curve), ErrorCode::PreconditionFailed,
                    "invariant " + idx(i) + " lives on a different curve");
    }
    if (is_inner(scheme)) {
        require(s.points.size() == n, ErrorCode::PreconditionFailed, "inner setups need one point per group");
        for (const auto& p : s.points) point_check(*s.curve, p.coords());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                require(s.points[i] != s.points[j], ErrorCode::PreconditionFailed,
                        "points P" + idx(i) + " and P" + idx(j) + " coincide");
    } else {
        require(s.q.has_value(), ErrorCode::PreconditionFailed, "outer setups need the point Q");
        point_check(*s.curve, s.q->coords());
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t order = s.groups[i].order();
        if (scheme == Scheme::ThreeInner)
            require(order >= 3, ErrorCode::HypothesisViolation,
                    "G" + idx(i) + " has order " + std::to_string(order) + "; three inner points need order at least three");
        else if (is_inner(scheme))
            require(order >= 2, ErrorCode::HypothesisViolation, "G" + idx(i) + " is trivial");
        else
            require(order >= 2, ErrorCode::HypothesisViolation,
                    "G" + idx(i) + " is trivial; the outer criterion is degenerate there");
    }
}

// Intersection multiplicity of a line with the image curve at an image point.
int line_order(const PlaneCurve& image, const ProjPoint& at, const Vec3& line) {
    return local_valuation(image, at, TriPoly::linear(line));
}

std::vector<Fact3Record> fact3_records(const ConditionReport& r, const GaloisSetup& s) {
    const EmbeddingModel model = implicitize(r.functions[0], r.functions[1], s.seed);
    const CurvePtr image = validate_curve(model.phi, s.curve->field_ptr(), s.seed);
    std::vector<ProjPoint> marks;
    for (const auto& p : s.points) marks.push_back(image_point(model, p));
    std::vector<Fact3Record> out;
    for (std::size_t i = 0; i < marks.size(); ++i) {
        Vec3 grad;
        for (int v = 0; v < 3; ++v) grad[v] = image->partial(v)(marks[i].coords());
        for (std::size_t j = 0; j < marks.size(); ++j) {
            if (i == j) continue;
            Fact3Record rec;
            rec.i = i;
            rec.j = j;
            rec.chord_multiplicity = line_order(*image, marks[i], cross(marks[i].coords(), marks[j].coords()));
            rec.tangent_multiplicity = line_order(*image, marks[i], grad);
            rec.orbit_avoids = true;
            for (const auto& sigma : s.groups[i].elements())
                if (sigma.apply(s.points[i]) == s.points[j]) rec.orbit_avoids = false;
            require(rec.chord_multiplicity == 1 && rec.orbit_avoids, ErrorCode::CertificationFailed,
                    "the chord P" + idx(i) + "P" + idx(j) + " is tangent or G" + idx(i) + " moves P" + idx(i) +
                        " onto P" + idx(j) + " in a positive report");
            out.push_back(rec);
        }
    }
    return out;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Positive: return "positive";
    case Verdict::Negative: return "negative";
    case Verdict::Skipped: return "skipped";
    }
    return "?";
}

const char* to_string(Scheme s) {
    switch (s) {
    case Scheme::TwoInner: return "two-inner";
    case Scheme::TwoOuter: return "two-outer";
    case Scheme::ThreeInner: return "three-inner";
    case Scheme::ThreeOuter: return "three-outer";
    }
    return "?";
}

bool is_inner(Scheme s) { return s == Scheme::TwoInner || s == Scheme::ThreeInner; }

std::size_t point_count(Scheme s) { return s == Scheme::TwoInner || s == Scheme::TwoOuter ? 2 : 3; }

const ConditionEntry& ConditionReport::condition(const std::string& label) const {
    for (const auto& c : conditions)
        if (c.label == label) return c;
    fail(ErrorCode::InvalidArgument, "report has no condition (" + label + ")");
}

QuotientCertificate verify_quotient_rational(const AutGroup& G, const RatFunc& t, std::uint64_t seed) {
    require(G.order() >= 2, ErrorCode::PreconditionFailed, "the quotient test needs a nontrivial group");
    QuotientCertificate cert{t, G.order(), true, std::nullopt, 0, false, seed};
    for (const auto& s : G.elements()) {
        if (pullback(s, t) == t) continue;
        cert.invariant = false;
        cert.witness = s;
        return cert;
    }
    cert.degree = function_degree(t, seed);
    cert.positive = cert.degree == static_cast<int>(G.order());
    return cert;
}

PairwiseCertificate verify_pairwise_trivial(const std::vector<AutGroup>& groups) {
    require(groups.size() >= 2, ErrorCode::PreconditionFailed, "pairwise intersections need two groups");
    PairwiseCertificate cert;
    cert.positive = true;
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = i + 1; j < groups.size(); ++j) {
            PairwiseCertificate::Pair pair{i, j, {}};
            for (const auto& s : groups[i].elements())
                if (!s.is_identity() && groups[j].contains(s)) pair.common.push_back(s);
            if (!pair.common.empty()) cert.positive = false;
            cert.pairs.push_back(std::move(pair));
        }
    return cert;
}

CommonDivisor inner_common_divisor(const std::vector<AutGroup>& groups, const std::vector<ProjPoint>& points) {
    require(groups.size() == points.size() && groups.size() >= 2, ErrorCode::PreconditionFailed,
            "one point per group, at least two of each");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            require(points[i] != points[j], ErrorCode::PreconditionFailed,
                    "points P" + idx(i) + " and P" + idx(j) + " coincide");
    CommonDivisor out;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            Divisor d = orbit_sum(groups[i], points[j]);
            add_point(d, points[i], 1);
            out.candidates.push_back({i, j, std::move(d)});
        }
    for (std::size_t k = 1; k < out.candidates.size(); ++k)
        if (out.candidates[k].value != out.candidates[0].value) out.mismatches.push_back(k);
    if (out.mismatches.empty()) out.D = out.candidates[0].value;
    return out;
}

CommonDivisor outer_common_divisor(const std::vector<AutGroup>& groups, const ProjPoint& q) {
    require(!groups.empty(), ErrorCode::PreconditionFailed, "no groups");
    const CurvePtr& C = groups.front().curve();
    point_check(*C, q.coords());
    CommonDivisor out;
    for (std::size_t i = 0; i < groups.size(); ++i) out.candidates.push_back({i, i, orbit_sum(groups[i], q)});
    for (std::size_t k = 1; k < out.candidates.size(); ++k)
        if (out.candidates[k].value != out.candidates[0].value) out.mismatches.push_back(k);
    if (out.mismatches.empty()) out.D = out.candidates[0].value;
    return out;
}

ConditionReport check(const GaloisSetup& s, Scheme scheme) {
    validate_setup(s, scheme);
    const bool inner = is_inner(scheme);
    const std::size_t n = point_count(scheme);
    ConditionReport r;
    r.scheme = scheme;
    r.working_field = s.curve->field().describe();
    r.seed = s.seed;
    const std::string lc = inner ? "c" : "c'";
    const std::string ld = inner ? "d" : "d'";
    r.conditions = {{"a", Verdict::Skipped, ""}, {"b", Verdict::Skipped, ""}, {lc, Verdict::Skipped, ""}};
    if (n == 3) r.conditions.push_back({ld, Verdict::Skipped, ""});
    else r.notes.push_back("two functions f, g together with 1 always span at most three dimensions; condition (" + ld +
                           ") is not part of the two-point criterion");

    auto settle = [&](std::size_t k, bool ok, std::string detail) {
        r.conditions[k].verdict = ok ? Verdict::Positive : Verdict::Negative;
        r.conditions[k].detail = std::move(detail);
        if (!ok && r.first_failure.empty()) r.first_failure = r.conditions[k].label;
        return ok;
    };

    // (a)
    bool ok = true;
    std::string detail;
    for (std::size_t i = 0; i < n; ++i) {
        const RatFunc t = (!s.invariants.empty() && s.invariants[i]) ? *s.invariants[i]
                                                                     : invariant_generator(s.groups[i], s.seed);
        r.quotients.push_back(verify_quotient_rational(s.groups[i], t, s.seed));
        const QuotientCertificate& q = r.quotients.back();
        if (q.positive || !ok) continue;
        ok = false;
        if (!q.invariant) detail = "t" + idx(i) + " = " + t.to_string() + " is moved by " + q.witness->to_string();
        else
            detail = "t" + idx(i) + " has degree " + std::to_string(q.degree) + " but |G" + idx(i) +
                     "| = " + std::to_string(q.order);
    }
    if (ok) detail = "every t_i is G_i-invariant of degree |G_i|";
    if (!settle(0, ok, detail)) return r;

    // (b)
    r.pairwise = verify_pairwise_trivial(s.groups);
    detail = "all pairwise intersections are trivial";
    for (const auto& p : r.pairwise->pairs)
        if (!p.common.empty()) {
            detail = "G" + idx(p.i) + " and G" + idx(p.j) + " share " + p.common.front().to_string();
            break;
        }
    if (!settle(1, r.pairwise->positive, detail)) return r;

    // (c) / (c')
    r.common = inner ? inner_common_divisor(s.groups, s.points) : outer_common_divisor(s.groups, *s.q);
    if (r.common->D) {
        detail = "D = " + to_string(*r.common->D);
    } else {
        const auto& first = r.common->candidates.front();
        const auto& bad = r.common->candidates[r.common->mismatches.front()];
        auto name = [&](const CommonDivisor::Candidate& c) {
            return inner ? "P" + idx(c.i) + " + sum G" + idx(c.i) + "(P" + idx(c.j) + ")" : "sum G" + idx(c.i) + "(Q)";
        };
        detail = name(bad) + " = " + to_string(bad.value) + " differs from " + name(first) + " = " +
                 to_string(first.value);
    }
    if (!settle(2, r.common->D.has_value(), detail)) return r;

    // Divisor-prescribed functions f, g (, h).
    for (std::size_t i = 0; i < n; ++i) {
        const RatFunc& t = r.quotients[i].t;
        if (inner) r.functions.push_back(mobius_normalize(t, s.groups[i], s.points[i], s.points[i == 0 ? 1 : 0], s.seed));
        else r.functions.push_back(mobius_normalize(t, s.groups[i], std::nullopt, *s.q, s.seed));
    }

    // (d) / (d')
    if (n == 3) {
        const RatFunc one = RatFunc::constant(s.curve, s.curve->field().one());
        r.span = span_dimension({one, r.functions[0], r.functions[1], r.functions[2]});
        r.third_in_span = span_coefficients(r.functions[2], {one, r.functions[0], r.functions[1]});
        const bool small = r.span->dimension <= 3;
        if (small) {
            detail = "dim <1, f, g, h> = " + std::to_string(r.span->dimension);
            if (const auto& c = r.third_in_span->coefficients)
                detail += "; h = " + (*c)[0].to_string() + " + (" + (*c)[1].to_string() + ") f + (" +
                          (*c)[2].to_string() + ") g";
        } else {
            detail = "dim <1, f, g, h> = 4: h is not in the span of 1, f, g";
        }
        if (!settle(3, small, detail)) return r;
    }
    r.holds = true;

    if (inner && static_cast<int>(s.groups[0].order()) + 1 >= 4) r.fact3 = fact3_records(r, s);
    return r;
}

ConditionReport check_three_inner(const GaloisSetup& setup) { return check(setup, Scheme::ThreeInner); }
ConditionReport check_three_outer(const GaloisSetup& setup) { return check(setup, Scheme::ThreeOuter); }
ConditionReport check_two_inner(const GaloisSetup& setup) { return check(setup, Scheme::TwoInner); }
ConditionReport check_two_outer(const GaloisSetup& setup) { return check(setup, Scheme::TwoOuter); }

}  // namespace galpoint
