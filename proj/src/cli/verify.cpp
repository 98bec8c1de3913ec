#include <algorithm>
#include <set>

#include "galpoint/cli.hpp"
#include "galpoint/valuation.hpp"

namespace galpoint {

namespace {

struct Context {
    Codec codec;
    CurvePtr curve;
    std::vector<AutGroup> groups;
    std::vector<ProjPoint> points;
    std::optional<ProjPoint> q;
    VerifyResult& result;

    void check(bool ok, const std::string& what) {
        (ok ? result.checked : result.failures).push_back(what);
    }

    RatFunc ratfunc(const json& j, const std::string& where) const { return codec.ratfunc(j, curve, where); }
    ProjMap map(const json& j, const std::string& where) const { return ProjMap(codec.matrix(j, where)); }
    ProjPoint point(const json& j, const std::string& where) const { return codec.point(j, where); }
};

const json& at(const json& j, const std::string& key, const std::string& where) {
    expect(j.is_object() && j.contains(key), where, "missing \"" + key + "\"");
    return j[key];
}

std::vector<FieldElement> elements(const Context& cx, const json& j, const std::string& where) {
    expect(j.is_array(), where, "expected a list of elements");
    std::vector<FieldElement> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(cx.codec.element(j[k], where + "/" + std::to_string(k)));
    return out;
}

std::vector<ProjPoint> points(const Context& cx, const json& j, const std::string& where) {
    expect(j.is_array(), where, "expected a list of points");
    std::vector<ProjPoint> out;
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(cx.point(j[k], where + "/" + std::to_string(k)));
    return out;
}

bool invariant_under(const RatFunc& t, const AutGroup& G) {
    return std::all_of(G.generators().begin(), G.generators().end(),
                       [&](const ProjMap& m) { return pullback(m, t) == t; });
}

// Phi(f, g, 1) as a function on the source curve.
RatFunc evaluate_form(const TriPoly& phi, const RatFunc& f, const RatFunc& g) {
    const CurvePtr& C = f.curve_ptr();
    RatFunc sum = RatFunc::constant(C, f.field().zero());
    for (const auto& [key, c] : phi.terms()) {
        const Exponent e = TriPoly::unpack(key);
        RatFunc term = RatFunc::constant(C, c);
        for (int k = 0; k < e.x; ++k) term = term * f;
        for (int k = 0; k < e.y; ++k) term = term * g;
        sum = sum + term;
    }
    return sum;
}

EmbeddingModel read_model(const Context& cx, const json& j, const std::string& where) {
    EmbeddingModel m{cx.curve,
                     cx.ratfunc(at(j, "f", where), where + "/f"),
                     cx.ratfunc(at(j, "g", where), where + "/g"),
                     cx.codec.poly(at(j, "phi", where), where + "/phi"),
                     0, 0, 0, false, {}};
    m.degree = at(j, "degree", where).get<int>();
    m.system_degree = at(j, "system_degree", where).get<int>();
    m.map_degree = at(j, "map_degree", where).get<int>();
    m.birational = at(j, "birational", where).get<bool>();
    m.marks = points(cx, at(j, "marks", where), where + "/marks");
    return m;
}

void verify_quotient(Context& cx, const json& q, const AutGroup& G, const std::string& where) {
    const RatFunc t = cx.ratfunc(at(q, "t", where), where + "/t");
    const bool invariant = at(q, "invariant", where).get<bool>();
    const int degree = at(q, "degree", where).get<int>();
    cx.check(invariant == invariant_under(t, G), where + ": invariance of t under the generators");
    if (!q["witness"].is_null()) {
        const ProjMap w = cx.map(q["witness"], where + "/witness");
        cx.check(G.contains(w) && !(pullback(w, t) == t), where + ": the witness lies in G and moves t");
    }
    if (degree > 0) cx.check(function_degree(t) == degree, where + ": deg t = " + std::to_string(degree));
    cx.check(at(q, "positive", where).get<bool>() ==
                 (invariant && degree == static_cast<int>(G.order())),
             where + ": verdict matches invariance and degree");
}

void verify_report(Context& cx, const json& r, const std::string& where) {
    const Scheme scheme = parse_scheme(at(r, "scheme", where).get<std::string>());
    const json& quotients = at(r, "quotients", where);
    for (std::size_t k = 0; k < quotients.size() && k < cx.groups.size(); ++k)
        verify_quotient(cx, quotients[k], cx.groups[k], where + "/quotients/" + std::to_string(k));

    if (!r["pairwise"].is_null()) {
        bool positive = true;
        for (const auto& p : r["pairwise"]["pairs"]) {
            const std::size_t i = p["i"].get<std::size_t>(), j = p["j"].get<std::size_t>();
            std::set<ProjMap> common;
            for (const auto& m : cx.groups.at(i).elements())
                if (!m.is_identity() && cx.groups.at(j).contains(m)) common.insert(m);
            std::set<ProjMap> claimed;
            for (std::size_t k = 0; k < p["common"].size(); ++k)
                claimed.insert(cx.map(p["common"][k], where + "/pairwise"));
            positive = positive && common.empty();
            cx.check(common == claimed, where + ": G" + std::to_string(i + 1) + " and G" + std::to_string(j + 1) +
                                            " share exactly the listed elements");
        }
        cx.check(r["pairwise"]["positive"].get<bool>() == positive, where + ": pairwise verdict");
    }

    std::optional<Divisor> D;
    if (!r["common"].is_null()) {
        const json& c = r["common"];
        std::vector<Divisor> values;
        for (const auto& cand : c["candidates"]) {
            const std::size_t i = cand["i"].get<std::size_t>(), j = cand["j"].get<std::size_t>();
            Divisor expected;
            if (is_inner(scheme)) {
                expected = orbit_sum(cx.groups.at(i), cx.points.at(j));
                add_point(expected, cx.points.at(i), 1);
            } else {
                expected = orbit_sum(cx.groups.at(i), cx.q.value());
            }
            const Divisor claimed = cx.codec.divisor(cand["value"], where + "/common");
            cx.check(claimed == expected, where + ": candidate divisor (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ") recomputed");
            values.push_back(expected);
        }
        std::vector<std::size_t> mismatches;
        for (std::size_t k = 1; k < values.size(); ++k)
            if (!(values[k] == values[0])) mismatches.push_back(k);
        cx.check(mismatches == c["mismatches"].get<std::vector<std::size_t>>(), where + ": mismatch list");
        if (!c["D"].is_null()) {
            D = cx.codec.divisor(c["D"], where + "/common/D");
            cx.check(mismatches.empty() && !values.empty() && *D == values[0], where + ": D is the common value");
        }
    }

    std::vector<RatFunc> functions;
    for (std::size_t k = 0; k < r["functions"].size(); ++k)
        functions.push_back(cx.ratfunc(r["functions"][k], where + "/functions/" + std::to_string(k)));

    if (!r["third_in_span"].is_null()) {
        const json& s = r["third_in_span"];
        const std::string w = where + "/third_in_span";
        SpanCertificate cert{{}, cx.ratfunc(s["target"], w + "/target"), std::nullopt, {}, {}, false};
        for (std::size_t k = 0; k < s["basis"].size(); ++k)
            cert.basis.push_back(cx.ratfunc(s["basis"][k], w + "/basis"));
        if (!s["coefficients"].is_null()) cert.coefficients = elements(cx, s["coefficients"], w + "/coefficients");
        cert.witness_points = points(cx, s["witness_points"], w + "/witness_points");
        cert.witness_weights = elements(cx, s["witness_weights"], w + "/witness_weights");
        cert.symbolic_refutation = s["symbolic_refutation"].get<bool>();
        if (functions.size() >= 3 && cert.basis.size() == 3)
            cx.check(cert.target == functions[2] && cert.basis[1] == functions[0] && cert.basis[2] == functions[1] &&
                         cert.basis[0].is_constant(),
                     w + ": the certificate concerns h against 1, f, g");
        if (cert.symbolic_refutation)
            cx.check(!cert.coefficients.has_value(), w + ": symbolic refutation recorded without coefficients");
        else
            cx.check(verify_span(cert), w + (cert.coefficients ? ": h = c0 + c1 f + c2 g" : ": span refutation witness"));
    }

    if (D)
        for (std::size_t k = 0; k < functions.size(); ++k) {
            try {
                cx.check(is_effective(divisor_of_function(functions[k]) + *D),
                         where + ": (function " + std::to_string(k + 1) + ") + D is effective");
            } catch (const Error& e) {
                if (e.code() != ErrorCode::ExtensionRequired) throw;
            }
        }

    for (const auto& f : r["fact3"]) {
        const std::size_t i = f["i"].get<std::size_t>(), j = f["j"].get<std::size_t>();
        bool avoids = true;
        for (const auto& s : cx.groups.at(i).elements())
            if (s.apply(cx.points.at(i)) == cx.points.at(j)) avoids = false;
        cx.check(avoids == f["orbit_avoids"].get<bool>() && f["chord_multiplicity"].get<int>() == 1,
                 where + ": chord record (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }

    bool all_positive = true;
    std::string first;
    for (const auto& c : at(r, "conditions", where)) {
        const std::string v = c["verdict"].get<std::string>();
        if (v != "positive") all_positive = false;
        if (v == "negative" && first.empty()) first = c["label"].get<std::string>();
    }
    cx.check(r["holds"].get<bool>() == all_positive && r["first_failure"].get<std::string>() == first,
             where + ": overall verdict matches the conditions");
}

int line_order(const PlaneCurve& image, const ProjPoint& at, const Vec3& line) {
    return local_valuation(image, at, TriPoly::linear(line));
}

EmbeddingModel verify_construction(Context& cx, const json& c, const json* report, const std::string& where) {
    const EmbeddingModel m = read_model(cx, at(c, "model", where), where + "/model");
    cx.check(evaluate_form(m.phi, m.f, m.g).is_zero(), where + ": Phi(f, g, 1) = 0 on the curve");
    cx.check(m.phi.total_degree() == m.degree, where + ": deg Phi = " + std::to_string(m.degree));
    cx.check(m.birational == (m.map_degree == 1) && m.degree * m.map_degree == m.system_degree,
             where + ": degree bookkeeping of the embedding");
    const CurvePtr image = validate_curve(m.phi, cx.curve->field_ptr());
    const std::vector<ProjPoint> marks = points(cx, at(c, "marks", where), where + "/marks");
    const std::vector<FieldElement> third = elements(cx, at(c, "third_coefficients", where), where + "/third_coefficients");
    const bool inner = !cx.points.empty();
    if (inner)
        for (std::size_t k = 0; k < marks.size() && k < cx.points.size(); ++k)
            cx.check(image_point(m.f, m.g, cx.points[k]) == marks[k], where + ": mark " + std::to_string(k + 1) + " is phi(P" + std::to_string(k + 1) + ")");
    if (third.size() == 3 && marks.size() == 3) {
        const Field& k = cx.codec.field();
        cx.check(marks[2] == ProjPoint(Vec3{-third[2], third[1], k.zero()}), where + ": third mark is (-c2 : c1 : 0)");
    }
    if (!c["image_q"].is_null() && cx.q)
        cx.check(image_point(m.f, m.g, *cx.q) == cx.point(c["image_q"], where + "/image_q"), where + ": phi(Q) recomputed");

    const json& certs = at(c, "certificates", where);
    for (std::size_t k = 0; k < certs.size(); ++k) {
        const std::string w = where + "/certificates/" + std::to_string(k);
        const json& g = certs[k];
        const ProjPoint center = cx.point(g["center"], w + "/center");
        cx.check(k < marks.size() && center == marks[k], w + ": centered at the mark");
        const bool on = m.phi(center.coords()).is_zero();
        cx.check(on == g["inner"].get<bool>(), w + ": inner/outer matches Phi(center)");
        if (on) {
            bool smooth = false;
            for (int v = 0; v < 3; ++v) smooth = smooth || !image->partial(v)(center.coords()).is_zero();
            cx.check(smooth, w + ": the image is smooth at the center");
        }
        const AutGroup& G = cx.groups.at(k);
        cx.check(g["group"]["order"].get<std::size_t>() == G.order(), w + ": group order");
        const RatFunc t = cx.ratfunc(g["projection"], w + "/projection");
        // The projection is a Moebius image of a ratio of two lines through the center.
        const Field& field = cx.codec.field();
        std::vector<Vec3> lines;
        for (int a = 0; a < 3 && lines.size() < 2; ++a) {
            Vec3 e{field.zero(), field.zero(), field.zero()};
            e[a] = field.one();
            const Vec3 l = cross(center.coords(), e);
            if (!is_zero(l) && (lines.empty() || !is_zero(cross(lines[0], l)))) lines.push_back(l);
        }
        const RatFunc u = m.f * lines[0][0] + m.g * lines[0][1] + lines[0][2];
        const RatFunc v = m.f * lines[1][0] + m.g * lines[1][1] + lines[1][2];
        const RatFunc s = u / v;
        const SpanCertificate rel = span_coefficients(t * s, {RatFunc::constant(cx.curve, field.one()), s, t});
        bool pencil = false;
        if (rel.coefficients) {
            const auto& c3 = *rel.coefficients;
            pencil = !(c3[0] + c3[1] * c3[2]).is_zero() && verify_span(rel);
        }
        cx.check(pencil, w + ": the projection belongs to the pencil through the center");
        const bool invariant = invariant_under(t, G);
        const int degree = g["degree"].get<int>();
        cx.check(invariant == g["invariant"].get<bool>(), w + ": invariance of the projection");
        cx.check(function_degree(t) == degree, w + ": degree of the projection");
        cx.check(g["artin"].get<bool>() == (invariant && degree == static_cast<int>(G.order())), w + ": Artin verdict");
    }

    if (report)
        for (const auto& f : (*report)["fact3"]) {
            const std::size_t i = f["i"].get<std::size_t>(), j = f["j"].get<std::size_t>();
            Vec3 grad;
            for (int v = 0; v < 3; ++v) grad[v] = image->partial(v)(marks.at(i).coords());
            cx.check(line_order(*image, marks.at(i), cross(marks.at(i).coords(), marks.at(j).coords())) ==
                             f["chord_multiplicity"].get<int>() &&
                         line_order(*image, marks.at(i), grad) == f["tangent_multiplicity"].get<int>(),
                     where + ": chord and tangent multiplicities at mark " + std::to_string(i + 1));
        }
    return m;
}

void verify_extension(Context& cx, const json& cert, const EmbeddingModel& m) {
    const std::string where = "/extension";
    const json& e = at(cert, "extension", "");
    const ProjMap sigma = cx.map(at(cert, "sigma", ""), "/sigma");
    cx.check(cx.groups.at(0).contains(sigma), where + ": sigma lies in G1");
    cx.check(sigma.apply(cx.points.at(1)) == cx.points.at(2), where + ": sigma(P2) = P3");
    Divisor t3 = orbit_sum(cx.groups.at(2), cx.points.at(2));
    add_point(t3, cx.points.at(2), 1);
    Divisor expected = orbit_sum(cx.groups.at(1), cx.points.at(1));
    add_point(expected, cx.points.at(1), 1);
    const Divisor pulled = pullback(sigma, t3);
    cx.check(cx.codec.divisor(e["pulled"], where + "/pulled") == pulled &&
                 cx.codec.divisor(e["expected"], where + "/expected") == expected,
             where + ": pulled-back and expected divisors recomputed");
    const bool a = sigma.apply(cx.points.at(0)) == cx.points.at(0);
    const bool c = pulled == expected;
    bool fast = true;
    for (std::size_t i = 0; i < 3; ++i) {
        const InflectionCheck ic = is_total_inflection(cx.groups.at(i), cx.points.at(i));
        fast = fast && ic.total && !ic.vacuous;
    }
    cx.check(fast == e["fast_path"].get<bool>(), where + ": total inflection fast path");
    for (const auto& cond : e["conditions"]) {
        const std::string label = cond["label"].get<std::string>();
        const bool positive = cond["verdict"].get<std::string>() == "positive";
        if (label == "a") cx.check(positive == a, where + ": condition (a)");
        if (label == "c") cx.check(positive == c, where + ": condition (c)");
    }
    if (!e["sigma_tilde"].is_null()) {
        const ProjMap st = cx.map(e["sigma_tilde"], where + "/sigma_tilde");
        cx.check(linear_extension_holds(m, sigma, st), where + ": phi o sigma = sigma~ o phi");
    }
    if (e["extendable"].get<bool>()) cx.check(!e["sigma_tilde"].is_null(), where + ": an extendable sigma carries sigma~");
}

void verify_oracle(Context& cx, const json& cert) {
    for (const auto& p : at(cert, "pairs", "")) {
        const std::size_t k = p["index"].get<std::size_t>();
        const std::string w = "/pairs/" + std::to_string(k);
        const AutGroup& G = cx.groups.at(k);
        verify_quotient(cx, p["artin"], G, w + "/artin");
        const RatFunc t = cx.ratfunc(p["artin"]["t"], w + "/artin/t");
        const json& ft = p["fibers"];
        bool all_single = true;
        std::size_t n = 0;
        for (const auto& tr : ft["trials"]) {
            const FieldElement lambda = cx.codec.element(tr["lambda"], w + "/fibers");
            const std::vector<ProjPoint> fiber = points(cx, tr["fiber"], w + "/fibers");
            bool on = !fiber.empty();
            for (const auto& q : fiber) on = on && t.value_at(q) == std::optional<FieldElement>(lambda);
            std::set<ProjPoint> orbit;
            if (!fiber.empty())
                for (const auto& s : G.elements()) orbit.insert(s.apply(fiber[0]));
            const bool single = !fiber.empty() && orbit == std::set<ProjPoint>(fiber.begin(), fiber.end());
            all_single = all_single && single;
            cx.check(on && single == tr["single_orbit"].get<bool>(), w + ": fiber " + std::to_string(n++));
        }
        const bool passed = ft["degree_matches"].get<bool>() && !ft["trials"].empty() && all_single;
        cx.check(passed == ft["passed"].get<bool>(), w + ": fiber verdict");
        cx.check(p["agree"].get<bool>() == (p["artin"]["positive"].get<bool>() == passed), w + ": agreement flag");
    }
    const json& a = at(cert, "automorphisms", "");
    std::vector<ProjMap> gens;
    for (std::size_t k = 0; k < a["generators"].size(); ++k) gens.push_back(cx.map(a["generators"][k], "/automorphisms"));
    const AutGroup all = group_closure(gens, cx.curve, a["order"].get<std::size_t>());
    cx.check(all.order() == a["order"].get<std::size_t>(), "/automorphisms: closure of the generators has the recorded order");
    bool contains = true;
    for (const auto& G : cx.groups)
        for (const auto& g : G.generators()) contains = contains && all.contains(g);
    cx.check(contains == a["contains_groups"].get<bool>(), "/automorphisms: role groups are subgroups");
}

}  // namespace

VerifyResult verify_certificate(const json& cert) {
    VerifyResult result;
    expect(cert.is_object(), "certificate", "expected a JSON object");
    expect(at(cert, "schema_version", "").get<int>() == kCertificateSchema, "/schema_version", "unsupported schema");
    const std::string kind = at(cert, "kind", "").get<std::string>();
    Codec codec = Codec::from_field_json(at(cert, "field", ""));
    const CurvePtr curve = validate_curve(codec.poly(at(cert, "curve", ""), "/curve"), codec.field_ptr());
    Context cx{codec, curve, {}, {}, std::nullopt, result};

    const json& groups = at(cert, "groups", "");
    for (std::size_t k = 0; k < groups.size(); ++k) {
        const std::string w = "/groups/" + std::to_string(k);
        std::vector<ProjMap> gens;
        for (std::size_t g = 0; g < groups[k]["generators"].size(); ++g)
            gens.push_back(cx.map(groups[k]["generators"][g], w));
        const std::size_t order = groups[k]["order"].get<std::size_t>();
        cx.groups.push_back(group_closure(gens, curve, std::max<std::size_t>(order, 1)));
        cx.check(cx.groups.back().order() == order, w + ": closure has order " + std::to_string(order));
    }
    for (const auto& p : at(cert, "points", "")) cx.points.push_back(point_check(*curve, cx.point(p["point"], "/points").coords()));
    if (!cert["q"].is_null()) cx.q = point_check(*curve, cx.point(cert["q"], "/q").coords());

    try {
        if (kind == "check" || kind == "construct" || kind == "extend") {
            verify_report(cx, at(cert, "report", ""), "/report");
            if (cert.contains("construction")) {
                const EmbeddingModel m = verify_construction(cx, cert["construction"], &cert["report"], "/construction");
                if (kind == "extend" && cert.contains("extension")) verify_extension(cx, cert, m);
            }
        } else if (kind == "equiv") {
            verify_report(cx, at(at(cert, "first", ""), "report", "/first"), "/first/report");
            verify_report(cx, at(at(cert, "second", ""), "report", "/second"), "/second/report");
            const EmbeddingModel a = verify_construction(cx, cert["first"]["construction"], &cert["first"]["report"], "/first");
            const EmbeddingModel b =
                verify_construction(cx, cert["second"]["construction"], &cert["second"]["report"], "/second");
            const json& e = at(cert, "equivalence", "");
            if (!e["map"].is_null()) {
                const ProjMap M = cx.map(e["map"], "/equivalence/map");
                cx.check(forms_proportional_under(a.phi, M, b.phi), "/equivalence: Phi_a(M x) ~ Phi_b(x)");
                cx.check(maps_related(a, b, M) == e["maps_agree"].get<bool>(), "/equivalence: M o phi_b = phi_a");
            }
        } else if (kind == "oracle") {
            verify_oracle(cx, cert);
        } else {
            fail(ErrorCode::ParseError, "/kind: unknown certificate kind \"" + kind + "\"");
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::FieldMismatch) throw;
        result.failures.push_back(std::string("re-check raised ") + e.what());
    }
    return result;
}

}  // namespace galpoint
