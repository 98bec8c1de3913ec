#include "galpoint/cli.hpp"

namespace galpoint {

namespace {

json encode_all(const std::vector<FieldElement>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(encode(x));
    return out;
}

json encode_all(const std::vector<ProjPoint>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(encode(x));
    return out;
}

json encode_all(const std::vector<ProjMap>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(encode(x));
    return out;
}

json encode(const SpanCertificate& c) {
    json out = {{"target", encode(c.target)},
                {"witness_points", encode_all(c.witness_points)},
                {"witness_weights", encode_all(c.witness_weights)},
                {"symbolic_refutation", c.symbolic_refutation}};
    out["basis"] = json::array();
    for (const auto& b : c.basis) out["basis"].push_back(encode(b));
    out["coefficients"] = c.coefficients ? encode_all(*c.coefficients) : json(nullptr);
    return out;
}

json encode(const QuotientCertificate& q) {
    return {{"t", encode(q.t)},
            {"order", q.order},
            {"invariant", q.invariant},
            {"witness", q.witness ? encode(*q.witness) : json(nullptr)},
            {"degree", q.degree},
            {"positive", q.positive}};
}

}  // namespace

json encode(const AutGroup& G) { return {{"generators", encode_all(G.generators())}, {"order", G.order()}}; }

json encode(const ConditionReport& r) {
    json out = {{"scheme", to_string(r.scheme)}, {"working_field", r.working_field}, {"seed", r.seed},
                {"holds", r.holds},              {"first_failure", r.first_failure}, {"notes", r.notes}};
    out["conditions"] = json::array();
    for (const auto& c : r.conditions)
        out["conditions"].push_back({{"label", c.label}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    out["quotients"] = json::array();
    for (const auto& q : r.quotients) out["quotients"].push_back(encode(q));
    out["pairwise"] = nullptr;
    if (r.pairwise) {
        json pairs = json::array();
        for (const auto& p : r.pairwise->pairs)
            pairs.push_back({{"i", p.i}, {"j", p.j}, {"common", encode_all(p.common)}});
        out["pairwise"] = {{"pairs", pairs}, {"positive", r.pairwise->positive}};
    }
    out["common"] = nullptr;
    if (r.common) {
        json cands = json::array();
        for (const auto& c : r.common->candidates)
            cands.push_back({{"i", c.i}, {"j", c.j}, {"value", encode(c.value)}});
        out["common"] = {{"candidates", cands},
                         {"D", r.common->D ? encode(*r.common->D) : json(nullptr)},
                         {"mismatches", r.common->mismatches}};
    }
    out["functions"] = json::array();
    for (const auto& f : r.functions) out["functions"].push_back(encode(f));
    out["span"] = r.span ? json{{"dimension", r.span->dimension}, {"independent", r.span->independent}} : json(nullptr);
    out["third_in_span"] = r.third_in_span ? encode(*r.third_in_span) : json(nullptr);
    out["fact3"] = json::array();
    for (const auto& f : r.fact3)
        out["fact3"].push_back({{"i", f.i},
                                {"j", f.j},
                                {"chord_multiplicity", f.chord_multiplicity},
                                {"tangent_multiplicity", f.tangent_multiplicity},
                                {"orbit_avoids", f.orbit_avoids}});
    return out;
}

json encode(const EmbeddingModel& m) {
    return {{"f", encode(m.f)},
            {"g", encode(m.g)},
            {"phi", encode(m.phi)},
            {"degree", m.degree},
            {"system_degree", m.system_degree},
            {"map_degree", m.map_degree},
            {"birational", m.birational},
            {"marks", encode_all(m.marks)}};
}

json encode(const FiberTranscript& t) {
    json trials = json::array();
    for (const auto& tr : t.trials)
        trials.push_back({{"lambda", encode(tr.lambda)}, {"fiber", encode_all(tr.fiber)}, {"single_orbit", tr.single_orbit}});
    return {{"order", t.order},   {"degree", t.degree}, {"degree_matches", t.degree_matches},
            {"trials", trials},   {"seed", t.seed},     {"passed", t.passed}};
}

json encode(const GaloisCertificate& c) {
    return {{"center", encode(c.center)},
            {"inner", c.inner},
            {"group", encode(c.group)},
            {"projection", encode(c.projection)},
            {"degree", c.degree},
            {"invariant", c.invariant},
            {"artin", c.artin},
            {"fibers", c.fibers ? encode(*c.fibers) : json(nullptr)}};
}

json encode(const Construction& c) {
    json out = {{"model", encode(c.model)},
                {"marks", encode_all(c.marks)},
                {"third_coefficients", encode_all(c.third_coefficients)},
                {"source_third", c.source_third ? encode(*c.source_third) : json(nullptr)},
                {"image_q", c.image_q ? encode(*c.image_q) : json(nullptr)},
                {"scaling", encode_all(c.scaling)}};
    out["certificates"] = json::array();
    for (const auto& g : c.certificates) out["certificates"].push_back(encode(g));
    return out;
}

json encode(const ExtensionReport& r) {
    json out = {{"fast_path", r.fast_path},
                {"fast_path_agrees", r.fast_path_agrees},
                {"third", r.third ? encode(*r.third) : json(nullptr)},
                {"pulled", encode(r.pulled)},
                {"expected", encode(r.expected)},
                {"sigma_tilde", r.sigma_tilde ? encode(*r.sigma_tilde) : json(nullptr)},
                {"identity_certified", r.identity_certified},
                {"transcript", r.transcript},
                {"extendable", r.extendable}};
    out["conditions"] = json::array();
    for (const auto& c : r.conditions)
        out["conditions"].push_back({{"label", c.label}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    return out;
}

}  // namespace galpoint
