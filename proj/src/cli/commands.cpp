#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "galpoint/cli.hpp"

namespace galpoint {

namespace {

std::string str(const FieldElement& a) {
    std::ostringstream os;
    os << a;
    return os.str();
}

std::string tuple(const std::vector<FieldElement>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + str(xs[i]);
    return out + ")";
}

std::string image_form(const TriPoly& phi) { return phi.to_string({"U", "V", "W"}); }

json header(const Scenario& s, const std::string& kind, std::uint64_t seed) {
    json out = {{"schema_version", kCertificateSchema},
                {"kind", kind},
                {"scenario", s.name},
                {"task", s.task},
                {"seed", seed},
                {"field", encode_field(s.codec.working())},
                {"curve", encode(s.curve->form())}};
    out["groups"] = json::array();
    out["invariants"] = json::array();
    for (const auto& g : s.role_groups) {
        json e = encode(s.groups.at(g));
        e["name"] = g;
        out["groups"].push_back(e);
        const auto it = s.invariants.find(g);
        out["invariants"].push_back(it == s.invariants.end() ? json(nullptr) : encode(it->second));
    }
    out["points"] = json::array();
    for (const auto& p : s.role_points) out["points"].push_back({{"name", p}, {"point", encode(s.points.at(p))}});
    out["q"] = s.role_q ? encode(s.points.at(*s.role_q)) : json(nullptr);
    out["scheme"] = s.scheme ? json(to_string(*s.scheme)) : json(nullptr);
    return out;
}

void summarize(const ConditionReport& r, std::vector<std::string>& out) {
    for (const auto& c : r.conditions)
        out.push_back("  (" + c.label + ") " + to_string(c.verdict) + (c.detail.empty() ? "" : ": " + c.detail));
    if (r.common && r.common->D) out.push_back("  D = " + to_string(*r.common->D));
    if (r.third_in_span && r.third_in_span->coefficients)
        out.push_back("  h = c0 + c1 f + c2 g with (c0, c1, c2) = " + tuple(*r.third_in_span->coefficients));
    if (!r.fact3.empty()) {
        bool ok = true;
        for (const auto& f : r.fact3) ok = ok && f.chord_multiplicity == 1 && f.orbit_avoids;
        out.push_back("  chords between marks: " + std::to_string(r.fact3.size()) + " checked" + (ok ? "" : ", FAILED"));
    }
    for (const auto& n : r.notes) out.push_back("  note: " + n);
    out.push_back(r.holds ? "criteria hold" : "criteria refuted at (" + r.first_failure + ")");
}

void summarize(const Construction& c, std::vector<std::string>& out) {
    const EmbeddingModel& m = c.model;
    out.push_back("  f = " + m.f.to_string());
    out.push_back("  g = " + m.g.to_string());
    out.push_back("  Phi = " + image_form(m.phi) + " (degree " + std::to_string(m.degree) + ", " +
                  (m.birational ? "birational" : "not birational") + ")");
    for (std::size_t k = 0; k < c.marks.size(); ++k) {
        const GaloisCertificate& g = c.certificates.at(k);
        out.push_back("  mark " + std::to_string(k + 1) + " " + c.marks[k].to_string() + ": " +
                      (g.inner ? "inner" : "outer") + " Galois point, group order " + std::to_string(g.group.order()) +
                      (g.artin ? ", certified" : ", NOT certified"));
    }
    if (c.image_q) out.push_back("  phi(Q) = " + c.image_q->to_string());
}

Scheme scheme_of(const Scenario& s) { return s.require_scheme(); }

}  // namespace

int exit_code(ErrorClass c) {
    switch (c) {
    case ErrorClass::InvalidInput: return kExitInvalid;
    case ErrorClass::ToolLimitation: return kExitLimitation;
    case ErrorClass::Internal: return kExitInternal;
    }
    return kExitInternal;
}

Outcome run_check(const Scenario& s, std::uint64_t seed) {
    const Scheme scheme = scheme_of(s);
    const ConditionReport r = check(s.setup(seed), scheme);
    Outcome o{header(s, "check", seed), {}, r.holds ? kExitOk : kExitRefuted};
    o.certificate["report"] = encode(r);
    o.summary.push_back(s.name + ": " + to_string(scheme) + " criterion over " + r.working_field + ", seed " +
                        std::to_string(seed));
    summarize(r, o.summary);
    return o;
}

namespace {

Outcome construct_outcome(const Scenario& s, std::uint64_t seed, std::optional<Construction>& built) {
    Outcome o = run_check(s, seed);
    o.certificate["kind"] = "construct";
    if (o.exit != kExitOk) {
        o.summary.push_back("no construction: the criteria do not hold");
        return o;
    }
    const Construction& c = built.emplace(construct(s.setup(seed), scheme_of(s)));
    o.certificate["report"] = encode(c.report);
    o.certificate["construction"] = encode(c);
    o.summary.push_back("construction:");
    summarize(c, o.summary);
    return o;
}

}  // namespace

Outcome run_construct(const Scenario& s, std::uint64_t seed) {
    std::optional<Construction> built;
    return construct_outcome(s, seed, built);
}

Outcome run_extend(const Scenario& s, std::uint64_t seed) {
    require(s.sigma.has_value(), ErrorCode::PreconditionFailed, s.name + " has no sigma to extend");
    require(scheme_of(s) == Scheme::ThreeInner, ErrorCode::PreconditionFailed,
            "extendability is decided for three inner Galois points");
    std::optional<Construction> built;
    Outcome o = construct_outcome(s, seed, built);
    o.certificate["kind"] = "extend";
    if (o.exit != kExitOk) return o;
    const GaloisSetup setup = s.setup(seed);
    const ExtensionReport e = check_extendability({built->model, *s.sigma, setup.groups, setup.points, seed});
    o.certificate["sigma"] = encode(*s.sigma);
    o.certificate["extension"] = encode(e);
    o.summary.push_back("extension of sigma = " + s.sigma->to_string() + ":");
    for (const auto& cnd : e.conditions)
        o.summary.push_back("  (" + cnd.label + ") " + to_string(cnd.verdict) + ": " + cnd.detail);
    if (e.fast_path)
        o.summary.push_back(std::string("  total inflection fast path ") + (e.fast_path_agrees ? "agrees" : "DISAGREES"));
    if (e.sigma_tilde)
        o.summary.push_back("  sigma~ = " + e.sigma_tilde->to_string() +
                            (e.identity_certified ? ", phi o sigma = sigma~ o phi certified" : ""));
    o.summary.push_back(e.extendable ? "sigma extends linearly" : "sigma does not extend linearly");
    o.exit = e.extendable && e.fast_path_agrees ? kExitOk : kExitRefuted;
    return o;
}

Outcome run_equiv(const Scenario& s, std::uint64_t seed_a, std::uint64_t seed_b) {
    const Scheme scheme = scheme_of(s);
    const UniquenessResult u = uniqueness_compare(s.setup(seed_a), scheme, seed_a, seed_b);
    Outcome o{header(s, "equiv", seed_a), {}, kExitOk};
    o.certificate["seeds"] = {seed_a, seed_b};
    o.certificate["first"] = {{"report", encode(u.first.report)}, {"construction", encode(u.first)}};
    o.certificate["second"] = {{"report", encode(u.second.report)}, {"construction", encode(u.second)}};
    o.certificate["equivalence"] = {{"map", u.equivalence.map ? encode(*u.equivalence.map) : json(nullptr)},
                                    {"assignment", u.equivalence.assignment},
                                    {"note", u.equivalence.note},
                                    {"maps_agree", u.maps_agree}};
    o.summary.push_back(s.name + ": " + to_string(scheme) + " constructions with seeds " + std::to_string(seed_a) +
                        " and " + std::to_string(seed_b));
    o.summary.push_back("  Phi_a = " + image_form(u.first.model.phi));
    o.summary.push_back("  Phi_b = " + image_form(u.second.model.phi));
    if (u.equivalence.map) o.summary.push_back("  M = " + u.equivalence.map->to_string());
    o.summary.push_back(std::string("  M o phi_b = phi_a: ") + (u.maps_agree ? "yes" : "no"));
    const bool ok = u.equivalence.map.has_value() && u.maps_agree;
    o.summary.push_back(ok ? "the embeddings are projectively equivalent" : "no equivalence of the embeddings");
    o.exit = ok ? kExitOk : kExitRefuted;
    return o;
}

Outcome run_oracle(const Scenario& s, std::uint64_t seed) {
    Outcome o{header(s, "oracle", seed), {}, kExitOk};
    o.summary.push_back(s.name + ": Artin criterion against generic fibers, " + std::to_string(s.trials) +
                        " trials, seed " + std::to_string(seed));
    bool all_agree = true;
    json pairs = json::array();
    for (std::size_t k = 0; k < s.role_groups.size(); ++k) {
        const std::string& name = s.role_groups[k];
        const auto it = s.invariants.find(name);
        if (it == s.invariants.end()) continue;
        const AutGroup& G = s.groups.at(name);
        const QuotientCertificate q = verify_quotient_rational(G, it->second, seed);
        const FiberTranscript ft = generic_fiber_orbit_test(it->second, G, s.trials, seed);
        const bool agree = q.positive == ft.passed;
        all_agree = all_agree && agree;
        json e = {{"index", k}, {"group", name}, {"fibers", encode(ft)}, {"agree", agree}};
        e["artin"] = {{"t", encode(q.t)},
                      {"invariant", q.invariant},
                      {"degree", q.degree},
                      {"order", q.order},
                      {"positive", q.positive},
                      {"witness", q.witness ? encode(*q.witness) : json(nullptr)}};
        pairs.push_back(e);
        o.summary.push_back("  " + name + ", t = " + it->second.to_string() + ": Artin " +
                            (q.positive ? "positive" : "negative") + ", fibers " + (ft.passed ? "pass" : "fail") +
                            " (" + std::to_string(ft.trials.size()) + " trials)" + (agree ? "" : ", DISAGREE"));
    }
    o.certificate["pairs"] = pairs;

    const AutGroup all = enumerate_linear_automorphisms(s.curve, s.automorphism_hints, s.cap);
    json a = encode(all);
    a["hinted"] = s.automorphism_hints.has_value();
    a["expected_order"] = s.expected_automorphisms ? json(*s.expected_automorphisms) : json(nullptr);
    a["pgl3_order"] = pgl3_order(s.curve->field().size());
    bool subgroups = true;
    for (const auto& g : s.role_groups)
        for (const auto& m : s.groups.at(g).generators()) subgroups = subgroups && all.contains(m);
    a["contains_groups"] = subgroups;
    const bool order_ok = !s.expected_automorphisms || all.order() == *s.expected_automorphisms;
    o.certificate["automorphisms"] = a;
    o.summary.push_back("  linear automorphisms: order " + std::to_string(all.order()) +
                        (s.expected_automorphisms ? ", expected " + std::to_string(*s.expected_automorphisms) : "") +
                        (subgroups ? "" : ", MISSING role groups"));
    const bool ok = all_agree && order_ok && subgroups;
    o.summary.push_back(ok ? "oracles agree" : "oracles disagree");
    o.exit = ok ? kExitOk : kExitRefuted;
    return o;
}

int run_command(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        Outcome o;
        if (cmd.name == "verify") {
            const std::string path = cmd.cert ? *cmd.cert : cmd.scenario;
            require(!path.empty(), ErrorCode::ParseError, "verify needs --cert PATH");
            std::ifstream in(path);
            require(in.good(), ErrorCode::ParseError, path + ": cannot open");
            json cert;
            try {
                cert = json::parse(in);
            } catch (const json::parse_error& e) {
                fail(ErrorCode::ParseError, path + ": " + e.what());
            }
            const VerifyResult v = verify_certificate(cert);
            if (cmd.json) {
                out << json{{"checked", v.checked}, {"failures", v.failures}, {"ok", v.ok()}}.dump(2) << "\n";
            } else {
                out << path << ": " << v.checked.size() << " identities checked\n";
                for (const auto& f : v.failures) out << "  FAILED: " << f << "\n";
                out << (v.ok() ? "certificate verified" : "certificate rejected") << "\n";
            }
            return v.ok() ? kExitOk : kExitRefuted;
        }

        const Scenario s = load_scenario(cmd.scenario, {cmd.working_ext, cmd.cap});
        const std::uint64_t seed = cmd.seed.value_or(0);
        if (cmd.name == "check") o = run_check(s, seed);
        else if (cmd.name == "construct") o = run_construct(s, seed);
        else if (cmd.name == "extend") o = run_extend(s, seed);
        else if (cmd.name == "equiv") {
            const std::uint64_t a = cmd.seed ? *cmd.seed : s.seeds.at(0);
            const std::uint64_t b = cmd.seed ? *cmd.seed + 1 : s.seeds.at(1);
            o = run_equiv(s, a, b);
        } else if (cmd.name == "oracle") o = run_oracle(s, seed);
        else fail(ErrorCode::ParseError, "unknown command \"" + cmd.name + "\"");

        const std::string text = o.certificate.dump(2) + "\n";
        if (cmd.cert) {
            std::ofstream f(*cmd.cert, std::ios::binary);
            require(f.good(), ErrorCode::InvalidArgument, *cmd.cert + ": cannot write");
            f << text;
        }
        if (cmd.json) out << text;
        else
            for (const auto& line : o.summary) out << line << "\n";
        return o.exit;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e.error_class());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace galpoint
