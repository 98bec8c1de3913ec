#include "galpoint/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "bundled.hpp"
#include "galpoint/error.hpp"

namespace galpoint {

namespace {

// Re-raise an error with its location prepended.
[[noreturn]] void relocate(const Error& e, const std::string& where) {
    std::string msg = e.what();
    const auto cut = msg.find(": ");
    if (cut != std::string::npos) msg = msg.substr(cut + 2);
    throw Error(e.code(), where + ": " + msg);
}

const std::set<std::string>& known_tasks() {
    static const std::set<std::string> t = {"two-inner", "two-outer", "three-inner", "three-outer",
                                            "extend",    "equiv",     "oracle"};
    return t;
}

std::string text(const json& j, const std::string& key, const std::string& where) {
    expect(j.contains(key) && j[key].is_string(), where + "/" + key, "expected a string");
    return j[key].get<std::string>();
}

}  // namespace

Scheme parse_scheme(const std::string& s) {
    if (s == "two-inner") return Scheme::TwoInner;
    if (s == "two-outer") return Scheme::TwoOuter;
    if (s == "three-inner") return Scheme::ThreeInner;
    if (s == "three-outer") return Scheme::ThreeOuter;
    fail(ErrorCode::ParseError, "unknown criterion \"" + s + "\"");
}

Scheme Scenario::require_scheme() const {
    require(scheme.has_value(), ErrorCode::PreconditionFailed, name + " does not name a criterion (scheme)");
    return *scheme;
}

GaloisSetup Scenario::setup(std::uint64_t seed) const {
    GaloisSetup s;
    s.curve = curve;
    s.seed = seed;
    for (const auto& g : role_groups) {
        s.groups.push_back(groups.at(g));
        const auto it = invariants.find(g);
        s.invariants.push_back(it == invariants.end() ? std::nullopt : std::optional<RatFunc>(it->second));
    }
    for (const auto& p : role_points) s.points.push_back(points.at(p));
    if (role_q) s.q = points.at(*role_q);
    return s;
}

AutGroup Scenario::automorphisms() const {
    AutGroup all = enumerate_linear_automorphisms(curve, automorphism_hints, cap);
    if (expected_automorphisms)
        require(all.order() == *expected_automorphisms, ErrorCode::CertificationFailed,
                "automorphism group has order " + std::to_string(all.order()) + ", the scenario expects " +
                    std::to_string(*expected_automorphisms));
    return all;
}

Scenario parse_scenario(const json& j, const std::string& origin, const LoadOptions& opts) {
    expect(j.is_object(), origin, "expected a JSON object");
    expect(j.contains("field"), origin, "missing \"field\"");
    Scenario s{.codec = Codec::from_field_json(j["field"], opts.working_extension)};
    const Codec& cx = s.codec;
    s.source = j;
    s.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : origin;
    s.task = text(j, "task", origin);
    expect(known_tasks().count(s.task) > 0, origin + "/task", "unknown task \"" + s.task + "\"");
    if (s.task == "extend") s.scheme = Scheme::ThreeInner;
    else if (s.task != "equiv" && s.task != "oracle") s.scheme = parse_scheme(s.task);
    if (j.contains("scheme")) s.scheme = parse_scheme(text(j, "scheme", origin));

    if (j.contains("cap")) {
        expect(is_nonnegative(j["cap"]), origin + "/cap", "expected a positive integer");
        s.cap = j["cap"].get<std::size_t>();
    }
    if (opts.cap) s.cap = *opts.cap;

    expect(j.contains("curve"), origin, "missing \"curve\"");
    try {
        s.curve = validate_curve(cx.poly(j["curve"], origin + "/curve"), cx.field_ptr());
    } catch (const Error& e) {
        relocate(e, origin + "/curve");
    }

    if (j.contains("points")) {
        expect(j["points"].is_object(), origin + "/points", "expected an object of named points");
        for (const auto& [name, v] : j["points"].items()) {
            const std::string w = origin + "/points/" + name;
            const ProjPoint p = cx.point(v, w);
            try {
                s.points.emplace(name, point_check(*s.curve, p.coords()));
            } catch (const Error& e) {
                relocate(e, w);
            }
        }
    }

    if (j.contains("automorphisms")) {
        const json& a = j["automorphisms"];
        const std::string w = origin + "/automorphisms";
        expect(a.is_object(), w, "expected an object");
        if (a.contains("generators")) {
            expect(a["generators"].is_array(), w + "/generators", "expected a list of matrices");
            std::vector<ProjMap> hints;
            for (std::size_t i = 0; i < a["generators"].size(); ++i)
                hints.emplace_back(cx.matrix(a["generators"][i], w + "/generators/" + std::to_string(i)));
            s.automorphism_hints = hints;
        }
        if (a.contains("expected_order")) {
            expect(is_nonnegative(a["expected_order"]), w + "/expected_order", "expected a positive integer");
            s.expected_automorphisms = a["expected_order"].get<std::size_t>();
        }
    }

    auto point_ref = [&](const json& v, const std::string& w) -> ProjPoint {
        if (v.is_string()) {
            const auto it = s.points.find(v.get<std::string>());
            require(it != s.points.end(), ErrorCode::UnresolvedReference, w + ": no point named " + v.dump());
            return it->second;
        }
        return cx.point(v, w);
    };

    std::optional<AutGroup> all;
    std::set<std::string> resolving;
    const json groups = j.contains("groups") ? j["groups"] : json::object();
    expect(groups.is_object(), origin + "/groups", "expected an object of named groups");
    std::function<const AutGroup&(const std::string&, const std::string&)> resolve =
        [&](const std::string& name, const std::string& from) -> const AutGroup& {
        if (const auto it = s.groups.find(name); it != s.groups.end()) return it->second;
        require(groups.contains(name), ErrorCode::UnresolvedReference, from + ": no group named \"" + name + "\"");
        require(resolving.insert(name).second, ErrorCode::UnresolvedReference,
                from + ": group \"" + name + "\" is defined in terms of itself");
        const json& g = groups[name];
        const std::string w = origin + "/groups/" + name;
        expect(g.is_object(), w, "expected an object");
        try {
            if (g.contains("generators")) {
                expect(g["generators"].is_array(), w + "/generators", "expected a list of matrices");
                std::vector<ProjMap> gens;
                for (std::size_t i = 0; i < g["generators"].size(); ++i)
                    gens.emplace_back(cx.matrix(g["generators"][i], w + "/generators/" + std::to_string(i)));
                s.groups.emplace(name, group_closure(gens, s.curve, s.cap));
            } else {
                expect(g.contains("conjugate_of") && g["conjugate_of"].is_string(), w,
                       "expected \"generators\" or \"conjugate_of\"");
                const AutGroup& base = resolve(g["conjugate_of"].get<std::string>(), w + "/conjugate_of");
                std::optional<ProjMap> by;
                if (g.contains("by")) {
                    by.emplace(cx.matrix(g["by"], w + "/by"));
                } else {
                    expect(g.contains("sending") && g["sending"].is_array() && g["sending"].size() == 2, w,
                           "expected \"by\" or \"sending\": [from, to]");
                    const ProjPoint a = point_ref(g["sending"][0], w + "/sending/0");
                    const ProjPoint b = point_ref(g["sending"][1], w + "/sending/1");
                    if (!all) all = s.automorphisms();
                    for (const auto& m : all->elements())
                        if (m.apply(a) == b) {
                            by = m;
                            break;
                        }
                    require(by.has_value(), ErrorCode::NotFound,
                            w + ": no automorphism sends " + a.to_string() + " to " + b.to_string());
                }
                require(map_preserves_curve(*by, *s.curve).has_value(), ErrorCode::NotAutomorphism,
                        w + ": " + by->to_string() + " does not preserve the curve");
                s.groups.emplace(name, conjugate(base, *by));
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnresolvedReference) throw;
            relocate(e, w);
        }
        resolving.erase(name);
        return s.groups.at(name);
    };
    for (const auto& [name, v] : groups.items()) resolve(name, origin + "/groups");

    if (j.contains("invariants")) {
        expect(j["invariants"].is_object(), origin + "/invariants", "expected an object keyed by group");
        for (const auto& [name, v] : j["invariants"].items()) {
            const std::string w = origin + "/invariants/" + name;
            require(s.groups.count(name) > 0, ErrorCode::UnresolvedReference, w + ": no group named \"" + name + "\"");
            s.invariants.emplace(name, cx.ratfunc(v, s.curve, w));
        }
    }

    expect(j.contains("roles") && j["roles"].is_object(), origin, "missing \"roles\"");
    const json& roles = j["roles"];
    if (roles.contains("groups")) {
        expect(roles["groups"].is_array(), origin + "/roles/groups", "expected a list of group names");
        for (const auto& g : roles["groups"]) {
            expect(g.is_string(), origin + "/roles/groups", "expected group names");
            require(s.groups.count(g.get<std::string>()) > 0, ErrorCode::UnresolvedReference,
                    origin + "/roles/groups: no group named " + g.dump());
            s.role_groups.push_back(g.get<std::string>());
        }
    }
    if (roles.contains("points")) {
        expect(roles["points"].is_array(), origin + "/roles/points", "expected a list of point names");
        for (const auto& p : roles["points"]) {
            expect(p.is_string(), origin + "/roles/points", "expected point names");
            require(s.points.count(p.get<std::string>()) > 0, ErrorCode::UnresolvedReference,
                    origin + "/roles/points: no point named " + p.dump());
            s.role_points.push_back(p.get<std::string>());
        }
    }
    if (roles.contains("q")) {
        expect(roles["q"].is_string(), origin + "/roles/q", "expected a point name");
        require(s.points.count(roles["q"].get<std::string>()) > 0, ErrorCode::UnresolvedReference,
                origin + "/roles/q: no point named " + roles["q"].dump());
        s.role_q = roles["q"].get<std::string>();
    }
    if (s.scheme) {
        const std::size_t n = point_count(*s.scheme);
        expect(s.role_groups.size() == n, origin + "/roles/groups",
               std::string(to_string(*s.scheme)) + " needs " + std::to_string(n) + " groups");
        if (is_inner(*s.scheme))
            expect(s.role_points.size() == n, origin + "/roles/points", "inner criteria need one point per group");
        else
            expect(s.role_q.has_value(), origin + "/roles/q", "outer criteria need the point Q");
    }

    if (j.contains("sigma")) {
        const ProjMap m(cx.matrix(j["sigma"], origin + "/sigma"));
        require(map_preserves_curve(m, *s.curve).has_value(), ErrorCode::NotAutomorphism,
                origin + "/sigma: " + m.to_string() + " does not preserve the curve");
        s.sigma = m;
    }
    if (s.task == "extend") expect(s.sigma.has_value(), origin, "the extend task needs \"sigma\"");

    s.seeds = {1, 2};
    if (j.contains("seeds")) {
        expect(j["seeds"].is_array() && j["seeds"].size() == 2, origin + "/seeds", "expected two seeds");
        s.seeds.clear();
        for (const auto& v : j["seeds"]) {
            expect(is_nonnegative(v), origin + "/seeds", "seeds are nonnegative integers");
            s.seeds.push_back(v.get<std::uint64_t>());
        }
    }
    if (j.contains("trials")) {
        expect(is_nonnegative(j["trials"]) && j["trials"].get<int>() > 0, origin + "/trials",
               "expected a positive integer");
        s.trials = j["trials"].get<int>();
    }
    return s;
}

std::optional<std::string> bundled_fixture(const std::string& name) {
    const auto& table = bundled_fixture_table();
    for (const std::string& key : {name, name + ".json"}) {
        const auto it = table.find(key);
        if (it != table.end()) return it->second;
    }
    return std::nullopt;
}

std::vector<std::string> bundled_fixture_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : bundled_fixture_table()) out.push_back(k);
    return out;
}

Scenario load_scenario(const std::string& path, const LoadOptions& opts) {
    std::string content;
    std::string origin = path;
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        require(in.good(), ErrorCode::ParseError, path + ": cannot open");
        std::stringstream ss;
        ss << in.rdbuf();
        content = ss.str();
    } else {
        const std::string base = std::filesystem::path(path).filename().string();
        const auto text = bundled_fixture(base);
        require(text.has_value(), ErrorCode::ParseError, path + ": no such file or bundled fixture");
        content = *text;
        origin = base;
    }
    json j;
    try {
        j = json::parse(content);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::ParseError, origin + ": " + e.what());
    }
    return parse_scenario(j, origin, opts);
}

}  // namespace galpoint
