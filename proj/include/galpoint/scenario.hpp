#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galpoint/codec.hpp"
#include "galpoint/galois.hpp"

namespace galpoint {

struct LoadOptions {
    std::optional<std::uint32_t> working_extension;
    std::optional<std::size_t> cap;
};

/// A scenario file: field, curve, named points and groups, and the roles they
/// play in one task.
struct Scenario {
    std::string name{};
    std::string task{};  // two-inner, two-outer, three-inner, three-outer, extend, equiv, oracle
    std::optional<Scheme> scheme{};
    Codec codec;
    CurvePtr curve{};
    std::map<std::string, ProjPoint> points{};
    std::map<std::string, AutGroup> groups{};
    std::map<std::string, RatFunc> invariants{};
    std::vector<std::string> role_groups{};
    std::vector<std::string> role_points{};
    std::optional<std::string> role_q{};
    std::optional<ProjMap> sigma{};
    std::vector<std::uint64_t> seeds{};
    int trials = 10;
    std::size_t cap = kDefaultGroupCap;
    std::optional<std::vector<ProjMap>> automorphism_hints{};
    std::optional<std::size_t> expected_automorphisms{};
    json source{};

    /// Errors: PRECONDITION_FAILED when the scenario names no criterion.
    Scheme require_scheme() const;
    GaloisSetup setup(std::uint64_t seed) const;
    AutGroup automorphisms() const;
};

/// Errors: PARSE_ERROR, UNRESOLVED_REFERENCE, FIELD_MISMATCH, NOT_ON_CURVE,
/// SINGULAR_POINT, NOT_AUTOMORPHISM, REDUCIBLE.
Scenario parse_scenario(const json& j, const std::string& origin, const LoadOptions& opts = {});

/// load_scenario: a file path, or the name of a bundled fixture.
Scenario load_scenario(const std::string& path, const LoadOptions& opts = {});

/// Bundled fixture text by file name ("h9_inner.json"), if any.
std::optional<std::string> bundled_fixture(const std::string& name);
std::vector<std::string> bundled_fixture_names();

Scheme parse_scheme(const std::string& s);

}  // namespace galpoint
