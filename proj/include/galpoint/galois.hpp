#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galpoint/action.hpp"
#include "galpoint/curve.hpp"
#include "galpoint/divisor.hpp"
#include "galpoint/linsys.hpp"
#include "galpoint/ratfunc.hpp"

namespace galpoint {

enum class Verdict { Positive, Negative, Skipped };

const char* to_string(Verdict v);

/// Condition (a) for one group: t is G-invariant and has degree |G|.
struct QuotientCertificate {
    RatFunc t;
    std::size_t order = 0;
    bool invariant = false;
    std::optional<ProjMap> witness;  // an element moving t
    int degree = 0;                  // 0 when not computed
    bool positive = false;
    std::uint64_t seed = 0;
};

/// verify_quotient_rational: Artin's criterion. Errors: PRECONDITION_FAILED
/// for |G| < 2, plus anything function_degree raises.
QuotientCertificate verify_quotient_rational(const AutGroup& G, const RatFunc& t, std::uint64_t seed = 0);

struct PairwiseCertificate {
    struct Pair {
        std::size_t i = 0, j = 0;
        std::vector<ProjMap> common;  // nontrivial common elements
    };
    std::vector<Pair> pairs;
    bool positive = false;
};

/// verify_pairwise_trivial. Errors: PRECONDITION_FAILED for fewer than two groups.
PairwiseCertificate verify_pairwise_trivial(const std::vector<AutGroup>& groups);

struct CommonDivisor {
    struct Candidate {
        std::size_t i = 0, j = 0;  // inner: P_i + orbit_sum(G_i, P_j); outer: orbit_sum(G_i, Q), j unused
        Divisor value;
    };
    std::vector<Candidate> candidates;
    std::optional<Divisor> D;
    /// Indices into `candidates` that differ from the first one.
    std::vector<std::size_t> mismatches;
};

/// inner_common_divisor: all candidates P_i + orbit_sum(G_i, P_j), i != j, in
/// lexicographic order. Errors: PRECONDITION_FAILED (points not distinct).
CommonDivisor inner_common_divisor(const std::vector<AutGroup>& groups, const std::vector<ProjPoint>& points);
CommonDivisor outer_common_divisor(const std::vector<AutGroup>& groups, const ProjPoint& q);

/// Input of the criteria engines. Inner scenarios use `points` (one per
/// group); outer scenarios use `q`.
struct GaloisSetup {
    CurvePtr curve;
    std::vector<AutGroup> groups;
    std::vector<std::optional<RatFunc>> invariants;
    std::vector<ProjPoint> points;
    std::optional<ProjPoint> q;
    std::uint64_t seed = 0;
};

enum class Scheme { TwoInner, TwoOuter, ThreeInner, ThreeOuter };

const char* to_string(Scheme s);
bool is_inner(Scheme s);
std::size_t point_count(Scheme s);

struct ConditionEntry {
    std::string label;  // "a", "b", "c", "d", "c'", "d'"
    Verdict verdict = Verdict::Skipped;
    std::string detail;
};

/// Chord and tangent checks at an inner pair, measured on the image model.
struct Fact3Record {
    std::size_t i = 0, j = 0;
    int chord_multiplicity = 0;
    int tangent_multiplicity = 0;
    bool orbit_avoids = false;  // sigma(P_i) != P_j for every sigma in G_i
};

struct ConditionReport {
    Scheme scheme = Scheme::ThreeInner;
    std::string working_field;
    std::uint64_t seed = 0;
    std::vector<ConditionEntry> conditions;
    std::vector<QuotientCertificate> quotients;
    std::optional<PairwiseCertificate> pairwise;
    std::optional<CommonDivisor> common;
    /// f, g (and h): the divisor-prescribed functions built for (d) / (d').
    std::vector<RatFunc> functions;
    std::optional<SpanDimension> span;
    std::optional<SpanCertificate> third_in_span;  // h against 1, f, g
    std::vector<Fact3Record> fact3;
    std::vector<std::string> notes;
    bool holds = false;
    std::string first_failure;  // label of the first negative condition

    const ConditionEntry& condition(const std::string& label) const;
};

/// The criteria. Conditions are evaluated in order and the first negative one
/// stops the run; later conditions are reported as skipped.
/// Errors: HYPOTHESIS_VIOLATION (three-inner with some |G_i| < 3, outer with
/// |G_i| < 2), PRECONDITION_FAILED (malformed setup), and propagated tool limits.
ConditionReport check(const GaloisSetup& setup, Scheme scheme);
ConditionReport check_three_inner(const GaloisSetup& setup);
ConditionReport check_three_outer(const GaloisSetup& setup);
ConditionReport check_two_inner(const GaloisSetup& setup);
ConditionReport check_two_outer(const GaloisSetup& setup);

/// Generic fibers of t over sampled values, each tested for being one G-orbit.
struct FiberTranscript {
    struct Trial {
        FieldElement lambda;
        std::vector<ProjPoint> fiber;
        bool single_orbit = false;
    };
    std::size_t order = 0;
    int degree = 0;
    bool degree_matches = false;
    std::vector<Trial> trials;
    std::uint64_t seed = 0;
    bool passed = false;
};

/// generic_fiber_orbit_test. Errors: PRECONDITION_FAILED (constant t),
/// RETRIES_EXHAUSTED.
FiberTranscript generic_fiber_orbit_test(const RatFunc& t, const AutGroup& G, int trials, std::uint64_t seed = 0);

struct GaloisCertificate {
    ProjPoint center;  // in image coordinates
    bool inner = false;
    AutGroup group;     // acting on the source curve
    RatFunc projection;  // pullback of the pencil of lines through the center
    int degree = 0;
    bool invariant = false;
    bool artin = false;
    std::optional<FiberTranscript> fibers;
};

/// Projection from `center` in the model's plane, certified against G.
GaloisCertificate certify_galois_point(const EmbeddingModel& model, const ProjPoint& center, const AutGroup& G,
                                       std::uint64_t seed = 0, int fiber_trials = 0);

struct Construction {
    ConditionReport report;
    EmbeddingModel model;
    CurvePtr image;
    std::vector<ProjPoint> marks;
    std::vector<FieldElement> third_coefficients;  // (c0, c1, c2) with h = c0 + c1 f + c2 g
    std::optional<ProjPoint> source_third;          // supp(D) and supp((h) + D) meet here (inner)
    std::vector<GaloisCertificate> certificates;
    std::optional<ProjPoint> image_q;
    std::vector<FieldElement> scaling;  // nonzero factors applied to f and g
};

/// The embedding (f : g : 1) of the proofs, its image and marks.
/// Errors: PRECONDITION_FAILED (criteria not satisfied), DEGREE_MISMATCH,
/// NOT_BIRATIONAL, CERTIFICATION_FAILED.
Construction construct(const GaloisSetup& setup, Scheme scheme);
Construction construct_three_inner(const GaloisSetup& setup);
Construction construct_three_outer(const GaloisSetup& setup);

struct InflectionCheck {
    bool total = false;
    bool vacuous = false;  // |G| = 1
    std::optional<int> tangent_order;
};

/// is_total_inflection: every element of G fixes p. When the curve has degree
/// |G| + 1 the tangent order is checked to be |G| + 1. Errors: CERTIFICATION_FAILED.
InflectionCheck is_total_inflection(const AutGroup& G, const ProjPoint& p);

struct ExtensionSetup {
    EmbeddingModel model;
    ProjMap sigma;
    std::vector<AutGroup> groups;   // G_1, G_2, G_3
    std::vector<ProjPoint> points;  // P_1, P_2, P_3 on the source
    std::uint64_t seed = 0;
};

struct ExtensionReport {
    std::vector<ConditionEntry> conditions;  // a, b, c
    bool fast_path = false;                  // all three points are total inflections
    bool fast_path_agrees = true;
    std::optional<GaloisCertificate> third;
    Divisor pulled;    // sigma^*(P_3 + orbit_sum(G_3, P_3))
    Divisor expected;  // P_2 + orbit_sum(G_2, P_2)
    std::optional<ProjMap> sigma_tilde;
    bool identity_certified = false;
    std::vector<std::string> transcript;
    bool extendable = false;
};

/// check_extendability. Errors: PRECONDITION_FAILED (sigma not in G_1 or
/// sigma(P_2) != P_3), HYPOTHESIS_VIOLATION (image degree below 4).
ExtensionReport check_extendability(const ExtensionSetup& setup);

/// build_linear_extension: sigma-tilde with phi o sigma = sigma-tilde o phi.
/// Errors: CERTIFICATION_FAILED.
ProjMap build_linear_extension(const EmbeddingModel& model, const ProjMap& sigma);

/// phi o sigma = m o phi as rational maps.
bool linear_extension_holds(const EmbeddingModel& model, const ProjMap& sigma, const ProjMap& m);

/// The group carried to the image curve through linear extensions of its generators.
AutGroup transport_group(const AutGroup& G, const EmbeddingModel& model, const CurvePtr& image);

struct UniquenessResult {
    Construction first;
    Construction second;
    EquivalenceResult equivalence;
    bool maps_agree = false;  // M o phi_b = phi_a
};

/// uniqueness_compare. Errors: HYPOTHESIS_VIOLATION (|G_i| < 3),
/// EQUIVALENCE_NOT_FOUND.
UniquenessResult uniqueness_compare(const GaloisSetup& setup, Scheme scheme, std::uint64_t seed_a,
                                    std::uint64_t seed_b);

/// M o (f_b : g_b : 1) = (f_a : g_a : 1) as rational maps on the common source.
bool maps_related(const EmbeddingModel& a, const EmbeddingModel& b, const ProjMap& m);

constexpr std::uint64_t kScanLimit = 100000000;

/// enumerate_linear_automorphisms: closure of the hints, or an exhaustive
/// search when none are given. Errors: CAP_EXCEEDED, SCAN_TOO_LARGE.
AutGroup enumerate_linear_automorphisms(const CurvePtr& C, const std::optional<std::vector<ProjMap>>& hints,
                                        std::size_t cap = kDefaultGroupCap);

/// Order of PGL_3 over a field of size q.
std::uint64_t pgl3_order(std::uint64_t q);

}  // namespace galpoint
