#include "doctest.h"

#include <functional>
#include <set>

#include "fixtures.hpp"
#include "galpoint/error.hpp"
#include "galpoint/galois.hpp"
#include "galpoint/valuation.hpp"

using namespace galpoint;
using namespace fixtures;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Internal;
}

ProjMap pm(const Field& k, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> e) {
    return ProjMap(mat(k, e));
}

// Z -> bY + Z
ProjMap sigma(const Field& k, std::uint32_t a, std::uint32_t b) {
    return pm(k, {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {a, b}, {1, 0}});
}

// Y -> Y + bZ
ProjMap tau(const Field& k, std::uint32_t a, std::uint32_t b) {
    return pm(k, {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {a, b}, {0, 0}, {0, 0}, {1, 0}});
}

ProjPoint ppt(const Field& k, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> c) {
    return ProjPoint(pt(k, c));
}

struct H9Corpus {
    CurvePtr c = h9();
    const Field& k = c->field();
    TriPoly X = var(k, 0), Y = var(k, 1), Z = var(k, 2);
    FieldElement i = el(k, 0, 1);
    ProjPoint p1 = ppt(k, {{0, 0}, {0, 0}, {1, 0}});
    ProjPoint p2 = ppt(k, {{0, 0}, {1, 0}, {0, 0}});
    ProjPoint p3 = ppt(k, {{0, 0}, {0, 1}, {1, 0}});
    ProjPoint p4 = ppt(k, {{0, 0}, {0, 2}, {1, 0}});
    ProjMap N = tau(k, 0, 1);
    AutGroup g1 = group_closure({sigma(k, 0, 1)}, c);
    AutGroup g2 = group_closure({tau(k, 0, 1)}, c);
    AutGroup g3 = conjugate(g1, N);
    RatFunc t1{c, X, Y};
    RatFunc t2{c, X, Z};
    RatFunc t3{c, X, Y - Z * i};

    GaloisSetup setup() const { return {c, {g1, g2, g3}, {t1, t2, t3}, {p1, p2, p3}, std::nullopt, 0}; }
};

struct FQ9Corpus {
    CurvePtr c = fq9();
    const Field& k = c->field();
    TriPoly X = var(k, 0), Y = var(k, 1), Z = var(k, 2);
    ProjPoint q = ppt(k, {{1, 1}, {1, 0}, {0, 0}});
    AutGroup g1 = group_closure({pm(k, {{0, 1}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}})}, c);
    AutGroup g2 = group_closure({pm(k, {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}, {1, 0}})}, c);
    std::vector<ProjMap> hints = {
        pm(k, {{0, 1}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}),
        pm(k, {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}),
        pm(k, {{0, 0}, {1, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}),
        pm(k, {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {1, 0}, {0, 0}}),
        pm(k, {{1, 1}, {1, 1}, {0, 0}, {1, 1}, {2, 2}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}),
    };

    // G3 = g G1 g^-1 for the smallest automorphism g with g(1:0:0) = (1:1:0).
    AutGroup third() const {
        const AutGroup all = enumerate_linear_automorphisms(c, hints);
        const ProjPoint from = ppt(k, {{1, 0}, {0, 0}, {0, 0}}), to = ppt(k, {{1, 0}, {1, 0}, {0, 0}});
        for (const auto& g : all.elements())
            if (g.apply(from) == to) return conjugate(g1, g);
        FAIL("no automorphism moves (1:0:0) to (1:1:0)");
        return g1;
    }

    GaloisSetup setup() const {
        return {c, {g1, g2, third()}, {RatFunc(c, Y, Z), RatFunc(c, X, Z), std::nullopt}, {}, q, 0};
    }
};

bool proportional(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t s = 0; s < a.size(); ++s)
            if (a[r] * b[s] != a[s] * b[r]) return false;
    return true;
}

}  // namespace

TEST_CASE("verify_quotient_rational") {
    H9Corpus h;
    const QuotientCertificate a = verify_quotient_rational(h.g1, h.t1);
    CHECK(a.positive);
    CHECK(a.degree == 3);
    const QuotientCertificate b = verify_quotient_rational(h.g1, h.t2);
    CHECK_FALSE(b.positive);
    CHECK_FALSE(b.invariant);
    REQUIRE(b.witness.has_value());
    CHECK(pullback(*b.witness, h.t2) != h.t2);

    FQ9Corpus f;
    const QuotientCertificate c = verify_quotient_rational(f.g1, RatFunc(f.c, f.Y, f.Z));
    CHECK(c.positive);
    CHECK(c.degree == 4);
    CHECK(code_of([&] { verify_quotient_rational(group_closure({}, h.c), h.t1); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("verify_pairwise_trivial") {
    H9Corpus h;
    const PairwiseCertificate cert = verify_pairwise_trivial({h.g1, h.g2, h.g3});
    CHECK(cert.positive);
    // Oracle: all cross pairs compared as matrices up to scalars.
    const std::vector<const AutGroup*> gs = {&h.g1, &h.g2, &h.g3};
    int shared = 0;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
            for (const auto& x : gs[a]->elements())
                for (const auto& y : gs[b]->elements()) {
                    bool prop = true;
                    for (int r = 0; r < 9; ++r)
                        for (int s = 0; s < 9; ++s)
                            if (x.matrix()[r] * y.matrix()[s] != x.matrix()[s] * y.matrix()[r]) prop = false;
                    if (prop && !x.is_identity()) ++shared;
                }
    CHECK(shared == 0);

    const PairwiseCertificate same = verify_pairwise_trivial({h.g1, h.g1});
    CHECK_FALSE(same.positive);
    const auto& common = same.pairs.front().common;
    CHECK(std::find(common.begin(), common.end(), sigma(h.k, 0, 1)) != common.end());
    CHECK(code_of([&] { verify_pairwise_trivial({h.g1}); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("inner_common_divisor") {
    H9Corpus h;
    const CommonDivisor cd = inner_common_divisor({h.g1, h.g2, h.g3}, {h.p1, h.p2, h.p3});
    REQUIRE(cd.D.has_value());
    const Divisor D = {{h.p1, 1}, {h.p2, 1}, {h.p3, 1}, {h.p4, 1}};
    CHECK(*cd.D == D);
    CHECK(cd.candidates.size() == 6);

    // Oracle: raw matrix products on coordinate vectors, G3 rebuilt by hand.
    const Mat3 n = h.N.matrix(), ni = mat3_inverse(n);
    std::vector<Mat3> g3_raw;
    for (const auto& b : h.k.elements()) {
        const Mat3 s = mat(h.k, {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}});
        Mat3 sb = s;
        sb[7] = b;
        if (b * b * b + b != h.k.zero()) continue;
        g3_raw.push_back(mat3_mul(mat3_mul(n, sb), ni));
    }
    REQUIRE(g3_raw.size() == 3);
    Divisor d31 = {{h.p3, 1}};
    for (const auto& m : g3_raw) add_point(d31, ProjPoint(mat3_apply(m, h.p1.coords())), 1);
    CHECK(d31 == D);

    // Permuted index order gives the same six candidates.
    const CommonDivisor rev = inner_common_divisor({h.g3, h.g2, h.g1}, {h.p3, h.p2, h.p1});
    REQUIRE(rev.D.has_value());
    CHECK(*rev.D == D);

    const CommonDivisor broken = inner_common_divisor({h.g1, h.g2, h.g2}, {h.p1, h.p2, h.p3});
    CHECK_FALSE(broken.D.has_value());
    bool at_32 = false;
    for (auto m : broken.mismatches)
        if (broken.candidates[m].i == 2 && broken.candidates[m].j == 1) at_32 = true;
    CHECK(at_32);
    CHECK(code_of([&] { inner_common_divisor({h.g1, h.g2}, {h.p1, h.p1}); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("outer_common_divisor") {
    FQ9Corpus f;
    const CommonDivisor cd = outer_common_divisor({f.g1, f.g2}, f.q);
    REQUIRE(cd.D.has_value());
    Divisor line;
    for (const auto& p : f.c->rational_points())
        if (p[2].is_zero()) add_point(line, p, 1);
    CHECK(line.size() == 4);
    CHECK(*cd.D == line);

    const ProjPoint off = ppt(f.k, {{0, 0}, {1, 1}, {1, 0}});
    REQUIRE(f.c->contains(off.coords()));
    CHECK_FALSE(outer_common_divisor({f.g1, f.g2}, off).D.has_value());

    const AutGroup trivial = group_closure({}, f.c);
    const CommonDivisor t = outer_common_divisor({trivial, trivial}, off);
    REQUIRE(t.D.has_value());
    CHECK(*t.D == Divisor{{off, 1}});
}

TEST_CASE("check three inner on H9") {
    H9Corpus h;
    const ConditionReport r = check_three_inner(h.setup());
    CHECK(r.holds);
    for (const char* l : {"a", "b", "c", "d"}) CHECK(r.condition(l).verdict == Verdict::Positive);
    REQUIRE(r.common->D.has_value());
    CHECK(degree(*r.common->D) == 4);
    for (const auto& [p, m] : *r.common->D) CHECK(p[0].is_zero());
    REQUIRE(r.third_in_span.has_value());
    REQUIRE(r.third_in_span->coefficients.has_value());
    CHECK(proportional(*r.third_in_span->coefficients, {h.k.zero(), h.k.one(), el(h.k, 0, 2)}));
    CHECK(r.span->dimension == 3);
    // Fact 3 on every ordered pair.
    CHECK(r.fact3.size() == 6);
    for (const auto& rec : r.fact3) {
        CHECK(rec.chord_multiplicity == 1);
        CHECK(rec.tangent_multiplicity == 4);
        CHECK(rec.orbit_avoids);
    }
    // Source-side oracle: v_P1(X) = 1 for the chord, v_P1(Y) = 4 for the tangent.
    CHECK(local_valuation(*h.c, h.p1, h.X) == 1);
    CHECK(local_valuation(*h.c, h.p1, h.Y) == 4);

    // Missing invariants are derived.
    GaloisSetup bare = h.setup();
    bare.invariants.clear();
    CHECK(check_three_inner(bare).holds);
}

TEST_CASE("check localizes single perturbations") {
    H9Corpus h;
    GaloisSetup b = h.setup();
    b.groups[2] = h.g2;
    b.invariants[2] = h.t2;
    const ConditionReport rb = check_three_inner(b);
    CHECK_FALSE(rb.holds);
    CHECK(rb.first_failure == "b");
    CHECK(rb.condition("a").verdict == Verdict::Positive);
    CHECK(rb.condition("c").verdict == Verdict::Skipped);
    CHECK(rb.condition("d").verdict == Verdict::Skipped);

    GaloisSetup c = h.setup();
    c.points[2] = ppt(h.k, {{1, 0}, {2, 0}, {1, 0}});
    const ConditionReport rc = check_three_inner(c);
    CHECK_FALSE(rc.holds);
    CHECK(rc.first_failure == "c");
    CHECK(rc.condition("b").verdict == Verdict::Positive);
    CHECK(rc.condition("d").verdict == Verdict::Skipped);

    GaloisSetup a = h.setup();
    a.invariants[0] = h.t2;
    CHECK(check_three_inner(a).first_failure == "a");

    GaloisSetup small = h.setup();
    small.groups[0] = group_closure({pm(h.k, {{2, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}})}, h.c);
    small.invariants[0] = std::nullopt;
    CHECK(code_of([&] { check_three_inner(small); }) == ErrorCode::HypothesisViolation);

    CHECK(code_of([&] { check_two_inner({h.c, {h.g1, h.g2}, {}, {h.p1, h.p1}, std::nullopt, 0}); }) ==
          ErrorCode::PreconditionFailed);
}

TEST_CASE("check two-point criteria") {
    H9Corpus h;
    const ConditionReport r = check_two_inner({h.c, {h.g1, h.g2}, {h.t1, h.t2}, {h.p1, h.p2}, std::nullopt, 0});
    CHECK(r.holds);
    CHECK(r.conditions.size() == 3);
    CHECK(*r.common->D == Divisor{{h.p1, 1}, {h.p2, 1}, {h.p3, 1}, {h.p4, 1}});
    CHECK_FALSE(r.notes.empty());

    FQ9Corpus f;
    const ConditionReport o = check_two_outer({f.c, {f.g1, f.g2}, {}, {}, f.q, 0});
    CHECK(o.holds);
    CHECK(o.condition("c'").verdict == Verdict::Positive);
}

TEST_CASE("check three outer on FQ9") {
    FQ9Corpus f;
    const GaloisSetup s = f.setup();
    const ConditionReport r = check_three_outer(s);
    CHECK(r.holds);
    for (const char* l : {"a", "b", "c'", "d'"}) CHECK(r.condition(l).verdict == Verdict::Positive);
    REQUIRE(r.common->D.has_value());
    for (const auto& [p, m] : *r.common->D) CHECK(p[2].is_zero());
    CHECK(degree(*r.common->D) == 4);

    GaloisSetup off = s;
    off.q = ppt(f.k, {{0, 0}, {1, 1}, {1, 0}});
    CHECK(check_three_outer(off).first_failure == "c'");
}

TEST_CASE("construct three inner") {
    H9Corpus h;
    const Construction c = construct_three_inner(h.setup());
    const Field& k = h.k;
    CHECK(c.model.phi == poly(k, {{1, 0, 3, 1, 0}, {1, 0, 1, 3, 0}, {2, 0, 0, 0, 4}}));
    CHECK(c.model.birational);
    REQUIRE(c.marks.size() == 3);
    CHECK(c.marks[0] == ppt(k, {{0, 0}, {1, 0}, {0, 0}}));
    CHECK(c.marks[1] == ppt(k, {{1, 0}, {0, 0}, {0, 0}}));
    CHECK(c.marks[2] == ppt(k, {{0, 1}, {1, 0}, {0, 0}}));
    // Phi(i, 1, 0) = i^3 + i = 0
    CHECK(c.model.phi(c.marks[2].coords()).is_zero());
    REQUIRE(c.source_third.has_value());
    CHECK(*c.source_third == h.p3);
    for (const auto& cert : c.certificates) {
        CHECK(cert.inner);
        CHECK(cert.artin);
        CHECK(cert.group.order() == 3);
        CHECK(cert.degree == 3);
    }

    // The if-part as a round trip: transported data on the image satisfies the criteria.
    std::vector<AutGroup> moved;
    for (const auto& g : {h.g1, h.g2, h.g3}) moved.push_back(transport_group(g, c.model, c.image));
    const ConditionReport again = check_three_inner({c.image, moved, {}, c.marks, std::nullopt, 0});
    CHECK(again.holds);

    GaloisSetup broken = h.setup();
    broken.groups[2] = h.g2;
    broken.invariants[2] = h.t2;
    CHECK(code_of([&] { construct_three_inner(broken); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("construct three outer") {
    FQ9Corpus f;
    const Construction c = construct_three_outer(f.setup());
    const Field& k = f.k;
    CHECK(c.model.phi == fq9_form(k));
    REQUIRE(c.marks.size() == 3);
    CHECK(c.marks[0] == ppt(k, {{0, 0}, {1, 0}, {0, 0}}));
    CHECK(c.marks[1] == ppt(k, {{1, 0}, {0, 0}, {0, 0}}));
    for (const auto& m : c.marks) {
        CHECK(m[2].is_zero());
        CHECK_FALSE(c.model.phi(m.coords()).is_zero());
    }
    REQUIRE(c.image_q.has_value());
    CHECK(*c.image_q == ppt(k, {{1, 0}, {1, 1}, {0, 0}}));
    for (const auto& cert : c.certificates) {
        CHECK_FALSE(cert.inner);
        CHECK(cert.artin);
        CHECK(cert.degree == 4);
    }
}

TEST_CASE("is_total_inflection") {
    H9Corpus h;
    const InflectionCheck a = is_total_inflection(h.g1, h.p1);
    CHECK(a.total);
    REQUIRE(a.tangent_order.has_value());
    CHECK(*a.tangent_order == 4);
    CHECK_FALSE(is_total_inflection(h.g1, h.p2).total);
    const InflectionCheck t = is_total_inflection(group_closure({}, h.c), h.p2);
    CHECK(t.total);
    CHECK(t.vacuous);
}

TEST_CASE("extendability") {
    H9Corpus h;
    const Construction c = construct_three_inner(h.setup());
    const ProjMap s2i = sigma(h.k, 0, 2);
    REQUIRE(s2i.apply(h.p2) == h.p3);
    const ExtensionReport r = check_extendability({c.model, s2i, {h.g1, h.g2, h.g3}, {h.p1, h.p2, h.p3}, 0});
    CHECK(r.extendable);
    for (const auto& cond : r.conditions) CHECK(cond.verdict == Verdict::Positive);
    CHECK(r.fast_path);
    CHECK(r.fast_path_agrees);
    REQUIRE(r.sigma_tilde.has_value());
    CHECK(*r.sigma_tilde == pm(h.k, {{1, 0}, {0, 0}, {0, 0}, {0, 2}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}));
    CHECK(r.identity_certified);
    // Oracle: phi = (Y : Z : X), so phi(sigma(X, Y, Z)) = (Y : 2iY + Z : X).
    CHECK(r.pulled == Divisor{{h.p2, 4}});

    CHECK(build_linear_extension(c.model, ProjMap::identity(h.k)).is_identity());

    // sigma_i sends P2 to P4; run with P4 as the third mark.
    const ProjMap si = sigma(h.k, 0, 1);
    REQUIRE(si.apply(h.p2) == h.p4);
    const AutGroup g4 = conjugate(h.g1, tau(h.k, 0, 2));
    const ExtensionReport r4 = check_extendability({c.model, si, {h.g1, h.g2, g4}, {h.p1, h.p2, h.p4}, 0});
    CHECK(r4.extendable);
    CHECK(*r4.sigma_tilde == pm(h.k, {{1, 0}, {0, 0}, {0, 0}, {0, 1}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}));

    // Synthetic negative: a cyclic group through some sigma with sigma(P2) = P3 that moves P1.
    const AutGroup all = enumerate_linear_automorphisms(h.c, std::nullopt);
    std::optional<ProjMap> mover;
    for (const auto& g : all.elements())
        if (g.apply(h.p2) == h.p3 && g.apply(h.p1) != h.p1) {
            mover = g;
            break;
        }
    REQUIRE(mover.has_value());
    const AutGroup cyc = group_closure({*mover}, h.c);
    const ExtensionReport neg = check_extendability({c.model, *mover, {cyc, h.g2, h.g3}, {h.p1, h.p2, h.p3}, 0});
    CHECK(neg.conditions[0].verdict == Verdict::Negative);
    CHECK_FALSE(neg.extendable);
    CHECK_FALSE(neg.sigma_tilde.has_value());

    CHECK(code_of([&] { check_extendability({c.model, si, {h.g1, h.g2, h.g3}, {h.p1, h.p2, h.p3}, 0}); }) ==
          ErrorCode::PreconditionFailed);
    CHECK(code_of([&] { check_extendability({c.model, tau(h.k, 0, 1), {h.g1, h.g2, h.g3}, {h.p1, h.p2, h.p3}, 0}); }) ==
          ErrorCode::PreconditionFailed);
}

TEST_CASE("uniqueness_compare") {
    H9Corpus h;
    const UniquenessResult u = uniqueness_compare(h.setup(), Scheme::ThreeInner, 1, 2);
    CHECK(u.maps_agree);
    REQUIRE(u.equivalence.map.has_value());
    CHECK(forms_proportional_under(u.first.model.phi, *u.equivalence.map, u.second.model.phi));

    FQ9Corpus f;
    const UniquenessResult v = uniqueness_compare(f.setup(), Scheme::ThreeOuter, 1, 2);
    CHECK(v.maps_agree);

    GaloisSetup small = h.setup();
    small.groups[0] = group_closure({pm(h.k, {{2, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}})}, h.c);
    CHECK(code_of([&] { uniqueness_compare(small, Scheme::ThreeInner, 1, 2); }) == ErrorCode::HypothesisViolation);
}

TEST_CASE("generic_fiber_orbit_test") {
    H9Corpus h;
    const FiberTranscript t = generic_fiber_orbit_test(h.t1, h.g1, 10, 7);
    CHECK(t.passed);
    CHECK(t.trials.size() == 10);
    for (const auto& tr : t.trials) CHECK(tr.fiber.size() == 3);

    const FiberTranscript bad = generic_fiber_orbit_test(RatFunc(h.c, h.Y, h.Z), h.g1, 10);
    CHECK_FALSE(bad.degree_matches);
    CHECK_FALSE(bad.passed);
    CHECK(bad.trials.empty());
    CHECK(code_of([&] { generic_fiber_orbit_test(RatFunc::constant(h.c, h.k.one()), h.g1, 3); }) ==
          ErrorCode::PreconditionFailed);

    // Artin verdict and the oracle agree on the corpus instances.
    const std::vector<std::pair<RatFunc, AutGroup>> cases = {{h.t1, h.g1}, {h.t2, h.g2}, {h.t3, h.g3}, {h.t2, h.g1}};
    for (const auto& [fn, G] : cases)
        CHECK(verify_quotient_rational(G, fn).positive == generic_fiber_orbit_test(fn, G, 10).passed);
    FQ9Corpus f;
    const RatFunc yz(f.c, f.Y, f.Z);
    CHECK(verify_quotient_rational(f.g1, yz).positive);
    CHECK(generic_fiber_orbit_test(yz, f.g1, 10, 3).passed);
}

TEST_CASE("enumerate_linear_automorphisms") {
    FQ9Corpus f;
    const AutGroup a = enumerate_linear_automorphisms(f.c, f.hints);
    CHECK(a.order() == 6048);
    CHECK(a.order() == 27 * 28 * 8);

    H9Corpus h;
    const std::vector<ProjMap> h9_hints = {sigma(h.k, 0, 1), tau(h.k, 0, 1), h.N,
                                           pm(h.k, {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {1, 0}, {0, 0}}),
                                           pm(h.k, {{1, 0}, {0, 0}, {1, 0}, {1, 0}, {1, 0}, {2, 0}, {0, 0}, {0, 0}, {1, 0}})};
    const AutGroup b = enumerate_linear_automorphisms(h.c, h9_hints);
    CHECK(b.order() == 6048);
    const AutGroup scan = enumerate_linear_automorphisms(h.c, std::nullopt);
    CHECK(scan.elements() == b.elements());

    const FieldPtr f4 = Field::build(2, {1, 1, 1});
    const CurvePtr cubic = validate_curve(TriPoly::variable(*f4, 0).pow(3) + TriPoly::variable(*f4, 1).pow(3) +
                                              TriPoly::variable(*f4, 2).pow(3),
                                          f4);
    const AutGroup small = enumerate_linear_automorphisms(cubic, std::nullopt);
    CHECK(small.contains(ProjMap::identity(*f4)));
    CHECK(small.order() == 8 * 9 * 3);

    CHECK(code_of([&] { enumerate_linear_automorphisms(h.c, h9_hints, 100); }) == ErrorCode::CapExceeded);
    const FieldPtr f25 = Field::build(5, {3, 0, 1});
    const CurvePtr fermat = validate_curve(TriPoly::variable(*f25, 0).pow(3) + TriPoly::variable(*f25, 1).pow(3) +
                                               TriPoly::variable(*f25, 2).pow(3),
                                           f25);
    CHECK(code_of([&] { enumerate_linear_automorphisms(fermat, std::nullopt); }) == ErrorCode::ScanTooLarge);
    CHECK(pgl3_order(9) == 42456960ull);
}
