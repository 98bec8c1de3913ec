#include "doctest.h"

#include <functional>
#include <set>

#include "fixtures.hpp"
#include "galpoint/action.hpp"
#include "galpoint/error.hpp"
#include "galpoint/extension.hpp"

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

// sigma_b: Z -> bY + Z
ProjMap sigma(const Field& k, std::uint32_t a, std::uint32_t b) {
    return ProjMap(mat(k, {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {a, b}, {1, 0}}));
}

// Y -> Y + bZ
ProjMap tau(const Field& k, std::uint32_t a, std::uint32_t b) {
    return ProjMap(mat(k, {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {a, b}, {0, 0}, {0, 0}, {1, 0}}));
}

struct H9Points {
    ProjPoint p1, p2, p3, p4;
};

H9Points h9_points(const Field& k) {
    return {ProjPoint(pt(k, {{0, 0}, {0, 0}, {1, 0}})), ProjPoint(pt(k, {{0, 0}, {1, 0}, {0, 0}})),
            ProjPoint(pt(k, {{0, 0}, {0, 1}, {1, 0}})), ProjPoint(pt(k, {{0, 0}, {0, 2}, {1, 0}}))};
}

// F(Mx) - c F(x) vanishes on all of K^3; each variable has degree < |K| so
// this forces the polynomial identity.
bool preserves_by_evaluation(const ProjMap& m, const TriPoly& F, const FieldElement& c) {
    const Field& k = F.field();
    const auto elems = k.elements();
    for (const auto& x : elems)
        for (const auto& y : elems)
            for (const auto& z : elems) {
                const Vec3 v = {x, y, z};
                if (F(mat3_apply(m.matrix(), v)) != c * F(v)) return false;
            }
    return true;
}

// Largest number of points of C over F_81 in a fiber of num/den away from den = 0.
int fiber_count_oracle(const TriPoly& F, const TriPoly& num, const TriPoly& den) {
    WorkingField w(f9(), 2);
    const Field& K = *w.work();
    auto embed = [&](const TriPoly& p) {
        TriPoly out(K);
        for (const auto& [key, c] : p.terms()) {
            const Exponent e = TriPoly::unpack(key);
            out.add_term(w.embed(c), e.x, e.y, e.z);
        }
        return out;
    };
    const TriPoly Fe = embed(F), ne = embed(num), de = embed(den);
    std::map<std::uint32_t, int> per_value;
    for (const auto& p : rational_points(Fe)) {
        const FieldElement d = de(p.coords());
        if (d.is_zero()) continue;
        ++per_value[(ne(p.coords()) / d).code()];
    }
    int best = 0;
    for (const auto& [v, n] : per_value) best = std::max(best, n);
    return best;
}

}  // namespace

TEST_CASE("map_preserves_curve") {
    const CurvePtr c = h9();
    const Field& k = c->field();
    const auto si = sigma(k, 0, 1);
    const auto c1 = map_preserves_curve(si, *c);
    REQUIRE(c1.has_value());
    CHECK(c1->is_one());
    CHECK(preserves_by_evaluation(si, c->form(), *c1));
    CHECK_FALSE(map_preserves_curve(sigma(k, 1, 0), *c).has_value());
    CHECK_FALSE(preserves_by_evaluation(sigma(k, 1, 0), c->form(), k.one()));
    CHECK(map_preserves_curve(ProjMap::identity(k), *c)->is_one());
    CHECK(code_of([&] { ProjMap(mat(k, {{1, 0}, {1, 0}, {0, 0}, {1, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}})); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("group_closure") {
    const CurvePtr c = h9();
    const Field& k = c->field();
    const AutGroup g1 = group_closure({sigma(k, 0, 1)}, c);
    CHECK(g1.order() == 3);
    CHECK(g1.contains(sigma(k, 0, 2)));
    CHECK(g1.contains(ProjMap::identity(k)));
    // sigma_i^2 = sigma_2i
    CHECK(sigma(k, 0, 1) * sigma(k, 0, 1) == sigma(k, 0, 2));

    const CurvePtr f = fq9();
    const AutGroup d = group_closure({ProjMap(mat(k, {{0, 1}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}))}, f);
    CHECK(d.order() == 4);
    for (std::uint32_t e : {1u, 2u}) {
        for (std::uint32_t j : {0u, 1u}) {
            const FieldElement eta = j ? el(k, 0, e) : el(k, e, 0);
            Mat3 m = mat3_identity(k);
            m[0] = eta;
            CHECK(d.contains(ProjMap(m)));
        }
    }
    CHECK(group_closure({ProjMap::identity(k)}, c).order() == 1);
    CHECK(code_of([&] { group_closure({sigma(k, 1, 0)}, c); }) == ErrorCode::NotAutomorphism);
    CHECK(code_of([&] { group_closure({sigma(k, 0, 1), tau(k, 0, 1)}, c, 10); }) == ErrorCode::CapExceeded);
}

TEST_CASE("orbits, orbit sums and pullbacks") {
    const CurvePtr c = h9();
    const Field& k = c->field();
    const auto [p1, p2, p3, p4] = h9_points(k);
    const AutGroup g1 = group_closure({sigma(k, 0, 1)}, c);

    // sigma_i(P2) = (0:1:i) = P4, sigma_2i(P2) = (0:1:2i) = P3.
    CHECK(sigma(k, 0, 1).apply(p2) == p4);
    CHECK(sigma(k, 0, 2).apply(p2) == p3);
    const auto os = orbit_and_stabilizer(g1, p2);
    CHECK(std::set<ProjPoint>(os.orbit.begin(), os.orbit.end()) == std::set<ProjPoint>{p2, p3, p4});
    CHECK(os.stabilizer.size() == 1);
    const auto os1 = orbit_and_stabilizer(g1, p1);
    CHECK(os1.orbit.size() == 1);
    CHECK(os1.stabilizer.size() == 3);

    CHECK(orbit_sum(g1, p2) == Divisor{{p2, 1}, {p3, 1}, {p4, 1}});
    CHECK(orbit_sum(g1, p1) == Divisor{{p1, 3}});

    const CurvePtr f = fq9();
    const AutGroup d = group_closure({ProjMap(mat(k, {{0, 1}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}))}, f);
    const ProjPoint q(pt(k, {{1, 1}, {1, 0}, {0, 0}}));
    Divisor fiber;
    for (const auto& [a, b] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 1}, {2, 2}, {1, 2}, {2, 1}})
        add_point(fiber, ProjPoint(pt(k, {{a, b}, {1, 0}, {0, 0}})), 1);
    CHECK(orbit_sum(d, q) == fiber);

    CHECK(pullback(sigma(k, 0, 2), Divisor{{p3, 4}}) == Divisor{{p2, 4}});
    const RatFunc xy(c, var(k, 0), var(k, 1));
    CHECK(pullback(sigma(k, 0, 1), xy) == xy);
    CHECK(pullback(ProjMap::identity(k), xy) == xy);
}

TEST_CASE("function_degree") {
    const CurvePtr c = h9();
    const Field& k = c->field();
    const TriPoly X = var(k, 0), Y = var(k, 1), Z = var(k, 2);
    CHECK(function_degree(RatFunc(c, X, Y)) == 3);
    CHECK(function_degree(RatFunc(c, X, Z)) == 3);
    CHECK(function_degree(RatFunc(c, Y, Z)) == 4);
    CHECK(function_degree(RatFunc(fq9(), Y, Z)) == 4);
    CHECK(fiber_count_oracle(c->form(), X, Y) == 3);
    CHECK(fiber_count_oracle(c->form(), X, Z) == 3);
    CHECK(fiber_count_oracle(c->form(), Y, Z) == 4);
    CHECK(fiber_count_oracle(fq9()->form(), Y, Z) == 4);
    CHECK(code_of([&] { function_degree(RatFunc::constant(c, k.one())); }) == ErrorCode::ZeroDivisor);
    for (std::uint64_t seed = 1; seed < 5; ++seed) CHECK(function_degree(RatFunc(c, X, Y), seed) == 3);
}

TEST_CASE("invariants") {
    const CurvePtr c = h9();
    const Field& k = c->field();
    const TriPoly X = var(k, 0), Y = var(k, 1), Z = var(k, 2);
    const AutGroup g1 = group_closure({sigma(k, 0, 1)}, c);
    const AutGroup g2 = group_closure({tau(k, 0, 1)}, c);
    CHECK(is_invariant(RatFunc(c, X, Y), g1));
    CHECK_FALSE(is_invariant(RatFunc(c, X, Z), g1));
    CHECK(is_invariant(RatFunc(c, X, Z), group_closure({}, c)));

    CHECK(invariant_generator(g1) == RatFunc(c, X, Y));
    CHECK(invariant_generator(g2) == RatFunc(c, X, Z));
    const CurvePtr f = fq9();
    const AutGroup d = group_closure({ProjMap(mat(k, {{0, 1}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}))}, f);
    CHECK(invariant_generator(d) == RatFunc(f, Y, Z));
}

TEST_CASE("mobius_normalize") {
    const CurvePtr c = h9();
    const Field& k = c->field();
    const TriPoly X = var(k, 0), Y = var(k, 1), Z = var(k, 2);
    const auto [p1, p2, p3, p4] = h9_points(k);
    const AutGroup g1 = group_closure({sigma(k, 0, 1)}, c);
    const AutGroup g2 = group_closure({tau(k, 0, 1)}, c);

    const RatFunc f = mobius_normalize(RatFunc(c, X, Y), g1, p1, p2);
    CHECK(f == RatFunc(c, Y, X));
    const RatFunc g = mobius_normalize(RatFunc(c, X, Z), g2, p2, p1);
    CHECK(g == RatFunc(c, Z, X));
    CHECK(code_of([&] { mobius_normalize(RatFunc(c, X, Y), g1, p2, p3); }) == ErrorCode::SameFiber);
    CHECK(code_of([&] { mobius_normalize(RatFunc(c, X, Z), g1, p1, p2); }) == ErrorCode::PreconditionFailed);

    const CurvePtr fq = fq9();
    const AutGroup d = group_closure({ProjMap(mat(k, {{0, 1}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}))}, fq);
    const ProjPoint q(pt(k, {{1, 1}, {1, 0}, {0, 0}}));
    CHECK(mobius_normalize(RatFunc(fq, Y, Z), d, std::nullopt, q) == RatFunc(fq, Y, Z));
}

TEST_CASE("property: orbit-stabilizer, orbit sums, pullback law, mobius postcondition") {
    const CurvePtr c = h9();
    const Field& k = c->field();
    const TriPoly X = var(k, 0), Y = var(k, 1), Z = var(k, 2);
    const AutGroup g1 = group_closure({sigma(k, 0, 1)}, c);
    const AutGroup g2 = group_closure({tau(k, 0, 1)}, c);
    const AutGroup big = group_closure({sigma(k, 0, 1), tau(k, 0, 1)}, c);
    CHECK(big.order() > 3);
    Rng rng(424242);
    int cases = 0;
    const auto& pts = c->rational_points();

    for (const AutGroup* G : {&g1, &g2, &big}) {
        for (const auto& p : pts) {
            const auto os = orbit_and_stabilizer(*G, p);
            CHECK(os.orbit.size() * os.stabilizer.size() == G->order());
            Divisor expected;
            for (const auto& q : os.orbit) add_point(expected, q, static_cast<int>(os.stabilizer.size()));
            const Divisor d = orbit_sum(*G, p);
            CHECK(d == expected);
            CHECK(degree(d) == static_cast<int>(G->order()));
            ++cases;
        }
    }

    const std::vector<RatFunc> fns = {RatFunc(c, X, Y), RatFunc(c, Y + Z, X), RatFunc(c, X * Y, Z * Z + X * Z)};
    for (int trial = 0; trial < 300; ++trial) {
        const ProjMap& a = big.elements()[rng() % big.order()];
        const ProjMap& b = big.elements()[rng() % big.order()];
        const RatFunc& f = fns[rng() % fns.size()];
        CHECK(pullback(a * b, f) == pullback(b, pullback(a, f)));
        Divisor d;
        for (int j = 0; j < 3; ++j) add_point(d, pts[rng() % pts.size()], int(rng() % 5) - 2);
        CHECK(pullback(a * b, d) == pullback(b, pullback(a, d)));
        CHECK(degree(pullback(a, d)) == degree(d));
        ++cases;
    }

    // Every pair of points in distinct G1-fibers normalizes with the checked divisor identity.
    const RatFunc t1(c, X, Y);
    int mobius = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const ProjPoint& zero = pts[rng() % pts.size()];
        const ProjPoint& pole = pts[rng() % pts.size()];
        if (t1.value_at(zero) == t1.value_at(pole)) continue;
        const RatFunc f = mobius_normalize(t1, g1, zero, pole);
        CHECK(divisor_of_function(f) == orbit_sum(g1, zero) - orbit_sum(g1, pole));
        ++mobius;
    }
    CHECK(mobius > 20);
    CHECK(cases + mobius >= 400);
}
