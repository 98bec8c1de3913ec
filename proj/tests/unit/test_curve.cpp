#include "doctest.h"

#include <functional>
#include <set>

#include "fixtures.hpp"
#include "galpoint/error.hpp"
#include "galpoint/extension.hpp"
#include "galpoint/ratfunc.hpp"
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

// Every point of P^2(K) on F = 0, by exhaustive evaluation.
std::set<ProjPoint> scan_points(const TriPoly& F) {
    const Field& k = F.field();
    std::set<ProjPoint> out;
    for (const auto& x : k.elements()) {
        for (const auto& y : k.elements())
            if (F({x, y, k.one()}).is_zero()) out.emplace(Vec3{x, y, k.one()});
        if (F({x, k.one(), k.zero()}).is_zero()) out.emplace(Vec3{x, k.one(), k.zero()});
    }
    if (F({k.one(), k.zero(), k.zero()}).is_zero()) out.emplace(Vec3{k.one(), k.zero(), k.zero()});
    return out;
}

// F evaluated on the branch by direct power-series substitution.
UniPoly substitute_branch(const TriPoly& F, const ProjPoint& p, const BranchExpansion& br) {
    const Field& k = F.field();
    std::array<UniPoly, 3> coord = {UniPoly(k), UniPoly(k), UniPoly(k)};
    for (int i = 0; i < 3; ++i) coord[i] = UniPoly::constant(p[i]);
    coord[br.parameter] = coord[br.parameter] + UniPoly::x(k);
    coord[br.dependent] = coord[br.dependent] + br.series;
    UniPoly acc(k);
    for (const auto& [key, c] : F.terms()) {
        const Exponent e = TriPoly::unpack(key);
        UniPoly t = UniPoly::constant(c);
        for (int v = 0; v < 3; ++v)
            for (int j = 0; j < e[v]; ++j) t = mul_trunc(t, coord[v], br.precision);
        acc += t;
    }
    return acc;
}

TriPoly random_form(const Field& k, int deg, Rng& rng) {
    TriPoly g(k);
    for (auto key : monomials_of_degree(deg)) {
        const Exponent e = TriPoly::unpack(key);
        g.add_term(k.random(rng), e.x, e.y, e.z);
    }
    return g;
}

Mat3 random_invertible(const Field& k, Rng& rng) {
    for (;;) {
        Mat3 m;
        for (auto& x : m) x = k.random(rng);
        if (!mat3_det(m).is_zero()) return m;
    }
}

}  // namespace

TEST_CASE("validate_curve accepts the corpus curves") {
    const CurvePtr c = h9();
    CHECK(c->degree() == 4);
    // The partials -X^3, Z^3, Y^3 have no common zero, so H9 is smooth.
    CHECK(c->irreducibility().smooth);
    CHECK(c->irreducibility().absolute == "certified");
    CHECK(fq9()->irreducibility().smooth);

    const auto scanned = scan_points(c->form());
    CHECK(scanned.size() == 28);
    CHECK(std::set<ProjPoint>(c->rational_points().begin(), c->rational_points().end()) == scanned);
    const auto fq = scan_points(fq9()->form());
    CHECK(fq9()->rational_points().size() == fq.size());
}

TEST_CASE("validate_curve rejects bad input") {
    auto k = f9();
    const TriPoly cubic = poly(*k, {{1, 0, 0, 2, 1}, {2, 0, 3, 0, 0}, {1, 0, 0, 0, 3}});
    const TriPoly product = var(*k, 0) * cubic;
    CHECK(code_of([&] { validate_curve(product, k); }) == ErrorCode::Reducible);
    const TriPoly conics = poly(*k, {{1, 0, 2, 0, 0}, {1, 0, 0, 1, 1}}) * poly(*k, {{1, 0, 0, 2, 0}, {2, 0, 1, 0, 1}});
    CHECK(code_of([&] { validate_curve(conics, k); }) == ErrorCode::Reducible);
    const TriPoly mixed = poly(*k, {{1, 0, 3, 0, 0}, {1, 0, 0, 1, 0}});
    CHECK(code_of([&] { validate_curve(mixed, k); }) == ErrorCode::NotHomogeneous);
    CHECK(code_of([&] { validate_curve(poly(*k, {{1, 0, 2, 0, 0}, {1, 0, 0, 1, 1}}), k); }) ==
          ErrorCode::InvalidArgument);

    SUBCASE("norm cubic: irreducible over F_3, three lines over F_27") {
        auto f3 = Field::prime(3);
        WorkingField w(f3, 3);
        const Field& k27 = *w.work();
        FieldElement theta = w.generator_image();
        TriPoly prod = TriPoly::constant(k27.one());
        for (int j = 0; j < 3; ++j) {
            prod = prod * TriPoly::linear({k27.one(), theta, theta * theta});
            theta = theta * theta * theta;
        }
        TriPoly cubic3(*f3);
        for (const auto& [key, c] : prod.terms()) {
            REQUIRE(c.code() < 3);
            const Exponent e = TriPoly::unpack(key);
            cubic3.add_term(f3->from_int(c.code()), e.x, e.y, e.z);
        }
        CHECK(code_of([&] { validate_curve(cubic3, f3); }) == ErrorCode::Reducible);
    }
}

TEST_CASE("point_check") {
    const CurvePtr c = h9();
    const Field& k = c->field();
    const ProjPoint p1 = point_check(*c, pt(k, {{0, 0}, {0, 0}, {2, 0}}));
    CHECK(p1 == ProjPoint(pt(k, {{0, 0}, {0, 0}, {1, 0}})));
    CHECK(code_of([&] { point_check(*c, pt(k, {{1, 0}, {0, 0}, {0, 0}})); }) == ErrorCode::NotOnCurve);
    const ProjPoint q = point_check(*fq9(), pt(k, {{1, 1}, {1, 0}, {0, 0}}));
    CHECK(q[0] == el(k, 1, 1));
    CHECK(q[1].is_one());

    auto k9 = f9();
    // Nodal cubic Y^2 Z - X^3 - X^2 Z with its node at (0:0:1).
    const TriPoly nodal = poly(*k9, {{1, 0, 0, 2, 1}, {2, 0, 3, 0, 0}, {2, 0, 2, 0, 1}});
    const CurvePtr cn = validate_curve(nodal, k9);
    CHECK_FALSE(cn->irreducibility().smooth);
    CHECK(code_of([&] { point_check(*cn, pt(*k9, {{0, 0}, {0, 0}, {1, 0}})); }) == ErrorCode::SingularPoint);
}

TEST_CASE("branch expansions satisfy the curve equation") {
    for (const CurvePtr& c : {h9(), fq9()}) {
        for (const auto& p : c->rational_points()) {
            const BranchExpansion br = c->branch(p, 12);
            CHECK(br.precision >= 12);
            CHECK(br.chart == p.chart());
            CHECK(substitute_branch(c->form(), p, br).truncated(br.precision).is_zero());
        }
    }
}

TEST_CASE("local valuations on H9") {
    const CurvePtr c = h9();
    const Field& k = c->field();
    const ProjPoint p1(pt(k, {{0, 0}, {0, 0}, {1, 0}}));
    CHECK(local_valuation(*c, p1, var(k, 1)) == 4);
    CHECK(local_valuation(*c, p1, var(k, 0)) == 1);
    CHECK(local_valuation(*c, p1, TriPoly::constant(k.one())) == 0);
    CHECK(code_of([&] { local_valuation(*c, p1, c->form() * var(k, 0)); }) == ErrorCode::IdenticallyZero);

    Rng rng(20261016);
    int cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const ProjPoint& p = c->rational_points()[rng() % c->rational_points().size()];
        const TriPoly g = random_form(k, 1 + int(rng() % 3), rng);
        const TriPoly h = random_form(k, 1 + int(rng() % 2), rng);
        if (g.is_zero() || h.is_zero()) continue;
        CHECK(local_valuation(*c, p, g * h) == local_valuation(*c, p, g) + local_valuation(*c, p, h));
        ++cases;
    }
    CHECK(cases > 150);
}

TEST_CASE("line intersection divisors") {
    const CurvePtr c = h9();
    const Field& k = c->field();
    const ProjPoint p1(pt(k, {{0, 0}, {0, 0}, {1, 0}}));
    const ProjPoint p2(pt(k, {{0, 0}, {1, 0}, {0, 0}}));
    const ProjPoint p3(pt(k, {{0, 0}, {0, 1}, {1, 0}}));
    const ProjPoint p4(pt(k, {{0, 0}, {0, 2}, {1, 0}}));

    // On X = 0 the scan finds four distinct points, so each meets the line simply.
    std::set<ProjPoint> on_x;
    for (const auto& p : scan_points(c->form()))
        if (p[0].is_zero()) on_x.insert(p);
    REQUIRE(on_x == std::set<ProjPoint>{p1, p2, p3, p4});
    const Divisor dx = line_intersection_divisor(*c, var(k, 0));
    CHECK(dx == Divisor{{p1, 1}, {p2, 1}, {p3, 1}, {p4, 1}});
    CHECK(line_intersection_divisor(*c, var(k, 1)) == Divisor{{p1, 4}});
    CHECK(line_intersection_divisor(*c, var(k, 0) * el(k, 2, 1)) == dx);

    const CurvePtr f = fq9();
    Divisor expected;
    const UniPoly quartic(k, {el(k, 1), k.zero(), k.zero(), k.zero(), k.one()});  // c^4 - 2
    for (const auto& r : roots_in_field(quartic)) add_point(expected, ProjPoint(Vec3{r.value, k.one(), k.zero()}), 1);
    REQUIRE(expected.size() == 4);
    CHECK(line_intersection_divisor(*f, var(k, 2)) == expected);

    CHECK(code_of([&] { line_intersection_divisor(*c, var(k, 0) * var(k, 1)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("line divisors: degree and shear invariance") {
    Rng rng(7);
    const CurvePtr c = h9();
    const Field& k = c->field();
    int cases = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const TriPoly L = random_form(k, 1, rng);
        if (L.is_zero()) continue;
        // H9 is maximal over F_9, so every line meets it in rational points.
        const Divisor d = line_intersection_divisor(*c, L);
        CHECK(degree(d) == 4);
        CHECK(is_effective(d));
        const Mat3 m = random_invertible(k, rng);
        const CurvePtr cm = validate_curve(c->form().substitute_linear(m), c->field_ptr());
        Divisor mapped;
        for (const auto& [p, mult] : line_intersection_divisor(*cm, L.substitute_linear(m)))
            add_point(mapped, ProjPoint(mat3_apply(m, p.coords())), mult);
        CHECK(mapped == d);
        ++cases;
    }
    CHECK(cases > 20);
}

TEST_CASE("extension hints for conics") {
    Rng rng(5);
    const CurvePtr c = h9();
    const Field& k = c->field();
    int extension = 0, checked = 0;
    for (int trial = 0; trial < 40 && checked < 2; ++trial) {
        const TriPoly G = random_form(k, 2, rng);
        if (G.is_zero()) continue;
        bool complete = true;
        try {
            intersection_divisor(*c, G);
        } catch (const Error& e) {
            REQUIRE(e.code() == ErrorCode::ExtensionRequired);
            complete = false;
        }
        if (complete) continue;
        ++extension;
        const std::uint32_t hint = splitting_degree(*c, G);
        CHECK(hint >= 2);
        if (hint > 3) continue;
        // Over the hinted extension the divisor is complete.
        WorkingField w(c->field_ptr(), hint);
        TriPoly Fe(*w.work()), Ge(*w.work());
        for (const auto& [key, a] : c->form().terms()) {
            const Exponent e = TriPoly::unpack(key);
            Fe.add_term(w.embed(a), e.x, e.y, e.z);
        }
        for (const auto& [key, a] : G.terms()) {
            const Exponent e = TriPoly::unpack(key);
            Ge.add_term(w.embed(a), e.x, e.y, e.z);
        }
        const CurvePtr ce = validate_curve(Fe, w.work());
        CHECK(degree(intersection_divisor(*ce, Ge)) == 8);
        ++checked;
    }
    CHECK(extension > 0);
    CHECK(checked > 0);
}

TEST_CASE("divisor_of_function") {
    const CurvePtr c = h9();
    const Field& k = c->field();
    const ProjPoint p1(pt(k, {{0, 0}, {0, 0}, {1, 0}}));
    const ProjPoint p2(pt(k, {{0, 0}, {1, 0}, {0, 0}}));
    const ProjPoint p3(pt(k, {{0, 0}, {0, 1}, {1, 0}}));
    const ProjPoint p4(pt(k, {{0, 0}, {0, 2}, {1, 0}}));
    const TriPoly X = var(k, 0), Y = var(k, 1), Z = var(k, 2);

    const RatFunc f(c, Y, X);
    CHECK(divisor_of_function(f) == Divisor{{p1, 3}, {p2, -1}, {p3, -1}, {p4, -1}});
    const RatFunc g(c, Z, X);
    CHECK(divisor_of_function(g) == Divisor{{p2, 3}, {p1, -1}, {p3, -1}, {p4, -1}});
    CHECK(local_valuation(f, p1) == 3);
    CHECK(local_valuation(RatFunc(c, X, Y), p1) == -3);
    CHECK_FALSE(local_valuation(f - f, p1).has_value());

    CHECK(code_of([&] { divisor_of_function(RatFunc::constant(c, el(k, 2))); }) == ErrorCode::ZeroDivisor);
    // X^4 / (Y^3 Z + Y Z^3) is the constant 1 on the curve.
    const RatFunc one(c, X.pow(4), Y.pow(3) * Z + Y * Z.pow(3));
    REQUIRE(one.constant_value().has_value());
    CHECK(one.constant_value()->is_one());
    CHECK(code_of([&] { RatFunc(c, X, c->form()); }) == ErrorCode::ZeroDivisor);
    CHECK(code_of([&] { RatFunc(c, X, Y * Z); }) == ErrorCode::InvalidArgument);

    SUBCASE("values and arithmetic") {
        CHECK(f.value_at(p1)->is_zero());
        CHECK_FALSE(f.value_at(p2).has_value());
        CHECK(f * f.inverse() == RatFunc::constant(c, k.one()));
        CHECK(f + g == RatFunc(c, Y + Z, X));
        CHECK(f / g == RatFunc(c, Y, Z));
        // 0/0 at P1, resolved by valuations.
        const RatFunc r(c, X.pow(4), Y * Z.pow(3));
        CHECK(r.value_at(p1).value() == k.one());
    }

    SUBCASE("degree-0 law on random ratios") {
        Rng rng(11);
        int done = 0;
        for (int trial = 0; trial < 60; ++trial) {
            const TriPoly a = random_form(k, 1 + int(trial % 2), rng);
            const TriPoly b = random_form(k, 1 + int(trial % 2), rng);
            if (a.is_zero() || b.is_zero()) continue;
            const RatFunc h(c, a, b);
            if (h.is_constant()) continue;
            try {
                const Divisor d = divisor_of_function(h);
                CHECK(degree(d) == 0);
                CHECK(degree(zeros_part(d)) == degree(poles_part(d)));
                ++done;
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::ExtensionRequired);
            }
        }
        CHECK(done > 5);
    }
}

TEST_CASE("divisor helpers") {
    const Field& k = h9()->field();
    const ProjPoint a(pt(k, {{0, 0}, {0, 0}, {1, 0}}));
    const ProjPoint b(pt(k, {{0, 0}, {1, 0}, {0, 0}}));
    const Divisor d = Divisor{{a, 2}} - Divisor{{b, 1}};
    CHECK(degree(d) == 1);
    CHECK((d - d).empty());
    CHECK(degree(3 * d) == 3);
    CHECK(to_string(d) == "2(0:0:1) - (0:1:0)");
}
