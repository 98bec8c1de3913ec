#include "doctest.h"

#include <functional>

#include "fixtures.hpp"
#include "galpoint/error.hpp"
#include "galpoint/linsys.hpp"

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

struct H9 {
    CurvePtr c = h9();
    const Field& k = c->field();
    TriPoly X = var(k, 0), Y = var(k, 1), Z = var(k, 2);
    ProjPoint p1{pt(k, {{0, 0}, {0, 0}, {1, 0}})};
    ProjPoint p2{pt(k, {{0, 0}, {1, 0}, {0, 0}})};
    ProjPoint p3{pt(k, {{0, 0}, {0, 1}, {1, 0}})};
    ProjPoint p4{pt(k, {{0, 0}, {0, 2}, {1, 0}})};
    RatFunc one = RatFunc::constant(c, k.one());
    RatFunc f{c, Y, X};
    RatFunc g{c, Z, X};
};

}  // namespace

TEST_CASE("span_coefficients") {
    H9 h;
    const FieldElement i = el(h.k, 0, 1);
    const RatFunc target(h.c, h.Y - h.Z * i, h.X);
    const SpanCertificate cert = span_coefficients(target, {h.one, h.f, h.g});
    REQUIRE(cert.coefficients.has_value());
    // Y - iZ = 1 * Y + (-i) * Z with -i = 2i.
    CHECK(*cert.coefficients == std::vector<FieldElement>{h.k.zero(), h.k.one(), el(h.k, 0, 2)});
    CHECK(verify_span(cert));

    const SpanCertificate trivial = span_coefficients(h.f, {h.one, h.f, h.g});
    REQUIRE(trivial.coefficients.has_value());
    CHECK(*trivial.coefficients == std::vector<FieldElement>{h.k.zero(), h.k.one(), h.k.zero()});

    const RatFunc bad(h.c, h.Y * h.Y, h.X * h.Z);
    const SpanCertificate ref = span_coefficients(bad, {h.one, h.f, h.g});
    CHECK_FALSE(ref.coefficients.has_value());
    CHECK(verify_span(ref));
    CHECK_FALSE(ref.witness_points.empty());
    // Exhaustive oracle: no combination over F_9 equals the target.
    bool any = false;
    for (const auto& a : h.k.elements())
        for (const auto& b : h.k.elements())
            for (const auto& c : h.k.elements())
                if (h.one * a + h.f * b + h.g * c == bad) any = true;
    CHECK_FALSE(any);

    SpanCertificate forged = cert;
    (*forged.coefficients)[2] = el(h.k, 0, 1);
    CHECK_FALSE(verify_span(forged));
}

TEST_CASE("span_dimension") {
    H9 h;
    const FieldElement i = el(h.k, 0, 1);
    const RatFunc target(h.c, h.Y - h.Z * i, h.X);
    const SpanDimension s = span_dimension({h.one, h.f, h.g, target});
    CHECK(s.dimension == 3);
    CHECK(s.independent == std::vector<std::size_t>{0, 1, 2});
    CHECK(span_dimension({h.one, h.f}).dimension == 2);
    CHECK(span_dimension({h.one, h.one, h.one}).dimension == 1);
}

TEST_CASE("base_locus") {
    H9 h;
    const Divisor D = {{h.p1, 1}, {h.p2, 1}, {h.p3, 1}, {h.p4, 1}};
    CHECK(base_locus({D, Divisor{{h.p1, 4}}, Divisor{{h.p2, 4}}}).empty());
    CHECK(base_locus({D, D}) == D);
    CHECK(base_locus({Divisor{{h.p1, 4}}, Divisor{{h.p1, 3}, {h.p2, 1}}}) == Divisor{{h.p1, 3}});
    // (f) + D and (g) + D
    CHECK(divisor_of_function(h.f) + D == Divisor{{h.p1, 4}});
    CHECK(divisor_of_function(h.g) + D == Divisor{{h.p2, 4}});
    CHECK(code_of([&] { base_locus({D, Divisor{{h.p1, 1}}}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("implicitize") {
    H9 h;
    const EmbeddingModel m = implicitize(h.f, h.g);
    const Field& k = h.k;
    // U^3 V + U V^3 - W^4
    const TriPoly expected = poly(k, {{1, 0, 3, 1, 0}, {1, 0, 1, 3, 0}, {2, 0, 0, 0, 4}});
    CHECK(m.phi == expected);
    CHECK(m.degree == 4);
    CHECK(m.system_degree == 4);
    CHECK(m.birational);
    // Oracle: (U, V, W) = (Y, Z, X) turns Phi into F.
    const Mat3 yzx = mat(k, {{0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {1, 0}, {0, 0}, {0, 0}});
    CHECK(m.phi.substitute_linear(yzx) == h.c->form());

    const CurvePtr fq = fq9();
    const EmbeddingModel mf = implicitize(RatFunc(fq, h.Y, h.Z), RatFunc(fq, h.X, h.Z));
    CHECK(mf.phi == fq9_form(k));
    CHECK(mf.degree == 4);

    CHECK(code_of([&] { implicitize(h.f, h.f); }) == ErrorCode::EliminationDegenerate);
    CHECK(code_of([&] { implicitize(h.f, h.one); }) == ErrorCode::EliminationDegenerate);
    const RatFunc t(h.c, h.X, h.Y);
    CHECK(code_of([&] { implicitize(t, t * t); }) == ErrorCode::NotBirational);
}

TEST_CASE("image_point") {
    H9 h;
    const EmbeddingModel m = implicitize(h.f, h.g);
    const Field& k = h.k;
    CHECK(image_point(m, h.p1) == ProjPoint(pt(k, {{0, 0}, {1, 0}, {0, 0}})));
    CHECK(image_point(m, h.p2) == ProjPoint(pt(k, {{1, 0}, {0, 0}, {0, 0}})));
    CHECK(image_point(m, h.p3) == ProjPoint(pt(k, {{0, 1}, {1, 0}, {0, 0}})));
    for (const auto& p : h.c->rational_points()) CHECK(m.phi(image_point(m, p).coords()).is_zero());
}

TEST_CASE("projective_equivalence") {
    H9 h;
    const Field& k = h.k;
    const EmbeddingModel m = implicitize(h.f, h.g);
    std::vector<ProjPoint> src = {h.p1, h.p2, h.p3, h.p4};
    std::vector<ProjPoint> img;
    for (const auto& p : src) img.push_back(image_point(m, p));

    const EquivalenceResult r = projective_equivalence(h.c->form(), src, m.phi, img);
    REQUIRE(r.map.has_value());
    CHECK(forms_proportional_under(h.c->form(), *r.map, m.phi));
    for (std::size_t j = 0; j < img.size(); ++j) CHECK(r.map->apply(img[j]) == src[r.assignment[j]]);

    // Four marks in general position pin the map down.
    std::vector<ProjPoint> general;
    for (const auto& p : h.c->rational_points()) {
        if (general.size() == 4) break;
        bool ok = true;
        for (std::size_t a = 0; a < general.size() && ok; ++a)
            for (std::size_t b = a + 1; b < general.size() && ok; ++b) {
                Mat3 mm;
                for (int r2 = 0; r2 < 3; ++r2) {
                    mm[3 * r2] = general[a][r2];
                    mm[3 * r2 + 1] = general[b][r2];
                    mm[3 * r2 + 2] = p[r2];
                }
                ok = !mat3_det(mm).is_zero();
            }
        if (ok) general.push_back(p);
    }
    REQUIRE(general.size() == 4);
    const EquivalenceResult same = projective_equivalence(h.c->form(), general, h.c->form(), general);
    REQUIRE(same.map.has_value());
    CHECK(same.map->is_identity());

    const TriPoly conic = poly(k, {{1, 0, 2, 0, 0}, {1, 0, 0, 1, 1}});
    const EquivalenceResult none = projective_equivalence(h.c->form(), src, conic, img);
    CHECK_FALSE(none.map.has_value());
    CHECK(none.note.find("degree") != std::string::npos);
}
