#pragma once

#include <initializer_list>

#include "galpoint/curve.hpp"
#include "galpoint/field.hpp"
#include "galpoint/tripoly.hpp"

namespace fixtures {

using namespace galpoint;

inline FieldPtr f9() {
    static const FieldPtr k = Field::build(3, {1, 0, 1});
    return k;
}

// a + b i
inline FieldElement el(const Field& k, std::uint32_t a, std::uint32_t b = 0) {
    std::vector<std::uint32_t> c = {a, b};
    c.resize(k.degree());
    return k.from_coords(c);
}

struct Term {
    std::uint32_t a, b;
    int x, y, z;
};

inline TriPoly poly(const Field& k, std::initializer_list<Term> terms) {
    TriPoly p(k);
    for (const auto& t : terms) p.add_term(el(k, t.a, t.b), t.x, t.y, t.z);
    return p;
}

inline Vec3 pt(const Field& k, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> c) {
    Vec3 v = {k.zero(), k.zero(), k.zero()};
    int i = 0;
    for (const auto& [a, b] : c) v[i++] = el(k, a, b);
    return v;
}

// Y^3 Z + Y Z^3 - X^4
inline TriPoly h9_form(const Field& k) { return poly(k, {{1, 0, 0, 3, 1}, {1, 0, 0, 1, 3}, {2, 0, 4, 0, 0}}); }

// X^4 + Y^4 + Z^4
inline TriPoly fq9_form(const Field& k) { return poly(k, {{1, 0, 4, 0, 0}, {1, 0, 0, 4, 0}, {1, 0, 0, 0, 4}}); }

inline CurvePtr h9() {
    static const CurvePtr c = [] {
        auto k = f9();
        return validate_curve(h9_form(*k), k);
    }();
    return c;
}

inline CurvePtr fq9() {
    static const CurvePtr c = [] {
        auto k = f9();
        return validate_curve(fq9_form(*k), k);
    }();
    return c;
}

// Row-major entries a + b i.
inline Mat3 mat(const Field& k, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> e) {
    Mat3 m = mat3_identity(k);
    int i = 0;
    for (const auto& [a, b] : e) m[i++] = el(k, a, b);
    return m;
}

inline TriPoly var(const Field& k, int v) { return TriPoly::variable(k, v); }

}  // namespace fixtures
