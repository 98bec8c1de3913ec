#include "galpoint/codec.hpp"

#include "galpoint/error.hpp"

namespace galpoint {

void expect(bool cond, const std::string& where, const std::string& what) {
    if (!cond) fail(ErrorCode::ParseError, where + ": " + what);
}

bool is_nonnegative(const json& j) {
    return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

json encode(const FieldElement& a) {
    json out = json::array();
    for (auto c : a.coords()) out.push_back(c);
    return out;
}

json encode(const Vec3& v) { return json::array({encode(v[0]), encode(v[1]), encode(v[2])}); }

json encode(const ProjPoint& p) { return encode(p.coords()); }

json encode(const Mat3& m) {
    json out = json::array();
    for (int r = 0; r < 3; ++r) out.push_back(json::array({encode(m[3 * r]), encode(m[3 * r + 1]), encode(m[3 * r + 2])}));
    return out;
}

json encode(const ProjMap& m) { return encode(m.matrix()); }

json encode(const TriPoly& p) {
    json out = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Exponent e = TriPoly::unpack(it->first);
        out.push_back(json::array({encode(it->second), e.x, e.y, e.z}));
    }
    return out;
}

json encode(const RatFunc& f) { return {{"num", encode(f.num())}, {"den", encode(f.den())}}; }

json encode(const Divisor& d) {
    json out = json::array();
    for (const auto& [p, m] : d) out.push_back(json::array({encode(p), m}));
    return out;
}

json encode_field(const WorkingField& wf) {
    return {{"p", wf.base()->characteristic()},
            {"modulus", wf.base()->modulus()},
            {"working_extension", wf.relative_degree()},
            {"description", wf.work()->describe()}};
}

Codec Codec::from_field_json(const json& j, std::optional<std::uint32_t> w) {
    expect(j.is_object(), "/field", "expected an object with p and modulus");
    expect(j.contains("p") && is_nonnegative(j["p"]), "/field/p", "expected a prime");
    const auto p = j["p"].get<std::uint32_t>();
    std::vector<std::uint32_t> modulus = {0, 1};
    if (j.contains("modulus")) {
        expect(j["modulus"].is_array() && !j["modulus"].empty(), "/field/modulus", "expected a coefficient list");
        modulus.clear();
        for (const auto& c : j["modulus"]) {
            expect(is_nonnegative(c), "/field/modulus", "coefficients must be nonnegative integers");
            modulus.push_back(c.get<std::uint32_t>());
        }
    }
    std::uint32_t ext = 1;
    if (j.contains("working_extension")) {
        expect(is_nonnegative(j["working_extension"]), "/field/working_extension", "expected a positive integer");
        ext = j["working_extension"].get<std::uint32_t>();
    }
    if (w) ext = *w;
    const FieldPtr base = Field::build(p, modulus);
    return Codec(std::make_shared<const WorkingField>(base, ext));
}

FieldElement Codec::element(const json& j, const std::string& where) const {
    const Field& base = *wf_->base();
    const Field& work = field();
    if (j.is_number_integer()) return wf_->embed(base.from_int(j.get<std::int64_t>()));
    expect(j.is_array(), where, "expected a coefficient vector");
    std::vector<std::uint32_t> c;
    for (const auto& x : j) {
        expect(is_nonnegative(x), where, "coefficients must be nonnegative integers");
        const auto v = x.get<std::uint64_t>();
        require(v < base.characteristic(), ErrorCode::FieldMismatch,
                where + ": coefficient " + std::to_string(v) + " is not reduced mod " +
                    std::to_string(base.characteristic()));
        c.push_back(static_cast<std::uint32_t>(v));
    }
    if (c.size() <= base.degree()) {
        c.resize(base.degree(), 0);
        return wf_->embed(base.from_coords(c));
    }
    require(c.size() == work.degree(), ErrorCode::FieldMismatch,
            where + ": coefficient vector of length " + std::to_string(c.size()) + " fits neither the base (" +
                std::to_string(base.degree()) + ") nor the working field (" + std::to_string(work.degree()) + ")");
    return work.from_coords(c);
}

Vec3 Codec::vec(const json& j, const std::string& where) const {
    expect(j.is_array() && j.size() == 3, where, "expected three coordinates");
    return {element(j[0], where + "/0"), element(j[1], where + "/1"), element(j[2], where + "/2")};
}

ProjPoint Codec::point(const json& j, const std::string& where) const {
    const Vec3 v = vec(j, where);
    expect(!is_zero(v), where, "the zero vector is not a projective point");
    return ProjPoint(v);
}

Mat3 Codec::matrix(const json& j, const std::string& where) const {
    expect(j.is_array(), where, "expected a 3x3 matrix");
    Mat3 m;
    if (j.size() == 9) {
        for (int i = 0; i < 9; ++i) m[i] = element(j[i], where + "/" + std::to_string(i));
        return m;
    }
    expect(j.size() == 3, where, "expected three rows");
    for (int r = 0; r < 3; ++r) {
        const std::string w = where + "/" + std::to_string(r);
        expect(j[r].is_array() && j[r].size() == 3, w, "expected a row of three entries");
        for (int c = 0; c < 3; ++c) m[3 * r + c] = element(j[r][c], w + "/" + std::to_string(c));
    }
    return m;
}

TriPoly Codec::poly(const json& j, const std::string& where) const {
    expect(j.is_array(), where, "expected a list of [coefficient, ex, ey, ez]");
    TriPoly p(field());
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string w = where + "/" + std::to_string(t);
        const json& term = j[t];
        expect(term.is_array() && term.size() == 4, w, "expected [coefficient, ex, ey, ez]");
        for (int v = 1; v < 4; ++v) expect(is_nonnegative(term[v]), w, "exponents must be nonnegative integers");
        const int ex = term[1].get<int>(), ey = term[2].get<int>(), ez = term[3].get<int>();
        require(ex + ey + ez <= TriPoly::kMaxDegree, ErrorCode::DegreeTooLarge, w + ": degree above 64");
        p.add_term(element(term[0], w + "/0"), ex, ey, ez);
    }
    return p;
}

RatFunc Codec::ratfunc(const json& j, const CurvePtr& C, const std::string& where) const {
    expect(j.is_object() && j.contains("num") && j.contains("den"), where, "expected {num, den}");
    return RatFunc(C, poly(j["num"], where + "/num"), poly(j["den"], where + "/den"));
}

Divisor Codec::divisor(const json& j, const std::string& where) const {
    expect(j.is_array(), where, "expected a list of [point, multiplicity]");
    Divisor d;
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string w = where + "/" + std::to_string(t);
        expect(j[t].is_array() && j[t].size() == 2 && j[t][1].is_number_integer(), w, "expected [point, multiplicity]");
        add_point(d, point(j[t][0], w + "/0"), j[t][1].get<int>());
    }
    return d;
}

}  // namespace galpoint
