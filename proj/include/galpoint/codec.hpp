#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "galpoint/action.hpp"
#include "galpoint/curve.hpp"
#include "galpoint/divisor.hpp"
#include "galpoint/extension.hpp"
#include "galpoint/ratfunc.hpp"
#include "json.hpp"

namespace galpoint {

using json = nlohmann::json;

/// JSON encoding of library values. Elements are little-endian coefficient
/// vectors over F_p, points are three elements, matrices three rows of three
/// elements, polynomials lists of [coefficient, ex, ey, ez].
json encode(const FieldElement& a);
json encode(const Vec3& v);
json encode(const ProjPoint& p);
json encode(const Mat3& m);
json encode(const ProjMap& m);
json encode(const TriPoly& p);
json encode(const RatFunc& f);
/// List of [point, multiplicity].
json encode(const Divisor& d);
json encode_field(const WorkingField& wf);

/// Decoding against a working field. A coefficient vector no longer than the
/// base degree names a base element (embedded into the working field); one of
/// the full working degree names a working-field element directly.
class Codec {
public:
    explicit Codec(std::shared_ptr<const WorkingField> wf) : wf_(std::move(wf)) {}

    /// From {"p": .., "modulus": [..], "working_extension": w}; `w` overrides.
    static Codec from_field_json(const json& j, std::optional<std::uint32_t> w = std::nullopt);

    const WorkingField& working() const { return *wf_; }
    const std::shared_ptr<const WorkingField>& working_ptr() const { return wf_; }
    const Field& field() const { return *wf_->work(); }
    const FieldPtr& field_ptr() const { return wf_->work(); }

    /// Errors: PARSE_ERROR, FIELD_MISMATCH; messages carry `where`.
    FieldElement element(const json& j, const std::string& where) const;
    Vec3 vec(const json& j, const std::string& where) const;
    ProjPoint point(const json& j, const std::string& where) const;
    /// Three rows of three, or nine entries, row-major.
    Mat3 matrix(const json& j, const std::string& where) const;
    TriPoly poly(const json& j, const std::string& where) const;
    RatFunc ratfunc(const json& j, const CurvePtr& C, const std::string& where) const;
    Divisor divisor(const json& j, const std::string& where) const;

private:
    std::shared_ptr<const WorkingField> wf_;
};

/// An integer that is not negative, whether stored signed or unsigned.
bool is_nonnegative(const json& j);

/// Throws PARSE_ERROR naming `where` unless `cond` holds.
void expect(bool cond, const std::string& where, const std::string& what);

}  // namespace galpoint
