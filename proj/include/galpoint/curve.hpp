#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "galpoint/field.hpp"
#include "galpoint/matrix.hpp"
#include "galpoint/normal_form.hpp"
#include "galpoint/tripoly.hpp"
#include "galpoint/unipoly.hpp"

namespace galpoint {

/// A point of P^2 scaled so its last nonzero coordinate is 1.
class ProjPoint {
public:
    explicit ProjPoint(const Vec3& coords);

    const Vec3& coords() const { return c_; }
    const FieldElement& operator[](int i) const { return c_[i]; }
    const Field& field() const { return c_[0].field(); }
    /// Index of the last nonzero coordinate.
    int chart() const;

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b);

    std::string to_string() const;

private:
    Vec3 c_;
};

/// Truncated Puiseux-free branch of a smooth point: in the affine chart where
/// coordinate `chart` is 1, coordinate `dependent` minus its value equals
/// `series` evaluated at s = (coordinate `parameter` minus its value).
struct BranchExpansion {
    int chart = 0;
    int parameter = 0;
    int dependent = 0;
    UniPoly series;
    int precision = 0;
};

struct IrreducibilityRecord {
    bool smooth = false;      // certified smooth, hence absolutely irreducible
    std::string method;       // how irreducibility over the working field was decided
    std::string absolute;     // "certified", "probable" or "unchecked"
    std::vector<std::pair<std::uint64_t, std::uint64_t>> point_counts;  // (field size, points)
};

/// Plane curve model F = 0 over the working field, validated irreducible.
class PlaneCurve {
public:
    PlaneCurve(FieldPtr field, TriPoly F);

    const FieldPtr& field_ptr() const { return field_; }
    const Field& field() const { return *field_; }
    const TriPoly& form() const { return F_; }
    int degree() const { return degree_; }
    const TriPoly& partial(int var) const { return grad_[var]; }
    const CurveReducer& reducer() const { return reducer_; }
    TriPoly reduce(const TriPoly& g) const { return reducer_.reduce(g); }

    bool contains(const Vec3& x) const { return F_(x).is_zero(); }
    bool is_smooth_at(const Vec3& x) const;
    const std::vector<ProjPoint>& rational_points() const { return points_; }
    const IrreducibilityRecord& irreducibility() const { return record_; }

    /// Branch at a smooth point with at least the requested precision (memoized).
    BranchExpansion branch(const ProjPoint& p, int precision) const;

private:
    friend std::shared_ptr<const PlaneCurve> validate_curve(const TriPoly&, const FieldPtr&, std::uint64_t);

    FieldPtr field_;
    TriPoly F_;
    int degree_;
    std::array<TriPoly, 3> grad_;
    CurveReducer reducer_;
    std::vector<ProjPoint> points_;
    IrreducibilityRecord record_;

    mutable std::mutex cache_mutex_;
    mutable std::map<ProjPoint, BranchExpansion> branches_;
};

using CurvePtr = std::shared_ptr<const PlaneCurve>;

/// validate_curve: F must be a form of degree >= 3 over K. Irreducibility over
/// K is certified (smoothness certificate or Hensel factor search) and absolute
/// irreducibility is spot-checked with point counts over degree-2 and degree-3
/// extensions. Errors: NOT_HOMOGENEOUS, REDUCIBLE.
CurvePtr validate_curve(const TriPoly& F, const FieldPtr& K, std::uint64_t seed = 0);

/// point_check: normalized smooth point of C. Errors: NOT_ON_CURVE, SINGULAR_POINT.
ProjPoint point_check(const PlaneCurve& C, const Vec3& coords);

/// All K-rational points of F = 0, sorted.
std::vector<ProjPoint> rational_points(const TriPoly& F);

/// Smoothness certificate: no common zero of F and its partials over the
/// algebraic closure, shown by coprime resultants of random gradient combinations.
bool certify_smooth(const TriPoly& F, const CurveReducer& reducer, Rng& rng);

}  // namespace galpoint
