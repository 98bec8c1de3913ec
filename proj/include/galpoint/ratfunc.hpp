#pragma once

#include <optional>
#include <string>

#include "galpoint/curve.hpp"
#include "galpoint/divisor.hpp"
#include "galpoint/valuation.hpp"

namespace galpoint {

/// Rational function on a curve: num/den with forms of equal degree, both kept
/// as normal-form representatives and the denominator scaled to a monic leading term.
class RatFunc {
public:
    /// Errors: NOT_HOMOGENEOUS, INVALID_ARGUMENT (degree mismatch),
    /// ZERO_DIVISOR (denominator vanishes on the curve).
    RatFunc(CurvePtr curve, const TriPoly& num, const TriPoly& den);
    static RatFunc constant(CurvePtr curve, const FieldElement& c);

    const CurvePtr& curve_ptr() const { return curve_; }
    const PlaneCurve& curve() const { return *curve_; }
    const Field& field() const { return curve_->field(); }
    const TriPoly& num() const { return num_; }
    const TriPoly& den() const { return den_; }
    /// Common degree of numerator and denominator.
    int form_degree() const { return den_.total_degree(); }

    bool is_zero() const { return num_.is_zero(); }
    std::optional<FieldElement> constant_value() const;
    bool is_constant() const { return constant_value().has_value(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator+(const RatFunc& a, const FieldElement& c);
    friend RatFunc operator-(const RatFunc& a, const FieldElement& c);
    friend RatFunc operator*(const RatFunc& a, const FieldElement& c);
    /// Errors: ZERO_DIVISOR for the zero function.
    RatFunc inverse() const;

    /// num1 * den2 - num2 * den1 reduces to zero modulo the curve.
    friend bool operator==(const RatFunc& a, const RatFunc& b);

    /// Value at a rational point of the curve; empty at a pole.
    std::optional<FieldElement> value_at(const ProjPoint& p) const;

    std::string to_string() const;

private:
    RatFunc(CurvePtr curve, TriPoly num, TriPoly den, bool);

    CurvePtr curve_;
    TriPoly num_;
    TriPoly den_;
};

/// local_valuation of a rational function; empty means +infinity (the zero function).
std::optional<int> local_valuation(const RatFunc& f, const ProjPoint& p);

/// Order and leading coefficient of f along the branch at p; empty order for
/// the zero function.
LocalValue local_value(const RatFunc& f, const ProjPoint& p);

/// divisor_of_function: zeros minus poles, degree 0.
/// Errors: ZERO_DIVISOR (constant function), EXTENSION_REQUIRED, SINGULAR_POINT.
Divisor divisor_of_function(const RatFunc& f);

}  // namespace galpoint
