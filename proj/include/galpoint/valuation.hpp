#pragma once

#include <cstdint>
#include <optional>

#include "galpoint/curve.hpp"
#include "galpoint/divisor.hpp"

namespace galpoint {

/// Order and leading coefficient of a form along the branch at a smooth point.
/// The form is dehomogenized by the chart coordinate of the point and expanded
/// in the branch parameter; `order` is empty when the form vanishes on the curve.
struct LocalValue {
    std::optional<int> order;
    std::optional<FieldElement> leading;
};

LocalValue local_value(const PlaneCurve& C, const ProjPoint& p, const TriPoly& G);

/// local_valuation: order of vanishing of G at p. Errors: IDENTICALLY_ZERO,
/// SINGULAR_POINT.
int local_valuation(const PlaneCurve& C, const ProjPoint& p, const TriPoly& G);

/// Intersection divisor of the curve with the form G = 0 (degree deg C * deg G).
/// Errors: IDENTICALLY_ZERO, SINGULAR_POINT, EXTENSION_REQUIRED.
Divisor intersection_divisor(const PlaneCurve& C, const TriPoly& G);

/// line_intersection_divisor: L must be a nonzero linear form.
Divisor line_intersection_divisor(const PlaneCurve& C, const TriPoly& L);

/// Smallest extension degree over which every intersection point of C and G
/// has rational coordinates.
std::uint32_t splitting_degree(const PlaneCurve& C, const TriPoly& G);

}  // namespace galpoint
