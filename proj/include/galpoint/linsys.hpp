#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galpoint/action.hpp"
#include "galpoint/curve.hpp"
#include "galpoint/divisor.hpp"
#include "galpoint/ratfunc.hpp"

namespace galpoint {

/// Either target = sum c_i basis_i (checked modulo the curve), or a refutation:
/// weights y over sample points with sum y_P basis_i(P) = 0 for every i and
/// sum y_P target(P) != 0.
struct SpanCertificate {
    std::vector<RatFunc> basis;
    RatFunc target;
    std::optional<std::vector<FieldElement>> coefficients;
    std::vector<ProjPoint> witness_points;
    std::vector<FieldElement> witness_weights;
    /// Refutation found only by the symbolic system (no point witness).
    bool symbolic_refutation = false;
};

/// span_coefficients: sampled prefilter, then exact linear algebra on normal
/// forms. Errors: SAMPLING_EXHAUSTED.
SpanCertificate span_coefficients(const RatFunc& h, const std::vector<RatFunc>& basis);

/// Re-checks the identity or the witness of a certificate.
bool verify_span(const SpanCertificate& cert);

struct SpanDimension {
    int dimension = 0;
    std::vector<std::size_t> independent;  // indices forming a basis
    std::vector<SpanCertificate> certificates;  // one per input function, against the basis so far
};

SpanDimension span_dimension(const std::vector<RatFunc>& fns);

/// base_locus: pointwise minimum of effective divisors of equal degree.
Divisor base_locus(const std::vector<Divisor>& divisors);

/// Plane model of (f : g : 1).
struct EmbeddingModel {
    CurvePtr source;
    RatFunc f;
    RatFunc g;
    TriPoly phi;  // in U, V, W
    int degree = 0;
    int system_degree = 0;  // degree of the pullback of a general line
    int map_degree = 0;
    bool birational = false;
    std::vector<ProjPoint> marks;
};

/// implicitize: Phi of least degree with Phi(f, g, 1) = 0 on the curve, found
/// from the kernel of the normal-form map on monomials.
/// Errors: ELIMINATION_DEGENERATE, NOT_BIRATIONAL.
EmbeddingModel implicitize(const RatFunc& f, const RatFunc& g, std::uint64_t seed = 0);

/// image_point: (f : g : 1) at p after clearing the lowest order.
ProjPoint image_point(const RatFunc& f, const RatFunc& g, const ProjPoint& p);
ProjPoint image_point(const EmbeddingModel& model, const ProjPoint& p);

struct EquivalenceResult {
    std::optional<ProjMap> map;  // M with M(marks_b[j]) = marks_a[assignment[j]], Phi_a(M x) ~ Phi_b(x)
    std::vector<std::size_t> assignment;
    std::string note;
};

/// projective_equivalence: searches injective mark assignments in
/// lexicographic order. Errors: INSUFFICIENT_MARKS.
EquivalenceResult projective_equivalence(const TriPoly& phi_a, const std::vector<ProjPoint>& marks_a,
                                         const TriPoly& phi_b, const std::vector<ProjPoint>& marks_b);

/// Phi_a(M x) = c Phi_b(x) for some nonzero c.
bool forms_proportional_under(const TriPoly& phi_a, const ProjMap& m, const TriPoly& phi_b);

}  // namespace galpoint
