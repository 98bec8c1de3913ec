#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galpoint/curve.hpp"
#include "galpoint/divisor.hpp"
#include "galpoint/ratfunc.hpp"

namespace galpoint {

/// Invertible 3x3 matrix up to scalars, stored with its first nonzero entry 1.
class ProjMap {
public:
    /// Errors: INVALID_ARGUMENT for a singular matrix.
    explicit ProjMap(const Mat3& m);
    static ProjMap identity(const Field& k);

    const Mat3& matrix() const { return m_; }
    const Field& field() const { return m_[0].field(); }
    bool is_identity() const;

    ProjPoint apply(const ProjPoint& p) const;
    /// (a * b)(x) = a(b(x)).
    friend ProjMap operator*(const ProjMap& a, const ProjMap& b);
    ProjMap inverse() const;

    friend bool operator==(const ProjMap& a, const ProjMap& b) { return a.m_ == b.m_; }
    friend bool operator<(const ProjMap& a, const ProjMap& b);

    std::string to_string() const;

private:
    Mat3 m_;
};

/// map_preserves_curve: the constant c with F(M x) = c F(x), if any.
std::optional<FieldElement> map_preserves_curve(const ProjMap& m, const PlaneCurve& C);

/// Finite group of projective-linear automorphisms of a curve.
class AutGroup {
public:
    const CurvePtr& curve() const { return curve_; }
    /// Sorted; contains the identity.
    const std::vector<ProjMap>& elements() const { return elements_; }
    const std::vector<ProjMap>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }
    bool contains(const ProjMap& m) const;

private:
    friend AutGroup group_closure(const std::vector<ProjMap>&, CurvePtr, std::size_t);

    CurvePtr curve_;
    std::vector<ProjMap> generators_;
    std::vector<ProjMap> elements_;
};

constexpr std::size_t kDefaultGroupCap = 100000;

/// group_closure: every element is re-verified against the curve.
/// Errors: NOT_AUTOMORPHISM, CAP_EXCEEDED.
AutGroup group_closure(const std::vector<ProjMap>& gens, CurvePtr C, std::size_t cap = kDefaultGroupCap);

/// g G g^-1.
AutGroup conjugate(const AutGroup& G, const ProjMap& g);

struct OrbitStabilizer {
    std::vector<ProjPoint> orbit;  // sorted
    std::vector<ProjMap> stabilizer;
};

OrbitStabilizer orbit_and_stabilizer(const AutGroup& G, const ProjPoint& p);

/// Sum over sigma in G of sigma(p): degree |G|.
Divisor orbit_sum(const AutGroup& G, const ProjPoint& p);

/// f o M.
RatFunc pullback(const ProjMap& m, const RatFunc& f);
/// Pointwise image under M^-1.
Divisor pullback(const ProjMap& m, const Divisor& d);

/// function_degree: degree of f as a map to P^1, from the zero divisor of
/// f - lambda for sampled lambda, cross-checked against the pole divisor.
/// Errors: ZERO_DIVISOR (constant), RETRIES_EXHAUSTED.
int function_degree(const RatFunc& f, std::uint64_t seed = 0);

bool is_invariant(const RatFunc& f, const AutGroup& G);

/// invariant_generator: an invariant function of degree |G| among coordinate
/// ratios, Reynolds averages and orbit products. Errors: NOT_FOUND.
RatFunc invariant_generator(const AutGroup& G, std::uint64_t seed = 0);

/// mobius_normalize: t must be G-invariant of degree |G|, so its fibers are
/// G-orbits. Returns (t - t(zero))/(t - t(pole)), or 1/(t - t(pole)) when no
/// zero point is given, with infinite values handled as described for the
/// degenerate cases. The divisor of the result is checked against the orbit
/// sums of the two points (with no zero point, only the pole divisor).
/// Errors: PRECONDITION_FAILED, SAME_FIBER, CERTIFICATION_FAILED.
RatFunc mobius_normalize(const RatFunc& t, const AutGroup& G, const std::optional<ProjPoint>& zero_at,
                         const ProjPoint& pole_at, std::uint64_t seed = 0);

}  // namespace galpoint
