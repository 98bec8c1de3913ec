#pragma once

#include <utility>

#include "galpoint/tripoly.hpp"

namespace galpoint {

/// Remainders modulo a plane-curve form F.
///
/// F is made monic in one variable: the first of X, Y, Z whose pure power
/// appears in F, or X after a recorded shear S with F(S e_X) != 0. Remainders
/// are canonical: g and h agree modulo F exactly when their normal forms agree.
class CurveReducer {
public:
    explicit CurveReducer(const TriPoly& F);

    const TriPoly& form() const { return F_; }
    int variable() const { return var_; }
    bool sheared() const { return sheared_; }
    const Mat3& shear() const { return shear_; }

    TriPoly reduce(const TriPoly& g) const;
    /// g = quotient * F + remainder.
    std::pair<TriPoly, TriPoly> divide(const TriPoly& g) const;

private:
    std::pair<TriPoly, TriPoly> divide_sheared(const TriPoly& g) const;

    TriPoly F_;
    TriPoly Fs_;
    int var_ = 0;
    int degree_ = 0;
    FieldElement lead_inv_;
    bool sheared_ = false;
    Mat3 shear_;
    Mat3 shear_inv_;
};

/// One-shot normal form of g modulo F.
TriPoly normal_form(const TriPoly& g, const TriPoly& F);

}  // namespace galpoint
