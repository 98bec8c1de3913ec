#include "galpoint/ratfunc.hpp"

#include "galpoint/error.hpp"
#include "galpoint/valuation.hpp"

namespace galpoint {

RatFunc::RatFunc(CurvePtr curve, TriPoly num, TriPoly den, bool) : curve_(std::move(curve)), num_(std::move(num)), den_(std::move(den)) {
    const Field& k = curve_->field();
    num_ = curve_->reduce(num_);
    den_ = curve_->reduce(den_);
    require(!den_.is_zero(), ErrorCode::ZeroDivisor, "denominator vanishes on the curve");
    if (num_.is_zero()) {
        den_ = TriPoly::constant(k.one());
        return;
    }
    const FieldElement s = den_.leading_coeff().inverse();
    num_ *= s;
    den_ *= s;
}

RatFunc::RatFunc(CurvePtr curve, const TriPoly& num, const TriPoly& den)
    : RatFunc(std::move(curve), num, den, true) {
    for (const TriPoly* t : {&num, &den})
        require(t->field().same_as(curve_->field()), ErrorCode::FieldMismatch,
                "rational function coefficients are not over the working field");
    den.require_form("denominator");
    if (!num.is_zero()) {
        num.require_form("numerator");
        require(num.total_degree() == den.total_degree(), ErrorCode::InvalidArgument,
                "numerator and denominator degrees differ");
    }
}

RatFunc RatFunc::constant(CurvePtr curve, const FieldElement& c) {
    const Field& k = curve->field();
    return RatFunc(std::move(curve), TriPoly::constant(c), TriPoly::constant(k.one()), true);
}

std::optional<FieldElement> RatFunc::constant_value() const {
    if (num_.is_zero()) return field().zero();
    if (num_.leading_key() != den_.leading_key()) return std::nullopt;
    const FieldElement c = num_.leading_coeff();
    if (num_ == den_ * c) return c;
    return std::nullopt;
}

RatFunc RatFunc::operator-() const { return RatFunc(curve_, -num_, den_, true); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.curve_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, true);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.curve_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, true);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.curve_, a.num_ * b.num_, a.den_ * b.den_, true);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc operator+(const RatFunc& a, const FieldElement& c) {
    return RatFunc(a.curve_, a.num_ + a.den_ * c, a.den_, true);
}

RatFunc operator-(const RatFunc& a, const FieldElement& c) {
    return RatFunc(a.curve_, a.num_ - a.den_ * c, a.den_, true);
}

RatFunc operator*(const RatFunc& a, const FieldElement& c) { return RatFunc(a.curve_, a.num_ * c, a.den_, true); }

RatFunc RatFunc::inverse() const {
    require(!is_zero(), ErrorCode::ZeroDivisor, "inverse of the zero function");
    return RatFunc(curve_, den_, num_, true);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.curve_->reduce(a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

std::optional<FieldElement> RatFunc::value_at(const ProjPoint& p) const {
    require(curve_->contains(p.coords()), ErrorCode::NotOnCurve, p.to_string() + " is not on the curve");
    if (is_zero()) return field().zero();
    const FieldElement d = den_(p.coords());
    if (!d.is_zero()) return num_(p.coords()) / d;
    const LocalValue ln = local_value(*curve_, p, num_);
    const LocalValue ld = local_value(*curve_, p, den_);
    if (*ln.order > *ld.order) return field().zero();
    if (*ln.order < *ld.order) return std::nullopt;
    return *ln.leading / *ld.leading;
}

std::string RatFunc::to_string() const {
    if (den_.total_degree() == 0) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::optional<int> local_valuation(const RatFunc& f, const ProjPoint& p) {
    if (f.is_zero()) return std::nullopt;
    return local_valuation(f.curve(), p, f.num()) - local_valuation(f.curve(), p, f.den());
}

LocalValue local_value(const RatFunc& f, const ProjPoint& p) {
    if (f.is_zero()) return {};
    const LocalValue n = local_value(f.curve(), p, f.num());
    const LocalValue d = local_value(f.curve(), p, f.den());
    return {*n.order - *d.order, *n.leading / *d.leading};
}

Divisor divisor_of_function(const RatFunc& f) {
    require(!f.is_constant(), ErrorCode::ZeroDivisor, "a constant function has no divisor");
    const Divisor d = intersection_divisor(f.curve(), f.num()) - intersection_divisor(f.curve(), f.den());
    require(degree(d) == 0, ErrorCode::Internal, "divisor of a function has nonzero degree");
    return d;
}

}  // namespace galpoint
