#include "galpoint/action.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "galpoint/error.hpp"
#include "galpoint/valuation.hpp"

namespace galpoint {

ProjMap::ProjMap(const Mat3& m) : m_(m) {
    require(!mat3_det(m_).is_zero(), ErrorCode::InvalidArgument, "projective map with a singular matrix");
    for (const auto& x : m_) {
        if (x.is_zero()) continue;
        const FieldElement inv = x.inverse();
        for (auto& y : m_) y *= inv;
        break;
    }
}

ProjMap ProjMap::identity(const Field& k) { return ProjMap(mat3_identity(k)); }

bool ProjMap::is_identity() const { return m_ == mat3_identity(field()); }

ProjPoint ProjMap::apply(const ProjPoint& p) const { return ProjPoint(mat3_apply(m_, p.coords())); }

ProjMap operator*(const ProjMap& a, const ProjMap& b) { return ProjMap(mat3_mul(a.m_, b.m_)); }

ProjMap ProjMap::inverse() const { return ProjMap(mat3_inverse(m_)); }

bool operator<(const ProjMap& a, const ProjMap& b) {
    for (int i = 0; i < 9; ++i)
        if (a.m_[i] != b.m_[i]) return a.m_[i] < b.m_[i];
    return false;
}

std::string ProjMap::to_string() const {
    std::string s = "[";
    for (int r = 0; r < 3; ++r) {
        s += r ? ",[" : "[";
        for (int c = 0; c < 3; ++c) s += (c ? "," : "") + m_[3 * r + c].to_string();
        s += "]";
    }
    return s + "]";
}

std::optional<FieldElement> map_preserves_curve(const ProjMap& m, const PlaneCurve& C) {
    const TriPoly& F = C.form();
    const TriPoly G = F.substitute_linear(m.matrix());
    const auto it = G.terms().find(F.leading_key());
    if (it == G.terms().end()) return std::nullopt;
    const FieldElement c = it->second / F.leading_coeff();
    if (G == F * c) return c;
    return std::nullopt;
}

bool AutGroup::contains(const ProjMap& m) const { return std::binary_search(elements_.begin(), elements_.end(), m); }

AutGroup group_closure(const std::vector<ProjMap>& gens, CurvePtr C, std::size_t cap) {
    require(cap >= 1, ErrorCode::InvalidArgument, "group cap must be positive");
    for (const auto& g : gens)
        require(map_preserves_curve(g, *C).has_value(), ErrorCode::NotAutomorphism,
                g.to_string() + " does not preserve the curve");
    AutGroup G;
    G.curve_ = C;
    G.generators_ = gens;
    std::set<ProjMap> seen = {ProjMap::identity(C->field())};
    std::deque<ProjMap> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        const ProjMap x = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            ProjMap y = g * x;
            if (!seen.insert(y).second) continue;
            require(seen.size() <= cap, ErrorCode::CapExceeded,
                    "group closure exceeds the cap of " + std::to_string(cap) + " elements");
            require(map_preserves_curve(y, *C).has_value(), ErrorCode::NotAutomorphism,
                    y.to_string() + " does not preserve the curve");
            queue.push_back(std::move(y));
        }
    }
    G.elements_.assign(seen.begin(), seen.end());
    return G;
}

AutGroup conjugate(const AutGroup& G, const ProjMap& g) {
    const ProjMap gi = g.inverse();
    std::vector<ProjMap> gens;
    for (const auto& s : G.generators()) gens.push_back(g * s * gi);
    return group_closure(gens, G.curve(), G.order());
}

OrbitStabilizer orbit_and_stabilizer(const AutGroup& G, const ProjPoint& p) {
    OrbitStabilizer out;
    std::set<ProjPoint> orbit;
    for (const auto& s : G.elements()) {
        const ProjPoint q = s.apply(p);
        orbit.insert(q);
        if (q == p) out.stabilizer.push_back(s);
    }
    out.orbit.assign(orbit.begin(), orbit.end());
    return out;
}

Divisor orbit_sum(const AutGroup& G, const ProjPoint& p) {
    Divisor d;
    for (const auto& s : G.elements()) add_point(d, s.apply(p), 1);
    return d;
}

RatFunc pullback(const ProjMap& m, const RatFunc& f) {
    return RatFunc(f.curve_ptr(), f.num().substitute_linear(m.matrix()), f.den().substitute_linear(m.matrix()));
}

Divisor pullback(const ProjMap& m, const Divisor& d) {
    const ProjMap mi = m.inverse();
    Divisor out;
    for (const auto& [p, k] : d) add_point(out, mi.apply(p), k);
    return out;
}

int function_degree(const RatFunc& f, std::uint64_t seed) {
    require(!f.is_constant(), ErrorCode::ZeroDivisor, "degree of a constant function");
    const PlaneCurve& C = f.curve();
    const Field& k = C.field();
    Rng rng(seed);
    std::optional<int> result;
    for (int attempt = 0; attempt < 16 && !result; ++attempt) {
        const FieldElement lambda = k.random(rng);
        Divisor fiber;
        try {
            fiber = intersection_divisor(C, f.num() - f.den() * lambda);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::ExtensionRequired || e.code() == ErrorCode::SingularPoint) continue;
            throw;
        }
        int deg = 0;
        for (const auto& [p, m] : fiber) {
            const int vb = f.den()(p.coords()).is_zero() ? local_valuation(C, p, f.den()) : 0;
            deg += std::max(0, m - vb);
        }
        result = deg;
    }
    require(result.has_value(), ErrorCode::RetriesExhausted,
            "no fiber of " + f.to_string() + " was complete over the working field after 16 samples; try a working extension");
    try {
        const int poles = degree(poles_part(divisor_of_function(f)));
        require(poles == *result, ErrorCode::Internal, "fiber degree disagrees with the pole divisor");
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ExtensionRequired && e.code() != ErrorCode::SingularPoint) throw;
    }
    return *result;
}

bool is_invariant(const RatFunc& f, const AutGroup& G) {
    for (const auto& s : G.elements())
        if (!(pullback(s, f) == f)) return false;
    return true;
}

RatFunc invariant_generator(const AutGroup& G, std::uint64_t seed) {
    const CurvePtr& C = G.curve();
    const Field& k = C->field();
    require(G.order() >= 2, ErrorCode::InvalidArgument, "invariant generator of the trivial group");
    std::vector<RatFunc> ratios;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) ratios.emplace_back(C, TriPoly::variable(k, a), TriPoly::variable(k, b));

    auto accept = [&](const RatFunc& t) {
        if (t.is_constant() || !is_invariant(t, G)) return false;
        try {
            return function_degree(t, seed) == static_cast<int>(G.order());
        } catch (const Error& e) {
            if (e.code() == ErrorCode::RetriesExhausted) return false;
            throw;
        }
    };
    for (const auto& r : ratios)
        if (accept(r)) return r;
    if (G.order() <= 64) {
        for (const auto& r : ratios) {
            RatFunc sum = RatFunc::constant(C, k.zero());
            for (const auto& s : G.elements()) sum = sum + pullback(s, r);
            if (accept(sum)) return sum;
        }
        for (const auto& r : ratios) {
            RatFunc prod = RatFunc::constant(C, k.one());
            for (const auto& s : G.elements()) prod = prod * pullback(s, r);
            if (accept(prod)) return prod;
        }
    }
    fail(ErrorCode::NotFound, "no invariant of degree " + std::to_string(G.order()) +
                                  " among the candidates; supply the invariant in the scenario");
}

RatFunc mobius_normalize(const RatFunc& t, const AutGroup& G, const std::optional<ProjPoint>& zero_at,
                         const ProjPoint& pole_at, std::uint64_t seed) {
    require(!t.is_constant(), ErrorCode::PreconditionFailed, "normalizing a constant function");
    require(is_invariant(t, G), ErrorCode::PreconditionFailed, t.to_string() + " is not invariant under the group");
    require(function_degree(t, seed) == static_cast<int>(G.order()), ErrorCode::PreconditionFailed,
            t.to_string() + " does not have degree equal to the group order");
    const std::optional<FieldElement> b = t.value_at(pole_at);
    if (!zero_at) {
        const RatFunc f = b ? (t - *b).inverse() : t;
        require(poles_part(divisor_of_function(f)) == orbit_sum(G, pole_at), ErrorCode::CertificationFailed,
                "pole divisor of " + f.to_string() + " is not the orbit sum of " + pole_at.to_string());
        return f;
    }
    const std::optional<FieldElement> a = t.value_at(*zero_at);
    require(a != b, ErrorCode::SameFiber, zero_at->to_string() + " and " + pole_at.to_string() + " lie in one fiber");
    RatFunc f = !a ? (t - *b).inverse() : (!b ? t - *a : (t - *a) / (t - *b));
    const Divisor expected = orbit_sum(G, *zero_at) - orbit_sum(G, pole_at);
    require(divisor_of_function(f) == expected, ErrorCode::CertificationFailed,
            "divisor of " + f.to_string() + " is not " + to_string(expected));
    return f;
}

}  // namespace galpoint
