#include "galpoint/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "galpoint/bifactor.hpp"
#include "galpoint/error.hpp"
#include "galpoint/extension.hpp"
#include "local.hpp"

namespace galpoint {

namespace detail {

LocalPoly localize(const TriPoly& G, const ProjPoint& p, int param, int dep) {
    const Field& k = G.field();
    const int dmax = std::max(G.degree_in(dep), 0);
    LocalPoly out(dmax + 1, UniPoly(k));
    if (G.is_zero()) return out;

    std::vector<UniPoly> param_pow;
    param_pow.push_back(UniPoly::constant(k.one()));
    const UniPoly lin(k, {p[param], k.one()});
    for (int i = 1; i <= G.degree_in(param); ++i) param_pow.push_back(param_pow.back() * lin);

    std::vector<FieldElement> dep_pow = {k.one()};
    for (int i = 1; i <= dmax; ++i) dep_pow.push_back(dep_pow.back() * p[dep]);

    // binomial coefficients mod p
    std::vector<std::vector<FieldElement>> binom(dmax + 1);
    for (int n = 0; n <= dmax; ++n) {
        binom[n].assign(n + 1, k.one());
        for (int j = 1; j < n; ++j) binom[n][j] = binom[n - 1][j - 1] + binom[n - 1][j];
    }

    for (const auto& [key, c] : G.terms()) {
        const Exponent e = TriPoly::unpack(key);
        const int ea = e[param], eb = e[dep];
        for (int j = 0; j <= eb; ++j) {
            const FieldElement w = c * binom[eb][j] * dep_pow[eb - j];
            if (w.is_zero()) continue;
            out[j] += param_pow[ea] * w;
        }
    }
    return out;
}

LocalPoly derivative_in_d(const LocalPoly& g) {
    const Field& k = g.front().field();
    LocalPoly out;
    for (std::size_t j = 1; j < g.size(); ++j) out.push_back(g[j] * k.from_int(static_cast<std::int64_t>(j)));
    if (out.empty()) out.push_back(UniPoly(k));
    return out;
}

UniPoly eval_local(const LocalPoly& g, const UniPoly& phi, int prec) {
    const Field& k = phi.field();
    UniPoly acc(k);
    for (std::size_t j = g.size(); j-- > 0;) acc = mul_trunc(acc, phi, prec) + g[j].truncated(prec);
    return acc;
}

TriPoly embed_form(const TriPoly& G, const WorkingField& wf) {
    TriPoly out(*wf.work());
    for (const auto& [key, c] : G.terms()) {
        const Exponent e = TriPoly::unpack(key);
        out.add_term(wf.embed(c), e.x, e.y, e.z);
    }
    return out;
}

}  // namespace detail

ProjPoint::ProjPoint(const Vec3& coords) : c_(coords) {
    int last = -1;
    for (int i = 0; i < 3; ++i)
        if (!c_[i].is_zero()) last = i;
    require(last >= 0, ErrorCode::InvalidArgument, "the zero vector is not a projective point");
    const FieldElement inv = c_[last].inverse();
    for (auto& x : c_) x *= inv;
}

int ProjPoint::chart() const {
    for (int i = 2; i > 0; --i)
        if (!c_[i].is_zero()) return i;
    return 0;
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
    for (int i = 0; i < 3; ++i)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

std::string ProjPoint::to_string() const {
    return "(" + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() + ")";
}

PlaneCurve::PlaneCurve(FieldPtr field, TriPoly F)
    : field_(std::move(field)),
      F_(std::move(F)),
      degree_(F_.total_degree()),
      grad_{F_.partial(0), F_.partial(1), F_.partial(2)},
      reducer_(F_),
      points_(galpoint::rational_points(F_)) {}

bool PlaneCurve::is_smooth_at(const Vec3& x) const {
    return !(grad_[0](x).is_zero() && grad_[1](x).is_zero() && grad_[2](x).is_zero());
}

BranchExpansion PlaneCurve::branch(const ProjPoint& p, int precision) const {
    precision = std::max(precision, 1);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = branches_.find(p);
        if (it != branches_.end() && it->second.precision >= precision) return it->second;
    }
    const Field& k = *field_;
    const int c = p.chart();
    const int a = (c == 0) ? 1 : 0;
    const int b = (c == 2) ? 1 : 2;
    require(contains(p.coords()), ErrorCode::NotOnCurve, p.to_string() + " is not on the curve");
    BranchExpansion br{c, 0, 0, UniPoly(k), 0};
    if (!grad_[b](p.coords()).is_zero()) {
        br.parameter = a;
        br.dependent = b;
    } else if (!grad_[a](p.coords()).is_zero()) {
        br.parameter = b;
        br.dependent = a;
    } else {
        fail(ErrorCode::SingularPoint, p.to_string() + " is a singular point of the curve");
    }
    const detail::LocalPoly f = detail::localize(F_, p, br.parameter, br.dependent);
    const detail::LocalPoly df = detail::derivative_in_d(f);
    UniPoly phi(k);
    for (int prec = 1; prec < precision;) {
        prec = std::min(2 * prec, precision);
        const UniPoly val = detail::eval_local(f, phi, prec);
        const UniPoly der = detail::eval_local(df, phi, prec);
        phi = (phi - mul_trunc(val, inverse_series(der, prec), prec)).truncated(prec);
    }
    require(detail::eval_local(f, phi, precision).is_zero(), ErrorCode::Internal, "branch expansion did not converge");
    br.series = phi;
    br.precision = precision;
    std::lock_guard<std::mutex> lock(cache_mutex_);
    branches_.insert_or_assign(p, br);
    return br;
}

std::vector<ProjPoint> rational_points(const TriPoly& F) {
    const Field& k = F.field();
    const FieldElement zero = k.zero(), one = k.one();
    std::vector<ProjPoint> out;
    Rng rng(0);
    for (const auto& x : k.elements()) {
        const UniPoly u = F.along({x, zero, one}, {zero, one, zero});
        if (u.is_zero()) {
            for (const auto& y : k.elements()) out.emplace_back(Vec3{x, y, one});
            continue;
        }
        for (const auto& r : roots_in_field(u, rng)) out.emplace_back(Vec3{x, r.value, one});
    }
    const UniPoly u = F.along({zero, one, zero}, {one, zero, zero});
    if (u.is_zero()) {
        for (const auto& x : k.elements()) out.emplace_back(Vec3{x, one, zero});
    } else {
        for (const auto& r : roots_in_field(u, rng)) out.emplace_back(Vec3{r.value, one, zero});
    }
    if (F({one, zero, zero}).is_zero()) out.emplace_back(Vec3{one, zero, zero});
    std::sort(out.begin(), out.end());
    return out;
}

bool certify_smooth(const TriPoly& F, const CurveReducer& reducer, Rng& rng) {
    const Field& k = F.field();
    const TriPoly G = reducer.sheared() ? F.substitute_linear(reducer.shear()) : F;
    const int v = reducer.variable();
    const int u = (v == 0) ? 1 : 0;
    const int w = (v == 2) ? 1 : 2;
    const std::array<TriPoly, 3> grad = {G.partial(0), G.partial(1), G.partial(2)};
    Vec3 eu = {k.zero(), k.zero(), k.zero()}, ew = eu;
    eu[u] = k.one();
    ew[w] = k.one();
    for (int round = 0; round < 4; ++round) {
        std::array<TriPoly, 2> combos = {TriPoly(k), TriPoly(k)};
        for (auto& cmb : combos)
            for (int i = 0; i < 3; ++i) cmb += grad[i] * k.random(rng);
        if (combos[0].is_zero() || combos[1].is_zero()) continue;
        const TriPoly r1 = resultant(G, combos[0], v).value;
        const TriPoly r2 = resultant(G, combos[1], v).value;
        if (r1.is_zero() || r2.is_zero()) continue;
        const UniPoly g = gcd(r1.along(ew, eu), r2.along(ew, eu));
        const bool at_infinity = r1(eu).is_zero() && r2(eu).is_zero();
        if (g.degree() <= 0 && !at_infinity) return true;
    }
    return false;
}

CurvePtr validate_curve(const TriPoly& F, const FieldPtr& K, std::uint64_t seed) {
    F.require_form("curve polynomial");
    require(F.field().same_as(*K), ErrorCode::FieldMismatch, "curve coefficients are not over the working field");
    require(F.total_degree() >= 3, ErrorCode::InvalidArgument, "curve degree must be at least 3");
    auto curve = std::make_shared<PlaneCurve>(K, F);
    IrreducibilityRecord& rec = curve->record_;
    Rng rng(seed);
    if (certify_smooth(F, curve->reducer_, rng)) {
        rec.smooth = true;
        rec.method = "smooth";
        rec.absolute = "certified";
        return curve;
    }
    const FactorSearch fs = find_form_factor(F, rng);
    if (fs.status == FactorSearch::Status::Factor)
        fail(ErrorCode::Reducible, "curve polynomial has the factor " + fs.factor->to_string() + " (" + fs.note + ")");
    rec.method = fs.status == FactorSearch::Status::Irreducible ? "hensel" : "undecided";

    // Weil-type lower bound with arithmetic genus; a violation proves absolute reducibility.
    const int n = F.total_degree();
    const double genus = (n - 1) * (n - 2) / 2.0;
    rec.absolute = "unchecked";
    for (std::uint32_t ext = 2; ext <= 3; ++ext) {
        std::uint64_t qq = 1;
        for (std::uint32_t i = 0; i < ext; ++i) qq *= K->size();
        if (qq > 6561) break;
        WorkingField wf(K, ext);
        const std::uint64_t count = rational_points(detail::embed_form(F, wf)).size();
        rec.point_counts.emplace_back(qq, count);
        const double bound = double(qq) + 1.0 - 2.0 * genus * std::sqrt(double(qq));
        if (double(count) < bound)
            fail(ErrorCode::Reducible, "curve is not absolutely irreducible: " + std::to_string(count) +
                                           " points over F_" + std::to_string(qq) + " is below the Weil bound");
        rec.absolute = "probable";
    }
    return curve;
}

ProjPoint point_check(const PlaneCurve& C, const Vec3& coords) {
    for (const auto& x : coords)
        require(x.field().same_as(C.field()), ErrorCode::FieldMismatch, "point coordinates are not over the working field");
    const ProjPoint p(coords);
    require(C.contains(p.coords()), ErrorCode::NotOnCurve, p.to_string() + " is not on the curve");
    require(C.is_smooth_at(p.coords()), ErrorCode::SingularPoint, p.to_string() + " is a singular point of the curve");
    return p;
}

}  // namespace galpoint
