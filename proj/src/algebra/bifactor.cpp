#include "galpoint/bifactor.hpp"

#include <algorithm>

#include "galpoint/error.hpp"

namespace galpoint {

namespace {

// Truncated power series in s with coefficients in K[y]: entry k is the s^k coefficient.
using SeriesPoly = std::vector<UniPoly>;

SeriesPoly series_mul(const SeriesPoly& a, const SeriesPoly& b, std::size_t prec, const Field& k) {
    SeriesPoly out(prec, UniPoly(k));
    for (std::size_t i = 0; i < a.size() && i < prec; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < prec; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Lift f = u * v (mod s) to f = g * h (mod s^prec), g monic lifting u.
std::pair<SeriesPoly, SeriesPoly> hensel_lift(const SeriesPoly& f, const UniPoly& u, const UniPoly& v,
                                              std::size_t prec) {
    const Field& k = u.field();
    const ExtendedGcd eg = extended_gcd(u, v);
    require(eg.g.is_one(), ErrorCode::Internal, "Hensel lifting needs coprime factors");
    SeriesPoly g(prec, UniPoly(k)), h(prec, UniPoly(k));
    g[0] = u;
    h[0] = v;
    for (std::size_t m = 1; m < prec; ++m) {
        UniPoly e = m < f.size() ? f[m] : UniPoly(k);
        for (std::size_t i = 0; i <= m; ++i) {
            if (g[i].is_zero() || h[m - i].is_zero()) continue;
            e -= g[i] * h[m - i];
        }
        if (e.is_zero()) continue;
        // u * dh + v * dg = e with deg dg < deg u.
        const UniPoly dg = (eg.t * e) % u;
        const auto [dh, rem] = divmod(e - v * dg, u);
        require(rem.is_zero(), ErrorCode::Internal, "Hensel step is not exact");
        g[m] = dg;
        h[m] = dh;
    }
    return {g, h};
}

// y-major form: entry j is the coefficient of y^j as a polynomial in s.
using YMajor = std::vector<UniPoly>;

YMajor to_ymajor(const SeriesPoly& a, const Field& k) {
    int dy = -1;
    for (const auto& c : a) dy = std::max(dy, c.degree());
    YMajor out(std::max(dy + 1, 0), UniPoly(k));
    for (int j = 0; j <= dy; ++j) {
        std::vector<FieldElement> cs;
        for (const auto& c : a) cs.push_back(c.coeff(j));
        out[j] = UniPoly(k, std::move(cs));
    }
    return out;
}

bool divides_ymajor(const YMajor& f, const YMajor& g) {
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg < 0) return false;
    require(g.back().degree() == 0, ErrorCode::Internal, "trial divisor is not monic in y");
    const FieldElement lead_inv = g.back().coeff(0).inverse();
    YMajor rem = f;
    for (int j = static_cast<int>(rem.size()) - 1; j >= dg; --j) {
        if (rem[j].is_zero()) continue;
        const UniPoly c = rem[j] * lead_inv;
        for (int i = 0; i <= dg; ++i) rem[j - dg + i] -= c * g[i];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) return false;
    return true;
}

// Back to a form: s = x - x0, homogenized with Z, then the shear undone.
TriPoly to_form(const YMajor& g, const FieldElement& x0, const Mat3& shear_inv) {
    const Field& k = x0.field();
    const UniPoly shift(k, {-x0, k.one()});
    TriPoly affine(k);
    for (std::size_t j = 0; j < g.size(); ++j) {
        UniPoly cx(k);
        for (int i = g[j].degree(); i >= 0; --i) cx = cx * shift + UniPoly::constant(g[j].coeff(i));
        for (int a = 0; a <= cx.degree(); ++a) affine.add_term(cx.coeff(a), a, static_cast<int>(j), 0);
    }
    const int d = affine.total_degree();
    TriPoly form(k);
    for (const auto& [key, c] : affine.terms()) {
        const Exponent e = TriPoly::unpack(key);
        form.add_term(c, e.x, e.y, d - e.x - e.y);
    }
    return form.substitute_linear(shear_inv);
}

std::optional<TriPoly> recombine(const std::vector<SeriesPoly>& lifted, const YMajor& f, std::size_t prec,
                                 const FieldElement& x0, const Mat3& shear_inv, const Field& k) {
    const std::size_t r = lifted.size();
    for (std::size_t size = 1; size <= r / 2; ++size) {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            SeriesPoly prod = lifted[idx[0]];
            for (std::size_t i = 1; i < size; ++i) prod = series_mul(prod, lifted[idx[i]], prec, k);
            const YMajor cand = to_ymajor(prod, k);
            if (divides_ymajor(f, cand)) return to_form(cand, x0, shear_inv);
            // next combination in lexicographic order
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == r - size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

FactorSearch find_form_factor(const TriPoly& F, Rng& rng) {
    F.require_form("curve form");
    const Field& k = F.field();
    const int n = F.total_degree();
    FactorSearch out;
    if (n <= 1) {
        out.status = FactorSearch::Status::Irreducible;
        return out;
    }

    for (int v = 0; v < 3; ++v) {
        bool all = true;
        for (const auto& [key, c] : F.terms()) all = all && TriPoly::unpack(key)[v] > 0;
        if (all) {
            out.status = FactorSearch::Status::Factor;
            out.factor = TriPoly::variable(k, v);
            out.note = "coordinate factor";
            return out;
        }
    }

    const std::uint32_t p = k.characteristic();
    bool pth_power = true;
    for (const auto& [key, c] : F.terms()) {
        const Exponent e = TriPoly::unpack(key);
        pth_power = pth_power && e.x % p == 0 && e.y % p == 0 && e.z % p == 0;
    }
    if (pth_power) {
        TriPoly root(k);
        for (const auto& [key, c] : F.terms()) {
            const Exponent e = TriPoly::unpack(key);
            root.add_term(c.pow(k.size() / p), e.x / int(p), e.y / int(p), e.z / int(p));
        }
        out.status = FactorSearch::Status::Factor;
        out.factor = root;
        out.note = "p-th power";
        return out;
    }

    const std::uint64_t q = k.size();
    const std::uint64_t limit = std::min<std::uint64_t>(q * q * q, 4096);
    int shears_tried = 0;
    for (std::uint64_t code = 1; code < limit && shears_tried < 12; ++code) {
        const Vec3 e = {k.from_code(std::uint32_t(code % q)), k.from_code(std::uint32_t(code / q % q)),
                        k.from_code(std::uint32_t(code / q / q))};
        if (F(e).is_zero()) continue;
        Mat3 s = mat3_identity(k);
        bool ok = false;
        for (int j = 0; j < 3 && !ok; ++j) {
            s = mat3_identity(k);
            for (int r = 0; r < 3; ++r) s[3 * r + 1] = e[r];
            int col = 0;
            for (int t = 0; t < 3; ++t) {
                if (t == j) continue;
                if (col == 1) ++col;
                for (int r = 0; r < 3; ++r) s[3 * r + col] = (r == t) ? k.one() : k.zero();
                ++col;
            }
            ok = !mat3_det(s).is_zero();
        }
        if (!ok) continue;
        ++shears_tried;
        const Mat3 s_inv = mat3_inverse(s);
        const TriPoly Fs = F.substitute_linear(s);

        bool z_divides = true;
        for (const auto& [key, c] : Fs.terms()) z_divides = z_divides && TriPoly::unpack(key).z > 0;
        if (z_divides) {
            out.status = FactorSearch::Status::Factor;
            out.factor = TriPoly::linear({s_inv[6], s_inv[7], s_inv[8]});
            out.note = "linear factor";
            return out;
        }

        // f(x, y) = Fs(x, y, 1) in y-major form with coefficients in K[x].
        YMajor fx(n + 1, UniPoly(k));
        for (const auto& [key, c] : Fs.terms()) {
            const Exponent ex = TriPoly::unpack(key);
            fx[ex.y] += UniPoly::monomial(c, ex.x);
        }
        require(fx[n].degree() == 0, ErrorCode::Internal, "sheared form is not monic in Y");

        for (const auto& x0 : k.elements()) {
            std::vector<FieldElement> spec;
            for (const auto& c : fx) spec.push_back(c(x0));
            const UniPoly u0(k, spec);
            const UniPoly du = u0.derivative();
            if (du.is_zero() || !gcd(u0, du).is_one()) continue;

            // Shift x = x0 + s.
            const UniPoly shift(k, {x0, k.one()});
            YMajor fs(n + 1, UniPoly(k));
            for (int j = 0; j <= n; ++j) {
                UniPoly acc(k);
                for (int i = fx[j].degree(); i >= 0; --i) acc = acc * shift + UniPoly::constant(fx[j].coeff(i));
                fs[j] = acc;
            }
            int deg_s = 0;
            for (const auto& c : fs) deg_s = std::max(deg_s, c.degree());
            const std::size_t prec = static_cast<std::size_t>(deg_s) + 1;

            SeriesPoly series(prec, UniPoly(k));
            for (std::size_t m = 0; m < prec; ++m) {
                std::vector<FieldElement> cs;
                for (const auto& c : fs) cs.push_back(c.coeff(static_cast<int>(m)));
                series[m] = UniPoly(k, cs);
            }

            const Factorization fac = factor_univariate(series[0], rng);
            if (fac.factors.size() == 1) {
                out.status = FactorSearch::Status::Irreducible;
                out.note = "irreducible specialization";
                return out;
            }
            std::vector<SeriesPoly> lifted;
            SeriesPoly rest = series;
            // Normalize so the leading y-coefficient is 1.
            const FieldElement lc_inv = series[0].leading().inverse();
            for (auto& c : rest) c = c * lc_inv;
            for (std::size_t i = 0; i + 1 < fac.factors.size(); ++i) {
                const UniPoly& u = fac.factors[i].first;
                const UniPoly v = rest[0] / u;
                auto [g, h] = hensel_lift(rest, u, v, prec);
                lifted.push_back(std::move(g));
                rest = std::move(h);
            }
            lifted.push_back(rest);
            YMajor fmonic = fs;
            for (auto& c : fmonic) c = c * lc_inv;
            if (auto factor = recombine(lifted, fmonic, prec, x0, s_inv, k)) {
                out.status = FactorSearch::Status::Factor;
                out.factor = *factor;
                out.note = "Hensel recombination";
            } else {
                out.status = FactorSearch::Status::Irreducible;
                out.note = "no recombination divides";
            }
            return out;
        }
    }
    out.note = "no squarefree specialization over the field";
    return out;
}

}  // namespace galpoint
