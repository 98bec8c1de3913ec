#include "galpoint/normal_form.hpp"

#include <algorithm>

#include "galpoint/error.hpp"

namespace galpoint {

CurveReducer::CurveReducer(const TriPoly& F) : F_(F), Fs_(F) {
    F.require_form("curve form");
    const Field& k = F.field();
    degree_ = F.total_degree();
    shear_ = mat3_identity(k);
    shear_inv_ = shear_;
    for (int v = 0; v < 3; ++v) {
        const FieldElement c = F.coeff(v == 0 ? degree_ : 0, v == 1 ? degree_ : 0, v == 2 ? degree_ : 0);
        if (!c.is_zero()) {
            var_ = v;
            lead_inv_ = c.inverse();
            return;
        }
    }
    // No pure power: shear so that the X^n coefficient F(S e_X) is nonzero.
    const std::uint64_t q = k.size();
    const std::uint64_t limit = std::min<std::uint64_t>(q * q * q, 1u << 18);
    for (std::uint64_t code = 1; code < limit; ++code) {
        Vec3 e = {k.from_code(std::uint32_t(code % q)), k.from_code(std::uint32_t(code / q % q)),
                  k.from_code(std::uint32_t(code / q / q))};
        const FieldElement val = F(e);
        if (val.is_zero()) continue;
        // Complete e to a basis with two standard vectors.
        for (int j = 0; j < 3; ++j) {
            Mat3 s = mat3_identity(k);
            for (int r = 0; r < 3; ++r) s[3 * r + 0] = e[r];
            int col = 1;
            for (int t = 0; t < 3 && col < 3; ++t) {
                if (t == j) continue;
                for (int r = 0; r < 3; ++r) s[3 * r + col] = (r == t) ? k.one() : k.zero();
                ++col;
            }
            if (mat3_det(s).is_zero()) continue;
            shear_ = s;
            shear_inv_ = mat3_inverse(s);
            Fs_ = F.substitute_linear(s);
            sheared_ = true;
            var_ = 0;
            lead_inv_ = val.inverse();
            return;
        }
    }
    fail(ErrorCode::ExtensionRequired, "no shear over the working field makes the curve form monic");
}

std::pair<TriPoly, TriPoly> CurveReducer::divide_sheared(const TriPoly& g) const {
    const Field& k = F_.field();
    TriPoly quotient(k);
    TriPoly rem = g;
    for (;;) {
        std::uint32_t best = 0;
        int best_exp = -1;
        for (const auto& [key, c] : rem.terms()) {
            const int e = TriPoly::unpack(key)[var_];
            if (e >= degree_ && e > best_exp) {
                best_exp = e;
                best = key;
            }
        }
        if (best_exp < 0) break;
        Exponent e = TriPoly::unpack(best);
        const FieldElement c = rem.terms().at(best) * lead_inv_;
        const TriPoly t = TriPoly::monomial(c, e.x - (var_ == 0 ? degree_ : 0), e.y - (var_ == 1 ? degree_ : 0),
                                            e.z - (var_ == 2 ? degree_ : 0));
        quotient += t;
        rem -= t * Fs_;
    }
    return {quotient, rem};
}

std::pair<TriPoly, TriPoly> CurveReducer::divide(const TriPoly& g) const {
    if (!sheared_) return divide_sheared(g);
    auto [q, r] = divide_sheared(g.substitute_linear(shear_));
    return {q.substitute_linear(shear_inv_), r.substitute_linear(shear_inv_)};
}

TriPoly CurveReducer::reduce(const TriPoly& g) const { return divide(g).second; }

TriPoly normal_form(const TriPoly& g, const TriPoly& F) { return CurveReducer(F).reduce(g); }

}  // namespace galpoint
