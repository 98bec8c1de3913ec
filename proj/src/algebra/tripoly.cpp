#include "galpoint/tripoly.hpp"

#include <algorithm>

#include "galpoint/error.hpp"

namespace galpoint {

std::uint32_t TriPoly::pack(int ex, int ey, int ez) {
    require(ex >= 0 && ey >= 0 && ez >= 0, ErrorCode::InvalidArgument, "negative exponent");
    const int d = ex + ey + ez;
    require(d <= kMaxDegree, ErrorCode::DegreeTooLarge,
            "total degree " + std::to_string(d) + " exceeds the limit " + std::to_string(kMaxDegree));
    return (std::uint32_t(d) << 24) | (std::uint32_t(ex) << 16) | (std::uint32_t(ey) << 8) | std::uint32_t(ez);
}

Exponent TriPoly::unpack(std::uint32_t key) {
    return {int((key >> 16) & 0xff), int((key >> 8) & 0xff), int(key & 0xff)};
}

TriPoly TriPoly::constant(const FieldElement& c) {
    TriPoly p(c.field());
    p.set(0, c);
    return p;
}

TriPoly TriPoly::variable(const Field& k, int var) {
    return monomial(k.one(), var == 0, var == 1, var == 2);
}

TriPoly TriPoly::monomial(const FieldElement& c, int ex, int ey, int ez) {
    TriPoly p(c.field());
    p.set(pack(ex, ey, ez), c);
    return p;
}

TriPoly TriPoly::linear(const Vec3& coeffs) {
    TriPoly p(coeffs[0].field());
    p.set(pack(1, 0, 0), coeffs[0]);
    p.set(pack(0, 1, 0), coeffs[1]);
    p.set(pack(0, 0, 1), coeffs[2]);
    return p;
}

void TriPoly::set(std::uint32_t key, const FieldElement& c) {
    if (c.is_zero()) terms_.erase(key);
    else terms_[key] = c;
}

FieldElement TriPoly::coeff(int ex, int ey, int ez) const {
    auto it = terms_.find(pack(ex, ey, ez));
    return it == terms_.end() ? field_->zero() : it->second;
}

void TriPoly::add_term(const FieldElement& c, int ex, int ey, int ez) {
    if (c.is_zero()) return;
    const std::uint32_t key = pack(ex, ey, ez);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int TriPoly::total_degree() const { return terms_.empty() ? -1 : int(terms_.rbegin()->first >> 24); }

int TriPoly::degree_in(int var) const {
    if (terms_.empty()) return -1;
    int d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, unpack(key)[var]);
    return d;
}

bool TriPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return (terms_.begin()->first >> 24) == (terms_.rbegin()->first >> 24);
}

void TriPoly::require_form(const std::string& what) const {
    require(!is_zero(), ErrorCode::InvalidArgument, what + " is the zero polynomial");
    require(is_homogeneous(), ErrorCode::NotHomogeneous, what + " is not homogeneous");
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
    for (const auto& [key, c] : o.terms_) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
    for (const auto& [key, c] : o.terms_) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

TriPoly& TriPoly::operator*=(const FieldElement& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, a] : terms_) a *= c;
    return *this;
}

TriPoly TriPoly::operator-() const {
    TriPoly r = *this;
    for (auto& [key, a] : r.terms_) a = -a;
    return r;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    const Field& k = a.field();
    TriPoly r(k);
    if (a.is_zero() || b.is_zero()) return r;
    require(a.total_degree() + b.total_degree() <= TriPoly::kMaxDegree, ErrorCode::DegreeTooLarge,
            "product degree exceeds the limit " + std::to_string(TriPoly::kMaxDegree));
    std::map<std::uint32_t, std::uint32_t> acc;
    for (const auto& [ka, ca] : a.terms_) {
        const Exponent ea = TriPoly::unpack(ka);
        for (const auto& [kb, cb] : b.terms_) {
            const Exponent eb = TriPoly::unpack(kb);
            const std::uint32_t key = TriPoly::pack(ea.x + eb.x, ea.y + eb.y, ea.z + eb.z);
            auto& slot = acc[key];
            slot = k.add(slot, k.mul(ca.code(), cb.code()));
        }
    }
    for (const auto& [key, code] : acc)
        if (code != 0) r.terms_.emplace_hint(r.terms_.end(), key, FieldElement(&k, code));
    return r;
}

TriPoly TriPoly::pow(int e) const {
    require(e >= 0, ErrorCode::InvalidArgument, "negative power");
    TriPoly acc = constant(field_->one());
    TriPoly base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc = acc * base;
        if (e > 1) base = base * base;
    }
    return acc;
}

namespace {

std::vector<FieldElement> powers(const FieldElement& x, int n) {
    std::vector<FieldElement> out;
    out.reserve(n + 1);
    out.push_back(x.field().one());
    for (int i = 1; i <= n; ++i) out.push_back(out.back() * x);
    return out;
}

std::vector<UniPoly> uni_powers(const UniPoly& x, int n) {
    std::vector<UniPoly> out;
    out.push_back(UniPoly::constant(x.field().one()));
    for (int i = 1; i <= n; ++i) out.push_back(out.back() * x);
    return out;
}

std::vector<TriPoly> tri_powers(const TriPoly& x, int n) {
    std::vector<TriPoly> out;
    out.push_back(TriPoly::constant(x.field().one()));
    for (int i = 1; i <= n; ++i) out.push_back(out.back() * x);
    return out;
}

}  // namespace

FieldElement TriPoly::operator()(const Vec3& at) const {
    if (terms_.empty()) return field_->zero();
    const int d = total_degree();
    const auto px = powers(at[0], d), py = powers(at[1], d), pz = powers(at[2], d);
    std::uint32_t acc = 0;
    for (const auto& [key, c] : terms_) {
        const Exponent e = unpack(key);
        const std::uint32_t m = field_->mul(field_->mul(px[e.x].code(), py[e.y].code()), pz[e.z].code());
        acc = field_->add(acc, field_->mul(m, c.code()));
    }
    return {field_, acc};
}

TriPoly TriPoly::partial(int var) const {
    TriPoly r(*field_);
    for (const auto& [key, c] : terms_) {
        Exponent e = unpack(key);
        const int k = e[var];
        if (k == 0) continue;
        const FieldElement m = c * field_->from_int(k);
        if (m.is_zero()) continue;
        r.add_term(m, e.x - (var == 0), e.y - (var == 1), e.z - (var == 2));
    }
    return r;
}

TriPoly TriPoly::substitute_linear(const Mat3& m) const {
    TriPoly r(*field_);
    if (terms_.empty()) return r;
    std::array<std::vector<TriPoly>, 3> pw;
    for (int i = 0; i < 3; ++i) pw[i] = tri_powers(linear({m[3 * i], m[3 * i + 1], m[3 * i + 2]}), degree_in(i));
    for (const auto& [key, c] : terms_) {
        const Exponent e = unpack(key);
        r += (pw[0][e.x] * pw[1][e.y] * pw[2][e.z]) * c;
    }
    return r;
}

TriPoly TriPoly::coeff_in(int var, int k) const {
    TriPoly r(*field_);
    for (const auto& [key, c] : terms_) {
        Exponent e = unpack(key);
        if (e[var] != k) continue;
        r.add_term(c, var == 0 ? 0 : e.x, var == 1 ? 0 : e.y, var == 2 ? 0 : e.z);
    }
    return r;
}

UniPoly TriPoly::along(const Vec3& base, const Vec3& dir) const {
    UniPoly r(*field_);
    if (terms_.empty()) return r;
    std::array<std::vector<UniPoly>, 3> pw;
    for (int i = 0; i < 3; ++i) pw[i] = uni_powers(UniPoly(*field_, {base[i], dir[i]}), degree_in(i));
    for (const auto& [key, c] : terms_) {
        const Exponent e = unpack(key);
        r += (pw[0][e.x] * pw[1][e.y] * pw[2][e.z]) * c;
    }
    return r;
}

std::string TriPoly::to_string(const std::array<std::string, 3>& names) const {
    if (terms_.empty()) return "0";
    const FieldElement minus_one = -field_->one();
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exponent e = unpack(it->first);
        std::string mono;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            mono += names[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        FieldElement c = it->second;
        bool negative = false;
        if (c == minus_one && field_->characteristic() != 2) {
            negative = true;
            c = field_->one();
        }
        std::string term;
        if (c.is_one()) {
            term = mono.empty() ? "1" : mono;
        } else {
            std::string cs = c.to_string();
            if (cs.find('+') != std::string::npos && !mono.empty()) cs = "(" + cs + ")";
            term = cs + mono;
        }
        if (out.empty()) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
    }
    return out;
}

TriPoly exact_divide(const TriPoly& a, const TriPoly& b) {
    require(!b.is_zero(), ErrorCode::InvalidArgument, "division by the zero polynomial");
    const Field& k = a.field();
    TriPoly q(k), r = a;
    const Exponent lb = TriPoly::unpack(b.leading_key());
    const FieldElement lc_inv = b.leading_coeff().inverse();
    while (!r.is_zero()) {
        const Exponent lr = TriPoly::unpack(r.leading_key());
        if (lr.x < lb.x || lr.y < lb.y || lr.z < lb.z) fail(ErrorCode::Internal, "inexact polynomial division");
        const TriPoly t = TriPoly::monomial(r.leading_coeff() * lc_inv, lr.x - lb.x, lr.y - lb.y, lr.z - lb.z);
        q += t;
        r -= t * b;
    }
    return q;
}

std::vector<std::uint32_t> monomials_of_degree(int d) {
    std::vector<std::uint32_t> out;
    for (int ex = d; ex >= 0; --ex)
        for (int ey = d - ex; ey >= 0; --ey) out.push_back(TriPoly::pack(ex, ey, d - ex - ey));
    return out;
}

ResultantResult resultant(const TriPoly& a, const TriPoly& b, int var) {
    require(!a.is_zero() && !b.is_zero(), ErrorCode::InvalidArgument, "resultant of the zero polynomial");
    require(var >= 0 && var < 3, ErrorCode::InvalidArgument, "variable index out of range");
    const Field& k = a.field();
    const int m = a.degree_in(var), n = b.degree_in(var);
    if (m == 0 && n == 0) fail(ErrorCode::VarAbsent, "neither polynomial involves the eliminated variable");
    ResultantResult out{TriPoly(k), false};
    out.leading_degenerate = a.coeff_in(var, m).total_degree() > 0 || b.coeff_in(var, n).total_degree() > 0;

    const int size = m + n;
    std::vector<std::vector<TriPoly>> s(size, std::vector<TriPoly>(size, TriPoly(k)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeff_in(var, m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff_in(var, n - j);

    bool negate = false;
    TriPoly prev = TriPoly::constant(k.one());
    for (int c = 0; c + 1 < size; ++c) {
        if (s[c][c].is_zero()) {
            int r = c + 1;
            while (r < size && s[r][c].is_zero()) ++r;
            if (r == size) return out;
            std::swap(s[c], s[r]);
            negate = !negate;
        }
        for (int i = c + 1; i < size; ++i) {
            for (int j = c + 1; j < size; ++j)
                s[i][j] = exact_divide(s[i][j] * s[c][c] - s[i][c] * s[c][j], prev);
            s[i][c] = TriPoly(k);
        }
        prev = s[c][c];
    }
    out.value = negate ? -s[size - 1][size - 1] : s[size - 1][size - 1];
    return out;
}

}  // namespace galpoint
