#include "galpoint/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "galpoint/error.hpp"

namespace galpoint {

UniPoly::UniPoly(const Field& k, std::vector<FieldElement> coeffs) : field_(&k), coeffs_(std::move(coeffs)) {
    trim();
}

UniPoly UniPoly::constant(const FieldElement& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::x(const Field& k) { return UniPoly(k, {k.zero(), k.one()}); }

UniPoly UniPoly::monomial(const FieldElement& c, int degree) {
    std::vector<FieldElement> v(static_cast<std::size_t>(degree) + 1, c.field().zero());
    v.back() = c;
    return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::from_ints(const Field& k, std::initializer_list<std::int64_t> coeffs) {
    std::vector<FieldElement> v;
    for (auto c : coeffs) v.push_back(k.from_int(c));
    return UniPoly(k, std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_->zero();
    return coeffs_[i];
}

FieldElement UniPoly::leading() const { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const {
    std::vector<FieldElement> v;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v.push_back(coeffs_[k] * field_->from_int(static_cast<std::int64_t>(k)));
    return UniPoly(*field_, std::move(v));
}

FieldElement UniPoly::operator()(const FieldElement& at) const {
    FieldElement acc = field_->zero();
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * at + coeffs_[k];
    return acc;
}

UniPoly UniPoly::truncated(int n) const {
    if (static_cast<int>(coeffs_.size()) <= n) return *this;
    return UniPoly(*field_, std::vector<FieldElement>(coeffs_.begin(), coeffs_.begin() + std::max(n, 0)));
}

int UniPoly::order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return static_cast<int>(k);
    return -1;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), field_->zero());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const FieldElement& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field());
    const Field& k = a.field();
    std::vector<std::uint32_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        const std::uint32_t ai = a.coeffs_[i].code();
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            acc[i + j] = k.add(acc[i + j], k.mul(ai, b.coeffs_[j].code()));
    }
    std::vector<FieldElement> v;
    v.reserve(acc.size());
    for (auto c : acc) v.emplace_back(&k, c);
    return UniPoly(k, std::move(v));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = coeffs_[k].is_one();
        if (!unit || k == 0) {
            const std::string c = coeffs_[k].to_string();
            if (c.find('+') != std::string::npos && k > 0) os << "(" << c << ")";
            else os << c;
        }
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    require(!b.is_zero(), ErrorCode::InvalidArgument, "polynomial division by zero");
    const Field& k = a.field();
    if (a.degree() < b.degree()) return {UniPoly(k), a};
    std::vector<FieldElement> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<FieldElement> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, k.zero());
    const FieldElement lead_inv = b.leading().inverse();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i].is_zero()) continue;
        const FieldElement c = rem[i] * lead_inv;
        quo[i - db] = c;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeff(j);
    }
    return {UniPoly(k, std::move(quo)), UniPoly(k, std::move(rem))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
    const Field& k = a.field();
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(k.one()), s1(k);
    UniPoly t0(k), t1 = UniPoly::constant(k.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const FieldElement inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly& mod) {
    UniPoly acc = UniPoly::constant(base.field().one()) % mod;
    base = base % mod;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc = (acc * base) % mod;
        if (e > 1) base = (base * base) % mod;
    }
    return acc;
}

UniPoly mul_trunc(const UniPoly& a, const UniPoly& b, int n) {
    if (a.is_zero() || b.is_zero() || n <= 0) return UniPoly(a.field());
    const Field& k = a.field();
    const int la = std::min(a.degree() + 1, n), lb = std::min(b.degree() + 1, n);
    std::vector<std::uint32_t> acc(static_cast<std::size_t>(std::min(la + lb - 1, n)), 0);
    for (int i = 0; i < la; ++i) {
        const std::uint32_t ai = a.coeffs()[i].code();
        if (ai == 0) continue;
        for (int j = 0; j < lb && i + j < n; ++j) acc[i + j] = k.add(acc[i + j], k.mul(ai, b.coeffs()[j].code()));
    }
    std::vector<FieldElement> v;
    for (auto c : acc) v.emplace_back(&k, c);
    return UniPoly(k, std::move(v));
}

UniPoly inverse_series(const UniPoly& a, int n) {
    require(!a.coeff(0).is_zero(), ErrorCode::InvalidArgument, "series inverse needs a unit constant term");
    const Field& k = a.field();
    UniPoly inv = UniPoly::constant(a.coeff(0).inverse());
    const UniPoly two = UniPoly::constant(k.from_int(2));
    for (int prec = 1; prec < n;) {
        prec = std::min(2 * prec, n);
        // inv <- inv * (2 - a*inv)
        UniPoly e = two - mul_trunc(a, inv, prec);
        inv = mul_trunc(inv, e, prec);
    }
    return inv.truncated(n);
}

namespace {

// x^(q^k) mod f by repeated q-th powering.
UniPoly frobenius_power(const UniPoly& f, int k) {
    const std::uint64_t q = f.field().size();
    UniPoly h = UniPoly::x(f.field()) % f;
    for (int i = 0; i < k; ++i) h = powmod(h, q, f);
    return h;
}

UniPoly random_poly(const Field& k, int below_degree, Rng& rng) {
    std::vector<FieldElement> v;
    for (int i = 0; i < below_degree; ++i) v.push_back(k.random(rng));
    return UniPoly(k, std::move(v));
}

// Split a monic squarefree g, all of whose irreducible factors have degree d.
void equal_degree_split(const UniPoly& g, int d, Rng& rng, std::vector<UniPoly>& out) {
    if (g.degree() <= d) {
        if (g.degree() > 0) out.push_back(g);
        return;
    }
    const Field& k = g.field();
    const std::uint64_t q = k.size();
    for (;;) {
        UniPoly a = random_poly(k, g.degree(), rng);
        if (a.degree() <= 0) continue;
        UniPoly b(k);
        if (q % 2 == 1) {
            // a^((q^d-1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
            UniPoly norm = a % g;
            UniPoly conj = norm;
            for (int i = 1; i < d; ++i) {
                conj = powmod(conj, q, g);
                norm = (norm * conj) % g;
            }
            b = powmod(norm, (q - 1) / 2, g) - UniPoly::constant(k.one());
        } else {
            // trace map a + a^2 + ... + a^(2^(md-1)), q = 2^m
            int m = 0;
            for (std::uint64_t t = q; t > 1; t >>= 1) ++m;
            UniPoly term = a % g;
            b = term;
            for (int i = 1; i < m * d; ++i) {
                term = (term * term) % g;
                b += term;
            }
        }
        UniPoly u = gcd(g, b);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree_split(u, d, rng, out);
            equal_degree_split(g / u, d, rng, out);
            return;
        }
    }
}

// Squarefree decomposition of a monic polynomial: pairs (squarefree factor, multiplicity).
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    const Field& k = f.field();
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() <= 0) return out;
    const UniPoly one = UniPoly::constant(k.one());
    UniPoly c = gcd(f, f.derivative());
    UniPoly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        UniPoly y = gcd(w, c);
        UniPoly fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one() && c.degree() > 0) {
        // c is a polynomial in x^p: take the p-th root coefficient-wise.
        const std::uint32_t p = k.characteristic();
        const std::uint64_t root_exp = k.size() / p;  // a^(q/p) is the p-th root of a
        std::vector<FieldElement> v;
        for (int j = 0; j <= c.degree(); j += static_cast<int>(p)) v.push_back(c.coeff(j).pow(root_exp));
        UniPoly root(k, std::move(v));
        for (auto& [g, m] : squarefree_decomposition(root.monic())) out.emplace_back(g, m * static_cast<int>(p));
    }
    (void)one;
    return out;
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k)
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    return false;
}

}  // namespace

std::vector<Root> roots_in_field(const UniPoly& f, Rng& rng) {
    require(!f.is_zero(), ErrorCode::InvalidArgument, "roots of the zero polynomial");
    std::vector<Root> out;
    if (f.degree() <= 0) return out;
    const Field& k = f.field();
    const UniPoly fm = f.monic();
    UniPoly g = gcd(fm, frobenius_power(fm, 1) - UniPoly::x(k));
    if (g.degree() <= 0) return out;
    std::vector<UniPoly> linears;
    equal_degree_split(g, 1, rng, linears);
    for (const auto& l : linears) {
        const FieldElement r = -l.coeff(0);
        int mult = 0;
        UniPoly rest = fm;
        for (;;) {
            auto [q, rem] = divmod(rest, l);
            if (!rem.is_zero()) break;
            ++mult;
            rest = std::move(q);
        }
        out.push_back({r, mult});
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
    return out;
}

std::vector<Root> roots_in_field(const UniPoly& f) {
    Rng rng(0);
    return roots_in_field(f, rng);
}

UniPoly Factorization::product() const {
    UniPoly acc = UniPoly::constant(unit);
    for (const auto& [g, m] : factors)
        for (int i = 0; i < m; ++i) acc = acc * g;
    return acc;
}

Factorization factor_univariate(const UniPoly& f, Rng& rng) {
    require(!f.is_zero(), ErrorCode::InvalidArgument, "factorization of the zero polynomial");
    const Field& k = f.field();
    Factorization out{f.leading(), {}};
    for (const auto& [sqf, mult] : squarefree_decomposition(f.monic())) {
        // distinct-degree factorization
        UniPoly rest = sqf;
        UniPoly h = UniPoly::x(k) % rest;
        for (int d = 1; rest.degree() >= 2 * d; ++d) {
            h = powmod(h, k.size(), rest);
            UniPoly g = gcd(rest, h - UniPoly::x(k));
            if (g.degree() > 0) {
                std::vector<UniPoly> parts;
                equal_degree_split(g, d, rng, parts);
                for (auto& p : parts) out.factors.emplace_back(p, mult);
                rest = rest / g;
                h = h % rest;
            }
        }
        if (rest.degree() > 0) out.factors.emplace_back(rest.monic(), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first == b.first) return a.second < b.second;
        return poly_less(a.first, b.first);
    });
    // merge identical irreducibles coming from different squarefree layers
    std::vector<std::pair<UniPoly, int>> merged;
    for (auto& fm : out.factors) {
        if (!merged.empty() && merged.back().first == fm.first) merged.back().second += fm.second;
        else merged.push_back(fm);
    }
    out.factors = std::move(merged);
    return out;
}

Factorization factor_univariate(const UniPoly& f) {
    Rng rng(0);
    return factor_univariate(f, rng);
}

bool is_irreducible(const UniPoly& f) {
    if (f.degree() <= 0) return false;
    const auto fac = factor_univariate(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace galpoint
