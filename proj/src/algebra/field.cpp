#include "galpoint/field.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <tuple>

#include "galpoint/error.hpp"

namespace galpoint {

namespace {

// Dense little-endian polynomials over F_p, only used to validate moduli.
using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(r, nr) = std::make_pair(nr, r - q * nr);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t k = 0; k <= dm; ++k)
            a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + (p - c) * m[k]) % p);
        trim(a);
    }
    return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return poly_mod(std::move(r), m, p);
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PrimePoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

bool is_irreducible_over_prime_field(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
    const std::size_t d = monic.size() - 1;
    if (d == 1) return true;
    // Ben-Or: no factor of degree i <= d/2 divides x^{p^i} - x.
    PrimePoly h = {0, 1};
    for (std::size_t i = 1; i <= d / 2; ++i) {
        PrimePoly acc = {1};
        PrimePoly base = h;
        for (std::uint32_t e = p; e > 0; e >>= 1) {
            if (e & 1) acc = poly_mulmod(acc, base, monic, p);
            base = poly_mulmod(base, base, monic, p);
        }
        h = acc;
        PrimePoly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;
        if (poly_gcd(diff, monic, p).size() > 1) return false;
    }
    return true;
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), d_(static_cast<std::uint32_t>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus)) {
    for (std::uint32_t k = 0; k < d_; ++k) {
        pow_p_.push_back(static_cast<std::uint32_t>(q_));
        q_ *= p_;
    }
    symbol_ = (d_ == 2 && modulus_ == std::vector<std::uint32_t>{1, 0, 1}) ? "i" : "a";

    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t r = 0, x = a;
        for (std::uint32_t k = 0; k < d_; ++k) {
            const std::uint32_t c = x % p_;
            x /= p_;
            r += ((p_ - c) % p_) * pow_p_[k];
        }
        neg_[a] = r;
    }

    // Primitive element by order testing, then exp/log tables.
    const std::uint64_t order = q_ - 1;
    const auto factors = prime_factors(order);
    std::uint32_t g = 1;
    for (std::uint32_t cand = (q_ == 2 ? 1 : 2); cand < q_; ++cand) {
        bool primitive = true;
        for (auto r : factors) {
            std::uint64_t e = order / r;
            std::uint32_t acc = 1, base = cand;
            for (; e > 0; e >>= 1) {
                if (e & 1) acc = slow_mul(acc, base);
                base = slow_mul(base, base);
            }
            if (acc == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = cand;
            break;
        }
    }
    exp_.resize(order);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint64_t e = 0; e < order; ++e) {
        exp_[e] = x;
        log_[x] = static_cast<std::uint32_t>(e);
        x = slow_mul(x, g);
    }
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const {
    PrimePoly pa, pb;
    for (std::uint32_t k = 0; k < d_; ++k) {
        pa.push_back(a % p_);
        a /= p_;
        pb.push_back(b % p_);
        b /= p_;
    }
    trim(pa);
    trim(pb);
    PrimePoly r = poly_mulmod(pa, pb, modulus_, p_);
    std::uint32_t code = 0;
    for (std::size_t k = 0; k < r.size(); ++k) code += r[k] * pow_p_[k];
    return code;
}

std::shared_ptr<const Field> Field::build(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    require(is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    require(p < 65536, ErrorCode::InvalidArgument, "characteristic too large for desk-scale tables");
    require(modulus.size() >= 2, ErrorCode::InvalidArgument, "modulus must have degree >= 1");
    for (auto c : modulus)
        require(c < p, ErrorCode::InvalidArgument, "modulus coefficient out of range for F_" + std::to_string(p));
    require(modulus.back() == 1, ErrorCode::InvalidArgument, "modulus must be monic");
    std::uint64_t q = 1;
    for (std::size_t k = 1; k < modulus.size(); ++k) {
        q *= p;
        require(q <= kMaxSize, ErrorCode::InvalidArgument, "field too large (limit 2^20 elements)");
    }
    if (!is_irreducible_over_prime_field(p, modulus))
        fail(ErrorCode::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    return std::make_shared<const Field>(p, std::move(modulus));
}

std::shared_ptr<const Field> Field::prime(std::uint32_t p) { return build(p, {0, 1}); }

FieldElement Field::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {this, static_cast<std::uint32_t>(r)};
}

FieldElement Field::from_code(std::uint32_t code) const {
    require(code < q_, ErrorCode::FieldMismatch, "element code out of range");
    return {this, code};
}

FieldElement Field::from_coords(std::span<const std::uint32_t> coords) const {
    require(coords.size() <= d_, ErrorCode::FieldMismatch,
            "coefficient vector longer than the extension degree " + std::to_string(d_));
    std::uint32_t code = 0;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        require(coords[k] < p_, ErrorCode::FieldMismatch, "coefficient out of range for F_" + std::to_string(p_));
        code += coords[k] * pow_p_[k];
    }
    return {this, code};
}

FieldElement Field::generator() const {
    if (d_ == 1) return from_int(static_cast<std::int64_t>(p_) - static_cast<std::int64_t>(modulus_[0]));
    return {this, p_};
}

FieldElement Field::random(Rng& rng) const {
    std::uniform_int_distribution<std::uint64_t> dist(0, q_ - 1);
    return {this, static_cast<std::uint32_t>(dist(rng))};
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(this, c);
    return out;
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
    if (d_ == 1) {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    std::uint32_t r = 0;
    for (std::uint32_t k = 0; k < d_; ++k) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * pow_p_[k];
        a /= p_;
        b /= p_;
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    require(a != 0, ErrorCode::InvalidArgument, "inverse of zero");
    const std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1) - l];
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << q_ << " = F_" << p_ << "[t]/(";
    bool first = true;
    for (std::size_t k = modulus_.size(); k-- > 0;) {
        if (modulus_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (modulus_[k] != 1 || k == 0) os << modulus_[k];
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
    }
    os << ")";
    return os.str();
}

std::vector<std::uint32_t> FieldElement::coords() const {
    std::vector<std::uint32_t> out(field_->degree(), 0);
    std::uint32_t x = code_;
    for (auto& c : out) {
        c = x % field_->characteristic();
        x /= field_->characteristic();
    }
    return out;
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement acc = field_->one();
    FieldElement base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        base *= base;
    }
    return acc;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    code_ = field_->add(code_, o.code_);
    return *this;
}
FieldElement& FieldElement::operator-=(const FieldElement& o) {
    code_ = field_->sub(code_, o.code_);
    return *this;
}
FieldElement& FieldElement::operator*=(const FieldElement& o) {
    code_ = field_->mul(code_, o.code_);
    return *this;
}
FieldElement& FieldElement::operator/=(const FieldElement& o) {
    code_ = field_->mul(code_, field_->inv(o.code_));
    return *this;
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }

std::string FieldElement::to_string() const {
    const auto c = coords();
    const std::string& sym = field_->symbol();
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        if (!out.empty()) out += "+";
        if (k == 0) {
            out += std::to_string(c[k]);
        } else {
            if (c[k] != 1) out += std::to_string(c[k]);
            out += sym;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

}  // namespace galpoint
