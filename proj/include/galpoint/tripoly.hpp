#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "galpoint/field.hpp"
#include "galpoint/matrix.hpp"
#include "galpoint/unipoly.hpp"

namespace galpoint {

struct Exponent {
    int x = 0, y = 0, z = 0;
    int total() const { return x + y + z; }
    int operator[](int var) const { return var == 0 ? x : (var == 1 ? y : z); }
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Sparse polynomial in X, Y, Z over a finite field.
///
/// Monomials are keyed so that the integer order of keys is the degree-lex
/// order with X > Y > Z; the last entry of `terms()` is the leading term.
/// Total degree is capped at 64.
class TriPoly {
public:
    static constexpr int kMaxDegree = 64;
    using Terms = std::map<std::uint32_t, FieldElement>;

    explicit TriPoly(const Field& k) : field_(&k) {}

    static TriPoly constant(const FieldElement& c);
    static TriPoly variable(const Field& k, int var);
    static TriPoly monomial(const FieldElement& c, int ex, int ey, int ez);
    /// a X + b Y + c Z.
    static TriPoly linear(const Vec3& coeffs);

    static std::uint32_t pack(int ex, int ey, int ez);
    static Exponent unpack(std::uint32_t key);

    const Field& field() const { return *field_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    FieldElement coeff(int ex, int ey, int ez) const;
    void add_term(const FieldElement& c, int ex, int ey, int ez);

    /// -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;
    bool is_homogeneous() const;
    /// Throws NOT_HOMOGENEOUS naming `what` unless the polynomial is a nonzero form.
    void require_form(const std::string& what) const;

    TriPoly& operator+=(const TriPoly& o);
    TriPoly& operator-=(const TriPoly& o);
    TriPoly& operator*=(const FieldElement& c);
    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
    friend TriPoly operator*(TriPoly a, const FieldElement& c) { return a *= c; }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    TriPoly operator-() const;
    TriPoly pow(int e) const;

    friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

    FieldElement operator()(const Vec3& at) const;
    TriPoly partial(int var) const;
    /// The polynomial x -> P(M x).
    TriPoly substitute_linear(const Mat3& m) const;
    /// Coefficient of var^k, as a polynomial in the remaining variables.
    TriPoly coeff_in(int var, int k) const;
    /// P(base + s * dir) as a polynomial in s.
    UniPoly along(const Vec3& base, const Vec3& dir) const;
    /// Leading (degree-lex largest) key; the polynomial must be nonzero.
    std::uint32_t leading_key() const { return terms_.rbegin()->first; }
    FieldElement leading_coeff() const { return terms_.rbegin()->second; }

    std::string to_string(const std::array<std::string, 3>& names = {"X", "Y", "Z"}) const;

private:
    void set(std::uint32_t key, const FieldElement& c);

    const Field* field_;
    Terms terms_;
};

/// Exact multivariate division; throws INTERNAL when `b` does not divide `a`.
TriPoly exact_divide(const TriPoly& a, const TriPoly& b);

/// Keys of all monomials of total degree d, in descending degree-lex order.
std::vector<std::uint32_t> monomials_of_degree(int d);

struct ResultantResult {
    TriPoly value;
    /// Set when a leading coefficient in the eliminated variable is not a constant,
    /// so specializations may lose roots at infinity.
    bool leading_degenerate = false;
};

/// Sylvester resultant eliminating `var`, by fraction-free Bareiss elimination.
ResultantResult resultant(const TriPoly& a, const TriPoly& b, int var);

}  // namespace galpoint
