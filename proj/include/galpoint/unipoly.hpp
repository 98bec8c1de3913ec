#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "galpoint/field.hpp"

namespace galpoint {

/// Dense univariate polynomial over a finite field, coefficients low to high.
/// The zero polynomial has degree -1.
class UniPoly {
public:
    explicit UniPoly(const Field& k) : field_(&k) {}
    UniPoly(const Field& k, std::vector<FieldElement> coeffs);

    static UniPoly constant(const FieldElement& c);
    static UniPoly x(const Field& k);
    static UniPoly monomial(const FieldElement& c, int degree);
    /// Convenience for tests and fixtures: small integer coefficients, low to high.
    static UniPoly from_ints(const Field& k, std::initializer_list<std::int64_t> coeffs);

    const Field& field() const { return *field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    FieldElement coeff(int i) const;
    FieldElement leading() const;
    std::span<const FieldElement> coeffs() const { return coeffs_; }

    UniPoly monic() const;
    UniPoly derivative() const;
    FieldElement operator()(const FieldElement& at) const;
    /// Truncation modulo x^n.
    UniPoly truncated(int n) const;
    /// Lowest index with a nonzero coefficient; -1 for zero.
    int order() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const FieldElement& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const FieldElement& c) { return a *= c; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    const Field* field_;
    std::vector<FieldElement> coeffs_;
};

/// Quotient and remainder; `b` must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);
/// s*a + t*b = g with g the monic gcd.
struct ExtendedGcd {
    UniPoly g, s, t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);
UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly& mod);
/// Multiplication truncated modulo x^n (power-series product).
UniPoly mul_trunc(const UniPoly& a, const UniPoly& b, int n);
/// Power-series inverse modulo x^n; a(0) must be nonzero.
UniPoly inverse_series(const UniPoly& a, int n);

struct Root {
    FieldElement value;
    int multiplicity;
};

/// roots_in_field: every root in the coefficient field with its multiplicity,
/// sorted by element code. Uses gcd with x^q - x and equal-degree splitting.
std::vector<Root> roots_in_field(const UniPoly& f, Rng& rng);
std::vector<Root> roots_in_field(const UniPoly& f);

struct Factorization {
    FieldElement unit;
    std::vector<std::pair<UniPoly, int>> factors;  // monic irreducibles, sorted

    UniPoly product() const;
};

/// factor_univariate: squarefree, distinct-degree, then equal-degree splitting.
Factorization factor_univariate(const UniPoly& f, Rng& rng);
Factorization factor_univariate(const UniPoly& f);

bool is_irreducible(const UniPoly& f);

}  // namespace galpoint
