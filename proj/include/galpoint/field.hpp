#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace galpoint {

class Field;

/// Seeded generator threaded through every randomized step.
using Rng = std::mt19937_64;

/// An element of F_p[t]/(m(t)).
///
/// The element is stored as the integer code sum_k c_k p^k of its power-basis
/// coordinates, so code 0 is zero and code 1 is one. Elements refer to their
/// field by raw pointer: the owning `std::shared_ptr<const Field>` has to
/// outlive them, which every container in this library guarantees by holding it.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field* field, std::uint32_t code) : field_(field), code_(code) {}

    const Field& field() const { return *field_; }
    const Field* field_ptr() const { return field_; }
    std::uint32_t code() const { return code_; }

    bool is_zero() const { return code_ == 0; }
    bool is_one() const { return code_ == 1; }

    /// Little-endian coefficients over F_p, always of length `field().degree()`.
    std::vector<std::uint32_t> coords() const;

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.code_ == b.code_; }
    /// Total order by integer code; used for canonical sorting only.
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
        return a.code_ <=> b.code_;
    }

    std::string to_string() const;

private:
    const Field* field_ = nullptr;
    std::uint32_t code_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// Descriptor and arithmetic tables for F_q, q = p^d.
class Field : public std::enable_shared_from_this<Field> {
public:
    static constexpr std::uint64_t kMaxSize = 1u << 20;

    /// build_field: validates that p is prime and that the monic `modulus`
    /// (little-endian, length d+1) is irreducible over F_p.
    static std::shared_ptr<const Field> build(std::uint32_t p, std::vector<std::uint32_t> modulus);
    static std::shared_ptr<const Field> prime(std::uint32_t p);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return d_; }
    std::uint64_t size() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    FieldElement from_int(std::int64_t v) const;
    FieldElement from_code(std::uint32_t code) const;
    FieldElement from_coords(std::span<const std::uint32_t> coords) const;
    /// The class of t, a root of the modulus.
    FieldElement generator() const;
    FieldElement primitive_element() const { return {this, exp_[1 % exp_.size()]}; }
    FieldElement random(Rng& rng) const;
    std::vector<FieldElement> elements() const;

    bool same_as(const Field& other) const { return p_ == other.p_ && modulus_ == other.modulus_; }
    std::shared_ptr<const Field> self() const { return shared_from_this(); }

    /// Symbol used when printing the generator ("i" for t^2+1, otherwise "a").
    const std::string& symbol() const { return symbol_; }
    std::string describe() const;

    // Table-driven arithmetic on codes.
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg_[b]); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
        if (e >= q_ - 1) e -= q_ - 1;
        return exp_[e];
    }
    std::uint32_t inv(std::uint32_t a) const;

    Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

private:
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t p_;
    std::uint32_t d_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint32_t> pow_p_;  // p^k for k < d
    std::string symbol_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// True when the little-endian monic polynomial is irreducible over F_p.
bool is_irreducible_over_prime_field(std::uint32_t p, const std::vector<std::uint32_t>& monic);

}  // namespace galpoint
