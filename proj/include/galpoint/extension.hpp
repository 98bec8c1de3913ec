#pragma once

#include <vector>

#include "galpoint/field.hpp"

namespace galpoint {

/// A base field together with the working field K of degree w over it and
/// the embedding base -> K. For w = 1 the working field is the base itself.
class WorkingField {
public:
    WorkingField(FieldPtr base, std::uint32_t w);

    const FieldPtr& base() const { return base_; }
    const FieldPtr& work() const { return work_; }
    std::uint32_t relative_degree() const { return w_; }
    bool trivial() const { return w_ == 1; }

    FieldElement embed(const FieldElement& a) const;
    /// Image of the base generator t (the smallest root of the base modulus in K).
    const FieldElement& generator_image() const { return root_; }

private:
    FieldPtr base_;
    FieldPtr work_;
    std::uint32_t w_;
    FieldElement root_;
};

/// The monic irreducible polynomial of degree d over F_p with the smallest code
/// sum c_k p^k, little-endian.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t d);

}  // namespace galpoint
