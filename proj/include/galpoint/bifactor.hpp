#pragma once

#include <optional>
#include <string>

#include "galpoint/tripoly.hpp"

namespace galpoint {

struct FactorSearch {
    enum class Status { Irreducible, Factor, Undecided };
    Status status = Status::Undecided;
    std::optional<TriPoly> factor;
    std::string note;
};

/// Decides whether the plane form F factors over its coefficient field.
///
/// After a shear making F monic in Y, a specialization x0 with F(x0, y, 1)
/// squarefree is factored, the factors are Hensel-lifted in x - x0 past the
/// degree bound and products of subsets are tried as exact divisors.
/// Undecided only when no squarefree specialization exists over the field.
FactorSearch find_form_factor(const TriPoly& F, Rng& rng);

}  // namespace galpoint
