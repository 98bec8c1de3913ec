#pragma once

#include <vector>

#include "galpoint/curve.hpp"
#include "galpoint/extension.hpp"

namespace galpoint::detail {

// Polynomial in (s, d): entry j is the coefficient of d^j as a polynomial in s.
using LocalPoly = std::vector<UniPoly>;

// G with coordinate `chart` set to 1, x_param = P_param + s and x_dep = P_dep + d.
LocalPoly localize(const TriPoly& G, const ProjPoint& p, int param, int dep);

LocalPoly derivative_in_d(const LocalPoly& g);

// g(s, phi(s)) modulo s^prec.
UniPoly eval_local(const LocalPoly& g, const UniPoly& phi, int prec);

// Coefficientwise image of G in the working field.
TriPoly embed_form(const TriPoly& G, const WorkingField& wf);

}  // namespace galpoint::detail
