#pragma once

#include <map>
#include <string>

#include "galpoint/curve.hpp"

namespace galpoint {

/// Finite formal sum of rational points; zero multiplicities are never stored.
/// Iteration order is the sorted order of normalized coordinates.
using Divisor = std::map<ProjPoint, int>;

void add_point(Divisor& d, const ProjPoint& p, int multiplicity = 1);
Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator-(const Divisor& a, const Divisor& b);
Divisor operator*(int k, const Divisor& d);

int degree(const Divisor& d);
bool is_effective(const Divisor& d);
Divisor zeros_part(const Divisor& d);
/// Pole part with positive multiplicities.
Divisor poles_part(const Divisor& d);

std::string to_string(const Divisor& d);

}  // namespace galpoint
