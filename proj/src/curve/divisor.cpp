#include "galpoint/divisor.hpp"

namespace galpoint {

void add_point(Divisor& d, const ProjPoint& p, int multiplicity) {
    if (multiplicity == 0) return;
    auto [it, inserted] = d.try_emplace(p, multiplicity);
    if (inserted) return;
    it->second += multiplicity;
    if (it->second == 0) d.erase(it);
}

Divisor operator+(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (const auto& [p, m] : b) add_point(out, p, m);
    return out;
}

Divisor operator-(const Divisor& a, const Divisor& b) {
    Divisor out = a;
    for (const auto& [p, m] : b) add_point(out, p, -m);
    return out;
}

Divisor operator*(int k, const Divisor& d) {
    Divisor out;
    for (const auto& [p, m] : d) add_point(out, p, k * m);
    return out;
}

int degree(const Divisor& d) {
    int s = 0;
    for (const auto& [p, m] : d) s += m;
    return s;
}

bool is_effective(const Divisor& d) {
    for (const auto& [p, m] : d)
        if (m < 0) return false;
    return true;
}

Divisor zeros_part(const Divisor& d) {
    Divisor out;
    for (const auto& [p, m] : d)
        if (m > 0) out.emplace(p, m);
    return out;
}

Divisor poles_part(const Divisor& d) {
    Divisor out;
    for (const auto& [p, m] : d)
        if (m < 0) out.emplace(p, -m);
    return out;
}

std::string to_string(const Divisor& d) {
    if (d.empty()) return "0";
    std::string s;
    for (const auto& [p, m] : d) {
        if (!s.empty()) s += m < 0 ? " - " : " + ";
        else if (m < 0) s += "-";
        const int a = m < 0 ? -m : m;
        if (a != 1) s += std::to_string(a);
        s += p.to_string();
    }
    return s;
}

}  // namespace galpoint
