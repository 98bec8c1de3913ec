#include "galpoint/extension.hpp"

#include "galpoint/error.hpp"
#include "galpoint/unipoly.hpp"

namespace galpoint {

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t d) {
    std::vector<std::uint32_t> m(d + 1, 0);
    m[d] = 1;
    for (;;) {
        if (d == 1 || m[0] != 0) {
            if (is_irreducible_over_prime_field(p, m)) return m;
        }
        std::uint32_t k = 0;
        while (k < d && ++m[k] == p) m[k++] = 0;
        if (k == d) fail(ErrorCode::Internal, "no irreducible polynomial found");
    }
}

WorkingField::WorkingField(FieldPtr base, std::uint32_t w) : base_(std::move(base)), w_(w) {
    require(w >= 1, ErrorCode::InvalidArgument, "working extension degree must be >= 1");
    if (w == 1) {
        work_ = base_;
        root_ = base_->generator();
        return;
    }
    const std::uint32_t p = base_->characteristic();
    const std::uint64_t total = std::uint64_t(base_->degree()) * w;
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < total; ++i) {
        q *= p;
        require(q <= Field::kMaxSize, ErrorCode::InvalidArgument, "working field too large (limit 2^20 elements)");
    }
    work_ = Field::build(p, smallest_irreducible(p, static_cast<std::uint32_t>(total)));
    std::vector<FieldElement> coeffs;
    for (auto c : base_->modulus()) coeffs.push_back(work_->from_int(c));
    const auto roots = roots_in_field(UniPoly(*work_, coeffs));
    require(!roots.empty(), ErrorCode::Internal, "base modulus has no root in the working field");
    root_ = roots.front().value;
}

FieldElement WorkingField::embed(const FieldElement& a) const {
    if (w_ == 1) return a;
    require(a.field().same_as(*base_), ErrorCode::FieldMismatch, "element is not in the base field");
    FieldElement acc = work_->zero();
    FieldElement pw = work_->one();
    for (auto c : a.coords()) {
        acc += pw * work_->from_int(c);
        pw *= root_;
    }
    return acc;
}

}  // namespace galpoint
