#include "galpoint/linsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "galpoint/error.hpp"

namespace galpoint {

namespace {

// Columns of normal-form coefficients, one per form, as a dense matrix over
// the union of monomials.
Matrix coefficient_matrix(const Field& k, const std::vector<TriPoly>& cols) {
    std::set<std::uint32_t> keys;
    for (const auto& c : cols)
        for (const auto& [key, v] : c.terms()) keys.insert(key);
    Matrix m(k, keys.size(), cols.size());
    std::size_t r = 0;
    for (auto key : keys) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto it = cols[j].terms().find(key);
            if (it != cols[j].terms().end()) m.at(r, j) = it->second;
        }
        ++r;
    }
    return m;
}

// Exact solve of h = sum c_i b_i through cleared normal forms.
std::optional<std::vector<FieldElement>> symbolic_span(const RatFunc& h, const std::vector<RatFunc>& basis) {
    const PlaneCurve& C = h.curve();
    const Field& k = C.field();
    TriPoly prod = TriPoly::constant(k.one());
    for (const auto& b : basis) prod = prod * b.den();
    std::vector<TriPoly> cols;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        TriPoly t = basis[i].num() * h.den();
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i) t = t * basis[j].den();
        cols.push_back(C.reduce(t));
    }
    cols.push_back(C.reduce(h.num() * prod));
    Matrix full = coefficient_matrix(k, cols);
    Matrix a(k, full.rows(), basis.size());
    std::vector<FieldElement> rhs;
    for (std::size_t r = 0; r < full.rows(); ++r) {
        for (std::size_t j = 0; j < basis.size(); ++j) a.at(r, j) = full.at(r, j);
        rhs.push_back(full.at(r, basis.size()));
    }
    return solve_linear(a, rhs).solution;
}

RatFunc combination(const RatFunc& h, const std::vector<RatFunc>& basis, const std::vector<FieldElement>& c) {
    RatFunc sum = RatFunc::constant(h.curve_ptr(), h.field().zero());
    for (std::size_t i = 0; i < basis.size(); ++i) sum = sum + basis[i] * c[i];
    return sum;
}

// Rows expressing M b ~ a (cross product zero), unknowns m_rc row-major.
void add_incidence_rows(Matrix& m, const Vec3& b, const Vec3& a) {
    const Field& k = m.field();
    // (M b)_r = sum_c m_rc b_c; cross(Mb, a)_i = (Mb)_{i+1} a_{i+2} - (Mb)_{i+2} a_{i+1}
    for (int i = 0; i < 3; ++i) {
        const int r1 = (i + 1) % 3, r2 = (i + 2) % 3;
        std::vector<FieldElement> row(9, k.zero());
        for (int c = 0; c < 3; ++c) {
            row[3 * r1 + c] += b[c] * a[r2];
            row[3 * r2 + c] -= b[c] * a[r1];
        }
        m.append_row(row);
    }
}

}  // namespace

SpanCertificate span_coefficients(const RatFunc& h, const std::vector<RatFunc>& basis) {
    const PlaneCurve& C = h.curve();
    const Field& k = C.field();
    SpanCertificate cert{basis, h, std::nullopt, {}, {}, false};

    int d = h.form_degree();
    for (const auto& b : basis) d = std::max(d, b.form_degree());
    const std::size_t wanted = std::max<std::size_t>(2 * std::size_t(d) * std::size_t(d), basis.size() + 1);
    std::vector<ProjPoint> samples;
    std::vector<std::vector<FieldElement>> rows;
    std::vector<FieldElement> rhs;
    for (const auto& p : C.rational_points()) {
        if (!C.is_smooth_at(p.coords())) continue;
        const auto hv = h.value_at(p);
        if (!hv) continue;
        std::vector<FieldElement> row;
        for (const auto& b : basis) {
            const auto v = b.value_at(p);
            if (!v) break;
            row.push_back(*v);
        }
        if (row.size() != basis.size()) continue;
        samples.push_back(p);
        rows.push_back(std::move(row));
        rhs.push_back(*hv);
        if (samples.size() >= std::max<std::size_t>(wanted, 64)) break;
    }
    require(samples.size() > basis.size(), ErrorCode::SamplingExhausted,
            "only " + std::to_string(samples.size()) +
                " rational sample points where every function is finite; use a working extension");

    Matrix a(k, samples.size(), basis.size());
    for (std::size_t r = 0; r < samples.size(); ++r)
        for (std::size_t j = 0; j < basis.size(); ++j) a.at(r, j) = rows[r][j];
    const LinearSolution sampled = solve_linear(a, rhs);
    if (!sampled.solution) {
        for (std::size_t r = 0; r < samples.size(); ++r) {
            if (sampled.witness[r].is_zero()) continue;
            cert.witness_points.push_back(samples[r]);
            cert.witness_weights.push_back(sampled.witness[r]);
        }
        return cert;
    }
    const auto exact = symbolic_span(h, basis);
    if (!exact) {
        cert.symbolic_refutation = true;
        return cert;
    }
    require(combination(h, basis, *exact) == h, ErrorCode::Internal, "span identity failed to verify");
    cert.coefficients = *exact;
    return cert;
}

bool verify_span(const SpanCertificate& cert) {
    const Field& k = cert.target.field();
    if (cert.coefficients) {
        if (cert.coefficients->size() != cert.basis.size()) return false;
        return combination(cert.target, cert.basis, *cert.coefficients) == cert.target;
    }
    if (cert.symbolic_refutation) return !symbolic_span(cert.target, cert.basis).has_value();
    if (cert.witness_points.empty() || cert.witness_points.size() != cert.witness_weights.size()) return false;
    std::vector<FieldElement> sums(cert.basis.size(), k.zero());
    FieldElement target = k.zero();
    for (std::size_t r = 0; r < cert.witness_points.size(); ++r) {
        const ProjPoint& p = cert.witness_points[r];
        const auto hv = cert.target.value_at(p);
        if (!hv) return false;
        target += cert.witness_weights[r] * *hv;
        for (std::size_t j = 0; j < cert.basis.size(); ++j) {
            const auto v = cert.basis[j].value_at(p);
            if (!v) return false;
            sums[j] += cert.witness_weights[r] * *v;
        }
    }
    for (const auto& s : sums)
        if (!s.is_zero()) return false;
    return !target.is_zero();
}

SpanDimension span_dimension(const std::vector<RatFunc>& fns) {
    require(!fns.empty(), ErrorCode::InvalidArgument, "span of an empty list");
    SpanDimension out;
    std::vector<RatFunc> basis;
    for (std::size_t i = 0; i < fns.size(); ++i) {
        SpanCertificate cert = span_coefficients(fns[i], basis);
        if (!cert.coefficients) {
            basis.push_back(fns[i]);
            out.independent.push_back(i);
        }
        out.certificates.push_back(std::move(cert));
    }
    out.dimension = static_cast<int>(basis.size());
    return out;
}

Divisor base_locus(const std::vector<Divisor>& divisors) {
    require(!divisors.empty(), ErrorCode::InvalidArgument, "base locus of an empty system");
    for (const auto& d : divisors) {
        require(is_effective(d), ErrorCode::InvalidArgument, "base locus needs effective divisors");
        require(degree(d) == degree(divisors.front()), ErrorCode::InvalidArgument,
                "base locus needs divisors of equal degree");
    }
    Divisor out = divisors.front();
    for (const auto& d : divisors) {
        for (auto it = out.begin(); it != out.end();) {
            const auto jt = d.find(it->first);
            const int m = jt == d.end() ? 0 : std::min(it->second, jt->second);
            if (m == 0) {
                it = out.erase(it);
            } else {
                it->second = m;
                ++it;
            }
        }
    }
    return out;
}

EmbeddingModel implicitize(const RatFunc& f, const RatFunc& g, std::uint64_t seed) {
    require(!f.is_constant() && !g.is_constant(), ErrorCode::EliminationDegenerate,
            "coordinate functions must be nonconstant");
    const CurvePtr& C = f.curve_ptr();
    const Field& k = C->field();
    EmbeddingModel model{C, f, g, TriPoly(k), 0, 0, 0, false, {}};

    // Degree of the system: poles of (f : g : 1), or a general member's degree.
    try {
        const Divisor df = divisor_of_function(f), dg = divisor_of_function(g);
        std::set<ProjPoint> support;
        for (const auto& [p, m] : df) support.insert(p);
        for (const auto& [p, m] : dg) support.insert(p);
        for (const auto& p : support) {
            const int vf = df.count(p) ? df.at(p) : 0;
            const int vg = dg.count(p) ? dg.at(p) : 0;
            model.system_degree += std::max({0, -vf, -vg});
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ExtensionRequired) throw;
        Rng rng(seed);
        for (int attempt = 0; attempt < 3; ++attempt) {
            FieldElement a = k.random(rng), b = k.random(rng);
            if (a.is_zero() || b.is_zero()) continue;
            const RatFunc l = f * a + g * b;
            if (l.is_constant()) continue;
            model.system_degree = std::max(model.system_degree, function_degree(l, seed + attempt));
        }
    }
    require(model.system_degree > 0, ErrorCode::EliminationDegenerate, "could not determine the degree of the system");

    std::vector<TriPoly> pa = {TriPoly::constant(k.one())}, pb = pa, pc = pa, pe = pa;
    for (int d = 1; d <= model.system_degree; ++d) {
        pa.push_back(pa.back() * f.num());
        pb.push_back(pb.back() * f.den());
        pc.push_back(pc.back() * g.num());
        pe.push_back(pe.back() * g.den());
        const std::vector<std::uint32_t> monos = monomials_of_degree(d);
        std::vector<TriPoly> cols;
        for (auto key : monos) {
            const Exponent x = TriPoly::unpack(key);
            cols.push_back(C->reduce(pa[x.x] * pb[d - x.x] * pc[x.y] * pe[d - x.y]));
        }
        const auto kernel = coefficient_matrix(k, cols).kernel();
        if (kernel.empty()) continue;
        require(d > 1, ErrorCode::EliminationDegenerate, "f, g and 1 are linearly dependent; the image is a line");
        TriPoly phi(k);
        for (std::size_t i = 0; i < monos.size(); ++i) {
            const Exponent x = TriPoly::unpack(monos[i]);
            phi.add_term(kernel.front()[i], x.x, x.y, x.z);
        }
        phi *= phi.leading_coeff().inverse();
        model.phi = phi;
        model.degree = d;
        break;
    }
    require(model.degree > 0, ErrorCode::Internal, "no relation found up to the degree of the system");
    require(model.system_degree % model.degree == 0, ErrorCode::Internal,
            "image degree does not divide the degree of the system");
    model.map_degree = model.system_degree / model.degree;
    model.birational = model.map_degree == 1;
    require(model.birational, ErrorCode::NotBirational,
            "(f : g : 1) has degree " + std::to_string(model.map_degree) + " onto its image");
    return model;
}

ProjPoint image_point(const RatFunc& f, const RatFunc& g, const ProjPoint& p) {
    const Field& k = f.field();
    const std::array<LocalValue, 3> heads = {local_value(f, p), local_value(g, p), LocalValue{0, k.one()}};
    int m = 0;
    for (const auto& h : heads)
        if (h.order) m = std::min(m, *h.order);
    Vec3 v = {k.zero(), k.zero(), k.zero()};
    for (int i = 0; i < 3; ++i)
        if (heads[i].order && *heads[i].order == m) v[i] = *heads[i].leading;
    return ProjPoint(v);
}

ProjPoint image_point(const EmbeddingModel& model, const ProjPoint& p) {
    const ProjPoint q = image_point(model.f, model.g, p);
    require(model.phi(q.coords()).is_zero(), ErrorCode::Internal, "image point is not on the image curve");
    return q;
}

bool forms_proportional_under(const TriPoly& phi_a, const ProjMap& m, const TriPoly& phi_b) {
    if (phi_a.total_degree() != phi_b.total_degree() || phi_b.is_zero()) return false;
    const TriPoly g = phi_a.substitute_linear(m.matrix());
    const auto it = g.terms().find(phi_b.leading_key());
    if (it == g.terms().end()) return false;
    return g == phi_b * (it->second / phi_b.leading_coeff());
}

EquivalenceResult projective_equivalence(const TriPoly& phi_a, const std::vector<ProjPoint>& marks_a,
                                         const TriPoly& phi_b, const std::vector<ProjPoint>& marks_b) {
    EquivalenceResult out;
    require(marks_a.size() == marks_b.size(), ErrorCode::InvalidArgument, "mark lists differ in length");
    if (phi_a.total_degree() != phi_b.total_degree()) {
        out.note = "degrees differ (" + std::to_string(phi_a.total_degree()) + " vs " +
                   std::to_string(phi_b.total_degree()) + ")";
        return out;
    }
    const Field& k = phi_a.field();
    const std::size_t n = marks_b.size();
    const std::uint64_t enumeration_limit = 200000;
    std::vector<std::size_t> assignment;
    std::vector<bool> used(n, false);
    std::uint64_t candidates = 0;

    auto candidate_ok = [&](const Mat3& m) {
        ++candidates;
        if (mat3_det(m).is_zero()) return false;
        return forms_proportional_under(phi_a, ProjMap(m), phi_b);
    };

    // Depth-first over injective assignments, pruning on an empty kernel.
    std::function<bool(Matrix)> search = [&](Matrix rows) -> bool {
        const std::size_t depth = assignment.size();
        const auto kernel = rows.kernel();
        if (kernel.empty()) return false;
        if (depth < n) {
            for (std::size_t j = 0; j < n; ++j) {
                if (used[j]) continue;
                Matrix next = rows;
                add_incidence_rows(next, marks_b[depth].coords(), marks_a[j].coords());
                used[j] = true;
                assignment.push_back(j);
                if (search(next)) return true;
                assignment.pop_back();
                used[j] = false;
            }
            return false;
        }
        const std::size_t dim = kernel.size();
        std::uint64_t count = 1;
        for (std::size_t i = 1; i < dim; ++i) {
            count *= k.size();
            require(count <= enumeration_limit, ErrorCode::InsufficientMarks,
                    "the marks leave a " + std::to_string(dim) + "-dimensional family of maps to search");
        }
        // Projective enumeration: first nonzero coordinate 1.
        const auto elems = k.elements();
        for (std::size_t lead = 0; lead < dim; ++lead) {
            std::uint64_t tail = 1;
            for (std::size_t i = lead + 1; i < dim; ++i) tail *= k.size();
            for (std::uint64_t code = 0; code < tail; ++code) {
                Mat3 m;
                for (auto& x : m) x = k.zero();
                std::uint64_t c = code;
                for (std::size_t i = lead; i < dim; ++i) {
                    FieldElement w = k.one();
                    if (i > lead) {
                        w = elems[c % k.size()];
                        c /= k.size();
                    }
                    if (w.is_zero()) continue;
                    for (int t = 0; t < 9; ++t) m[t] += w * kernel[i][t];
                }
                if (candidate_ok(m)) {
                    out.map = ProjMap(m);
                    return true;
                }
            }
        }
        return false;
    };
    Matrix start(k, 0, 9);
    if (search(start)) {
        out.assignment = assignment;
        out.note = "found after " + std::to_string(candidates) + " candidate maps";
    } else {
        out.note = "no mark-compatible map carries one form to the other (" + std::to_string(candidates) +
                   " candidates checked)";
    }
    return out;
}

}  // namespace galpoint
