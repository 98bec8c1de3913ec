#include <algorithm>
#include <set>

#include "galpoint/error.hpp"
#include "galpoint/galois.hpp"

namespace galpoint {

namespace {

// Columns are the given points scaled so that they sum to `unit`.
std::optional<Mat3> frame_matrix(const std::array<Vec3, 4>& pts) {
    Mat3 a;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) a[3 * r + c] = pts[c][r];
    if (mat3_det(a).is_zero()) return std::nullopt;
    const Vec3 lambda = mat3_apply(mat3_inverse(a), pts[3]);
    for (const auto& l : lambda)
        if (l.is_zero()) return std::nullopt;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) a[3 * r + c] *= lambda[c];
    return a;
}

bool maps_points_into(const Mat3& m, const PlaneCurve& C, const std::vector<ProjPoint>& sample) {
    for (const auto& p : sample)
        if (!C.contains(mat3_apply(m, p.coords()))) return false;
    return true;
}

AutGroup group_from_elements(const std::set<ProjMap>& found, const CurvePtr& C, std::size_t cap) {
    require(found.size() <= cap, ErrorCode::CapExceeded,
            "automorphism group exceeds the cap of " + std::to_string(cap) + " elements");
    std::vector<ProjMap> gens;
    AutGroup G = group_closure(gens, C, cap);
    for (const auto& x : found) {
        if (G.contains(x)) continue;
        gens.push_back(x);
        G = group_closure(gens, C, cap);
    }
    require(G.order() == found.size(), ErrorCode::Internal, "scanned automorphisms do not form a group");
    return G;
}

}  // namespace

FiberTranscript generic_fiber_orbit_test(const RatFunc& t, const AutGroup& G, int trials, std::uint64_t seed) {
    require(!t.is_constant(), ErrorCode::PreconditionFailed, "the fiber test needs a nonconstant function");
    FiberTranscript out;
    out.order = G.order();
    out.seed = seed;
    out.degree = function_degree(t, seed);
    out.degree_matches = out.degree == static_cast<int>(out.order);
    if (!out.degree_matches) return out;

    const Field& k = t.field();
    Rng rng(seed);
    const int budget = 32 * trials + 32;
    for (int attempt = 0; static_cast<int>(out.trials.size()) < trials; ++attempt) {
        require(attempt < budget, ErrorCode::RetriesExhausted,
                "no squarefree rational fibers after " + std::to_string(budget) + " samples");
        const FieldElement lambda = k.random(rng);
        Divisor zeros;
        try {
            zeros = zeros_part(divisor_of_function(t - lambda));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ExtensionRequired) throw;
            continue;
        }
        if (degree(zeros) != out.degree) continue;
        if (std::any_of(zeros.begin(), zeros.end(), [](const auto& e) { return e.second != 1; })) continue;
        FiberTranscript::Trial trial{lambda, {}, false};
        for (const auto& [p, m] : zeros) trial.fiber.push_back(p);
        trial.single_orbit = orbit_and_stabilizer(G, trial.fiber.front()).orbit == trial.fiber;
        out.trials.push_back(std::move(trial));
    }
    out.passed = std::all_of(out.trials.begin(), out.trials.end(), [](const auto& tr) { return tr.single_orbit; });
    return out;
}

std::uint64_t pgl3_order(std::uint64_t q) {
    if (q > 1000) return UINT64_MAX;
    const std::uint64_t q3 = q * q * q;
    const std::uint64_t a = q3 * (q3 - 1);
    const std::uint64_t b = q * q - 1;
    if (a > UINT64_MAX / b) return UINT64_MAX;
    return a * b;
}

AutGroup enumerate_linear_automorphisms(const CurvePtr& C, const std::optional<std::vector<ProjMap>>& hints,
                                        std::size_t cap) {
    require(cap >= 1, ErrorCode::InvalidArgument, "cap must be positive");
    if (hints) return group_closure(*hints, C, cap);

    const Field& k = C->field();
    const std::uint64_t total = pgl3_order(k.size());
    require(total <= kScanLimit, ErrorCode::ScanTooLarge,
            "PGL_3 has " + std::to_string(total) + " elements over " + k.describe());
    const std::vector<ProjPoint>& pts = C->rational_points();
    std::vector<ProjPoint> sample(pts.begin(), pts.begin() + std::min<std::size_t>(pts.size(), 12));
    std::set<ProjMap> found;

    // An automorphism sends a frame of rational points to another such frame,
    // so scanning frames of targets finds all of them when a frame exists.
    std::optional<std::array<std::size_t, 4>> frame;
    const std::size_t n = pts.size();
    for (std::size_t a = 0; a < n && !frame; ++a)
        for (std::size_t b = a + 1; b < n && !frame; ++b)
            for (std::size_t c = b + 1; c < n && !frame; ++c)
                for (std::size_t d = c + 1; d < n && !frame; ++d)
                    if (frame_matrix({pts[a].coords(), pts[b].coords(), pts[c].coords(), pts[d].coords()}))
                        frame = std::array<std::size_t, 4>{a, b, c, d};

    if (frame) {
        const auto& f = *frame;
        const Mat3 src = *frame_matrix({pts[f[0]].coords(), pts[f[1]].coords(), pts[f[2]].coords(), pts[f[3]].coords()});
        const Mat3 src_inv = mat3_inverse(src);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (b == a) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == a || c == b) continue;
                    for (std::size_t d = 0; d < n; ++d) {
                        if (d == a || d == b || d == c) continue;
                        const auto dst =
                            frame_matrix({pts[a].coords(), pts[b].coords(), pts[c].coords(), pts[d].coords()});
                        if (!dst) continue;
                        const Mat3 m = mat3_mul(*dst, src_inv);
                        if (!maps_points_into(m, *C, sample)) continue;
                        const ProjMap pm(m);
                        if (map_preserves_curve(pm, *C)) found.insert(pm);
                    }
                }
            }
        return group_from_elements(found, C, cap);
    }

    // Plain scan of normalized invertible matrices.
    const std::vector<FieldElement> els = k.elements();
    const std::size_t q = els.size();
    std::array<std::size_t, 9> digit{};
    for (int lead = 0; lead < 9; ++lead) {
        digit.fill(0);
        while (true) {
            Mat3 m;
            for (int i = 0; i < 9; ++i) m[i] = i < lead ? k.zero() : (i == lead ? k.one() : els[digit[i]]);
            if (!mat3_det(m).is_zero() && maps_points_into(m, *C, sample)) {
                const ProjMap pm(m);
                if (map_preserves_curve(pm, *C)) found.insert(pm);
            }
            int i = 8;
            while (i > lead && ++digit[i] == q) digit[i--] = 0;
            if (i == lead) break;
        }
    }
    return group_from_elements(found, C, cap);
}

}  // namespace galpoint
