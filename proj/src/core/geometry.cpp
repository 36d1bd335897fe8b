#include "core/geometry.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace steklov {

double norm(Vec2 a) { return std::hypot(a.x, a.y); }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

double polyline_length(std::span<const Vec2> pts) {
    const size_t n = pts.size();
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += norm(pts[(i + 1) % n] - pts[i]);
    return acc;
}

double polygon_area(std::span<const Vec2> pts) {
    const size_t n = pts.size();
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += cross(pts[i], pts[(i + 1) % n]);
    return 0.5 * acc;
}

Vec2 polygon_centroid(std::span<const Vec2> pts) {
    const size_t n = pts.size();
    const double a = polygon_area(pts);
    Vec2 c{0.0, 0.0};
    for (size_t i = 0; i < n; ++i) {
        const Vec2 p = pts[i];
        const Vec2 q = pts[(i + 1) % n];
        const double w = cross(p, q);
        c.x += (p.x + q.x) * w;
        c.y += (p.y + q.y) * w;
    }
    return {c.x / (6.0 * a), c.y / (6.0 * a)};
}

bool point_in_polygon(std::span<const Vec2> pts, Vec2 q) {
    // Crossing number.
    const size_t n = pts.size();
    bool inside = false;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = pts[i];
        const Vec2& b = pts[j];
        if ((a.y > q.y) != (b.y > q.y)) {
            const double xi = a.x + (q.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (q.x < xi) inside = !inside;
        }
    }
    return inside;
}

double distance_to_polyline(std::span<const Vec2> pts, Vec2 q) {
    const size_t n = pts.size();
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
        const Vec2 a = pts[i];
        const Vec2 b = pts[(i + 1) % n];
        const Vec2 ab = b - a;
        const double len2 = dot(ab, ab);
        double t = len2 > 0.0 ? dot(q - a, ab) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, norm(q - (a + t * ab)));
    }
    return best;
}

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Hausdorff distance between the region bounded by `pts` and the closed unit
// disk centered at z, from boundary samples plus containment probes. The disk
// is convex, so the region-to-disk supremum is attained on the curve.
double hausdorff_at(std::span<const Vec2> pts, Vec2 z, int disk_samples) {
    double d1 = 0.0; // sup over region of dist(., disk)
    for (const Vec2& p : pts) d1 = std::max(d1, norm(p - z) - 1.0);
    d1 = std::max(d1, 0.0);

    double d2 = 0.0; // sup over disk of dist(., region)
    for (int i = 0; i < disk_samples; ++i) {
        const double t = two_pi * i / disk_samples;
        const Vec2 q{z.x + std::cos(t), z.y + std::sin(t)};
        if (!point_in_polygon(pts, q)) d2 = std::max(d2, distance_to_polyline(pts, q));
    }
    // Containment probes: center of each set in the other.
    if (!point_in_polygon(pts, z)) d2 = std::max(d2, distance_to_polyline(pts, z));
    const Vec2 c = polygon_centroid(pts);
    d1 = std::max(d1, norm(c - z) - 1.0);
    return std::max(d1, d2);
}

std::vector<Vec2> subsample(std::span<const Vec2> pts, size_t target) {
    if (pts.size() <= target) return {pts.begin(), pts.end()};
    std::vector<Vec2> out;
    out.reserve(target);
    const size_t stride = pts.size() / target;
    for (size_t i = 0; i < pts.size(); i += stride) out.push_back(pts[i]);
    return out;
}

} // namespace

double hausdorff_to_disk(std::span<const Vec2> curve) {
    if (curve.size() < 3) throw invalid_input("hausdorff_to_disk: need at least 3 points");
    const double area = std::abs(polygon_area(curve));
    if (area < 1e-12) throw invalid_input("hausdorff_to_disk: degenerate curve");

    // Downhill simplex over translations, on a subsampled curve first.
    const auto coarse = subsample(curve, 512);
    auto objective = [&](Vec2 z) {
        return hausdorff_at(std::span<const Vec2>(coarse), z, 512);
    };
    const Vec2 c0 = polygon_centroid(curve);
    const double step = 0.05;
    std::array<Vec2, 3> simplex{c0, Vec2{c0.x + step, c0.y}, Vec2{c0.x, c0.y + step}};
    std::array<double, 3> fv{objective(simplex[0]), objective(simplex[1]),
                             objective(simplex[2])};
    for (int it = 0; it < 120; ++it) {
        std::array<int, 3> ord{0, 1, 2};
        std::sort(ord.begin(), ord.end(), [&](int a, int b) { return fv[a] < fv[b]; });
        const int lo = ord[0], mid = ord[1], hi = ord[2];
        if (fv[hi] - fv[lo] < 1e-8 &&
            norm(simplex[hi] - simplex[lo]) < 1e-7)
            break;
        const Vec2 centroid = 0.5 * (simplex[lo] + simplex[mid]);
        const Vec2 refl = centroid + 1.0 * (centroid - simplex[hi]);
        const double fr = objective(refl);
        if (fr < fv[lo]) {
            const Vec2 expd = centroid + 2.0 * (centroid - simplex[hi]);
            const double fe = objective(expd);
            if (fe < fr) { simplex[hi] = expd; fv[hi] = fe; }
            else { simplex[hi] = refl; fv[hi] = fr; }
        } else if (fr < fv[mid]) {
            simplex[hi] = refl;
            fv[hi] = fr;
        } else {
            const Vec2 con = centroid + 0.5 * (simplex[hi] - centroid);
            const double fc = objective(con);
            if (fc < fv[hi]) { simplex[hi] = con; fv[hi] = fc; }
            else {
                // Shrink toward the best vertex.
                for (int k : {mid, hi}) {
                    simplex[k] = simplex[lo] + 0.5 * (simplex[k] - simplex[lo]);
                    fv[k] = objective(simplex[k]);
                }
            }
        }
    }
    int best = 0;
    for (int k = 1; k < 3; ++k) if (fv[k] < fv[best]) best = k;
    // Final evaluation at full resolution.
    const int disk_samples = static_cast<int>(std::clamp(curve.size(), size_t{1024}, size_t{4096}));
    return hausdorff_at(curve, simplex[best], disk_samples);
}

} // namespace steklov
