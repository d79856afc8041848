#include "toriclab/polytope.hpp"

#include <algorithm>
#include <numeric>

#include "toriclab/error.hpp"

namespace toriclab {

namespace detail {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

}  // namespace detail

long long gcd_abs(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

long long lattice_length(Point v) { return gcd_abs(v.x, v.y); }

namespace {

HalfPlane reduced(Point w, long long c) {
    const long long g = gcd_abs(w.x, w.y);
    if (g > 1) {
        w = Point{w.x / g, w.y / g};
        c = detail::ceil_div(c, g);
    }
    return HalfPlane{w, c};
}

std::vector<HalfPlane> half_planes_of(const std::vector<Point>& v) {
    std::vector<HalfPlane> out;
    if (v.size() == 1) {
        const Point p = v[0];
        out.push_back({{1, 0}, p.x});
        out.push_back({{-1, 0}, -p.x});
        out.push_back({{0, 1}, p.y});
        out.push_back({{0, -1}, -p.y});
    } else if (v.size() == 2) {
        const Point d = v[1] - v[0];
        const Point n{-d.y, d.x};
        out.push_back(reduced(n, dot(n, v[0])));
        out.push_back(reduced(Point{-n.x, -n.y}, -dot(n, v[0])));
        out.push_back(reduced(d, dot(d, v[0])));
        out.push_back(reduced(Point{-d.x, -d.y}, -dot(d, v[1])));
    } else {
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point a = v[i];
            const Point b = v[(i + 1) % v.size()];
            const Point d = b - a;
            const Point n{-d.y, d.x};
            out.push_back(reduced(n, dot(n, a)));
        }
    }
    return out;
}

void require_nonnegative(long long k, const char* what) {
    if (k < 0) throw Error(ErrorCode::negative_argument, std::string(what) + " = " + std::to_string(k));
}

}  // namespace

LatticePolytope::LatticePolytope() : LatticePolytope(std::vector<Point>{Point{0, 0}}) {}

LatticePolytope::LatticePolytope(std::vector<Point> canonical_vertices)
    : vertices_(std::move(canonical_vertices)), half_planes_(half_planes_of(vertices_)) {}

int LatticePolytope::dimension() const {
    return vertices_.size() >= 3 ? 2 : static_cast<int>(vertices_.size()) - 1;
}

BoundingBox LatticePolytope::bbox() const {
    BoundingBox b{vertices_[0], vertices_[0]};
    for (const Point& v : vertices_) {
        b.min.x = std::min(b.min.x, v.x);
        b.min.y = std::min(b.min.y, v.y);
        b.max.x = std::max(b.max.x, v.x);
        b.max.y = std::max(b.max.y, v.y);
    }
    return b;
}

LatticePolytope convex_hull(std::vector<Point> pts) {
    if (pts.empty()) throw Error(ErrorCode::empty_input, "convex_hull of no points");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return LatticePolytope(std::move(pts));

    // Andrew's monotone chain; collinear points are dropped.
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point& p : pts) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        const Point& p = pts[i];
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);
    // All points collinear: the chain collapses to the two extremes.
    if (hull.size() == 2 || (hull.size() > 2 && area2(LatticePolytope(hull)) == 0)) {
        return LatticePolytope(std::vector<Point>{pts.front(), pts.back()});
    }
    return LatticePolytope(std::move(hull));
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
    std::vector<Point> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const Point& u : a.vertices()) {
        for (const Point& v : b.vertices()) sums.push_back(u + v);
    }
    return convex_hull(std::move(sums));
}

LatticePolytope dilate(const LatticePolytope& p, long long t) {
    require_nonnegative(t, "dilation factor");
    std::vector<Point> pts;
    for (const Point& v : p.vertices()) pts.push_back(t * v);
    return convex_hull(std::move(pts));
}

LatticePolytope translate(const LatticePolytope& p, Point offset) {
    std::vector<Point> pts;
    for (const Point& v : p.vertices()) pts.push_back(v + offset);
    return convex_hull(std::move(pts));
}

LatticePolytope apply_unimodular(const LatticePolytope& p, const Matrix2& m, Point shift) {
    const long long det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det != 1 && det != -1) {
        throw Error(ErrorCode::not_unimodular, "determinant " + std::to_string(det));
    }
    std::vector<Point> pts;
    for (const Point& v : p.vertices()) {
        pts.push_back(Point{m[0][0] * v.x + m[0][1] * v.y + shift.x, m[1][0] * v.x + m[1][1] * v.y + shift.y});
    }
    return convex_hull(std::move(pts));
}

std::vector<Point> lattice_points(const LatticePolytope& p) {
    std::vector<Point> out;
    const BoundingBox b = p.bbox();
    const std::vector<long long> zero(p.half_planes().size(), 0);
    detail::scan_translations(p.half_planes(), zero, b.min, b.max, [&](Point pt) {
        out.push_back(pt);
        return true;
    });
    return out;
}

std::size_t count_lattice_points(const LatticePolytope& p) { return lattice_points(p).size(); }

std::vector<Point> boundary_lattice_points(const LatticePolytope& p) {
    if (p.dimension() < 2) return lattice_points(p);
    std::vector<Point> out;
    const auto& v = p.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point d = v[(i + 1) % v.size()] - v[i];
        const long long g = lattice_length(d);
        const Point step{d.x / g, d.y / g};
        for (long long k = 0; k < g; ++k) out.push_back(v[i] + k * step);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long boundary_count(const LatticePolytope& p) {
    const auto& v = p.vertices();
    if (v.size() == 1) return 1;
    if (v.size() == 2) return lattice_length(v[1] - v[0]) + 1;
    long long total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) total += lattice_length(v[(i + 1) % v.size()] - v[i]);
    return total;
}

long long area2(const LatticePolytope& p) {
    const auto& v = p.vertices();
    if (v.size() < 3) return 0;
    long long s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
    return s < 0 ? -s : s;
}

bool contains(const LatticePolytope& p, Point pt) {
    return std::all_of(p.half_planes().begin(), p.half_planes().end(),
                       [&](const HalfPlane& h) { return dot(h.w, pt) >= h.c; });
}

bool contains(const LatticePolytope& outer, const LatticePolytope& inner) {
    return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                       [&](Point v) { return contains(outer, v); });
}

bool fits_in_box(const LatticePolytope& p, long long side) {
    const BoundingBox b = p.bbox();
    return b.min.x >= 0 && b.min.y >= 0 && b.max.x <= side && b.max.y <= side;
}

namespace {

std::vector<long long> support_offsets(const LatticePolytope& z, const LatticePolytope& p) {
    std::vector<long long> off;
    off.reserve(p.half_planes().size());
    for (const HalfPlane& h : p.half_planes()) {
        long long lo = dot(h.w, z.vertices()[0]);
        for (const Point& v : z.vertices()) lo = std::min(lo, dot(h.w, v));
        off.push_back(lo);
    }
    return off;
}

}  // namespace

std::optional<Point> translate_fits(const LatticePolytope& z, const LatticePolytope& p) {
    const BoundingBox bz = z.bbox();
    const BoundingBox bp = p.bbox();
    std::optional<Point> found;
    detail::scan_translations(p.half_planes(), support_offsets(z, p), bp.min - bz.min, bp.max - bz.max,
                              [&](Point a) {
                                  found = a;
                                  return false;
                              });
    return found;
}

std::vector<Point> all_translations(const LatticePolytope& z, const LatticePolytope& p) {
    const BoundingBox bz = z.bbox();
    const BoundingBox bp = p.bbox();
    std::vector<Point> out;
    detail::scan_translations(p.half_planes(), support_offsets(z, p), bp.min - bz.min, bp.max - bz.max,
                              [&](Point a) {
                                  out.push_back(a);
                                  return true;
                              });
    return out;
}

long long lattice_diameter(const LatticePolytope& p) {
    const std::vector<Point> pts = lattice_points(p);
    long long best = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, lattice_length(pts[j] - pts[i]));
    }
    return best;
}

std::string to_string(Point pt) { return "(" + std::to_string(pt.x) + "," + std::to_string(pt.y) + ")"; }

std::string to_string(const LatticePolytope& p) {
    std::string out;
    for (const Point& v : p.vertices()) {
        if (!out.empty()) out += ";";
        out += to_string(v);
    }
    return out;
}

LatticePolytope segment(Point v, long long k) {
    require_nonnegative(k, "segment multiplier");
    return convex_hull({Point{0, 0}, k * v});
}

LatticePolytope simplex(long long r) {
    require_nonnegative(r, "simplex dilation");
    return convex_hull({Point{0, 0}, Point{r, 0}, Point{0, r}});
}

LatticePolytope exceptional_triangle(long long t) {
    require_nonnegative(t, "exceptional triangle dilation");
    return convex_hull({Point{0, 0}, Point{t, 2 * t}, Point{2 * t, t}});
}

LatticePolytope zonotope(long long m, long long n, long long l) {
    return minkowski_sum(minkowski_sum(segment({1, 0}, m), segment({0, 1}, n)), segment({1, 1}, l));
}

LatticePolytope quad_clipped(long long m, long long n, long long l, long long s, long long r) {
    return minkowski_sum(minkowski_sum(zonotope(m, n, l), segment({1, -1}, s)), simplex(r));
}

LatticePolytope staircase_polytope(long long l) { return quad_clipped(l, l, 0, 0, l); }

}  // namespace toriclab
