#pragma once

// Integral convex polytopes in the plane.
//
// A LatticePolytope is stored in canonical form: the minimal vertex list in
// counterclockwise order starting at the lexicographically smallest vertex.
// Points and segments are polytopes of dimension 0 and 1, so two polytopes
// are equal exactly when their vertex lists are.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toriclab {

struct Point {
    long long x = 0;
    long long y = 0;

    friend constexpr auto operator<=>(const Point&, const Point&) = default;
    friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point operator*(long long k, Point a) { return {k * a.x, k * a.y}; }
};

constexpr long long dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
constexpr long long cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

long long gcd_abs(long long a, long long b);

/// Number of lattice steps on the segment from the origin to v (gcd of |coords|).
long long lattice_length(Point v);

/// Closed half-plane w . x >= c.
struct HalfPlane {
    Point w;
    long long c = 0;
};

struct BoundingBox {
    Point min;
    Point max;
};

class LatticePolytope {
public:
    /// The origin.
    LatticePolytope();

    const std::vector<Point>& vertices() const { return vertices_; }
    int dimension() const;
    BoundingBox bbox() const;

    /// Inequalities whose common solution set is exactly the polytope,
    /// including equality pairs for points and segments.
    const std::vector<HalfPlane>& half_planes() const { return half_planes_; }

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.vertices_ == b.vertices_;
    }
    friend auto operator<=>(const LatticePolytope& a, const LatticePolytope& b) {
        return a.vertices_ <=> b.vertices_;
    }

private:
    friend LatticePolytope convex_hull(std::vector<Point> points);
    explicit LatticePolytope(std::vector<Point> canonical_vertices);

    std::vector<Point> vertices_;
    std::vector<HalfPlane> half_planes_;
};

/// Canonical hull of a nonempty point set.
LatticePolytope convex_hull(std::vector<Point> points);

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
LatticePolytope dilate(const LatticePolytope& p, long long t);
LatticePolytope translate(const LatticePolytope& p, Point offset);

using Matrix2 = std::array<std::array<long long, 2>, 2>;

/// Image of P under x -> M x + shift; M must have determinant +-1.
LatticePolytope apply_unimodular(const LatticePolytope& p, const Matrix2& m, Point shift);

/// All integral points, sorted by x then y.
std::vector<Point> lattice_points(const LatticePolytope& p);
std::size_t count_lattice_points(const LatticePolytope& p);

/// Integral points on the topological boundary (every lattice point for
/// points and segments), sorted by x then y.
std::vector<Point> boundary_lattice_points(const LatticePolytope& p);
/// Boundary count from edge gcds.
long long boundary_count(const LatticePolytope& p);

/// Twice the Euclidean area (shoelace); 0 below dimension 2.
long long area2(const LatticePolytope& p);

bool contains(const LatticePolytope& p, Point pt);
bool contains(const LatticePolytope& outer, const LatticePolytope& inner);

/// P inside the box [0, side]^2.
bool fits_in_box(const LatticePolytope& p, long long side);

/// Lexicographically smallest integral a with a + Z inside P, if any.
std::optional<Point> translate_fits(const LatticePolytope& z, const LatticePolytope& p);
/// Every integral a with a + Z inside P, sorted.
std::vector<Point> all_translations(const LatticePolytope& z, const LatticePolytope& p);

/// Largest gcd step count of a segment between two lattice points of P.
long long lattice_diameter(const LatticePolytope& p);

std::string to_string(Point pt);
/// Canonical vertex list as "(x1,y1);(x2,y2);...".
std::string to_string(const LatticePolytope& p);

// Builders for the named families. Negative multipliers throw.

/// k[0, v].
LatticePolytope segment(Point v, long long k = 1);
/// r * conv{(0,0),(1,0),(0,1)}.
LatticePolytope simplex(long long r);
/// t * conv{(0,0),(1,2),(2,1)}.
LatticePolytope exceptional_triangle(long long t);
/// m[0,e1] + n[0,e2] + l[0,e1+e2].
LatticePolytope zonotope(long long m, long long n, long long l);
/// m[0,e1] + n[0,e2] + l[0,e1+e2] + s[0,e1-e2] + r*simplex.
LatticePolytope quad_clipped(long long m, long long n, long long l, long long s, long long r);
/// l*simplex + l[0,e1] + l[0,e2].
LatticePolytope staircase_polytope(long long l);

namespace detail {

/// Solves for integral a with w . a >= c - offset[i] for every half-plane of
/// P, restricted to the window [lo, hi]. Calls `visit` in lexicographic
/// order; stops early when `visit` returns false.
template <typename Visit>
void scan_translations(const std::vector<HalfPlane>& planes, const std::vector<long long>& offsets,
                       Point lo, Point hi, Visit&& visit);

long long floor_div(long long a, long long b);
long long ceil_div(long long a, long long b);

}  // namespace detail

}  // namespace toriclab

#include "toriclab/detail/scan_translations.hpp"
