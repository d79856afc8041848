#pragma once

// Toric surface codes: evaluate the monomials of a lattice polygon at every
// point of the torus (F_q^x)^2.

#include <cstdint>
#include <vector>

#include "toriclab/ffield.hpp"
#include "toriclab/matrix.hpp"
#include "toriclab/polytope.hpp"

namespace toriclab {

struct Term {
    Point exponent;
    FieldElement coefficient;

    friend auto operator<=>(const Term&, const Term&) = default;
};

/// Polynomial in x, y as a function on the torus. Exponents live in
/// [0, q-2]^2, since x^(q-1) = 1 there.
class SparsePolynomial {
public:
    SparsePolynomial() = default;
    /// Validates: exponents in the box, pairwise distinct; coefficients nonzero.
    SparsePolynomial(std::vector<Term> terms, const FieldSpec& field);

    /// Sorted by exponent.
    const std::vector<Term>& terms() const { return terms_; }
    FieldElement evaluate(const FieldSpec& field, FieldElement x, FieldElement y) const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    std::vector<Term> terms_;
};

/// Product as functions on the torus: exponents reduced mod q-1, like terms merged.
SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b, const FieldSpec& field);

/// Number of torus points where f vanishes, by evaluation at all (q-1)^2 points.
long long count_zeros(const SparsePolynomial& f, const FieldSpec& field);

class ToricCode {
public:
    const FieldSpec& field() const { return field_; }
    const LatticePolytope& polytope() const { return polytope_; }
    /// Lattice points of the polytope; row i of the generator is exponents()[i].
    const std::vector<Point>& exponents() const { return exponents_; }
    /// Units x units, lexicographic by canonical rep.
    const std::vector<TorusPoint>& points() const { return generator_.col_labels; }
    const MatrixOverField& generator() const { return generator_; }

    std::size_t n() const { return generator_.cols(); }
    std::size_t k() const { return generator_.rows(); }

private:
    friend ToricCode build_code(const LatticePolytope& p, std::uint32_t q);
    ToricCode(FieldSpec field, LatticePolytope polytope, std::vector<Point> exponents, MatrixOverField generator)
        : field_(std::move(field)),
          polytope_(std::move(polytope)),
          exponents_(std::move(exponents)),
          generator_(std::move(generator)) {}

    FieldSpec field_;
    LatticePolytope polytope_;
    std::vector<Point> exponents_;
    MatrixOverField generator_;
};

/// Requires P inside [0, q-2]^2. Throws field_too_small when P is wider than
/// q-2 in some coordinate, polytope_outside_box when it merely needs a
/// translation, and hypothesis_violated if the generator rank is not #P.
ToricCode build_code(const LatticePolytope& p, std::uint32_t q);

struct MinDistanceOptions {
    std::uint64_t budget = 5'000'000'000ULL;
    /// 0 means one worker per hardware thread.
    unsigned threads = 0;
};

struct MinDistanceResult {
    long long d = 0;
    /// Codewords enumerated (one per projective message) times n.
    std::uint64_t steps = 0;
};

/// Number of steps min_distance_exhaustive needs, saturating at UINT64_MAX.
std::uint64_t min_distance_steps(const ToricCode& code);

/// Exact minimum distance over all nonzero messages up to scalars. Throws
/// BudgetExceeded carrying the required step count.
MinDistanceResult min_distance_exhaustive(const ToricCode& code, const MinDistanceOptions& options = {});

/// n minus the minimum distance.
long long max_zeros(const ToricCode& code, const MinDistanceOptions& options = {});

/// prod_{a in A}(x - a) prod_{b in B}(y - b) prod_{c in C}(xy - c) with
/// A = {alpha..alpha^m}, B = {alpha..alpha^n}, C = <alpha> plus l - t further
/// units outside <alpha> (smallest reps), alpha of order t.
SparsePolynomial construct_extremal_poly(long long m, long long n, long long l, long long t, std::uint32_t q);

struct MinDistancePrediction {
    long long d = 0;
    bool hypothesis_satisfied = false;
};

/// (q-1)^2 - (m+n+l)(q-1) + l(m+n), for 0 <= n <= m <= l with some t in
/// [m, l] dividing q-1. The flag reports q - 1 - M sqrt(q) > Area with
/// Area = mn + ml + nl and M = max(2 Area - 1, 6).
MinDistancePrediction predicted_min_dist_zonotope(long long m, long long n, long long l, std::uint64_t q);

/// (q-1)^2 - L(q-1) + s(m+n+4l) with L = m+n+s+4l, for
/// 0 <= n+2l <= m+2l <= s with some t in [m+2l, s] dividing q-1.
MinDistancePrediction predicted_min_dist_special_quad(long long m, long long n, long long l, long long s,
                                                      std::uint64_t q);

/// (q-1-2l)(q-1-l), for q-2 >= 2l.
long long predicted_min_dist_staircase(long long l, std::uint64_t q);

}  // namespace toriclab
