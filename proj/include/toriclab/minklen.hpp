#pragma once

// Minkowski length by exhaustive zonotope search.
//
// Every maximal decomposition of a lattice polygon contains a maximal
// zonotope, so L(P) is the largest total multiplicity of a translated
// zonotope a + sum k_i [0, v_i] inside P. The search enumerates multiplicity
// vectors over the candidate directions (primitive, sign-normalized vectors
// whose unit segment fits in P), pruned by width bounds.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toriclab/polytope.hpp"

namespace toriclab {

struct Summand {
    Point direction;
    long long multiplicity = 0;

    friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// base + sum multiplicity * [0, direction].
class Decomposition {
public:
    Decomposition() = default;

    /// Validates the summands (primitive, sign-normalized, distinct,
    /// multiplicity >= 1) and that the zonotope lies in `target`.
    Decomposition(Point base, std::vector<Summand> summands, const LatticePolytope& target);

    Point base() const { return base_; }
    /// Sorted by direction.
    const std::vector<Summand>& summands() const { return summands_; }
    long long length() const;
    LatticePolytope polytope() const;

    friend auto operator<=>(const Decomposition&, const Decomposition&) = default;

private:
    Point base_;
    std::vector<Summand> summands_;
};

/// "base=(x,y); dir=(a,b)^k; ..."
std::string to_string(const Decomposition& d);

struct SearchBudget {
    std::size_t max_points = 120;
    std::size_t max_directions = 64;
};

struct MinkowskiLength {
    long long length = 0;
    /// Among maximal zonotopes, the one with the lexicographically smallest
    /// multiplicity vector (directions in lexicographic order), placed at the
    /// lexicographically smallest translation.
    Decomposition witness;
};

/// Primitive vectors with positive first nonzero coordinate whose unit
/// segment fits in P, in lexicographic order.
std::vector<Point> candidate_directions(const LatticePolytope& p);

bool is_sign_normalized_primitive(Point v);

MinkowskiLength minkowski_length(const LatticePolytope& p, const SearchBudget& budget = {});

/// All zonotope decompositions of length L(P) in P, one entry per distinct
/// (base, summands) pair.
std::vector<Decomposition> enumerate_maximal_decompositions(const LatticePolytope& p,
                                                            const SearchBudget& budget = {});

/// Closed form for m[0,e1]+n[0,e2]+l[0,e1+e2]+s[0,e1-e2]+r*simplex.
long long predicted_length_quad_clipped(long long m, long long n, long long l, long long s, long long r);
/// Closed form for m[0,e1]+n[0,e2]+l[0,e1+e2].
long long predicted_length_zonotope(long long m, long long n, long long l);
/// Closed form for t * exceptional triangle.
long long scaled_exceptional_length(long long t);

struct PeriodCheck {
    bool period_one = true;
    /// Smallest t <= t_max with L(tP) != t L(P).
    std::optional<long long> first_failure;
};

/// Checks L(tP) = t L(P) for 2 <= t <= t_max. A bounded certificate only.
PeriodCheck is_period_one_up_to(const LatticePolytope& p, long long t_max, const SearchBudget& budget = {});

}  // namespace toriclab
