#pragma once

// Staircase configurations and the Vandermonde matrices of the polytope
// l*simplex + l[0,e1] + l[0,e2] evaluated at them.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "toriclab/ffield.hpp"
#include "toriclab/matrix.hpp"
#include "toriclab/polytope.hpp"

namespace toriclab {

struct StaircaseColumn {
    FieldElement x;
    std::vector<FieldElement> ys;

    friend bool operator==(const StaircaseColumn&, const StaircaseColumn&) = default;
};

/// l+1 full columns of 2l+1 points, then partial columns j = 0..l-1 of
/// 2l-j points. Column x-values are distinct, y-values distinct per column,
/// all coordinates nonzero.
class StaircaseConfig {
public:
    /// Validates and sorts each column's ys ascending; throws invalid_staircase.
    StaircaseConfig(long long l, std::vector<StaircaseColumn> full, std::vector<StaircaseColumn> partial,
                    const FieldSpec& field);

    long long l() const { return l_; }
    std::uint32_t q() const { return q_; }
    const std::vector<StaircaseColumn>& full_columns() const { return full_; }
    const std::vector<StaircaseColumn>& partial_columns() const { return partial_; }

    /// Full columns then partial columns; group i (from 1) has x-value x_i.
    std::vector<StaircaseColumn> groups() const;
    /// In matrix column order: by group, y ascending inside a group.
    std::vector<TorusPoint> points() const;

    friend bool operator==(const StaircaseConfig&, const StaircaseConfig&) = default;

private:
    long long l_;
    std::uint32_t q_;
    std::vector<StaircaseColumn> full_;
    std::vector<StaircaseColumn> partial_;
};

/// "l=1; full: 1->1,2,3; full: 2->1,2,3; partial[0]: 3->1,2"
std::string to_string(const StaircaseConfig& s);

/// 7l(l+1)/2 + 1 for l >= 1.
long long staircase_size(long long l);

/// 3lq - 2l^2 - 3l + 1, for q > 2l+1.
long long threshold_size(long long l, std::uint64_t q);

/// Greedy: columns sorted by point count (descending, then x ascending); the
/// first l+1 become full columns, the next l the partial columns. Each column
/// keeps its smallest y-values. Empty if T holds no staircase.
std::optional<StaircaseConfig> find_staircase(const std::vector<TorusPoint>& t, long long l, const FieldSpec& field);

/// Rows: lattice points of P by x then y. Columns: the staircase points.
/// Requires P = staircase_polytope(l) inside [0, q-2]^2.
MatrixOverField vandermonde_matrix(const LatticePolytope& p, const StaircaseConfig& s, const FieldSpec& field);

/// Row (x', y'), column (x'', y''): zero unless y' = y'' and x'' <= x'; 1 when
/// x' = 0; else the coefficient of x^x'' in prod_{i=1..x'} (x - x_i).
MatrixOverField block_triangularizer(const StaircaseConfig& s, const LatticePolytope& p, const FieldSpec& field);

struct BlockStructureReport {
    /// Entries of A*V with row x >= the column's group index are zero.
    bool lower_part_vanishes = false;
    /// Diagonal block d equals prod_{i<d}(x_d - x_i) times a Vandermonde
    /// matrix in the group's ys, with a nonzero scalar.
    bool diagonal_blocks_vandermonde = false;
    bool det_v_nonzero = false;
    bool det_a_is_one = false;
    /// det(A*V) = det(V).
    bool product_det_matches = false;
    FieldElement det_v;
    std::string detail;

    bool passed() const {
        return lower_part_vanishes && diagonal_blocks_vandermonde && det_v_nonzero && det_a_is_one &&
               product_det_matches;
    }
};

BlockStructureReport verify_block_structure(const StaircaseConfig& s, const LatticePolytope& p,
                                            const FieldSpec& field);

/// Uniform integer in [0, n) by rejection; reproducible on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

/// Uniform staircase: distinct random column x-values, distinct random ys.
/// Needs q-1 >= 2l+1.
StaircaseConfig random_staircase(long long l, const FieldSpec& field, std::mt19937_64& rng);

/// Uniform subset of the torus of the given size, in lexicographic order.
std::vector<TorusPoint> random_torus_subset(const FieldSpec& field, std::size_t size, std::mt19937_64& rng);

}  // namespace toriclab
