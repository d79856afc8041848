#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "toriclab/error.hpp"
#include "toriclab/vandermonde.hpp"

using namespace toriclab;

namespace {

FieldElement fe(std::uint32_t r) { return FieldElement{r}; }

// Leibniz expansion over all permutations.
FieldElement oracle_det(const MatrixOverField& m) {
    const FieldSpec& f = m.field();
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    FieldElement total = f.zero();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        FieldElement term = f.one();
        for (std::size_t i = 0; i < perm.size(); ++i) term = f.mul(term, m.at(i, perm[i]));
        total = inversions % 2 == 0 ? f.add(total, term) : f.sub(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Brute force: does T have three distinct columns with at least 3, 3, 2 points?
bool oracle_has_l1_staircase(const std::vector<TorusPoint>& t) {
    std::map<FieldElement, int> count;
    for (const auto& pt : t) ++count[pt.first];
    std::vector<int> c;
    for (const auto& [x, k] : count) c.push_back(k);
    for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = 0; b < c.size(); ++b)
            for (std::size_t d = 0; d < c.size(); ++d) {
                if (a == b || b == d || a == d) continue;
                if (c[a] >= 3 && c[b] >= 3 && c[d] >= 2) return true;
            }
    return false;
}

std::vector<TorusPoint> full_torus(const FieldSpec& f) {
    std::vector<TorusPoint> out;
    for (const FieldElement x : units(f))
        for (const FieldElement y : units(f)) out.emplace_back(x, y);
    return out;
}

}  // namespace

TEST_CASE("staircase and threshold sizes") {
    CHECK(staircase_size(1) == 8);
    CHECK(staircase_size(2) == 22);
    CHECK(staircase_size(3) == 43);
    for (long long l = 1; l <= 6; ++l) {
        CHECK(staircase_size(l) == static_cast<long long>(count_lattice_points(staircase_polytope(l))));
        long long sum = (l + 1) * (2 * l + 1);
        for (long long j = 0; j < l; ++j) sum += 2 * l - j;
        CHECK(staircase_size(l) == sum);
    }
    CHECK_THROWS_AS(staircase_size(0), Error);

    CHECK(threshold_size(1, 7) == 17);
    CHECK(threshold_size(1, 5) == 11);
    // (q-1)^2 - (q-1-2l)(q-1-l) + 1 = 100 - 48 + 1
    CHECK(threshold_size(2, 11) == 53);
    for (long long l = 1; l <= 4; ++l) {
        for (long long q = 2 * l + 2; q <= 40; ++q) {
            CHECK(threshold_size(l, q) == (q - 1) * (q - 1) - (q - 1 - 2 * l) * (q - 1 - l) + 1);
        }
    }
    CHECK_THROWS_AS(threshold_size(2, 5), Error);
}

TEST_CASE("find_staircase on the full F5 torus") {
    const FieldSpec f = make_field(5);
    const auto s = find_staircase(full_torus(f), 1, f);
    REQUIRE(s.has_value());
    CHECK(to_string(*s) == "l=1; full: 1->1,2,3; full: 2->1,2,3; partial[0]: 3->1,2");
    CHECK(s->points().size() == 8);

    const std::vector<TorusPoint> all = full_torus(f);
    const std::vector<TorusPoint> small(all.begin(), all.begin() + 7);
    CHECK_FALSE(find_staircase(small, 1, f).has_value());
}

TEST_CASE("find_staircase agrees with the brute-force column oracle") {
    const FieldSpec f = make_field(7);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t size = 6 + uniform_below(rng, 12);
        const std::vector<TorusPoint> t = random_torus_subset(f, size, rng);
        const auto s = find_staircase(t, 1, f);
        REQUIRE(s.has_value() == oracle_has_l1_staircase(t));
        if (s) {
            for (const TorusPoint& pt : s->points()) REQUIRE(std::binary_search(t.begin(), t.end(), pt));
        }
    }
}

TEST_CASE("staircase invariants are checked on construction") {
    const FieldSpec f = make_field(5);
    const StaircaseColumn a{fe(1), {fe(1), fe(2), fe(3)}};
    const StaircaseColumn b{fe(2), {fe(1), fe(2), fe(3)}};
    const StaircaseColumn c{fe(3), {fe(1), fe(2)}};
    CHECK_NOTHROW(StaircaseConfig(1, {a, b}, {c}, f));
    CHECK_THROWS_AS(StaircaseConfig(1, {a, {fe(2), {fe(1), fe(1), fe(3)}}}, {c}, f), Error);
    CHECK_THROWS_AS(StaircaseConfig(1, {a, a}, {c}, f), Error);
    CHECK_THROWS_AS(StaircaseConfig(1, {a, b}, {{fe(0), {fe(1), fe(2)}}}, f), Error);
    CHECK_THROWS_AS(StaircaseConfig(1, {a, b}, {{fe(3), {fe(1), fe(2), fe(4)}}}, f), Error);
    CHECK_THROWS_AS(StaircaseConfig(1, {a}, {c}, f), Error);
    CHECK_THROWS_AS(StaircaseConfig(1, {a, b}, {{fe(3), {fe(1), fe(7)}}}, f), Error);
    try {
        StaircaseConfig(1, {a, a}, {c}, f);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_staircase);
    }
}

TEST_CASE("Vandermonde matrix layout for l = 1") {
    const FieldSpec f = make_field(7);
    // x1..x3 = 2, 3, 5
    const StaircaseConfig s(1, {{fe(2), {fe(1), fe(3), fe(6)}}, {fe(3), {fe(2), fe(5), fe(4)}}}, {{fe(5), {fe(1), fe(6)}}},
                            f);
    const LatticePolytope p = staircase_polytope(1);
    const MatrixOverField v = vandermonde_matrix(p, s, f);
    REQUIRE(v.rows() == 8);
    REQUIRE(v.cols() == 8);
    for (std::size_t j = 0; j < 8; ++j) CHECK(v.at(0, j) == f.one());
    // ys sorted inside a column: group 2 is 3 -> 2,4,5, so the sixth column is (x2, 5)
    CHECK(v.col_labels[5] == TorusPoint{fe(3), fe(5)});
    CHECK(v.row_labels[4] == Point{1, 1});
    CHECK(v.at(4, 5) == f.mul(fe(3), fe(5)));

    const MatrixOverField a = block_triangularizer(s, p, f);
    for (std::size_t i = 0; i < 8; ++i) CHECK(a.at(i, i) == f.one());
    // row (2,1) = index 7, column (0,1) = index 1: x1 x2
    CHECK(a.row_labels[7] == Point{2, 1});
    CHECK(a.at(7, 1) == f.mul(fe(2), fe(3)));
    // row (1,1), column (0,1): -x1
    CHECK(a.at(4, 1) == f.neg(fe(2)));
    CHECK(determinant(a) == f.one());

    CHECK_THROWS_AS(vandermonde_matrix(staircase_polytope(2), s, f), Error);
    CHECK_THROWS_AS(vandermonde_matrix(p, s, make_field(8)), Error);
}

TEST_CASE("determinant") {
    const FieldSpec f = make_field(5);
    CHECK(determinant(identity_matrix(f, 4)) == f.one());
    MatrixOverField m(f, 2, 2);
    m.set(0, 0, fe(1));
    m.set(0, 1, fe(1));
    m.set(1, 0, fe(1));
    m.set(1, 1, fe(2));
    CHECK(determinant(m) == f.one());
    CHECK_THROWS_AS(determinant(MatrixOverField(f, 2, 3)), Error);
    CHECK_THROWS_AS(multiply(MatrixOverField(f, 2, 3), MatrixOverField(f, 2, 3)), Error);

    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2u, 4u, 5u, 9u}) {
        const FieldSpec g = make_field(q);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 1 + uniform_below(rng, 5);
            MatrixOverField r(g, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) r.set(i, j, fe(static_cast<std::uint32_t>(uniform_below(rng, q))));
            REQUIRE(determinant(r) == oracle_det(r));
            REQUIRE((rank(r) == n) == !oracle_det(r).is_zero());
        }
    }
}

TEST_CASE("block structure of A V") {
    const FieldSpec f5 = make_field(5);
    const auto s = find_staircase(full_torus(f5), 1, f5);
    REQUIRE(s);
    const BlockStructureReport r = verify_block_structure(*s, staircase_polytope(1), f5);
    CHECK(r.lower_part_vanishes);
    CHECK(r.diagonal_blocks_vandermonde);
    CHECK(r.det_v_nonzero);
    CHECK(r.det_a_is_one);
    CHECK(r.product_det_matches);
    CHECK(r.passed());

    const FieldSpec f11 = make_field(11);
    std::mt19937_64 rng(0);
    for (int i = 0; i < 10; ++i) {
        const StaircaseConfig st = random_staircase(2, f11, rng);
        const BlockStructureReport rr = verify_block_structure(st, staircase_polytope(2), f11);
        CHECK_MESSAGE(rr.passed(), rr.detail);
    }
}

TEST_CASE("property: random staircases give nonzero determinants") {
    std::mt19937_64 rng(0);
    for (const auto& [l, q] : std::vector<std::pair<long long, std::uint32_t>>{{1, 5}, {1, 7}, {1, 8}, {2, 9}, {2, 11}}) {
        const FieldSpec f = make_field(q);
        for (int i = 0; i < 100; ++i) {
            const StaircaseConfig s = random_staircase(l, f, rng);
            const MatrixOverField v = vandermonde_matrix(staircase_polytope(l), s, f);
            REQUIRE_FALSE(determinant(v).is_zero());
        }
    }
}

TEST_CASE("property: threshold-size subsets contain a staircase") {
    std::mt19937_64 rng(0);
    for (const auto& [l, q] : std::vector<std::pair<long long, std::uint32_t>>{{1, 5}, {1, 7}, {2, 7}, {2, 11}, {3, 13}}) {
        const FieldSpec f = make_field(q);
        const std::size_t size = static_cast<std::size_t>(threshold_size(l, q));
        for (int i = 0; i < 100; ++i) {
            REQUIRE(find_staircase(random_torus_subset(f, size, rng), l, f).has_value());
        }
    }
}

TEST_CASE("seeded sampling is reproducible") {
    std::mt19937_64 a(42);
    std::mt19937_64 b(42);
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t v = uniform_below(a, 7);
        CHECK(v < 7);
        CHECK(v == uniform_below(b, 7));
    }
    std::mt19937_64 c(5);
    std::mt19937_64 d(5);
    const FieldSpec f = make_field(7);
    CHECK(random_staircase(1, f, c) == random_staircase(1, f, d));
}
