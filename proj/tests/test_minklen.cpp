#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "corpus.hpp"
#include "toriclab/error.hpp"
#include "toriclab/minklen.hpp"

using namespace toriclab;

namespace {

const SearchBudget kWide{400, 400};

// Unpruned oracle: every multiplicity vector over every primitive direction
// in the difference box, built with polytope operations and tested with
// translate_fits. Returns all fitting zonotopes of maximal length, each with
// its smallest translation.
struct OracleResult {
    long long length = 0;
    std::vector<std::pair<std::vector<Summand>, Point>> maximal;  // in lexicographic multiplicity order
};

OracleResult oracle(const LatticePolytope& p) {
    const BoundingBox b = p.bbox();
    std::vector<Point> dirs;
    for (long long x = 0; x <= b.max.x - b.min.x; ++x) {
        for (long long y = -(b.max.y - b.min.y); y <= b.max.y - b.min.y; ++y) {
            if (gcd_abs(x, y) == 1 && (x > 0 || y > 0)) dirs.push_back({x, y});
        }
    }
    std::sort(dirs.begin(), dirs.end());
    OracleResult out;
    std::vector<Summand> current;
    std::function<void(std::size_t, const LatticePolytope&, long long)> rec =
        [&](std::size_t i, const LatticePolytope& z, long long len) {
            if (i == dirs.size()) {
                const auto a = translate_fits(z, p);
                if (!a) return;
                if (len > out.length) {
                    out.length = len;
                    out.maximal.clear();
                }
                if (len == out.length && len > 0) out.maximal.emplace_back(current, *a);
                return;
            }
            // multiplicity 0 first, then ascending, so vectors come out in lexicographic order
            rec(i + 1, z, len);
            for (long long k = 1;; ++k) {
                const LatticePolytope next = minkowski_sum(z, segment(dirs[i], k));
                if (!translate_fits(next, p)) break;
                current.push_back({dirs[i], k});
                rec(i + 1, next, len + k);
                current.pop_back();
            }
        };
    rec(0, LatticePolytope(), 0);
    return out;
}

std::vector<LatticePolytope> small_corpus() {
    std::vector<LatticePolytope> out;
    for (const LatticePolytope& p : testing::polytope_corpus()) {
        if (count_lattice_points(p) <= 16) out.push_back(p);
    }
    return out;
}

}  // namespace

TEST_CASE("minkowski_length on the reference polytopes") {
    CHECK(minkowski_length(simplex(1)).length == 1);
    CHECK(minkowski_length(exceptional_triangle(2)).length == 3);
    CHECK(minkowski_length(zonotope(2, 1, 1)).length == 4);
    CHECK(minkowski_length(exceptional_triangle(1)).length == 1);

    const MinkowskiLength pt = minkowski_length(convex_hull({{3, -2}}));
    CHECK(pt.length == 0);
    CHECK(pt.witness.summands().empty());
    CHECK(pt.witness.base() == Point{3, -2});
}

TEST_CASE("witness is the lexicographically smallest maximal zonotope") {
    const MinkowskiLength r = minkowski_length(simplex(2));
    CHECK(to_string(r.witness) == "base=(0,0); dir=(1,0)^2");
    const MinkowskiLength z = minkowski_length(zonotope(1, 1, 1));
    CHECK(to_string(z.witness) == "base=(0,0); dir=(0,1)^1; dir=(1,0)^1; dir=(1,1)^1");
}

TEST_CASE("search agrees with the unpruned oracle on small polytopes") {
    for (const LatticePolytope& p : small_corpus()) {
        CAPTURE(to_string(p));
        const OracleResult o = oracle(p);
        const MinkowskiLength r = minkowski_length(p, kWide);
        REQUIRE(r.length == o.length);
        REQUIRE(r.witness.length() == r.length);
        REQUIRE(contains(p, r.witness.polytope()));
        if (o.length > 0) {
            // Oracle lists vectors in lexicographic order; its first one is the expected witness.
            CHECK(r.witness.summands() == o.maximal.front().first);
            CHECK(r.witness.base() == o.maximal.front().second);
        }

        // Enumeration: same set of maximal zonotopes, every translation included.
        const std::vector<Decomposition> all = enumerate_maximal_decompositions(p, kWide);
        std::vector<std::vector<Summand>> shapes;
        for (const Decomposition& d : all) {
            REQUIRE(d.length() == o.length);
            REQUIRE(contains(p, d.polytope()));
            if (shapes.empty() || shapes.back() != d.summands()) shapes.push_back(d.summands());
        }
        std::vector<std::vector<Summand>> expected;
        std::size_t translations = 0;
        for (const auto& [summands, base] : o.maximal) {
            expected.push_back(summands);
            LatticePolytope z;
            for (const Summand& s : summands) z = minkowski_sum(z, segment(s.direction, s.multiplicity));
            translations += all_translations(z, p).size();
        }
        std::sort(shapes.begin(), shapes.end());
        std::sort(expected.begin(), expected.end());
        CHECK(shapes == expected);
        CHECK(all.size() == translations);
    }
}

TEST_CASE("enumerate_maximal_decompositions examples") {
    const auto z = enumerate_maximal_decompositions(zonotope(1, 1, 1));
    REQUIRE(z.size() == 1);
    CHECK(z[0].polytope() == zonotope(1, 1, 1));
    CHECK(enumerate_maximal_decompositions(LatticePolytope()).empty());
}

TEST_CASE("maximal decompositions in r*simplex have the stated zonotope forms") {
    for (long long r = 1; r <= 3; ++r) {
        std::vector<Decomposition> expected;
        for (long long a = 0; a <= r; ++a) {
            for (long long b = 0; a + b <= r; ++b) {
                const long long c = r - a - b;
                std::vector<Summand> s;
                if (a > 0) s.push_back({{1, 0}, a});
                if (b > 0) s.push_back({{0, 1}, b});
                if (c > 0) s.push_back({{1, -1}, c});
                expected.emplace_back(Point{0, c}, s, simplex(r));
            }
        }
        std::vector<Decomposition> got = enumerate_maximal_decompositions(simplex(r));
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        CHECK(got == expected);
    }
}

TEST_CASE("clipped quadrilaterals with r = 2l have a unique maximal decomposition") {
    for (long long l = 1; l <= 1; ++l)
        for (long long m = 0; m <= 1; ++m)
            for (long long n = 0; n <= 1; ++n)
                for (long long s = 0; s <= 1; ++s) {
                    const LatticePolytope q = translate(quad_clipped(m, n, l, s, 2 * l), {0, s});
                    std::vector<Summand> parts{{{1, 0}, m + 2 * l}, {{0, 1}, n + 2 * l}};
                    if (s > 0) parts.push_back({{1, -1}, s});
                    const Decomposition expected(Point{0, s}, parts, q);
                    const auto got = enumerate_maximal_decompositions(q);
                    REQUIRE(got.size() == 1);
                    CHECK(got[0] == expected);
                }
}

TEST_CASE("closed-form predictors") {
    CHECK(predicted_length_quad_clipped(1, 1, 1, 0, 1) == 4);
    CHECK(predicted_length_quad_clipped(0, 0, 0, 0, 3) == 3);
    CHECK(predicted_length_quad_clipped(0, 0, 1, 0, 1) == 2);
    CHECK_THROWS_AS(predicted_length_quad_clipped(0, -1, 0, 0, 0), Error);
    CHECK(predicted_length_zonotope(0, 0, 0) == 0);
    CHECK(predicted_length_zonotope(2, 1, 1) == 4);
    CHECK(predicted_length_zonotope(0, 0, 5) == 5);
    CHECK(scaled_exceptional_length(1) == 1);
    CHECK(scaled_exceptional_length(2) == 3);
    CHECK(scaled_exceptional_length(5) == 7);
}

TEST_CASE("period-one checks") {
    const PeriodCheck t0 = is_period_one_up_to(exceptional_triangle(1), 2);
    CHECK_FALSE(t0.period_one);
    CHECK(t0.first_failure == 2);

    const PeriodCheck tri = is_period_one_up_to(simplex(1), 4);
    CHECK(tri.period_one);
    CHECK_FALSE(tri.first_failure.has_value());

    const PeriodCheck shifted = is_period_one_up_to(parse_polytope("t0:1+seg:1,0"), 2);
    CHECK_FALSE(shifted.period_one);
    CHECK(shifted.first_failure == 2);

    CHECK_THROWS_AS(is_period_one_up_to(simplex(1), 1), Error);
}

TEST_CASE("Decomposition validates its summands") {
    const LatticePolytope box = zonotope(2, 2, 0);
    CHECK_THROWS_AS(Decomposition({0, 0}, {{{2, 0}, 1}}, box), Error);
    CHECK_THROWS_AS(Decomposition({0, 0}, {{{-1, 0}, 1}}, box), Error);
    CHECK_THROWS_AS(Decomposition({0, 0}, {{{1, 0}, 0}}, box), Error);
    CHECK_THROWS_AS(Decomposition({0, 0}, {{{1, 0}, 1}, {{1, 0}, 1}}, box), Error);
    CHECK_THROWS_AS(Decomposition({1, 0}, {{{1, 0}, 2}}, box), Error);
    const Decomposition d({0, 1}, {{{1, 1}, 1}, {{1, 0}, 1}}, box);
    CHECK(to_string(d) == "base=(0,1); dir=(1,0)^1; dir=(1,1)^1");
    CHECK(d.length() == 2);
}

TEST_CASE("budget limits are reported") {
    CHECK_THROWS_AS(minkowski_length(simplex(20)), BudgetExceeded);
    try {
        minkowski_length(simplex(20), SearchBudget{1000, 5});
        FAIL("expected a budget error");
    } catch (const BudgetExceeded& e) {
        CHECK(e.budget() == 5);
        CHECK(e.required() > 5);
    }
}

TEST_CASE("property: superadditivity and monotonicity on corpus pairs") {
    const auto corpus = small_corpus();
    for (const LatticePolytope& a : corpus) {
        const long long la = minkowski_length(a, kWide).length;
        for (const LatticePolytope& b : corpus) {
            const long long lb = minkowski_length(b, kWide).length;
            const LatticePolytope sum = minkowski_sum(a, b);
            REQUIRE(la + lb <= minkowski_length(sum, kWide).length);
            if (translate_fits(a, b)) REQUIRE(la <= lb);
        }
    }
}

TEST_CASE("property: unimodular invariance") {
    std::mt19937_64 rng(20261018);
    for (const LatticePolytope& p : testing::polytope_corpus()) {
        const long long l = minkowski_length(p, kWide).length;
        for (int i = 0; i < 20; ++i) {
            const Matrix2 m = testing::random_unimodular(rng);
            const Point shift{static_cast<long long>(rng() % 7) - 3, static_cast<long long>(rng() % 7) - 3};
            REQUIRE(minkowski_length(apply_unimodular(p, m, shift), kWide).length == l);
        }
    }
}

TEST_CASE("property: dilation lower bound") {
    for (const LatticePolytope& p : small_corpus()) {
        const long long l = minkowski_length(p, kWide).length;
        for (long long t = 2; t <= 4; ++t) {
            CAPTURE(to_string(p));
            REQUIRE(minkowski_length(dilate(p, t), kWide).length >= t * l);
        }
    }
}
