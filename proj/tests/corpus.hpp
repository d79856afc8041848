#pragma once

// Shared fixtures for the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "toriclab/dsl.hpp"
#include "toriclab/polytope.hpp"

namespace toriclab::testing {

/// Small polytopes covering every builder plus a few irregular hulls.
inline std::vector<LatticePolytope> polytope_corpus() {
    std::vector<LatticePolytope> out;
    for (long long t = 0; t <= 3; ++t) {
        out.push_back(simplex(t));
        out.push_back(exceptional_triangle(t));
    }
    for (long long m = 0; m <= 2; ++m)
        for (long long n = 0; n <= 2; ++n)
            for (long long l = 0; l <= 2; ++l) out.push_back(zonotope(m, n, l));
    for (long long s = 0; s <= 1; ++s)
        for (long long r = 0; r <= 2; ++r)
            for (long long l = 0; l <= 1; ++l) out.push_back(quad_clipped(1, 0, l, s, r));
    for (const char* text : {"verts:(0,0);(5,1);(1,5)", "verts:(0,0);(3,0);(4,2);(1,3)", "seg:2,3*2",
                             "verts:(2,-1);(-1,2)", "t0:1+seg:1,0", "verts:(0,0);(4,1);(1,1)"}) {
        out.push_back(parse_polytope(text));
    }
    out.push_back(staircase_polytope(1));
    out.push_back(staircase_polytope(2));
    return out;
}

/// Seeded random element of GL(2,Z) built from elementary moves.
inline Matrix2 random_unimodular(std::mt19937_64& rng, int steps = 4) {
    Matrix2 m{{{1, 0}, {0, 1}}};
    for (int i = 0; i < steps; ++i) {
        const auto kind = rng() % 4;
        const long long k = static_cast<long long>(rng() % 3) - 1;  // -1, 0, 1
        Matrix2 e{{{1, 0}, {0, 1}}};
        if (kind == 0) e[0][1] = k == 0 ? 1 : k;
        else if (kind == 1) e[1][0] = k == 0 ? 1 : k;
        else if (kind == 2) e = Matrix2{{{0, 1}, {1, 0}}};
        else e = Matrix2{{{-1, 0}, {0, 1}}};
        Matrix2 r{};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) r[a][b] = e[a][0] * m[0][b] + e[a][1] * m[1][b];
        m = r;
    }
    return m;
}

}  // namespace toriclab::testing
