#pragma once

// Text grammar for polytopes (whitespace-insensitive):
//
//   expr  := term ('+' term)*
//   term  := INT '*' '(' expr ')' | INT '*' atom | atom | '(' expr ')'
//   atom  := 'zono:' m,n,l | 'quad:' m,n,l,s,r | 'simplex:' r | 't0:' t
//          | 'seg:' a,b ['*' c] | 'verts:' (x,y) (';' (x,y))*
//
// '+' is Minkowski sum and 'k*' is dilation.

#include <string>
#include <string_view>
#include <vector>

#include "toriclab/polytope.hpp"

namespace toriclab {

struct PolytopeExpr {
    enum class Kind { zono, quad, simplex, t0, seg, verts, sum, dilation };

    Kind kind = Kind::verts;
    /// Integer parameters in grammar order (seg: a, b, c; dilation: k).
    std::vector<long long> args;
    /// verts only.
    std::vector<Point> points;
    /// sum: the summands; dilation: the single dilated operand.
    std::vector<PolytopeExpr> children;
};

/// Throws Error(parse_error) with the offending position.
PolytopeExpr parse_polytope_expr(std::string_view text);

LatticePolytope evaluate(const PolytopeExpr& expr);

inline LatticePolytope parse_polytope(std::string_view text) { return evaluate(parse_polytope_expr(text)); }

}  // namespace toriclab
