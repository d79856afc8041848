#include "toriclab/dsl.hpp"

#include <cctype>

#include "toriclab/error.hpp"

namespace toriclab {

namespace {

class Parser {
public:
    explicit Parser(std::string_view raw) {
        for (char c : raw) {
            if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
        }
    }

    PolytopeExpr parse() {
        if (text_.empty()) fail("empty expression");
        PolytopeExpr e = expr();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::parse_error, msg + " at position " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool starts_with(std::string_view kw) const { return std::string_view(text_).substr(pos_).starts_with(kw); }

    long long integer() {
        const std::size_t start = pos_;
        if (peek('-')) ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            pos_ = start;
            fail("expected integer");
        }
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000) fail("integer too large");
            ++pos_;
        }
        return text_[start] == '-' ? -v : v;
    }

    long long natural() {
        const std::size_t start = pos_;
        const long long v = integer();
        if (v < 0) {
            pos_ = start;
            fail("expected non-negative integer");
        }
        return v;
    }

    std::vector<long long> naturals(std::size_t count) {
        std::vector<long long> out;
        for (std::size_t i = 0; i < count; ++i) {
            if (i > 0) expect(',');
            out.push_back(natural());
        }
        return out;
    }

    Point point() {
        expect('(');
        const long long x = integer();
        expect(',');
        const long long y = integer();
        expect(')');
        return {x, y};
    }

    PolytopeExpr expr() {
        PolytopeExpr first = term();
        if (!peek('+')) return first;
        PolytopeExpr sum;
        sum.kind = PolytopeExpr::Kind::sum;
        sum.children.push_back(std::move(first));
        while (peek('+')) {
            ++pos_;
            sum.children.push_back(term());
        }
        return sum;
    }

    PolytopeExpr term() {
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            PolytopeExpr d;
            d.kind = PolytopeExpr::Kind::dilation;
            d.args.push_back(natural());
            expect('*');
            d.children.push_back(primary());
            return d;
        }
        return primary();
    }

    PolytopeExpr primary() {
        if (peek('(')) {
            ++pos_;
            PolytopeExpr inner = expr();
            expect(')');
            return inner;
        }
        PolytopeExpr a;
        if (starts_with("zono:")) {
            pos_ += 5;
            a.kind = PolytopeExpr::Kind::zono;
            a.args = naturals(3);
        } else if (starts_with("quad:")) {
            pos_ += 5;
            a.kind = PolytopeExpr::Kind::quad;
            a.args = naturals(5);
        } else if (starts_with("simplex:")) {
            pos_ += 8;
            a.kind = PolytopeExpr::Kind::simplex;
            a.args = naturals(1);
        } else if (starts_with("t0:")) {
            pos_ += 3;
            a.kind = PolytopeExpr::Kind::t0;
            a.args = naturals(1);
        } else if (starts_with("seg:")) {
            pos_ += 4;
            a.kind = PolytopeExpr::Kind::seg;
            a.args.push_back(integer());
            expect(',');
            a.args.push_back(integer());
            long long c = 1;
            if (peek('*')) {
                ++pos_;
                c = natural();
            }
            a.args.push_back(c);
        } else if (starts_with("verts:")) {
            pos_ += 6;
            a.kind = PolytopeExpr::Kind::verts;
            a.points.push_back(point());
            while (peek(';')) {
                ++pos_;
                a.points.push_back(point());
            }
        } else {
            fail("unknown polytope form");
        }
        return a;
    }
};

}  // namespace

PolytopeExpr parse_polytope_expr(std::string_view text) { return Parser(text).parse(); }

LatticePolytope evaluate(const PolytopeExpr& e) {
    using K = PolytopeExpr::Kind;
    switch (e.kind) {
        case K::zono: return zonotope(e.args[0], e.args[1], e.args[2]);
        case K::quad: return quad_clipped(e.args[0], e.args[1], e.args[2], e.args[3], e.args[4]);
        case K::simplex: return simplex(e.args[0]);
        case K::t0: return exceptional_triangle(e.args[0]);
        case K::seg: return segment(Point{e.args[0], e.args[1]}, e.args[2]);
        case K::verts: return convex_hull(e.points);
        case K::sum: {
            LatticePolytope acc = evaluate(e.children[0]);
            for (std::size_t i = 1; i < e.children.size(); ++i) acc = minkowski_sum(acc, evaluate(e.children[i]));
            return acc;
        }
        case K::dilation: return dilate(evaluate(e.children[0]), e.args[0]);
    }
    throw Error(ErrorCode::parse_error, "unhandled expression kind");
}

}  // namespace toriclab
