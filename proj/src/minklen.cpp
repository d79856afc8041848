#include "toriclab/minklen.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "toriclab/detail/scan_translations.hpp"
#include "toriclab/error.hpp"

namespace toriclab {

bool is_sign_normalized_primitive(Point v) {
    if (lattice_length(v) != 1) return false;
    return v.x > 0 || (v.x == 0 && v.y > 0);
}

Decomposition::Decomposition(Point base, std::vector<Summand> summands, const LatticePolytope& target)
    : base_(base), summands_(std::move(summands)) {
    std::sort(summands_.begin(), summands_.end());
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        const Summand& s = summands_[i];
        if (!is_sign_normalized_primitive(s.direction)) {
            throw Error(ErrorCode::hypothesis_violated,
                        "direction " + to_string(s.direction) + " is not primitive and sign-normalized");
        }
        if (s.multiplicity < 1) {
            throw Error(ErrorCode::hypothesis_violated, "multiplicity must be at least 1");
        }
        if (i > 0 && summands_[i - 1].direction == s.direction) {
            throw Error(ErrorCode::hypothesis_violated, "repeated direction " + to_string(s.direction));
        }
    }
    if (!contains(target, polytope())) {
        throw Error(ErrorCode::hypothesis_violated, "decomposition does not fit: " + to_string(*this));
    }
}

long long Decomposition::length() const {
    long long total = 0;
    for (const Summand& s : summands_) total += s.multiplicity;
    return total;
}

LatticePolytope Decomposition::polytope() const {
    LatticePolytope z = convex_hull({base_});
    for (const Summand& s : summands_) z = minkowski_sum(z, segment(s.direction, s.multiplicity));
    return z;
}

std::string to_string(const Decomposition& d) {
    std::string out = "base=" + to_string(d.base());
    for (const Summand& s : d.summands()) {
        out += "; dir=" + to_string(s.direction) + "^" + std::to_string(s.multiplicity);
    }
    return out;
}

std::vector<Point> candidate_directions(const LatticePolytope& p) {
    const BoundingBox b = p.bbox();
    const long long wx = b.max.x - b.min.x;
    const long long wy = b.max.y - b.min.y;
    std::vector<Point> out;
    for (long long x = 0; x <= wx; ++x) {
        for (long long y = -wy; y <= wy; ++y) {
            const Point v{x, y};
            if (!is_sign_normalized_primitive(v)) continue;
            if (translate_fits(segment(v, 1), p)) out.push_back(v);
        }
    }
    return out;
}

namespace {

// Linear functionals used for width bounds. For Z inside P,
// width_w(Z) = sum k_i |w . v_i| <= width_w(P) for every w, so any subset S
// bounds the remaining multiplicity by sum_S slack / min_v sum_S |w . v|.
constexpr std::array<Point, 8> kFunctionals{{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {2, -1}}};

long long abs_ll(long long v) { return v < 0 ? -v : v; }

struct State {
    std::vector<long long> offsets;  // min over Z of w_i . z, per half-plane of P
    Point zmin;
    Point zmax;
    std::array<long long, kFunctionals.size()> width{};
    long long length = 0;
};

class Search {
public:
    Search(const LatticePolytope& p, std::vector<Point> dirs) : p_(p), dirs_(std::move(dirs)) {
        const auto& planes = p_.half_planes();
        bp_ = p_.bbox();
        for (std::size_t f = 0; f < kFunctionals.size(); ++f) {
            long long lo = std::numeric_limits<long long>::max();
            long long hi = std::numeric_limits<long long>::min();
            for (const Point& v : p_.vertices()) {
                lo = std::min(lo, dot(kFunctionals[f], v));
                hi = std::max(hi, dot(kFunctionals[f], v));
            }
            pwidth_[f] = hi - lo;
        }
        for (const Point& v : dirs_) {
            std::vector<long long> neg;
            for (const HalfPlane& h : planes) neg.push_back(std::min(0LL, dot(h.w, v)));
            neg_.push_back(std::move(neg));
            std::array<long long, kFunctionals.size()> c{};
            for (std::size_t f = 0; f < kFunctionals.size(); ++f) c[f] = abs_ll(dot(kFunctionals[f], v));
            cost_.push_back(c);
        }
        for (unsigned mask = 1; mask < (1u << kFunctionals.size()); ++mask) {
            if (std::popcount(mask) > 3) continue;
            Subset s;
            s.mask = mask;
            s.min_cost.assign(dirs_.size() + 1, std::numeric_limits<long long>::max());
            for (std::size_t d = dirs_.size(); d-- > 0;) {
                long long c = 0;
                for (std::size_t f = 0; f < kFunctionals.size(); ++f) {
                    if (mask & (1u << f)) c += cost_[d][f];
                }
                s.min_cost[d] = std::min(s.min_cost[d + 1], c);
            }
            subsets_.push_back(std::move(s));
        }
    }

    std::size_t size() const { return dirs_.size(); }
    Point direction(std::size_t d) const { return dirs_[d]; }

    State root() const {
        State s;
        s.offsets.assign(p_.half_planes().size(), 0);
        return s;
    }

    State add(const State& s, std::size_t d, long long k) const {
        State t = s;
        for (std::size_t i = 0; i < t.offsets.size(); ++i) t.offsets[i] += k * neg_[d][i];
        const Point v = dirs_[d];
        t.zmin.x += k * std::min(0LL, v.x);
        t.zmin.y += k * std::min(0LL, v.y);
        t.zmax.x += k * std::max(0LL, v.x);
        t.zmax.y += k * std::max(0LL, v.y);
        for (std::size_t f = 0; f < kFunctionals.size(); ++f) t.width[f] += k * cost_[d][f];
        t.length += k;
        return t;
    }

    /// Upper bound on the multiplicity still addable using directions >= from.
    long long bound(const State& s, std::size_t from) const {
        if (from >= dirs_.size()) return 0;
        long long best = std::numeric_limits<long long>::max();
        for (const Subset& sub : subsets_) {
            const long long c = sub.min_cost[from];
            if (c == 0) continue;
            long long slack = 0;
            for (std::size_t f = 0; f < kFunctionals.size(); ++f) {
                if (sub.mask & (1u << f)) slack += pwidth_[f] - s.width[f];
            }
            best = std::min(best, slack / c);
        }
        return best;
    }

    bool fits(const State& s) const {
        if (s.zmax.x - s.zmin.x > bp_.max.x - bp_.min.x || s.zmax.y - s.zmin.y > bp_.max.y - bp_.min.y) {
            return false;
        }
        bool found = false;
        detail::scan_translations(p_.half_planes(), s.offsets, bp_.min - s.zmin, bp_.max - s.zmax, [&](Point) {
            found = true;
            return false;
        });
        return found;
    }

    std::vector<Point> translations(const State& s) const {
        std::vector<Point> out;
        detail::scan_translations(p_.half_planes(), s.offsets, bp_.min - s.zmin, bp_.max - s.zmax, [&](Point a) {
            out.push_back(a);
            return true;
        });
        return out;
    }

private:
    struct Subset {
        unsigned mask = 0;
        std::vector<long long> min_cost;  // suffix minimum over directions
    };

    const LatticePolytope& p_;
    BoundingBox bp_;
    std::vector<Point> dirs_;
    std::vector<std::vector<long long>> neg_;
    std::vector<std::array<long long, kFunctionals.size()>> cost_;
    std::array<long long, kFunctionals.size()> pwidth_{};
    std::vector<Subset> subsets_;
};

// Branch and bound for the value only; any direction order works.
class ValueSearch {
public:
    explicit ValueSearch(const Search& s) : s_(s) {}

    long long run() {
        const State root = s_.root();
        ceiling_ = s_.bound(root, 0);
        dfs(root, 0);
        return best_;
    }

private:
    void dfs(const State& st, std::size_t from) {
        best_ = std::max(best_, st.length);
        for (std::size_t j = from; j < s_.size() && best_ < ceiling_; ++j) {
            // the bound only shrinks as j grows
            if (st.length + s_.bound(st, j) <= best_) return;
            std::vector<State> children;
            for (long long k = 1;; ++k) {
                State child = s_.add(st, j, k);
                if (!s_.fits(child)) break;
                children.push_back(std::move(child));
            }
            for (std::size_t c = children.size(); c-- > 0 && best_ < ceiling_;) {
                const State& child = children[c];
                if (child.length + s_.bound(child, j + 1) <= best_) continue;
                dfs(child, j + 1);
            }
        }
    }

    const Search& s_;
    long long best_ = 0;
    long long ceiling_ = 0;
};

// Visits every multiplicity vector of length `target` in lexicographic order
// (directions in search order). The visitor returns false to stop.
template <typename Visit>
class TargetSearch {
public:
    TargetSearch(const Search& s, long long target, Visit visit) : s_(s), target_(target), visit_(visit) {
        counts_.assign(s.size(), 0);
    }

    void run() { dfs(s_.root(), 0); }

private:
    void dfs(const State& st, std::size_t from) {
        if (st.length == target_) {
            if (!visit_(st, counts_)) stop_ = true;
            return;
        }
        for (std::size_t j = s_.size(); j-- > from && !stop_;) {
            if (st.length + s_.bound(st, j) < target_) continue;
            for (long long k = 1; st.length + k <= target_ && !stop_; ++k) {
                const State child = s_.add(st, j, k);
                if (!s_.fits(child)) break;
                if (child.length + s_.bound(child, j + 1) < target_) continue;
                counts_[j] = k;
                dfs(child, j + 1);
                counts_[j] = 0;
            }
        }
    }

    const Search& s_;
    long long target_;
    Visit visit_;
    std::vector<long long> counts_;
    bool stop_ = false;
};

std::vector<Point> checked_directions(const LatticePolytope& p, const SearchBudget& budget) {
    const std::size_t points = count_lattice_points(p);
    if (points > budget.max_points) {
        throw BudgetExceeded("polytope has too many lattice points for the length search", points,
                             budget.max_points);
    }
    std::vector<Point> dirs = candidate_directions(p);
    if (dirs.size() > budget.max_directions) {
        throw BudgetExceeded("too many candidate directions for the length search", dirs.size(),
                             budget.max_directions);
    }
    return dirs;
}

long long search_value(const LatticePolytope& p, const std::vector<Point>& lex_dirs) {
    // Short directions first finds long zonotopes early.
    std::vector<Point> dirs = lex_dirs;
    std::stable_sort(dirs.begin(), dirs.end(), [](Point a, Point b) {
        return std::max(abs_ll(a.x), abs_ll(a.y)) < std::max(abs_ll(b.x), abs_ll(b.y));
    });
    const Search s(p, std::move(dirs));
    return ValueSearch(s).run();
}

std::vector<Summand> summands_of(const Search& s, const std::vector<long long>& counts) {
    std::vector<Summand> out;
    for (std::size_t d = 0; d < counts.size(); ++d) {
        if (counts[d] > 0) out.push_back({s.direction(d), counts[d]});
    }
    return out;
}

}  // namespace

MinkowskiLength minkowski_length(const LatticePolytope& p, const SearchBudget& budget) {
    const std::vector<Point> dirs = checked_directions(p, budget);
    MinkowskiLength result;
    result.length = search_value(p, dirs);
    if (result.length == 0) {
        result.witness = Decomposition(p.vertices().front(), {}, p);
        return result;
    }
    const Search s(p, dirs);
    auto visit = [&](const State& st, const std::vector<long long>& counts) {
        result.witness = Decomposition(s.translations(st).front(), summands_of(s, counts), p);
        return false;
    };
    TargetSearch<decltype(visit)>(s, result.length, visit).run();
    return result;
}

std::vector<Decomposition> enumerate_maximal_decompositions(const LatticePolytope& p, const SearchBudget& budget) {
    const std::vector<Point> dirs = checked_directions(p, budget);
    const long long length = search_value(p, dirs);
    std::vector<Decomposition> out;
    if (length == 0) return out;
    const Search s(p, dirs);
    auto visit = [&](const State& st, const std::vector<long long>& counts) {
        const std::vector<Summand> summands = summands_of(s, counts);
        for (const Point a : s.translations(st)) out.emplace_back(a, summands, p);
        return true;
    };
    TargetSearch<decltype(visit)>(s, length, visit).run();
    return out;
}

namespace {

void require_nonnegative(std::initializer_list<long long> args) {
    for (long long a : args) {
        if (a < 0) throw Error(ErrorCode::negative_argument, "argument " + std::to_string(a));
    }
}

}  // namespace

long long predicted_length_quad_clipped(long long m, long long n, long long l, long long s, long long r) {
    require_nonnegative({m, n, l, s, r});
    if (r < 2 * l) return m + n + s + l + (3 * r) / 2;
    return m + n + s + 2 * l + r;
}

long long predicted_length_zonotope(long long m, long long n, long long l) {
    require_nonnegative({m, n, l});
    return m + n + l;
}

long long scaled_exceptional_length(long long t) {
    require_nonnegative({t});
    return t + t / 2;
}

PeriodCheck is_period_one_up_to(const LatticePolytope& p, long long t_max, const SearchBudget& budget) {
    if (t_max < 2) throw Error(ErrorCode::negative_argument, "t_max must be at least 2");
    const long long base = search_value(p, checked_directions(p, budget));
    PeriodCheck out;
    for (long long t = 2; t <= t_max; ++t) {
        const LatticePolytope tp = dilate(p, t);
        if (search_value(tp, checked_directions(tp, budget)) != t * base) {
            out.period_one = false;
            out.first_failure = t;
            break;
        }
    }
    return out;
}

}  // namespace toriclab
