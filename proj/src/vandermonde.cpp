#include "toriclab/vandermonde.hpp"

#include <algorithm>
#include <map>

#include "toriclab/error.hpp"

namespace toriclab {

namespace {

void invalid(const std::string& what) { throw Error(ErrorCode::invalid_staircase, what); }

std::string column_text(const StaircaseColumn& c) {
    std::string out = std::to_string(c.x.rep) + "->";
    for (std::size_t i = 0; i < c.ys.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(c.ys[i].rep);
    }
    return out;
}

}  // namespace

StaircaseConfig::StaircaseConfig(long long l, std::vector<StaircaseColumn> full, std::vector<StaircaseColumn> partial,
                                 const FieldSpec& field)
    : l_(l), q_(field.q()), full_(std::move(full)), partial_(std::move(partial)) {
    if (l < 1) invalid("l must be at least 1");
    if (static_cast<long long>(full_.size()) != l + 1) invalid("need l+1 full columns");
    if (static_cast<long long>(partial_.size()) != l) invalid("need l partial columns");
    std::vector<FieldElement> xs;
    auto check = [&](StaircaseColumn& c, long long want, const std::string& name) {
        if (c.x.is_zero() || c.x.rep >= q_) invalid(name + ": x must be a nonzero field element");
        if (static_cast<long long>(c.ys.size()) != want) {
            invalid(name + ": expected " + std::to_string(want) + " points, got " + std::to_string(c.ys.size()));
        }
        std::sort(c.ys.begin(), c.ys.end());
        for (std::size_t i = 0; i < c.ys.size(); ++i) {
            if (c.ys[i].is_zero() || c.ys[i].rep >= q_) invalid(name + ": y must be a nonzero field element");
            if (i > 0 && c.ys[i] == c.ys[i - 1]) invalid(name + ": repeated y " + std::to_string(c.ys[i].rep));
        }
        xs.push_back(c.x);
    };
    for (StaircaseColumn& c : full_) check(c, 2 * l + 1, "full column");
    for (std::size_t j = 0; j < partial_.size(); ++j) {
        check(partial_[j], 2 * l - static_cast<long long>(j), "partial column " + std::to_string(j));
    }
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) invalid("column x-values must be distinct");
}

std::vector<StaircaseColumn> StaircaseConfig::groups() const {
    std::vector<StaircaseColumn> out = full_;
    out.insert(out.end(), partial_.begin(), partial_.end());
    return out;
}

std::vector<TorusPoint> StaircaseConfig::points() const {
    std::vector<TorusPoint> out;
    for (const StaircaseColumn& c : groups()) {
        for (const FieldElement y : c.ys) out.emplace_back(c.x, y);
    }
    return out;
}

std::string to_string(const StaircaseConfig& s) {
    std::string out = "l=" + std::to_string(s.l());
    for (const StaircaseColumn& c : s.full_columns()) out += "; full: " + column_text(c);
    for (std::size_t j = 0; j < s.partial_columns().size(); ++j) {
        out += "; partial[" + std::to_string(j) + "]: " + column_text(s.partial_columns()[j]);
    }
    return out;
}

long long staircase_size(long long l) {
    if (l < 1) throw Error(ErrorCode::negative_argument, "staircase length must be at least 1");
    return 7 * l * (l + 1) / 2 + 1;
}

long long threshold_size(long long l, std::uint64_t q) {
    if (l < 1) throw Error(ErrorCode::negative_argument, "staircase length must be at least 1");
    const long long qq = static_cast<long long>(q);
    if (qq <= 2 * l + 1) throw Error(ErrorCode::field_too_small, "need q > 2l+1");
    return 3 * l * qq - 2 * l * l - 3 * l + 1;
}

std::optional<StaircaseConfig> find_staircase(const std::vector<TorusPoint>& t, long long l, const FieldSpec& field) {
    if (l < 1) throw Error(ErrorCode::negative_argument, "staircase length must be at least 1");
    std::map<FieldElement, std::vector<FieldElement>> columns;
    for (const auto& [x, y] : t) {
        if (x.is_zero() || y.is_zero()) continue;
        columns[x].push_back(y);
    }
    std::vector<StaircaseColumn> sorted;
    for (auto& [x, ys] : columns) {
        std::sort(ys.begin(), ys.end());
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        sorted.push_back({x, ys});
    }
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const StaircaseColumn& a, const StaircaseColumn& b) { return a.ys.size() > b.ys.size(); });

    const std::size_t groups = static_cast<std::size_t>(2 * l + 1);
    if (sorted.size() < groups) return std::nullopt;
    std::vector<StaircaseColumn> full;
    std::vector<StaircaseColumn> partial;
    for (std::size_t g = 0; g < groups; ++g) {
        const long long need = g <= static_cast<std::size_t>(l) ? 2 * l + 1 : 2 * l - static_cast<long long>(g) + l + 1;
        StaircaseColumn c = sorted[g];
        if (static_cast<long long>(c.ys.size()) < need) return std::nullopt;
        c.ys.resize(static_cast<std::size_t>(need));
        (g <= static_cast<std::size_t>(l) ? full : partial).push_back(std::move(c));
    }
    return StaircaseConfig(l, std::move(full), std::move(partial), field);
}

namespace {

void require_staircase_polytope(const LatticePolytope& p, const StaircaseConfig& s, const FieldSpec& field) {
    if (field.q() != s.q()) throw Error(ErrorCode::dimension_mismatch, "staircase built over another field");
    if (!(p == staircase_polytope(s.l()))) {
        throw Error(ErrorCode::dimension_mismatch,
                    "polytope " + to_string(p) + " is not the staircase polytope for l = " + std::to_string(s.l()));
    }
    if (!fits_in_box(p, static_cast<long long>(field.q()) - 2)) {
        throw Error(ErrorCode::polytope_outside_box, "polytope " + to_string(p) + " exceeds [0,q-2]^2");
    }
}

}  // namespace

MatrixOverField vandermonde_matrix(const LatticePolytope& p, const StaircaseConfig& s, const FieldSpec& field) {
    require_staircase_polytope(p, s, field);
    const std::vector<Point> rows = lattice_points(p);
    const std::vector<TorusPoint> cols = s.points();
    MatrixOverField v(field, rows.size(), cols.size());
    v.row_labels = rows;
    v.col_labels = cols;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            v.set(i, j, field.mul(field.pow(cols[j].first, rows[i].x), field.pow(cols[j].second, rows[i].y)));
        }
    }
    return v;
}

MatrixOverField block_triangularizer(const StaircaseConfig& s, const LatticePolytope& p, const FieldSpec& field) {
    require_staircase_polytope(p, s, field);
    const std::vector<Point> labels = lattice_points(p);
    const std::vector<StaircaseColumn> groups = s.groups();

    // coeffs[d] = coefficients (low degree first) of prod_{i=1..d} (x - x_i)
    std::vector<std::vector<FieldElement>> coeffs{{field.one()}};
    for (std::size_t d = 1; d < groups.size(); ++d) {
        const std::vector<FieldElement>& prev = coeffs.back();
        std::vector<FieldElement> next(prev.size() + 1, field.zero());
        const FieldElement root = groups[d - 1].x;
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i + 1] = field.add(next[i + 1], prev[i]);
            next[i] = field.sub(next[i], field.mul(root, prev[i]));
        }
        coeffs.push_back(std::move(next));
    }

    MatrixOverField a(field, labels.size(), labels.size());
    a.row_labels = labels;
    for (std::size_t r = 0; r < labels.size(); ++r) {
        for (std::size_t c = 0; c < labels.size(); ++c) {
            const Point row = labels[r];
            const Point col = labels[c];
            if (row.y != col.y || col.x > row.x) continue;
            if (row.x == 0) {
                a.set(r, c, field.one());
            } else {
                a.set(r, c, coeffs[static_cast<std::size_t>(row.x)][static_cast<std::size_t>(col.x)]);
            }
        }
    }
    return a;
}

BlockStructureReport verify_block_structure(const StaircaseConfig& s, const LatticePolytope& p,
                                            const FieldSpec& field) {
    BlockStructureReport report;
    const MatrixOverField v = vandermonde_matrix(p, s, field);
    const MatrixOverField a = block_triangularizer(s, p, field);
    const MatrixOverField av = multiply(a, v);
    const std::vector<StaircaseColumn> groups = s.groups();

    // group index (from 1) of every column
    std::vector<std::size_t> group_of;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        for (std::size_t i = 0; i < groups[g].ys.size(); ++i) group_of.push_back(g + 1);
    }

    report.lower_part_vanishes = true;
    report.diagonal_blocks_vandermonde = true;
    for (std::size_t r = 0; r < av.rows(); ++r) {
        const Point row = v.row_labels[r];
        for (std::size_t c = 0; c < av.cols(); ++c) {
            const std::size_t g = group_of[c];
            const FieldElement entry = av.at(r, c);
            if (row.x >= static_cast<long long>(g)) {
                if (!entry.is_zero() && report.lower_part_vanishes) {
                    report.lower_part_vanishes = false;
                    report.detail += "nonzero below the blocks at row " + to_string(row) + "; ";
                }
            } else if (row.x == static_cast<long long>(g) - 1) {
                const FieldElement xg = groups[g - 1].x;
                FieldElement scalar = field.one();
                for (std::size_t i = 0; i + 1 < g; ++i) scalar = field.mul(scalar, field.sub(xg, groups[i].x));
                const FieldElement expected = field.mul(scalar, field.pow(v.col_labels[c].second, row.y));
                if (scalar.is_zero() || entry != expected) {
                    if (report.diagonal_blocks_vandermonde) {
                        report.detail += "diagonal block " + std::to_string(g) + " is not a scaled Vandermonde; ";
                    }
                    report.diagonal_blocks_vandermonde = false;
                }
            }
        }
    }
    // Diagonal blocks are square with one row per y in 0..size-1.
    for (std::size_t g = 1; g <= groups.size(); ++g) {
        long long rows_here = 0;
        for (const Point& row : v.row_labels) rows_here += row.x == static_cast<long long>(g) - 1;
        if (rows_here != static_cast<long long>(groups[g - 1].ys.size())) {
            report.diagonal_blocks_vandermonde = false;
            report.detail += "block " + std::to_string(g) + " is not square; ";
        }
    }

    report.det_v = determinant(v);
    report.det_v_nonzero = !report.det_v.is_zero();
    report.det_a_is_one = determinant(a) == field.one();
    report.product_det_matches = determinant(av) == report.det_v;
    if (!report.det_v_nonzero) report.detail += "det V = 0; ";
    if (!report.det_a_is_one) report.detail += "det A != 1; ";
    if (!report.product_det_matches) report.detail += "det(A V) != det V; ";
    return report;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::empty_input, "uniform_below(0)");
    const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % n + 1) % n;
    std::uint64_t v = rng();
    while (v > limit) v = rng();
    return v % n;
}

namespace {

// First `count` entries of a partial Fisher-Yates shuffle.
template <typename T>
std::vector<T> sample(std::vector<T> pool, std::size_t count, std::mt19937_64& rng) {
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace

StaircaseConfig random_staircase(long long l, const FieldSpec& field, std::mt19937_64& rng) {
    if (l < 1) throw Error(ErrorCode::negative_argument, "staircase length must be at least 1");
    const std::vector<FieldElement> u = units(field);
    if (static_cast<long long>(u.size()) < 2 * l + 1) {
        throw Error(ErrorCode::field_too_small, "need q-1 >= 2l+1 distinct columns");
    }
    const std::vector<FieldElement> xs = sample(u, static_cast<std::size_t>(2 * l + 1), rng);
    std::vector<StaircaseColumn> full;
    std::vector<StaircaseColumn> partial;
    for (std::size_t g = 0; g < xs.size(); ++g) {
        const bool is_full = g <= static_cast<std::size_t>(l);
        const long long size = is_full ? 2 * l + 1 : 3 * l + 1 - static_cast<long long>(g);
        (is_full ? full : partial).push_back({xs[g], sample(u, static_cast<std::size_t>(size), rng)});
    }
    return StaircaseConfig(l, std::move(full), std::move(partial), field);
}

std::vector<TorusPoint> random_torus_subset(const FieldSpec& field, std::size_t size, std::mt19937_64& rng) {
    std::vector<TorusPoint> all;
    for (const FieldElement x : units(field)) {
        for (const FieldElement y : units(field)) all.emplace_back(x, y);
    }
    if (size > all.size()) throw Error(ErrorCode::field_too_small, "subset larger than the torus");
    std::vector<TorusPoint> out = sample(std::move(all), size, rng);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace toriclab
