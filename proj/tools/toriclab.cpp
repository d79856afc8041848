// toriclab: command-line driver for polytopes, toric codes and the
// verification sweeps.
//
// Exit codes: 0 success, 1 budget exceeded or a failing verification case,
// 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "toriclab/dsl.hpp"
#include "toriclab/error.hpp"
#include "toriclab/ffield.hpp"
#include "toriclab/minklen.hpp"
#include "toriclab/polytope.hpp"
#include "toriclab/toric.hpp"
#include "toriclab/vandermonde.hpp"

using namespace toriclab;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

enum class Format { table, json, csv };

struct Globals {
    bool json = false;
    bool csv = false;
    bool timing = false;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::uint64_t budget = MinDistanceOptions{}.budget;
    std::size_t max_points = SearchBudget{}.max_points;
    std::size_t max_directions = SearchBudget{}.max_directions;

    Format format() const { return json ? Format::json : csv ? Format::csv : Format::table; }
    SearchBudget search_budget() const { return {max_points, max_directions}; }
    MinDistanceOptions min_distance_options() const { return {budget, threads}; }
};

/// Usage problems detected after parsing (unknown predictor form etc).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string value_text(const json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

/// Flat key/value record: a two-column table, one JSON object, or CSV.
void print_record(const json& record, Format format) {
    if (format == Format::json) {
        std::cout << record.dump() << '\n';
        return;
    }
    if (format == Format::csv) {
        std::string header, row;
        for (auto it = record.begin(); it != record.end(); ++it) {
            if (it != record.begin()) {
                header += ',';
                row += ',';
            }
            header += csv_field(it.key());
            row += csv_field(value_text(it.value()));
        }
        std::cout << header << '\n' << row << '\n';
        return;
    }
    std::size_t width = 0;
    for (auto it = record.begin(); it != record.end(); ++it) width = std::max(width, it.key().size());
    for (auto it = record.begin(); it != record.end(); ++it)
        std::cout << std::left << std::setw(static_cast<int>(width) + 2) << it.key() << value_text(it.value()) << '\n';
}

// ---------------------------------------------------------------- poly

int cmd_poly(const Globals& g, const std::string& spec, bool with_length) {
    const LatticePolytope p = parse_polytope(spec);
    json r;
    r["polytope"] = spec;
    r["vertices"] = to_string(p);
    r["points"] = count_lattice_points(p);
    r["boundary"] = boundary_count(p);
    r["area2"] = area2(p);
    r["lattice_diameter"] = lattice_diameter(p);
    if (with_length) {
        const MinkowskiLength ml = minkowski_length(p, g.search_budget());
        r["minkowski_length"] = ml.length;
        r["witness"] = to_string(ml.witness);
    }
    print_record(r, g.format());
    return exit_ok;
}

// ---------------------------------------------------------------- code

/// Closed form for the recognised families; the zonotope and special quad
/// forms are normalised by the lattice symmetries that permute their edges.
MinDistancePrediction predict(const PolytopeExpr& e, std::uint64_t q) {
    if (e.kind == PolytopeExpr::Kind::zono) {
        std::vector<long long> a = e.args;
        std::sort(a.begin(), a.end());
        return predicted_min_dist_zonotope(a[1], a[0], a[2], q);
    }
    if (e.kind == PolytopeExpr::Kind::quad) {
        const long long m = e.args[0], n = e.args[1], l = e.args[2], s = e.args[3], r = e.args[4];
        if (l == 0 && s == 0 && m == n && r == m && m >= 1) {
            const long long d = predicted_min_dist_staircase(m, q);
            return {d, q > static_cast<std::uint64_t>(2 * m + 1)};
        }
        if (r == 2 * l) return predicted_min_dist_special_quad(std::max(m, n), std::min(m, n), l, s, q);
    }
    throw UsageError("no closed form for this polytope; supported: zono:m,n,l, quad:m,n,l,s,2l, quad:l,l,0,0,l");
}

int cmd_code(const Globals& g, const std::string& spec, std::uint32_t q, const std::string& method) {
    const PolytopeExpr expr = parse_polytope_expr(spec);
    const LatticePolytope p = evaluate(expr);
    if (prime_power_decompose(q).first == 0) throw Error(ErrorCode::not_a_prime_power, std::to_string(q));
    json r;
    r["polytope"] = spec;
    r["q"] = q;
    if (method == "predict") {
        const MinDistancePrediction pred = predict(expr, q);
        r["n"] = (static_cast<std::uint64_t>(q) - 1) * (q - 1);
        r["k"] = count_lattice_points(p);
        r["d"] = pred.d;
        r["method"] = "predicted";
        r["hypothesis_satisfied"] = pred.hypothesis_satisfied;
        r["steps"] = 0;
    } else {
        const ToricCode code = build_code(p, q);
        const MinDistanceResult res = min_distance_exhaustive(code, g.min_distance_options());
        r["n"] = code.n();
        r["k"] = code.k();
        r["d"] = res.d;
        r["method"] = "exhaustive";
        r["hypothesis_satisfied"] = nullptr;
        r["steps"] = res.steps;
    }
    print_record(r, g.format());
    return exit_ok;
}

// ---------------------------------------------------------------- field

int cmd_field(const Globals& g, std::uint64_t q) {
    const auto [p, e] = prime_power_decompose(q);
    if (p == 0) throw Error(ErrorCode::not_a_prime_power, std::to_string(q));
    if (q > max_field_size) throw Error(ErrorCode::unsupported_field, "q must be at most 64");
    const FieldSpec f = make_field(static_cast<std::uint32_t>(q));
    const std::uint32_t units_count = f.q() - 1;

    json r;
    r["q"] = q;
    r["p"] = p;
    r["e"] = e;
    r["modulus"] = f.modulus_string();
    r["primitive_element"] = element_of_order(f, units_count).rep;
    std::string orders;
    for (std::uint32_t t = 1; t <= units_count; ++t) {
        if (units_count % t != 0) continue;
        if (!orders.empty()) orders += ';';
        orders += std::to_string(t) + ":" + std::to_string(element_of_order(f, t).rep);
    }
    r["elements_of_order"] = orders;
    print_record(r, g.format());
    return exit_ok;
}

// ---------------------------------------------------------------- verify

struct CaseRecord {
    std::string input;
    json predicted;
    json computed;
    json hypothesis;  // null when the case has no hypothesis
    std::uint64_t steps = 0;
    double elapsed_ms = 0;
    std::string status;  // pass, fail, skip
    std::string reason;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CaseRecord> cases;

    std::size_t count(const std::string& status) const {
        return static_cast<std::size_t>(
            std::count_if(cases.begin(), cases.end(), [&](const CaseRecord& c) { return c.status == status; }));
    }
};

/// Runs one case, timing it and turning budget errors into skips.
CaseRecord run_case(const std::string& input, const std::function<void(CaseRecord&)>& body) {
    CaseRecord c;
    c.input = input;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
        if (c.status.empty()) c.status = c.predicted == c.computed ? "pass" : "fail";
    } catch (const BudgetExceeded& e) {
        c.status = "skip";
        c.reason = "budget: required " + std::to_string(e.required()) + ", budget " + std::to_string(e.budget());
    }
    c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return c;
}

void print_report(const Report& rep, const Globals& g) {
    const Format format = g.format();
    if (format == Format::json) {
        json j;
        j["suite"] = rep.suite;
        j["seed"] = rep.seed;
        j["cases"] = json::array();
        for (const CaseRecord& c : rep.cases) {
            json k;
            k["input"] = c.input;
            k["predicted"] = c.predicted;
            k["computed"] = c.computed;
            k["hypothesis_satisfied"] = c.hypothesis;
            k["steps"] = c.steps;
            if (g.timing) k["elapsed_ms"] = c.elapsed_ms;
            k["status"] = c.status;
            k["reason"] = c.reason.empty() ? json(nullptr) : json(c.reason);
            j["cases"].push_back(k);
        }
        j["summary"] = {{"pass", rep.count("pass")}, {"fail", rep.count("fail")}, {"skip", rep.count("skip")}};
        std::cout << j.dump(2) << '\n';
        return;
    }

    std::vector<std::string> header{"input", "predicted", "computed", "hypothesis", "steps"};
    if (g.timing) header.push_back("elapsed_ms");
    header.push_back("status");
    header.push_back("reason");
    std::vector<std::vector<std::string>> rows;
    for (const CaseRecord& c : rep.cases) {
        std::vector<std::string> row{c.input, value_text(c.predicted), value_text(c.computed), value_text(c.hypothesis),
                                     std::to_string(c.steps)};
        if (g.timing) {
            std::ostringstream t;
            t << std::fixed << std::setprecision(1) << c.elapsed_ms;
            row.push_back(t.str());
        }
        row.push_back(c.status);
        row.push_back(c.reason.empty() ? "-" : c.reason);
        rows.push_back(std::move(row));
    }

    if (format == Format::csv) {
        std::cout << "suite,seed\n" << rep.suite << ',' << rep.seed << '\n';
        for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
        std::cout << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_field(row[i]);
            std::cout << '\n';
        }
        return;
    }

    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i + 1 == row.size()) std::cout << row[i];
            else std::cout << std::left << std::setw(static_cast<int>(width[i]) + 2) << row[i];
        }
        std::cout << '\n';
    };
    std::cout << "suite " << rep.suite << "  seed " << rep.seed << '\n';
    line(header);
    for (const auto& row : rows) line(row);
    std::cout << "summary: " << rep.count("pass") << " pass, " << rep.count("fail") << " fail, " << rep.count("skip")
              << " skip\n";
}

struct VerifyArgs {
    std::string suite;
    std::vector<long long> max{2, 2, 3, 2, 3};
    std::string which = "small";
    long long l = 1;
    std::uint32_t q = 5;
    std::size_t trials = 100;
    bool exhaustive = false;
    std::size_t sweep_directions = 256;
};

std::string quad_key(long long m, long long n, long long l, long long s, long long r) {
    return "quad:" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(s) +
           "," + std::to_string(r);
}

/// Calls visit(m, n, l, s, r) over the box [0, max]^5 in lexicographic order.
void for_each_quad(const std::vector<long long>& max,
                   const std::function<void(long long, long long, long long, long long, long long)>& visit) {
    for (long long m = 0; m <= max[0]; ++m)
        for (long long n = 0; n <= max[1]; ++n)
            for (long long l = 0; l <= max[2]; ++l)
                for (long long s = 0; s <= max[3]; ++s)
                    for (long long r = 0; r <= max[4]; ++r) visit(m, n, l, s, r);
}

void suite_minkowski(Report& rep, const Globals& g, const VerifyArgs& a) {
    const SearchBudget budget{g.max_points, std::max(g.max_directions, a.sweep_directions)};
    for_each_quad(a.max, [&](long long m, long long n, long long l, long long s, long long r) {
        rep.cases.push_back(run_case(quad_key(m, n, l, s, r), [&](CaseRecord& c) {
            const LatticePolytope p = quad_clipped(m, n, l, s, r);
            c.predicted = predicted_length_quad_clipped(m, n, l, s, r);
            c.steps = count_lattice_points(p);
            if (c.steps > budget.max_points) {
                c.status = "skip";
                c.reason = "budget: #P = " + std::to_string(c.steps) + " exceeds " + std::to_string(budget.max_points);
                return;
            }
            c.computed = minkowski_length(p, budget).length;
        }));
    });
}

void suite_boundary(Report& rep, const VerifyArgs& a) {
    for_each_quad(a.max, [&](long long m, long long n, long long l, long long s, long long r) {
        rep.cases.push_back(run_case(quad_key(m, n, l, s, r), [&](CaseRecord& c) {
            const LatticePolytope p = quad_clipped(m, n, l, s, r);
            const long long points = static_cast<long long>(count_lattice_points(p));
            const long long boundary = boundary_count(p);
            long long edge_gcds = 0;
            const auto& v = p.vertices();
            if (v.size() == 2) edge_gcds = lattice_length(v[1] - v[0]) + 1;
            else if (v.size() > 2)
                for (std::size_t i = 0; i < v.size(); ++i) edge_gcds += lattice_length(v[(i + 1) % v.size()] - v[i]);
            const bool enumerated = static_cast<long long>(boundary_lattice_points(p).size()) == boundary;
            const bool gcd_sum = v.size() == 1 ? boundary == 1 : edge_gcds == boundary;
            // Pick: 2 #P = 2 Area + #boundary + 2 for full-dimensional P.
            const bool pick = p.dimension() < 2 || 2 * points == area2(p) + boundary + 2;
            // Fixed formula for these polygons: #boundary = 3r + 2(m + n + s + l) once full-dimensional.
            c.predicted = p.dimension() < 2 ? json(boundary) : json(3 * r + 2 * (m + n + s + l));
            c.computed = boundary;
            c.steps = static_cast<std::uint64_t>(points);
            if (!(enumerated && gcd_sum && pick)) {
                c.status = "fail";
                c.reason = std::string(enumerated ? "" : "enumeration ") + (gcd_sum ? "" : "edge-gcd ") +
                           (pick ? "" : "pick");
            }
        }));
    });
}

void suite_mindist(Report& rep, const Globals& g, const VerifyArgs& a) {
    const bool small = a.which == "small" || a.which == "all";
    const bool zono = a.which == "zonotope" || a.which == "all";
    if (!small && !zono) throw UsageError("unknown --suite '" + a.which + "' (small, zonotope, all)");
    if (small) {
        for (std::uint32_t q : {4u, 5u, 7u}) {
            rep.cases.push_back(run_case("quad:1,1,0,0,1 q=" + std::to_string(q), [&](CaseRecord& c) {
                c.predicted = predicted_min_dist_staircase(1, q);
                c.hypothesis = q > 3;
                const ToricCode code = build_code(staircase_polytope(1), q);
                const MinDistanceResult res = min_distance_exhaustive(code, g.min_distance_options());
                c.computed = res.d;
                c.steps = res.steps;
            }));
        }
    }
    if (zono) {
        const std::vector<std::pair<std::vector<long long>, std::uint32_t>> cases{{{0, 0, 1}, 41}, {{1, 0, 1}, 43}};
        for (const auto& [mnl, q] : cases) {
            const std::string key = "zono:" + std::to_string(mnl[0]) + "," + std::to_string(mnl[1]) + "," +
                                    std::to_string(mnl[2]) + " q=" + std::to_string(q);
            rep.cases.push_back(run_case(key, [&](CaseRecord& c) {
                const MinDistancePrediction pred = predicted_min_dist_zonotope(mnl[0], mnl[1], mnl[2], q);
                c.predicted = pred.d;
                c.hypothesis = pred.hypothesis_satisfied;
                const ToricCode code = build_code(zonotope(mnl[0], mnl[1], mnl[2]), q);
                const MinDistanceResult res = min_distance_exhaustive(code, g.min_distance_options());
                c.computed = res.d;
                c.steps = res.steps;
            }));
        }
    }
}

/// Visits every size-k subset of [0, n) in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void suite_staircase(Report& rep, const VerifyArgs& a) {
    const FieldSpec f = make_field(a.q);
    const std::size_t size = static_cast<std::size_t>(threshold_size(a.l, a.q));
    if (a.exhaustive) {
        std::vector<TorusPoint> torus;
        for (FieldElement x : units(f))
            for (FieldElement y : units(f)) torus.emplace_back(x, y);
        std::size_t total = 0, found = 0;
        for_each_subset(torus.size(), size, [&](const std::vector<std::size_t>& idx) {
            std::vector<TorusPoint> t;
            for (std::size_t i : idx) t.push_back(torus[i]);
            ++total;
            found += find_staircase(t, a.l, f).has_value();
        });
        rep.cases.push_back(run_case("all subsets of size " + std::to_string(size), [&](CaseRecord& c) {
            c.predicted = total;
            c.computed = found;
            c.steps = total;
        }));
        return;
    }
    std::mt19937_64 rng(rep.seed);
    for (std::size_t i = 0; i < a.trials; ++i) {
        const std::vector<TorusPoint> t = random_torus_subset(f, size, rng);
        rep.cases.push_back(run_case("trial " + std::to_string(i), [&](CaseRecord& c) {
            const auto s = find_staircase(t, a.l, f);
            c.predicted = "found";
            c.computed = s ? "found" : "none";
            c.steps = t.size();
        }));
    }
}

void suite_vandermonde(Report& rep, const VerifyArgs& a) {
    const FieldSpec f = make_field(a.q);
    const LatticePolytope p = staircase_polytope(a.l);
    std::mt19937_64 rng(rep.seed);
    for (std::size_t i = 0; i < a.trials; ++i) {
        const StaircaseConfig s = random_staircase(a.l, f, rng);
        rep.cases.push_back(run_case("trial " + std::to_string(i), [&](CaseRecord& c) {
            const BlockStructureReport b = verify_block_structure(s, p, f);
            c.predicted = "nonzero";
            c.computed = b.det_v_nonzero ? "nonzero" : "zero";
            c.steps = static_cast<std::uint64_t>(staircase_size(a.l));
            if (!b.passed()) {
                c.status = "fail";
                c.reason = b.detail.empty() ? "block structure" : b.detail;
            }
        }));
    }
}

int cmd_verify(const Globals& g, const VerifyArgs& a) {
    Report rep;
    rep.suite = a.suite;
    rep.seed = g.seed;
    if (a.max.size() != 5) throw UsageError("--max takes five bounds m,n,l,s,r");
    if (a.suite == "minkowski") suite_minkowski(rep, g, a);
    else if (a.suite == "boundary") suite_boundary(rep, a);
    else if (a.suite == "mindist") suite_mindist(rep, g, a);
    else if (a.suite == "staircase") suite_staircase(rep, a);
    else if (a.suite == "vandermonde") suite_vandermonde(rep, a);
    std::stable_sort(rep.cases.begin(), rep.cases.end(), [](const CaseRecord& x, const CaseRecord& y) {
        // Numeric-aware order for "trial N" keys; everything else is generated in order.
        auto trial = [](const std::string& s) -> std::optional<long long> {
            if (s.rfind("trial ", 0) != 0) return std::nullopt;
            return std::stoll(s.substr(6));
        };
        const auto tx = trial(x.input), ty = trial(y.input);
        if (tx && ty) return *tx < *ty;
        return false;
    });
    print_report(rep, g);
    return rep.count("fail") == 0 ? exit_ok : exit_failure;
}

/// True when argv sets the step budget explicitly.
bool budget_on_command_line(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string s = argv[i];
        if (s == "--budget" || s.rfind("--budget=", 0) == 0) return true;
    }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice polytopes, Minkowski length and toric codes"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Optional key=value file setting budget, seed, threads");

    Globals g;
    auto* fmt = app.add_option_group("format");
    fmt->add_flag("--json", g.json, "Machine-readable JSON output");
    fmt->add_flag("--csv", g.csv, "Machine-readable CSV output");
    fmt->require_option(0, 1);
    app.add_option("--seed", g.seed, "Seed for randomized commands")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads (0 = hardware)")->capture_default_str();
    app.add_option("--budget", g.budget, "Step budget for exhaustive min distance")->capture_default_str();
    app.add_option("--max-points", g.max_points, "Point budget for Minkowski length search")->capture_default_str();
    app.add_option("--max-directions", g.max_directions, "Direction budget for Minkowski length search")
        ->capture_default_str();
    app.add_flag("--timing", g.timing, "Include per-case elapsed time in reports");

    std::string spec;
    bool no_length = false;
    auto* poly = app.add_subcommand("poly", "Describe a polytope given in the DSL");
    poly->fallthrough();
    poly->add_option("spec", spec, "Polytope, e.g. simplex:2 or zono:1,1,1")->required();
    poly->add_flag("--no-length", no_length, "Skip the Minkowski length search");

    std::uint32_t q = 0;
    std::string method = "exhaustive";
    auto* code = app.add_subcommand("code", "Toric code parameters and minimum distance");
    code->fallthrough();
    code->add_option("spec", spec, "Polytope in the DSL")->required();
    code->add_option("--q", q, "Field size")->required();
    code->add_option("--method", method, "exhaustive or predict")
        ->check(CLI::IsMember({"exhaustive", "predict"}))
        ->capture_default_str();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->fallthrough();
    verify->add_option("name", va.suite, "Suite: minkowski, mindist, staircase, vandermonde or boundary")
        ->required()
        ->check(CLI::IsMember({"minkowski", "mindist", "staircase", "vandermonde", "boundary"}));
    verify->add_option("--max", va.max, "Sweep bounds m,n,l,s,r")->delimiter(',')->expected(5);
    verify->add_option("--suite", va.which, "mindist cases: small, zonotope or all")->capture_default_str();
    verify->add_option("--l", va.l, "Staircase parameter")->capture_default_str();
    verify->add_option("--q", va.q, "Field size")->capture_default_str();
    verify->add_option("--trials", va.trials, "Random trials")->capture_default_str();
    verify->add_flag("--exhaustive", va.exhaustive, "staircase: enumerate every threshold-size subset");
    verify->add_option("--sweep-directions", va.sweep_directions, "minkowski: direction budget for the sweep")
        ->capture_default_str();

    std::uint64_t field_q = 0;
    auto* field = app.add_subcommand("field", "Describe F_q");
    field->fallthrough();
    field->add_option("q", field_q, "Field size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (!budget_on_command_line(argc, argv)) {
        if (const char* env = std::getenv("TORICLAB_BUDGET"); env != nullptr && *env != '\0') {
            try {
                std::size_t used = 0;
                g.budget = std::stoull(env, &used);
                if (used != std::string(env).size()) throw std::invalid_argument(env);
            } catch (const std::exception&) {
                std::cerr << "error: TORICLAB_BUDGET must be a nonnegative integer\n";
                return exit_usage;
            }
        }
    }

    try {
        if (*poly) return cmd_poly(g, spec, !no_length);
        if (*code) return cmd_code(g, spec, q, method);
        if (*verify) return cmd_verify(g, va);
        if (*field) return cmd_field(g, field_q);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        if (g.format() == Format::json) {
            json r;
            r["error"] = "budget_exceeded";
            r["required"] = e.required();
            r["budget"] = e.budget();
            std::cout << r.dump() << '\n';
        }
        return exit_failure;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
