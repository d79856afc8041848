#include "toriclab/toric.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <thread>

#include "toriclab/error.hpp"

namespace toriclab {

namespace {

long long reduce_exponent(long long e, long long period) {
    long long r = e % period;
    return r < 0 ? r + period : r;
}

// Reduces exponents mod q-1, merges like terms and drops zeros.
std::vector<Term> normalize(const std::vector<Term>& raw, const FieldSpec& field) {
    const long long period = static_cast<long long>(field.q()) - 1;
    std::map<Point, FieldElement> acc;
    for (const Term& t : raw) {
        const Point e{reduce_exponent(t.exponent.x, period), reduce_exponent(t.exponent.y, period)};
        auto [it, inserted] = acc.try_emplace(e, field.zero());
        it->second = field.add(it->second, t.coefficient);
    }
    std::vector<Term> out;
    for (const auto& [e, c] : acc) {
        if (!c.is_zero()) out.push_back({e, c});
    }
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::hypothesis_violated, what);
}

}  // namespace

SparsePolynomial::SparsePolynomial(std::vector<Term> terms, const FieldSpec& field) : terms_(std::move(terms)) {
    const long long top = static_cast<long long>(field.q()) - 2;
    std::sort(terms_.begin(), terms_.end());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        if (t.exponent.x < 0 || t.exponent.y < 0 || t.exponent.x > top || t.exponent.y > top) {
            throw Error(ErrorCode::polytope_outside_box,
                        "exponent " + to_string(t.exponent) + " outside [0," + std::to_string(top) + "]^2");
        }
        if (t.coefficient.is_zero() || t.coefficient.rep >= field.q()) {
            throw Error(ErrorCode::hypothesis_violated, "coefficients must be nonzero field elements");
        }
        if (i > 0 && terms_[i - 1].exponent == t.exponent) {
            throw Error(ErrorCode::hypothesis_violated, "repeated exponent " + to_string(t.exponent));
        }
    }
}

FieldElement SparsePolynomial::evaluate(const FieldSpec& field, FieldElement x, FieldElement y) const {
    FieldElement acc = field.zero();
    for (const Term& t : terms_) {
        const FieldElement mono = field.mul(field.pow(x, t.exponent.x), field.pow(y, t.exponent.y));
        acc = field.add(acc, field.mul(t.coefficient, mono));
    }
    return acc;
}

SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b, const FieldSpec& field) {
    std::vector<Term> raw;
    for (const Term& s : a.terms()) {
        for (const Term& t : b.terms()) {
            raw.push_back({s.exponent + t.exponent, field.mul(s.coefficient, t.coefficient)});
        }
    }
    return SparsePolynomial(normalize(raw, field), field);
}

long long count_zeros(const SparsePolynomial& f, const FieldSpec& field) {
    long long zeros = 0;
    for (const FieldElement x : units(field)) {
        for (const FieldElement y : units(field)) {
            if (f.evaluate(field, x, y).is_zero()) ++zeros;
        }
    }
    return zeros;
}

ToricCode build_code(const LatticePolytope& p, std::uint32_t q) {
    FieldSpec field = make_field(q);
    const long long top = static_cast<long long>(q) - 2;
    const BoundingBox b = p.bbox();
    if (b.max.x - b.min.x > top || b.max.y - b.min.y > top) {
        throw Error(ErrorCode::field_too_small,
                    "polytope " + to_string(p) + " is wider than q-2 = " + std::to_string(top));
    }
    if (!fits_in_box(p, top)) {
        throw Error(ErrorCode::polytope_outside_box,
                    "polytope " + to_string(p) + " is not inside [0," + std::to_string(top) + "]^2");
    }

    std::vector<Point> exponents = lattice_points(p);
    const std::vector<FieldElement> u = units(field);
    // powers[x][e] = x^e for e in [0, q-2]
    std::vector<std::vector<FieldElement>> powers(q);
    for (const FieldElement x : u) {
        powers[x.rep].push_back(field.one());
        for (long long e = 1; e <= top; ++e) powers[x.rep].push_back(field.mul(powers[x.rep].back(), x));
    }

    MatrixOverField g(field, exponents.size(), u.size() * u.size());
    g.row_labels = exponents;
    for (const FieldElement x : u) {
        for (const FieldElement y : u) g.col_labels.emplace_back(x, y);
    }
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) {
            const auto [x, y] = g.col_labels[j];
            g.set(i, j, field.mul(powers[x.rep][exponents[i].x], powers[y.rep][exponents[i].y]));
        }
    }
    const std::size_t r = rank(g);
    if (r != exponents.size()) {
        throw Error(ErrorCode::hypothesis_violated,
                    "generator rank " + std::to_string(r) + " differs from #P = " + std::to_string(exponents.size()));
    }
    return ToricCode(std::move(field), p, std::move(exponents), std::move(g));
}

std::uint64_t min_distance_steps(const ToricCode& code) {
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t q = code.field().q();
    // 1 + q + ... + q^(k-1) projective messages
    std::uint64_t messages = 0;
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < code.k(); ++i) {
        if (messages > cap - power) return cap;
        messages += power;
        if (i + 1 < code.k()) {
            if (power > cap / q) return cap;
            power *= q;
        }
    }
    const std::uint64_t n = code.n();
    if (n != 0 && messages > cap / n) return cap;
    return messages * n;
}

namespace {

class MinDistanceWorker {
public:
    MinDistanceWorker(const ToricCode& code, std::atomic<long long>& best)
        : f_(code.field()), k_(code.k()), n_(code.n()), q_(code.field().q()), best_(best) {
        const std::uint8_t* mul = f_.mul_table();
        scaled_.assign(k_, std::vector<std::uint8_t>(q_ * n_));
        for (std::size_t i = 0; i < k_; ++i) {
            for (std::uint32_t c = 0; c < q_; ++c) {
                for (std::size_t j = 0; j < n_; ++j) {
                    scaled_[i][c * n_ + j] = mul[c * q_ + code.generator().at(i, j).rep];
                }
            }
        }
        partial_.assign(k_ + 1, std::vector<std::uint8_t>(n_));
    }

    /// Messages whose first nonzero entry (equal to 1) is at `lead`, with the
    /// next coefficient fixed to `next` when lead + 1 < k.
    void run(std::size_t lead, std::uint32_t next) {
        const std::uint8_t* row = &scaled_[lead][1 * n_];
        if (lead + 1 < k_) {
            const std::uint8_t* add = f_.add_table();
            const std::uint8_t* other = &scaled_[lead + 1][next * n_];
            std::vector<std::uint8_t>& start = partial_[lead + 2];
            for (std::size_t j = 0; j < n_; ++j) start[j] = add[row[j] * q_ + other[j]];
            descend(lead + 2);
        } else {
            std::copy(row, row + n_, partial_[lead + 1].begin());
            descend(lead + 1);
        }
    }

private:
    // partial_[i] holds the codeword accumulated from rows < i.
    void descend(std::size_t i) {
        const std::vector<std::uint8_t>& cur = partial_[i];
        if (i == k_) {
            long long limit = best_.load(std::memory_order_relaxed);
            long long w = 0;
            for (std::size_t j = 0; j < n_ && w < limit; ++j) w += cur[j] != 0;
            offer(w);
            return;
        }
        if (i + 1 == k_) {
            const std::uint8_t* neg = f_.neg_table();
            negated_.resize(n_);
            for (std::size_t j = 0; j < n_; ++j) negated_[j] = neg[cur[j]];
            for (std::uint32_t c = 0; c < q_; ++c) {
                const std::uint8_t* row = &scaled_[i][c * n_];
                const long long limit = best_.load(std::memory_order_relaxed);
                long long w = 0;
                for (std::size_t j = 0; j < n_ && w < limit; ++j) w += row[j] != negated_[j];
                offer(w);
            }
            return;
        }
        const std::uint8_t* add = f_.add_table();
        std::vector<std::uint8_t>& nxt = partial_[i + 1];
        for (std::uint32_t c = 0; c < q_; ++c) {
            const std::uint8_t* row = &scaled_[i][c * n_];
            for (std::size_t j = 0; j < n_; ++j) nxt[j] = add[cur[j] * q_ + row[j]];
            descend(i + 1);
        }
    }

    void offer(long long w) {
        long long cur = best_.load(std::memory_order_relaxed);
        while (w < cur && !best_.compare_exchange_weak(cur, w, std::memory_order_relaxed)) {
        }
    }

    const FieldSpec& f_;
    std::size_t k_;
    std::size_t n_;
    std::uint32_t q_;
    std::atomic<long long>& best_;
    std::vector<std::vector<std::uint8_t>> scaled_;
    std::vector<std::vector<std::uint8_t>> partial_;
    std::vector<std::uint8_t> negated_;
};

}  // namespace

MinDistanceResult min_distance_exhaustive(const ToricCode& code, const MinDistanceOptions& options) {
    const std::uint64_t steps = min_distance_steps(code);
    if (steps > options.budget) {
        throw BudgetExceeded("exhaustive minimum distance", steps, options.budget);
    }
    const std::size_t k = code.k();
    const std::uint32_t q = code.field().q();

    // Disjoint tasks: (lead, next coefficient).
    std::vector<std::pair<std::size_t, std::uint32_t>> tasks;
    for (std::size_t lead = 0; lead < k; ++lead) {
        if (lead + 1 < k) {
            for (std::uint32_t c = 0; c < q; ++c) tasks.emplace_back(lead, c);
        } else {
            tasks.emplace_back(lead, 0);
        }
    }

    std::atomic<long long> best(static_cast<long long>(code.n()) + 1);
    std::atomic<std::size_t> next_task(0);
    auto work = [&] {
        MinDistanceWorker worker(code, best);
        for (std::size_t t = next_task.fetch_add(1); t < tasks.size(); t = next_task.fetch_add(1)) {
            worker.run(tasks[t].first, tasks[t].second);
        }
    };
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    return MinDistanceResult{best.load(), steps};
}

long long max_zeros(const ToricCode& code, const MinDistanceOptions& options) {
    return static_cast<long long>(code.n()) - min_distance_exhaustive(code, options).d;
}

SparsePolynomial construct_extremal_poly(long long m, long long n, long long l, long long t, std::uint32_t q) {
    require(0 <= n && n <= m && m <= l, "need 0 <= n <= m <= l");
    require(m <= t && t <= l, "need m <= t <= l");
    require(t >= 1 && (static_cast<long long>(q) - 1) % t == 0, "t must divide q-1");
    require(l <= static_cast<long long>(q) - 1, "need l <= q-1");
    const FieldSpec f = make_field(q);
    const FieldElement alpha = element_of_order(f, static_cast<std::uint32_t>(t));

    std::vector<FieldElement> subgroup;
    for (long long i = 1; i <= t; ++i) subgroup.push_back(f.pow(alpha, i));
    std::vector<FieldElement> c_set = subgroup;
    for (const FieldElement u : units(f)) {
        if (static_cast<long long>(c_set.size()) == l) break;
        if (std::find(subgroup.begin(), subgroup.end(), u) == subgroup.end()) c_set.push_back(u);
    }

    // monomial minus constant, reduced onto the torus
    auto binomial = [&](Point e, FieldElement c) {
        return SparsePolynomial(normalize({{e, f.one()}, {{0, 0}, f.neg(c)}}, f), f);
    };
    SparsePolynomial out({{{0, 0}, f.one()}}, f);
    for (long long i = 1; i <= m; ++i) out = multiply(out, binomial({1, 0}, f.pow(alpha, i)), f);
    for (long long i = 1; i <= n; ++i) out = multiply(out, binomial({0, 1}, f.pow(alpha, i)), f);
    for (const FieldElement c : c_set) out = multiply(out, binomial({1, 1}, c), f);
    return out;
}

namespace {

void require_prime_power(std::uint64_t q) {
    if (prime_power_decompose(q).first == 0) throw Error(ErrorCode::not_a_prime_power, std::to_string(q));
}

bool some_divisor_in(long long lo, long long hi, std::uint64_t q) {
    for (long long t = std::max(1LL, lo); t <= hi; ++t) {
        if ((q - 1) % static_cast<std::uint64_t>(t) == 0) return true;
    }
    return false;
}

// q - 1 - M sqrt(q) > rhs, decided in integers.
bool sqrt_hypothesis(std::uint64_t q, long long m_coeff, long long rhs) {
    const __int128 lhs = static_cast<__int128>(q) - 1 - rhs;
    if (lhs <= 0) return false;
    return lhs * lhs > static_cast<__int128>(m_coeff) * m_coeff * static_cast<__int128>(q);
}

}  // namespace

MinDistancePrediction predicted_min_dist_zonotope(long long m, long long n, long long l, std::uint64_t q) {
    require_prime_power(q);
    require(0 <= n && n <= m && m <= l, "need 0 <= n <= m <= l");
    require(some_divisor_in(m, l, q), "no t in [m, l] divides q-1");
    const long long r = static_cast<long long>(q) - 1;
    const long long area = m * n + m * l + n * l;
    MinDistancePrediction out;
    out.d = r * r - (m + n + l) * r + l * (m + n);
    out.hypothesis_satisfied = sqrt_hypothesis(q, std::max(2 * area - 1, 6LL), area);
    return out;
}

MinDistancePrediction predicted_min_dist_special_quad(long long m, long long n, long long l, long long s,
                                                      std::uint64_t q) {
    require_prime_power(q);
    require(m >= 0 && n >= 0 && l >= 0 && s >= 0, "arguments must be nonnegative");
    require(n + 2 * l <= m + 2 * l && m + 2 * l <= s, "need n+2l <= m+2l <= s");
    require(some_divisor_in(m + 2 * l, s, q), "no t in [m+2l, s] divides q-1");
    const long long r = static_cast<long long>(q) - 1;
    const long long length = m + n + s + 4 * l;
    const long long a = 2 * l + m;
    const long long b = 2 * l + n;
    const long long twice_area = area2(quad_clipped(m, n, l, s, 2 * l));
    MinDistancePrediction out;
    out.d = r * r - length * r + s * (m + n + 4 * l);
    out.hypothesis_satisfied = sqrt_hypothesis(q, std::max(twice_area - 1, 6LL), s * a + s * b + a * b);
    return out;
}

long long predicted_min_dist_staircase(long long l, std::uint64_t q) {
    if (l < 0) throw Error(ErrorCode::negative_argument, "l = " + std::to_string(l));
    require_prime_power(q);
    const long long r = static_cast<long long>(q) - 1;
    if (r - 1 < 2 * l) {
        throw Error(ErrorCode::field_too_small, "need q-2 >= 2l, got q = " + std::to_string(q));
    }
    return (r - 2 * l) * (r - l);
}

}  // namespace toriclab
