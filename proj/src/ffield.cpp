#include "toriclab/ffield.hpp"

#include <algorithm>

#include "toriclab/error.hpp"

namespace toriclab {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients mod p, low degree first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
        }
        trim(a);
    }
    return a;
}

Poly digits(std::uint32_t rep, std::uint32_t p, std::uint32_t e) {
    Poly d(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        d[i] = rep % p;
        rep /= p;
    }
    return d;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p) {
    std::uint32_t rep = 0;
    for (std::size_t i = d.size(); i-- > 0;) rep = rep * p + d[i];
    return rep;
}

std::uint32_t schoolbook(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t e,
                         const Poly& modulus) {
    const Poly da = digits(a, p, e);
    const Poly db = digits(b, p, e);
    Poly prod(2 * e - 1, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        for (std::uint32_t j = 0; j < e; ++j) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    Poly r = e == 1 ? prod : poly_mod(prod, modulus, p);
    r.resize(e, 0);
    return undigits(r, p);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q) {
    if (q < 2) return {0, 0};
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return {0, 0};
    return {static_cast<std::uint32_t>(p), e};
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
    const std::size_t deg = monic.size() - 1;
    if (deg <= 1) return deg == 1;
    // Every monic divisor candidate of degree d, enumerated by its low coefficients.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (poly_mod(monic, g, p).empty()) return false;
        }
    }
    return true;
}

FieldSpec make_field(std::uint32_t q) {
    const auto [p, e] = prime_power_decompose(q);
    if (p == 0) throw Error(ErrorCode::not_a_prime_power, std::to_string(q));
    if (q > max_field_size) {
        throw Error(ErrorCode::unsupported_field,
                    "q = " + std::to_string(q) + " exceeds " + std::to_string(max_field_size));
    }

    FieldSpec f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = q;
    if (e == 1) {
        f.modulus_ = {0, 1};
    } else {
        // Lexicographic order with the constant term most significant.
        std::uint32_t count = q;  // p^e candidates for the low coefficients
        for (std::uint32_t idx = 0; idx < count; ++idx) {
            Poly cand(e + 1, 0);
            std::uint32_t v = idx;
            for (std::uint32_t i = e; i-- > 0;) {
                cand[i] = v % p;
                v /= p;
            }
            cand[e] = 1;
            if (is_irreducible_mod_p(cand, p)) {
                f.modulus_ = cand;
                break;
            }
        }
    }

    auto t = std::make_shared<FieldSpec::Tables>();
    t->add.resize(q * q);
    t->mul.resize(q * q);
    t->neg.resize(q);
    t->inv.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
        const Poly da = digits(a, p, e);
        Poly dn(e);
        for (std::uint32_t i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
        t->neg[a] = static_cast<std::uint8_t>(undigits(dn, p));
        for (std::uint32_t b = 0; b < q; ++b) {
            const Poly db = digits(b, p, e);
            Poly ds(e);
            for (std::uint32_t i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
            t->add[a * q + b] = static_cast<std::uint8_t>(undigits(ds, p));
            const std::uint32_t m = schoolbook(a, b, p, e, f.modulus_);
            t->mul[a * q + b] = static_cast<std::uint8_t>(m);
            if (m == 1) t->inv[a] = static_cast<std::uint8_t>(b);
        }
    }
    f.tables_ = std::move(t);
    return f;
}

FieldElement FieldSpec::element(std::uint32_t rep) const {
    if (rep >= q_) {
        throw Error(ErrorCode::unsupported_field,
                    "element index " + std::to_string(rep) + " out of range for q = " + std::to_string(q_));
    }
    return FieldElement{rep};
}

FieldElement FieldSpec::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return FieldElement{static_cast<std::uint32_t>(r)};
}

FieldElement FieldSpec::inv(FieldElement a) const {
    if (a.is_zero()) throw Error(ErrorCode::inverse_of_zero, "inv(0)");
    return FieldElement{tables_->inv[a.rep]};
}

FieldElement FieldSpec::pow(FieldElement a, long long k) const {
    if (a.is_zero()) {
        if (k < 0) throw Error(ErrorCode::inverse_of_zero, "0 raised to a negative power");
        return k == 0 ? one() : zero();
    }
    const long long n = static_cast<long long>(q_) - 1;
    long long r = k % n;
    if (r < 0) r += n;
    FieldElement result = one();
    FieldElement base = a;
    while (r > 0) {
        if (r & 1) result = mul(result, base);
        base = mul(base, base);
        r >>= 1;
    }
    return result;
}

std::uint32_t FieldSpec::order(FieldElement a) const {
    if (a.is_zero()) throw Error(ErrorCode::inverse_of_zero, "order of 0");
    std::uint32_t k = 1;
    FieldElement x = a;
    while (x != one()) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::string FieldSpec::modulus_string() const {
    std::string out;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        const std::uint32_t c = modulus_[i];
        if (c == 0) continue;
        if (!out.empty()) out += "+";
        const bool show_coeff = c != 1 || i == 0;
        if (show_coeff) out += std::to_string(c);
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::vector<FieldElement> units(const FieldSpec& field) {
    std::vector<FieldElement> out;
    out.reserve(field.q() - 1);
    for (std::uint32_t r = 1; r < field.q(); ++r) out.emplace_back(r);
    return out;
}

FieldElement element_of_order(const FieldSpec& field, std::uint32_t t) {
    if (t == 0 || (field.q() - 1) % t != 0) {
        throw Error(ErrorCode::order_not_divisor,
                    std::to_string(t) + " does not divide q-1 = " + std::to_string(field.q() - 1));
    }
    for (std::uint32_t r = 1; r < field.q(); ++r) {
        if (field.order(FieldElement{r}) == t) return FieldElement{r};
    }
    // Unreachable: F_q^x is cyclic, so every divisor of q-1 is an order.
    throw Error(ErrorCode::order_not_divisor, "no element of order " + std::to_string(t));
}

FieldElement schoolbook_mul(const FieldSpec& field, FieldElement a, FieldElement b) {
    return FieldElement{schoolbook(a.rep, b.rep, field.p(), field.e(), field.modulus())};
}

}  // namespace toriclab
