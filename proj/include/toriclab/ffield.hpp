#pragma once

// Exact arithmetic in F_q for prime powers q <= 64.
//
// An element is identified by its canonical index: the coefficient vector of
// its residue polynomial read as a base-p integer (coefficient of x^i is digit
// i). That integer is also the wire format wherever elements are printed.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace toriclab {

struct FieldElement {
    std::uint32_t rep = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t r) : rep(r) {}

    constexpr bool is_zero() const { return rep == 0; }
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

inline constexpr std::uint32_t max_field_size = 64;

class FieldSpec {
public:
    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    /// Monic modulus, coefficients low degree first (size e+1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const { return FieldElement{0}; }
    FieldElement one() const { return FieldElement{1}; }
    /// Element with canonical index `rep`; throws when rep >= q.
    FieldElement element(std::uint32_t rep) const;
    /// Image of an integer under Z -> F_p -> F_q.
    FieldElement from_int(long long v) const;

    FieldElement add(FieldElement a, FieldElement b) const {
        return FieldElement{tables_->add[a.rep * q_ + b.rep]};
    }
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement mul(FieldElement a, FieldElement b) const {
        return FieldElement{tables_->mul[a.rep * q_ + b.rep]};
    }
    FieldElement neg(FieldElement a) const { return FieldElement{tables_->neg[a.rep]}; }
    FieldElement inv(FieldElement a) const;
    /// a^k for any integer k; the exponent is reduced mod q-1 for nonzero a.
    /// 0^0 = 1, 0^k = 0 for k > 0, and 0^k for k < 0 throws.
    FieldElement pow(FieldElement a, long long k) const;

    /// Smallest k >= 1 with a^k = 1 (a nonzero).
    std::uint32_t order(FieldElement a) const;

    /// Raw byte tables (row-major q*q) for hot loops that index directly.
    const std::uint8_t* add_table() const { return tables_->add.data(); }
    const std::uint8_t* mul_table() const { return tables_->mul.data(); }
    const std::uint8_t* neg_table() const { return tables_->neg.data(); }

    /// Modulus as text, e.g. "x^2+x+1".
    std::string modulus_string() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.q_ == b.q_ && a.modulus_ == b.modulus_;
    }

private:
    friend FieldSpec make_field(std::uint32_t q);

    struct Tables {
        std::vector<std::uint8_t> add;
        std::vector<std::uint8_t> mul;
        std::vector<std::uint8_t> neg;
        std::vector<std::uint8_t> inv;
    };

    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const Tables> tables_;
};

/// Builds F_q. The modulus for e > 1 is the lexicographically smallest monic
/// irreducible of degree e (coefficients compared low degree first); for
/// e = 1 it is x, i.e. plain reduction mod p.
FieldSpec make_field(std::uint32_t q);

/// Returns (p, e) with q = p^e, or {0, 0} when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_decompose(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// All q-1 nonzero elements in increasing canonical order.
std::vector<FieldElement> units(const FieldSpec& field);

/// The element of smallest canonical index whose multiplicative order is exactly t.
FieldElement element_of_order(const FieldSpec& field, std::uint32_t t);

/// Schoolbook product of two residues followed by reduction by the modulus.
/// The multiplication table is built from this; exposed for oracle tests.
FieldElement schoolbook_mul(const FieldSpec& field, FieldElement a, FieldElement b);

/// True when the monic polynomial (low degree first) has no monic factor of
/// degree 1..deg/2 over F_p.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& monic, std::uint32_t p);

}  // namespace toriclab
