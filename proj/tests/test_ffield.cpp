#include <doctest.h>

#include <vector>

#include "toriclab/error.hpp"
#include "toriclab/ffield.hpp"

using namespace toriclab;

namespace {

// Independent multiplication oracle for extension fields: shift-and-add with
// x^e replaced by minus the low part of the modulus at every shift.
std::uint32_t oracle_mul(const FieldSpec& f, std::uint32_t a, std::uint32_t b) {
    const std::uint32_t p = f.p();
    const std::uint32_t e = f.e();
    auto to_vec = [&](std::uint32_t r) {
        std::vector<std::uint32_t> v(e);
        for (auto& c : v) {
            c = r % p;
            r /= p;
        }
        return v;
    };
    std::vector<std::uint32_t> shifted = to_vec(a);
    const std::vector<std::uint32_t> bv = to_vec(b);
    std::vector<std::uint32_t> acc(e, 0);
    for (std::uint32_t i = 0; i < e; ++i) {
        for (std::uint32_t j = 0; j < e; ++j) acc[j] = (acc[j] + bv[i] * shifted[j]) % p;
        const std::uint32_t top = shifted[e - 1];
        for (std::uint32_t j = e - 1; j > 0; --j) shifted[j] = shifted[j - 1];
        shifted[0] = 0;
        for (std::uint32_t j = 0; j < e; ++j) shifted[j] = (shifted[j] + p * p - top * f.modulus()[j]) % p;
    }
    std::uint32_t r = 0;
    for (std::uint32_t j = e; j-- > 0;) r = r * p + acc[j];
    return r;
}

}  // namespace

TEST_CASE("make_field decomposes q and picks the modulus") {
    const FieldSpec f5 = make_field(5);
    CHECK(f5.p() == 5);
    CHECK(f5.e() == 1);

    const FieldSpec f4 = make_field(4);
    CHECK(f4.p() == 2);
    CHECK(f4.e() == 2);
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(f4.modulus_string() == "x^2+x+1");

    CHECK_THROWS_AS(make_field(6), Error);
    try {
        make_field(6);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::not_a_prime_power);
    }
    CHECK_THROWS_AS(make_field(1), Error);
    CHECK_THROWS_AS(make_field(128), Error);
}

TEST_CASE("x^2+x+1 is the only monic irreducible quadratic over F2") {
    int irreducible = 0;
    for (std::uint32_t c0 = 0; c0 < 2; ++c0) {
        for (std::uint32_t c1 = 0; c1 < 2; ++c1) {
            // root check is complete for degree 2
            bool has_root = false;
            for (std::uint32_t x = 0; x < 2; ++x) has_root |= (x * x + c1 * x + c0) % 2 == 0;
            CHECK(is_irreducible_mod_p({c0, c1, 1}, 2) == !has_root);
            irreducible += has_root ? 0 : 1;
        }
    }
    CHECK(irreducible == 1);
}

TEST_CASE("extension moduli have no root in F_p for e in {2,3}") {
    for (std::uint32_t q : {4u, 8u, 9u, 25u, 27u, 49u}) {
        const FieldSpec f = make_field(q);
        const auto& m = f.modulus();
        for (std::uint32_t x = 0; x < f.p(); ++x) {
            std::uint64_t v = 0;
            for (std::size_t i = m.size(); i-- > 0;) v = (v * x + m[i]) % f.p();
            CHECK(v != 0);
        }
    }
    CHECK(make_field(8).modulus_string() == "x^3+x^2+1");
    CHECK(make_field(9).modulus_string() == "x^2+1");
    CHECK(make_field(16).modulus_string() == "x^4+x^3+1");
    CHECK(make_field(27).modulus_string() == "x^3+2x^2+1");
}

TEST_CASE("basic prime field arithmetic") {
    const FieldSpec f = make_field(5);
    CHECK(f.mul(FieldElement{2}, FieldElement{3}) == FieldElement{1});
    CHECK(f.inv(FieldElement{2}) == FieldElement{3});
    CHECK(f.add(FieldElement{4}, FieldElement{3}) == FieldElement{2});
    CHECK(f.neg(FieldElement{1}) == FieldElement{4});
    CHECK(f.pow(FieldElement{2}, -1) == FieldElement{3});
    CHECK(f.pow(FieldElement{0}, 0) == FieldElement{1});
    CHECK(f.pow(FieldElement{0}, 3) == FieldElement{0});
    CHECK_THROWS_AS(f.inv(FieldElement{0}), Error);
    CHECK(f.from_int(-1) == FieldElement{4});
}

TEST_CASE("F4: x * x = x + 1") {
    const FieldSpec f = make_field(4);
    const FieldElement x{2};
    CHECK(f.mul(x, x) == FieldElement{3});
    CHECK(oracle_mul(f, 2, 2) == 3);
}

TEST_CASE("multiplication table agrees with the shift-and-add oracle") {
    for (std::uint32_t q : {2u, 3u, 4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
        const FieldSpec f = make_field(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                if (f.e() == 1) {
                    REQUIRE(f.mul(FieldElement{a}, FieldElement{b}).rep == (a * b) % q);
                } else {
                    REQUIRE(f.mul(FieldElement{a}, FieldElement{b}).rep == oracle_mul(f, a, b));
                }
                REQUIRE(schoolbook_mul(f, FieldElement{a}, FieldElement{b}) == f.mul(FieldElement{a}, FieldElement{b}));
            }
        }
    }
}

TEST_CASE("field axioms hold on exhaustive triples for q <= 9") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const FieldSpec f = make_field(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            const FieldElement x{a};
            REQUIRE(f.add(x, f.neg(x)).is_zero());
            REQUIRE(f.add(x, f.zero()) == x);
            REQUIRE(f.mul(x, f.one()) == x);
            if (!x.is_zero()) REQUIRE(f.mul(x, f.inv(x)) == f.one());
            for (std::uint32_t b = 0; b < q; ++b) {
                const FieldElement y{b};
                REQUIRE(f.add(x, y) == f.add(y, x));
                REQUIRE(f.mul(x, y) == f.mul(y, x));
                for (std::uint32_t c = 0; c < q; ++c) {
                    const FieldElement z{c};
                    REQUIRE(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
                    REQUIRE(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
                    REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
                }
            }
        }
    }
}

TEST_CASE("Lagrange: a^(q-1) = 1 for every unit") {
    for (std::uint32_t q = 2; q <= 64; ++q) {
        if (prime_power_decompose(q).first == 0) continue;
        const FieldSpec f = make_field(q);
        for (const FieldElement a : units(f)) {
            // repeated multiplication, so the exponent reduction in pow is not involved
            FieldElement x = f.one();
            for (std::uint32_t i = 0; i < q - 1; ++i) x = f.mul(x, a);
            REQUIRE(x == f.one());
        }
    }
}

TEST_CASE("units are the nonzero elements in canonical order") {
    CHECK(units(make_field(3)) == std::vector<FieldElement>{FieldElement{1}, FieldElement{2}});
    CHECK(units(make_field(5)).size() == 4);
    CHECK(units(make_field(5)).back() == FieldElement{4});
    CHECK(units(make_field(4)).size() == 3);
}

TEST_CASE("element_of_order") {
    const FieldSpec f5 = make_field(5);
    CHECK(element_of_order(f5, 1) == FieldElement{1});
    CHECK(element_of_order(f5, 4) == FieldElement{2});
    CHECK(element_of_order(make_field(7), 3) == FieldElement{2});
    CHECK_THROWS_AS(element_of_order(f5, 3), Error);
    CHECK_THROWS_AS(element_of_order(f5, 0), Error);

    // Brute-force oracle on every divisor of q-1, every supported q.
    for (std::uint32_t q = 2; q <= 64; ++q) {
        if (prime_power_decompose(q).first == 0) continue;
        const FieldSpec f = make_field(q);
        for (std::uint32_t t = 1; t <= q - 1; ++t) {
            if ((q - 1) % t != 0) continue;
            const FieldElement a = element_of_order(f, t);
            REQUIRE(f.pow(a, t) == f.one());
            for (std::uint32_t s = 1; s < t; ++s) REQUIRE(f.pow(a, s) != f.one());
            for (std::uint32_t r = 1; r < a.rep; ++r) REQUIRE(f.order(FieldElement{r}) != t);
        }
    }
}
