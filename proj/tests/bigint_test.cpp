#include "doctest.h"

#include "cusp/bigint.hpp"
#include "cusp/rational.hpp"

using cusp::BigInt;
using cusp::Rational;

namespace {

// Small deterministic generator so failures reproduce.
struct Lcg {
    uint64_t state;
    explicit Lcg(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 16;
    }
    long long small(long long bound) {
        return static_cast<long long>(next() % (2 * bound + 1)) - bound;
    }
};

}  // namespace

TEST_CASE("BigInt arithmetic matches the machine oracle on small values") {
    Lcg rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        long long a = rng.small(1000000);
        long long b = rng.small(1000000);
        CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
        CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
        CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
        if (b != 0) {
            CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
            CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
        }
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("BigInt division identity on large random values") {
    Lcg rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        BigInt a = BigInt(rng.small(1000000000)) * BigInt(rng.small(1000000000)) +
                   BigInt(rng.small(1000000000));
        BigInt b = BigInt(rng.small(100000)) * BigInt(rng.small(100000));
        if (b.is_zero()) continue;
        BigInt q = a / b;
        BigInt r = a % b;
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        // Remainder carries the dividend's sign.
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("BigInt decimal round-trip far beyond 64 bits") {
    std::string digits = "123456789012345678901234567890123456789";
    BigInt v = BigInt::from_string(digits);
    CHECK(v.to_string() == digits);
    CHECK((-v).to_string() == "-" + digits);
    BigInt ten30 = BigInt::from_string("1" + std::string(30, '0'));
    CHECK(ten30 == BigInt::from_string("1" + std::string(15, '0')) *
                       BigInt::from_string("1" + std::string(15, '0')));
    CHECK((ten30 / BigInt::from_string("1" + std::string(29, '0'))) == BigInt(10));
}

TEST_CASE("gcd basics") {
    CHECK(cusp::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(cusp::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(cusp::gcd(BigInt(0), BigInt(0)) == BigInt(0));
    CHECK(cusp::gcd(BigInt(0), BigInt(-7)) == BigInt(7));
}

TEST_CASE("Rational reduction and field identities") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(3, 4) * Rational(2, 3)) == Rational(1, 2));
    CHECK((Rational(1, 2) / Rational(1, 2)) == Rational(1));
    CHECK(Rational(-7, 3).to_string() == "-7/3");
    Lcg rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        Rational a(rng.small(40), rng.small(40) * 2 + 1);
        Rational b(rng.small(40), rng.small(40) * 2 + 1);
        Rational c(rng.small(40), rng.small(40) * 2 + 1);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + (b + c) == (a + b) + c);
        CHECK(a * (b * c) == (a * b) * c);
    }
}
