#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cusp/rational.hpp"

namespace cusp {

// Exact arithmetic in the cyclotomic field Q(zeta_60).
//
// Conductor 60 is large enough to contain every root of unity this toolkit
// needs (orders 1..6, 10, 12, 15, 20, 30, 60 - in particular the third and
// fifth roots and i), and a single fixed field keeps equality trivial: a
// value is the 16-vector of its coordinates in the power basis
// {x^0,...,x^15} of Q[x]/(Phi_60), where x is the class of the primitive
// root zeta_60. The representation is canonical, so two values are equal
// iff their coefficient vectors match componentwise. No floating point
// anywhere; cross-checks against e^(2*pi*i*k/n) live in the tests.

inline constexpr int kConductor = 60;
inline constexpr int kFieldDegree = 16;  // phi(60)

// Divisors of 60 in ascending order.
const std::vector<int>& conductor_divisors();

// n-th cyclotomic polynomial, ascending integer coefficients, monic.
// Computed by exact division from x^n - 1 = prod_{d|n} Phi_d.
std::vector<BigInt> cyclotomic_polynomial(int n);

class CycNum {
public:
    CycNum();  // zero
    static CycNum integer(long long value);
    static CycNum from_rational(const Rational& value);
    // zeta_n^k; requires n | 60, k may be any integer (reduced mod n).
    static CycNum root(int n, long long k);
    static CycNum zero() { return CycNum(); }
    static CycNum one() { return integer(1); }

    const std::array<Rational, kFieldDegree>& coefficients() const { return c_; }

    CycNum operator-() const;
    CycNum operator+(const CycNum& rhs) const;
    CycNum operator-(const CycNum& rhs) const;
    CycNum operator*(const CycNum& rhs) const;
    bool operator==(const CycNum& rhs) const { return c_ == rhs.c_; }
    bool operator!=(const CycNum& rhs) const { return !(*this == rhs); }

    CycNum scaled(const Rational& factor) const;
    CycNum pow(long long e) const;  // e >= 0
    // Complex conjugation, the Galois map x -> x^59. Involutive ring map.
    CycNum conj() const;

    // Least n >= 1 with a^n = 1, or nullopt if a is not a root of unity.
    std::optional<int> order_as_root_of_unity() const;

    bool is_rational() const;
    Rational rational_part() const;  // requires is_rational()

    // Deterministic total order (lexicographic on coefficients); used to
    // keep rendered sets reproducible, no arithmetic meaning.
    bool lex_less(const CycNum& rhs) const;

private:
    std::array<Rational, kFieldDegree> c_;
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(size_t pos, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Literal grammar (bit-exact, shared by the dataset file and CLI output):
//   lit  := ['-'] atom
//   atom := '1' | 'i' | 'z' nat '^' nat
// where z<n>^<k> denotes zeta_n^k with n | 60.
CycNum parse_literal(const std::string& text);

// Renders a root of unity as the shortest literal (ties broken
// lexicographically); throws std::invalid_argument for values outside the
// grammar. parse_literal(render_literal(a)) == a.
std::string render_literal(const CycNum& value);

// Total renderer for report output: literal when possible, plain rational
// otherwise, coefficient polynomial as a last resort.
std::string render_value(const CycNum& value);

}  // namespace cusp
