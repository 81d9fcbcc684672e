#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cusp {

// Arbitrary-precision signed integer.
//
// Schoolbook algorithms throughout: every quantity this toolkit touches
// (character values, hook products, Cartan determinants, orthogonality sums)
// fits in a machine word with room to spare, so the representation exists for
// exactness guarantees, not speed. Division is binary long division on
// magnitudes; quotients truncate toward zero and the remainder carries the
// dividend's sign, as for built-in integers.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);
    static BigInt from_string(const std::string& text);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    BigInt abs() const;

    BigInt operator-() const;
    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt operator/(const BigInt& rhs) const;
    BigInt operator%(const BigInt& rhs) const;

    bool operator==(const BigInt& rhs) const;
    bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
    bool operator<(const BigInt& rhs) const;
    bool operator<=(const BigInt& rhs) const;
    bool operator>(const BigInt& rhs) const { return rhs < *this; }
    bool operator>=(const BigInt& rhs) const { return rhs <= *this; }

    std::string to_string() const;
    double to_double() const;
    // Throws std::overflow_error if the value does not fit.
    long long to_ll() const;

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<uint32_t> mag_;       // little-endian limbs, no leading zeros

    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    void trim();
    friend BigInt gcd(BigInt a, BigInt b);
};

// Greatest common divisor, always non-negative; gcd(0,0) = 0.
BigInt gcd(BigInt a, BigInt b);

}  // namespace cusp
