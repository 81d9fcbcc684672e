#pragma once

#include <stdexcept>
#include <string>

#include "cusp/bigint.hpp"

namespace cusp {

// Exact rational number, always reduced, denominator always positive.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(const BigInt& num, const BigInt& den) : num_(num), den_(den) { normalize(); }
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rational operator-() const {
        Rational out = *this;
        out.num_ = -out.num_;
        return out;
    }
    Rational operator+(const Rational& rhs) const {
        return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    }
    Rational operator-(const Rational& rhs) const { return *this + (-rhs); }
    Rational operator*(const Rational& rhs) const {
        return Rational(num_ * rhs.num_, den_ * rhs.den_);
    }
    Rational operator/(const Rational& rhs) const {
        if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(num_ * rhs.den_, den_ * rhs.num_);
    }

    bool operator==(const Rational& rhs) const {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const Rational& rhs) const { return !(*this == rhs); }
    bool operator<(const Rational& rhs) const {
        return num_ * rhs.den_ < rhs.num_ * den_;
    }

    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }
    double to_double() const { return num_.to_double() / den_.to_double(); }

private:
    BigInt num_;
    BigInt den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = gcd(num_, den_);
        if (!g.is_zero() && g != BigInt(1)) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        if (num_.is_zero()) den_ = BigInt(1);
    }
};

}  // namespace cusp
