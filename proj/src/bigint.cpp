#include "cusp/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace cusp {

namespace {

int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.push_back(static_cast<uint32_t>(s));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<uint32_t>(carry));
    return out;
}

// Requires a >= b.
std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += (int64_t{1} << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = out[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

bool get_bit(const std::vector<uint32_t>& a, size_t i) {
    return (a[i / 32] >> (i % 32)) & 1u;
}

void set_bit(std::vector<uint32_t>& a, size_t i) {
    if (a.size() <= i / 32) a.resize(i / 32 + 1, 0);
    a[i / 32] |= (uint32_t{1} << (i % 32));
}

// Shift left by one bit in place, then or-in `low`.
void shl1_or(std::vector<uint32_t>& a, bool low) {
    uint32_t carry = low ? 1u : 0u;
    for (auto& limb : a) {
        uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) a.push_back(carry);
}

// Binary long division of magnitudes: a = q*b + r with 0 <= r < b.
void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    for (size_t i = a.size() * 32; i-- > 0;) {
        shl1_or(r, get_bit(a, i));
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            set_bit(q, i);
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
}

// Divide magnitude by a small divisor, returning the remainder.
uint32_t divmod_small(std::vector<uint32_t>& a, uint32_t d) {
    uint64_t rem = 0;
    for (size_t i = a.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | a[i];
        a[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return static_cast<uint32_t>(rem);
}

}  // namespace

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value > 0 ? 1 : -1;
    // Avoid overflow negating LLONG_MIN.
    unsigned long long mag = value > 0 ? static_cast<unsigned long long>(value)
                                       : ~static_cast<unsigned long long>(value) + 1ull;
    while (mag) {
        mag_.push_back(static_cast<uint32_t>(mag));
        mag >>= 32;
    }
}

BigInt BigInt::from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("BigInt: empty string");
    size_t pos = 0;
    int sign = 1;
    if (text[0] == '-') {
        sign = -1;
        pos = 1;
    } else if (text[0] == '+') {
        pos = 1;
    }
    if (pos == text.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt out;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
        out = out * BigInt(10) + BigInt(c - '0');
    }
    if (!out.is_zero()) out.sign_ = sign;
    return out;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    if (sign_ == 0) return rhs;
    if (rhs.sign_ == 0) return *this;
    BigInt out;
    if (sign_ == rhs.sign_) {
        out.mag_ = add_mag(mag_, rhs.mag_);
        out.sign_ = sign_;
        return out;
    }
    int c = cmp_mag(mag_, rhs.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
        out.mag_ = sub_mag(mag_, rhs.mag_);
        out.sign_ = sign_;
    } else {
        out.mag_ = sub_mag(rhs.mag_, mag_);
        out.sign_ = rhs.sign_;
    }
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    BigInt out;
    if (sign_ == 0 || rhs.sign_ == 0) return out;
    out.mag_ = mul_mag(mag_, rhs.mag_);
    out.sign_ = sign_ * rhs.sign_;
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt BigInt::operator/(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return r;
}

bool BigInt::operator==(const BigInt& rhs) const {
    return sign_ == rhs.sign_ && mag_ == rhs.mag_;
}

bool BigInt::operator<(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ < rhs.sign_;
    int c = cmp_mag(mag_, rhs.mag_);
    return sign_ >= 0 ? c < 0 : c > 0;
}

bool BigInt::operator<=(const BigInt& rhs) const {
    return *this < rhs || *this == rhs;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string digits;
    std::vector<uint32_t> work = mag_;
    while (!work.empty()) {
        uint32_t rem = divmod_small(work, 1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigInt::to_double() const {
    double out = 0.0;
    for (size_t i = mag_.size(); i-- > 0;) out = out * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -out : out;
}

long long BigInt::to_ll() const {
    if (mag_.size() > 2) throw std::overflow_error("BigInt: does not fit in long long");
    unsigned long long mag = 0;
    for (size_t i = mag_.size(); i-- > 0;) mag = (mag << 32) | mag_[i];
    if (sign_ >= 0) {
        if (mag > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: does not fit in long long");
        return static_cast<long long>(mag);
    }
    if (mag > 0x8000000000000000ull) throw std::overflow_error("BigInt: does not fit in long long");
    return -static_cast<long long>(mag - 1) - 1;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace cusp
