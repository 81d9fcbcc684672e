#include "cusp/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace cusp {

namespace {

// --- integer polynomial helpers (ascending coefficients) ---

using IntPoly = std::vector<BigInt>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
IntPoly poly_div_exact(IntPoly a, const IntPoly& b) {
    if (b.empty() || b.back() != BigInt(1))
        throw std::invalid_argument("poly_div_exact: divisor must be monic");
    if (a.size() < b.size()) throw std::invalid_argument("poly_div_exact: degree underflow");
    IntPoly q(a.size() - b.size() + 1, BigInt(0));
    for (size_t i = q.size(); i-- > 0;) {
        BigInt coef = a[i + b.size() - 1];
        q[i] = coef;
        if (coef.is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) a[i + j] = a[i + j] - coef * b[j];
    }
    for (const BigInt& c : a)
        if (!c.is_zero()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

// Reduction table: row j holds the coefficients of x^j mod Phi_60 for
// j in [0, 60). Entries are small integers; built once from Phi_60.
const std::array<std::array<long long, kFieldDegree>, kConductor>& power_table() {
    static const auto table = [] {
        std::array<std::array<long long, kFieldDegree>, kConductor> t{};
        IntPoly phi = cyclotomic_polynomial(kConductor);
        // x^16 = -(lower part of Phi_60)
        std::array<long long, kFieldDegree> top{};
        for (int i = 0; i < kFieldDegree; ++i) top[i] = -phi[i].to_ll();
        for (int i = 0; i < kFieldDegree; ++i) t[0][i] = (i == 0) ? 1 : 0;
        for (int j = 1; j < kConductor; ++j) {
            long long carry = t[j - 1][kFieldDegree - 1];
            for (int i = kFieldDegree - 1; i > 0; --i) t[j][i] = t[j - 1][i - 1];
            t[j][0] = 0;
            if (carry != 0)
                for (int i = 0; i < kFieldDegree; ++i) t[j][i] += carry * top[i];
        }
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<int>& conductor_divisors() {
    static const std::vector<int> divs = [] {
        std::vector<int> out;
        for (int d = 1; d <= kConductor; ++d)
            if (kConductor % d == 0) out.push_back(d);
        return out;
    }();
    return divs;
}

std::vector<BigInt> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    static std::mutex cache_mutex;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    IntPoly num(n + 1, BigInt(0));
    num[0] = BigInt(-1);
    num[n] = BigInt(1);
    IntPoly den{BigInt(1)};
    for (int d = 1; d < n; ++d)
        if (n % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
    IntPoly out = poly_div_exact(std::move(num), den);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[n] = out;
    return out;
}

CycNum::CycNum() {
    c_.fill(Rational(0));
}

CycNum CycNum::integer(long long value) {
    CycNum out;
    out.c_[0] = Rational(value);
    return out;
}

CycNum CycNum::from_rational(const Rational& value) {
    CycNum out;
    out.c_[0] = value;
    return out;
}

CycNum CycNum::root(int n, long long k) {
    if (n < 1 || kConductor % n != 0)
        throw std::invalid_argument("CycNum::root: order " + std::to_string(n) +
                                    " does not divide " + std::to_string(kConductor));
    long long step = kConductor / n;
    long long e = ((step * (k % n)) % kConductor + kConductor) % kConductor;
    CycNum out;
    const auto& row = power_table()[static_cast<size_t>(e)];
    for (int i = 0; i < kFieldDegree; ++i) out.c_[i] = Rational(row[i]);
    return out;
}

CycNum CycNum::operator-() const {
    CycNum out;
    for (int i = 0; i < kFieldDegree; ++i) out.c_[i] = -c_[i];
    return out;
}

CycNum CycNum::operator+(const CycNum& rhs) const {
    CycNum out;
    for (int i = 0; i < kFieldDegree; ++i) out.c_[i] = c_[i] + rhs.c_[i];
    return out;
}

CycNum CycNum::operator-(const CycNum& rhs) const { return *this + (-rhs); }

CycNum CycNum::operator*(const CycNum& rhs) const {
    std::array<Rational, 2 * kFieldDegree - 1> conv;
    conv.fill(Rational(0));
    for (int i = 0; i < kFieldDegree; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < kFieldDegree; ++j) {
            if (rhs.c_[j].is_zero()) continue;
            conv[i + j] = conv[i + j] + c_[i] * rhs.c_[j];
        }
    }
    CycNum out;
    const auto& table = power_table();
    for (int j = 0; j < 2 * kFieldDegree - 1; ++j) {
        if (conv[j].is_zero()) continue;
        const auto& row = table[j];
        for (int i = 0; i < kFieldDegree; ++i)
            if (row[i] != 0) out.c_[i] = out.c_[i] + conv[j] * Rational(row[i]);
    }
    return out;
}

CycNum CycNum::scaled(const Rational& factor) const {
    CycNum out;
    for (int i = 0; i < kFieldDegree; ++i) out.c_[i] = c_[i] * factor;
    return out;
}

CycNum CycNum::pow(long long e) const {
    if (e < 0) throw std::invalid_argument("CycNum::pow: negative exponent");
    CycNum result = one();
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

CycNum CycNum::conj() const {
    CycNum out;
    const auto& table = power_table();
    for (int j = 0; j < kFieldDegree; ++j) {
        if (c_[j].is_zero()) continue;
        int e = (kConductor - j) % kConductor;
        const auto& row = table[e];
        for (int i = 0; i < kFieldDegree; ++i)
            if (row[i] != 0) out.c_[i] = out.c_[i] + c_[j] * Rational(row[i]);
    }
    return out;
}

std::optional<int> CycNum::order_as_root_of_unity() const {
    for (int d : conductor_divisors())
        if (pow(d) == one()) return d;
    return std::nullopt;
}

bool CycNum::is_rational() const {
    for (int i = 1; i < kFieldDegree; ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational CycNum::rational_part() const {
    if (!is_rational()) throw std::logic_error("CycNum: not a rational value");
    return c_[0];
}

bool CycNum::lex_less(const CycNum& rhs) const {
    for (int i = 0; i < kFieldDegree; ++i) {
        if (c_[i] != rhs.c_[i]) return c_[i] < rhs.c_[i];
    }
    return false;
}

CycNum parse_literal(const std::string& text) {
    size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
    }
    if (pos >= text.size()) throw ParseError(pos, "expected atom");
    CycNum value;
    if (text[pos] == '1') {
        value = CycNum::one();
        ++pos;
    } else if (text[pos] == 'i') {
        value = CycNum::root(4, 1);
        ++pos;
    } else if (text[pos] == 'z') {
        ++pos;
        size_t nat_start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == nat_start) throw ParseError(pos, "expected order after 'z'");
        int n = std::stoi(text.substr(nat_start, pos - nat_start));
        if (n < 1 || kConductor % n != 0)
            throw ParseError(nat_start, "order must divide 60");
        if (pos >= text.size() || text[pos] != '^') throw ParseError(pos, "expected '^'");
        ++pos;
        size_t exp_start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == exp_start) throw ParseError(pos, "expected exponent");
        long long k = std::stoll(text.substr(exp_start, pos - exp_start));
        value = CycNum::root(n, k);
    } else {
        throw ParseError(pos, "expected '1', 'i' or 'z'");
    }
    if (pos != text.size()) throw ParseError(pos, "trailing characters");
    return negative ? -value : value;
}

namespace {

// Literals for x^j = zeta_60^j, j in [0,60), without a sign.
std::vector<std::string> atom_literals(int j) {
    std::vector<std::string> out;
    for (int n : conductor_divisors()) {
        int step = kConductor / n;
        if (j % step != 0) continue;
        int k = j / step;
        if (n == 1) {
            out.push_back("1");
        } else if (n == 4 && k == 1) {
            out.push_back("i");
            out.push_back("z4^1");
        } else {
            out.push_back("z" + std::to_string(n) + "^" + std::to_string(k));
        }
    }
    return out;
}

}  // namespace

std::string render_literal(const CycNum& value) {
    // Every root of unity in Q(zeta_60) is a power of zeta_60.
    int exponent = -1;
    for (int j = 0; j < kConductor; ++j) {
        CycNum powj = CycNum::root(kConductor, j);
        if (powj == value) {
            exponent = j;
            break;
        }
    }
    if (exponent < 0) throw std::invalid_argument("render_literal: not a root of unity");
    std::vector<std::string> candidates = atom_literals(exponent);
    for (const std::string& atom : atom_literals((exponent + kConductor / 2) % kConductor))
        candidates.push_back("-" + atom);
    std::string best;
    for (const std::string& c : candidates) {
        if (best.empty() || c.size() < best.size() || (c.size() == best.size() && c < best))
            best = c;
    }
    return best;
}

std::string render_value(const CycNum& value) {
    if (value.order_as_root_of_unity().has_value()) return render_literal(value);
    if (value.is_rational()) return value.rational_part().to_string();
    std::string out;
    for (int i = 0; i < kFieldDegree; ++i) {
        const Rational& c = value.coefficients()[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        out += c.to_string();
        if (i > 0) out += "*z60^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace cusp
