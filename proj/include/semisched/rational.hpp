#pragma once

#include <cstdint>
#include <compare>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "semisched/errors.hpp"

namespace semisched {

/// Exact fraction on int64 numerator / positive int64 denominator, always
/// kept in lowest terms. Intermediates run through __int128; results that do
/// not fit back into int64 raise RationalOverflow instead of wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(long long numerator, long long denominator = 1)
        : Rational(normalize(static_cast<__int128>(numerator),
                             static_cast<__int128>(denominator))) {}

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(normalize(
            i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
            i128(a.den_) * b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(normalize(
            i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
            i128(a.den_) * b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(normalize(i128(a.num_) * b.num_, i128(a.den_) * b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw ZeroDenominator("division by zero rational");
        return Rational(normalize(i128(a.num_) * b.den_, i128(a.den_) * b.num_));
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Canonical form makes field-wise equality exact equality.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const __int128 lhs = i128(a.num_) * b.den_;
        const __int128 rhs = i128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Canonical text form: "n" when integral, otherwise "n/d".
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += '/';
            s += std::to_string(den_);
        }
        return s;
    }

    /// Lossy conversion for human-readable columns only.
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// Accepts "a", "-a", "a/b" and finite decimals like "2.5".
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    struct Raw {
        __int128 num;
        __int128 den;
    };
    explicit Rational(Raw raw)
        : num_(check_fit(raw.num)), den_(check_fit(raw.den)) {}

    static constexpr __int128 i128(long long v) { return static_cast<__int128>(v); }

    static __int128 gcd128(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Raw normalize(__int128 num, __int128 den) {
        if (den == 0) throw ZeroDenominator("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        return Raw{num, den};
    }

    static long long check_fit(__int128 v) {
        if (v > std::numeric_limits<long long>::max() ||
            v < std::numeric_limits<long long>::min()) {
            throw RationalOverflow("rational exceeds 64-bit range after reduction");
        }
        return static_cast<long long>(v);
    }

    long long num_;
    long long den_;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

} // namespace semisched
