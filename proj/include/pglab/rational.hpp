#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pglab {

/// Exact rational on 64-bit integers, always normalized (gcd 1, positive
/// denominator). All threshold comparisons in the library go through this
/// type; no floating point is involved in any decision.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num = n;
        den = d;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(mulq(a.num, b.den) + mulq(b.num, a.den), mulq(a.den, b.den));
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(mulq(a.num, b.den) - mulq(b.num, a.den), mulq(a.den, b.den));
    }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mulq(a.num, b.num), mulq(a.den, b.den)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::invalid_argument("division by zero");
        return Rat(mulq(a.num, b.den), mulq(a.den, b.num));
    }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        __int128 l = static_cast<__int128>(a.num) * b.den;
        __int128 r = static_cast<__int128>(b.num) * a.den;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

private:
    // checked multiply: keeps intermediates inside long long
    static long long mulq(long long a, long long b) {
        __int128 t = static_cast<__int128>(a) * b;
        if (t > INT64_MAX || t < INT64_MIN) throw std::overflow_error("rational overflow");
        return static_cast<long long>(t);
    }
};

inline long long ceil_div(long long a, long long b) {
    if (b <= 0) throw std::invalid_argument("ceil_div needs positive divisor");
    return (a + b - 1) / b;
}

inline long long isqrt_floor(long long n) {
    if (n < 0) throw std::invalid_argument("isqrt of negative");
    if (n < 2) return n;
    long long x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

} // namespace pglab
