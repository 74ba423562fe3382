#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bss/cost.hpp"

namespace bss {

// Exact rational with int64 numerator/denominator and 128-bit comparison
// intermediates. Used both for configuration values (W, lambda) and for
// priority keys and lower bounds, which must compare exactly: float-ordered
// open lists would make tie-breaking and termination nondeterministic.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}

    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        normalize();
    }

    // Skips gcd normalization; for hot-path key construction where the
    // denominator is a fixed small constant. Requires d > 0.
    static Rational raw(std::int64_t n, std::int64_t d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                     static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from_i128(n, d);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ -
                     static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from_i128(n, d);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.num_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from_i128(n, d);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("rational: division by zero");
        __int128 n = static_cast<__int128>(a.num_) * b.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.num_;
        if (d < 0) { n = -n; d = -d; }
        return from_i128(n, d);
    }

    Rational half() const { return from_i128(num_, static_cast<__int128>(den_) * 2); }

    // Smallest multiple of `step` that is >= *this. Requires step > 0 and
    // *this >= 0.
    Rational ceil_to_multiple(const Rational& step) const {
        if (step.num_ <= 0) throw std::invalid_argument("ceil_to_multiple: step must be positive");
        if (num_ < 0) throw std::invalid_argument("ceil_to_multiple: negative value");
        // q = ceil((num/den) / (sn/sd)) = ceil(num*sd / (den*sn))
        __int128 a = static_cast<__int128>(num_) * step.den_;
        __int128 b = static_cast<__int128>(den_) * step.num_;
        __int128 q = (a + b - 1) / b;
        return from_i128(q * step.num_, step.den_);
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts integers ("3"), fractions ("3/2"), and decimals ("1.5"), all
    // parsed exactly.
    static Rational parse(const std::string& text);

private:
    static Rational from_i128(__int128 n, __int128 d) {
        if (d == 0) throw std::invalid_argument("rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > std::numeric_limits<std::int64_t>::max() ||
            n < std::numeric_limits<std::int64_t>::min() ||
            d > std::numeric_limits<std::int64_t>::max())
            throw std::overflow_error("rational arithmetic overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void normalize() {
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

// Priority values and lower bounds share the representation of W and lambda.
using RationalKey = Rational;

inline Rational rational_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational rational_min(const Rational& a, const Rational& b) { return b < a ? b : a; }

} // namespace bss
