#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wtss {

// Exact rational number kept in canonical form: gcd(num, den) == 1, den > 0.
// All graph weights and distances in this library go through this type; there
// is no floating point anywhere on a semantic path.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator) {
        if (denominator == 0) throw std::domain_error("rational with zero denominator");
        num_ = numerator;
        den_ = denominator;
        normalize();
    }
    // NOLINTNEXTLINE: implicit on purpose, integers are the common case
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const {
        Rational r;
        r.num_ = checked_negate(num_);
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "5", "-3" or canonical "p/q"; non-canonical input like "4/6" is reduced.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
        std::int64_t p = parse_int(text.substr(0, slash));
        std::int64_t q = parse_int(text.substr(slash + 1));
        if (q <= 0) throw std::domain_error("rational denominator must be positive");
        return Rational(p, q);
    }

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    using i128 = __int128;

    static std::int64_t parse_int(std::string_view s) {
        if (s.empty()) throw std::domain_error("empty integer literal");
        std::size_t pos = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            pos = 1;
            if (pos == s.size()) throw std::domain_error("sign without digits");
        }
        i128 value = 0;
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9')
                throw std::domain_error("invalid digit in integer literal");
            value = value * 10 + (s[pos] - '0');
            if (value > i128(INT64_MAX) + 1) throw std::overflow_error("integer literal overflow");
        }
        if (neg) value = -value;
        return narrow(value);
    }

    static std::int64_t narrow(i128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
        return static_cast<std::int64_t>(v);
    }

    static std::int64_t checked_negate(std::int64_t v) {
        if (v == INT64_MIN) throw std::overflow_error("rational overflow");
        return -v;
    }

    static Rational from_i128(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        Rational r;
        r.num_ = narrow(num);
        r.den_ = narrow(den);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = checked_negate(num_);
            den_ = checked_negate(den_);
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace wtss
