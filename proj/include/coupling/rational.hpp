#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace coupling {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Text form is "p/q", or "k" when the denominator is 1. That is the only
/// representation used on disk and in machine-readable reports.
class Rat {
public:
    Rat() = default;
    Rat(long value) : value_(value) {}
    Rat(long numerator, long denominator);
    explicit Rat(mpq_class value);

    /// Parses "p/q", "k", "-p/q". Accepts non-reduced input ("2/4") and
    /// canonicalizes it. Throws ParseError on anything else.
    static Rat parse(std::string_view text);

    std::string to_string() const;
    double to_double() const { return value_.get_d(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_negative() const { return sgn(value_) < 0; }
    int sign() const { return sgn(value_); }

    const mpq_class& raw() const { return value_; }

    Rat& operator+=(const Rat& other);
    Rat& operator-=(const Rat& other);
    Rat& operator*=(const Rat& other);
    Rat& operator/=(const Rat& other);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
    Rat operator-() const;

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

Rat abs(const Rat& x);
Rat min(const Rat& a, const Rat& b);
Rat pow(const Rat& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace coupling
