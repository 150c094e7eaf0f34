#include "coupling/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "coupling/errors.hpp"

namespace coupling {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rat::Rat(long numerator, long denominator) {
    if (denominator == 0) throw InvalidArgument("zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rat(mpq_class(n, d));
}

std::string Rat::to_string() const { return value_.get_str(10); }

Rat& Rat::operator+=(const Rat& other) {
    value_ += other.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& other) {
    value_ -= other.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& other) {
    value_ *= other.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& other) {
    if (other.is_zero()) throw InvalidArgument("division by zero");
    value_ /= other.value_;
    return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat abs(const Rat& x) { return x.is_negative() ? -x : x; }

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }

Rat pow(const Rat& base, unsigned exponent) {
    Rat out(1);
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.to_string(); }

}  // namespace coupling
