#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "cupcap/error.hpp"

namespace cupcap {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt parse_bigint(std::string_view text)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw Error(ErrorCode::MalformedInput, "empty integer '" + std::string(text) + "'");
    BigInt value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9')
            throw Error(ErrorCode::MalformedInput, "bad integer '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

/// Exact fraction kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}

    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_ == 0)
            throw Error(ErrorCode::InvalidArgument, "zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    /// Accepts "a" or "a/b" with optional sign on the numerator.
    static Rational parse(std::string_view text)
    {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_bigint(text));
        auto den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
            throw Error(ErrorCode::MalformedInput, "signed denominator in '" + std::string(text) + "'");
        BigInt den = parse_bigint(den_text);
        if (den == 0)
            throw Error(ErrorCode::MalformedInput, "zero denominator in '" + std::string(text) + "'");
        return Rational(parse_bigint(text.substr(0, slash)), std::move(den));
    }

    std::string to_string() const
    {
        if (den_ == 1)
            return num_.str();
        return num_.str() + "/" + den_.str();
    }

    Rational operator-() const
    {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o)
    {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }

    Rational& operator-=(const Rational& o) { return *this += -o; }

    Rational& operator*=(const Rational& o)
    {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    Rational& operator/=(const Rational& o)
    {
        if (o.num_ == 0)
            throw Error(ErrorCode::InvalidArgument, "division by zero");
        BigInt n = num_ * o.den_;
        BigInt d = den_ * o.num_;
        num_ = std::move(n);
        den_ = std::move(d);
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        if (a.den_ == b.den_)
            return cmp(a.num_, b.num_);
        return cmp(a.num_ * b.den_, b.num_ * a.den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    static std::strong_ordering cmp(const BigInt& a, const BigInt& b)
    {
        int c = a.compare(b);
        if (c < 0)
            return std::strong_ordering::less;
        if (c > 0)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    void normalize()
    {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (den_ == 1)
            return;
        BigInt g = gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

inline BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline BigInt floor(const Rational& r) { return floor_div(r.num(), r.den()); }

/// Fixed-point rendering rounded half away from zero.
inline std::string to_decimal(const Rational& r, int digits = 10)
{
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
    BigInt n = abs(r.num()) * scale;
    BigInt q = n / r.den();
    BigInt rem = n % r.den();
    if (rem * 2 >= r.den())
        ++q;
    std::string s = q.str();
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits)
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (r.sign() < 0 && q != 0)
        s.insert(0, "-");
    return s;
}

}  // namespace cupcap
