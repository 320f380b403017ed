#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>

namespace cupcap {

/// A value of T extended with -inf and +inf.
template <typename T>
class Extended {
public:
    enum class Tag { NegInf, Finite, PosInf };

    Extended() : tag_(Tag::NegInf) {}

    static Extended neg_inf() { return Extended(Tag::NegInf); }
    static Extended pos_inf() { return Extended(Tag::PosInf); }
    static Extended finite(T v)
    {
        Extended e(Tag::Finite);
        e.value_ = std::move(v);
        return e;
    }

    Tag tag() const { return tag_; }
    bool is_finite() const { return tag_ == Tag::Finite; }
    bool is_neg_inf() const { return tag_ == Tag::NegInf; }
    bool is_pos_inf() const { return tag_ == Tag::PosInf; }
    const T& value() const { return value_; }

    friend bool operator==(const Extended& a, const Extended& b)
    {
        if (a.tag_ != b.tag_)
            return false;
        return a.tag_ != Tag::Finite || a.value_ == b.value_;
    }

    friend std::weak_ordering operator<=>(const Extended& a, const Extended& b)
    {
        if (a.tag_ != b.tag_)
            return static_cast<int>(a.tag_) <=> static_cast<int>(b.tag_);
        if (a.tag_ != Tag::Finite)
            return std::weak_ordering::equivalent;
        if (a.value_ < b.value_)
            return std::weak_ordering::less;
        if (b.value_ < a.value_)
            return std::weak_ordering::greater;
        return std::weak_ordering::equivalent;
    }

    friend bool operator==(const Extended& a, const T& b) { return a.is_finite() && a.value_ == b; }

    friend std::weak_ordering operator<=>(const Extended& a, const T& b)
    {
        if (a.tag_ == Tag::NegInf)
            return std::weak_ordering::less;
        if (a.tag_ == Tag::PosInf)
            return std::weak_ordering::greater;
        if (a.value_ < b)
            return std::weak_ordering::less;
        if (b < a.value_)
            return std::weak_ordering::greater;
        return std::weak_ordering::equivalent;
    }

    std::string to_string() const
    {
        switch (tag_) {
        case Tag::NegInf: return "-inf";
        case Tag::PosInf: return "+inf";
        case Tag::Finite: break;
        }
        if constexpr (requires(const T& v) { v.to_string(); })
            return value_.to_string();
        else
            return std::to_string(value_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Extended& e) { return os << e.to_string(); }

private:
    explicit Extended(Tag tag) : tag_(tag), value_() {}

    Tag tag_;
    T value_;
};

}  // namespace cupcap
