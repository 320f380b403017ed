#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cupcap/chains.hpp"
#include "cupcap/error.hpp"
#include "cupcap/rational.hpp"

namespace cupcap {

/// Left words are over {alpha, beta}, right words over {gamma, delta}. In both, symbol A is the
/// cup-side letter (alpha / gamma) and B the cap-side letter (beta / delta).
enum class Side { Left, Right };
enum class Symbol : std::uint8_t { A = 0, B = 1 };

inline const char* glyph(Side side, Symbol s)
{
    if (side == Side::Left)
        return s == Symbol::A ? "α" : "β";
    return s == Symbol::A ? "γ" : "δ";
}

/// Parses a symbol string written with Greek letters or the ASCII stand-ins a/b (left), g/d (right).
inline std::vector<Symbol> parse_symbols(Side side, std::string_view text)
{
    std::vector<Symbol> out;
    const std::string_view a_greek = side == Side::Left ? "α" : "γ";
    const std::string_view b_greek = side == Side::Left ? "β" : "δ";
    const char a_ascii = side == Side::Left ? 'a' : 'g';
    const char b_ascii = side == Side::Left ? 'b' : 'd';
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == a_ascii) {
            out.push_back(Symbol::A);
            ++pos;
        } else if (text[pos] == b_ascii) {
            out.push_back(Symbol::B);
            ++pos;
        } else if (text.substr(pos, a_greek.size()) == a_greek) {
            out.push_back(Symbol::A);
            pos += a_greek.size();
        } else if (text.substr(pos, b_greek.size()) == b_greek) {
            out.push_back(Symbol::B);
            pos += b_greek.size();
        } else {
            throw Error(ErrorCode::MalformedInput, "bad symbol in '" + std::string(text) + "'");
        }
    }
    return out;
}

/// Fixed-content word packed one bit per symbol (set bit = B).
class Word {
public:
    Word() = default;

    Word(Side side, const std::vector<Symbol>& symbols) : side_(side), size_(symbols.size()), bits_((size_ + 63) / 64)
    {
        for (std::size_t p = 0; p < size_; ++p)
            if (symbols[p] == Symbol::B) {
                bits_[p / 64] |= std::uint64_t{1} << (p % 64);
                ++b_count_;
            }
    }

    Side side() const { return side_; }
    std::size_t size() const { return size_; }
    std::size_t a_count() const { return size_ - b_count_; }
    std::size_t b_count() const { return b_count_; }

    Symbol operator[](std::size_t p) const
    {
        return (bits_[p / 64] >> (p % 64)) & 1 ? Symbol::B : Symbol::A;
    }

    std::string to_string() const
    {
        std::string s;
        for (std::size_t p = 0; p < size_; ++p)
            s += glyph(side_, (*this)[p]);
        return s;
    }

    friend bool operator==(const Word&, const Word&) = default;

    friend std::strong_ordering operator<=>(const Word& a, const Word& b)
    {
        return std::tie(a.side_, a.size_, a.bits_) <=> std::tie(b.side_, b.size_, b.bits_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

private:
    Side side_ = Side::Left;
    std::size_t size_ = 0;
    std::size_t b_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Word class "prefix * suffix": words starting with prefix and ending with suffix.
struct Pattern {
    std::vector<Symbol> prefix;
    std::vector<Symbol> suffix;
};

inline bool matches(const Word& w, const Pattern& pat)
{
    if (pat.prefix.size() > w.size() || pat.suffix.size() > w.size())
        return false;
    for (std::size_t p = 0; p < pat.prefix.size(); ++p)
        if (w[p] != pat.prefix[p])
            return false;
    const std::size_t off = w.size() - pat.suffix.size();
    for (std::size_t p = 0; p < pat.suffix.size(); ++p)
        if (w[off + p] != pat.suffix[p])
            return false;
    return true;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Number of words with k A-symbols and l B-symbols in the class: the pattern fixes some symbols
/// and the rest is a free arrangement of what remains.
inline BigInt class_count(std::size_t k, std::size_t l, const Pattern& pat)
{
    if (pat.prefix.size() + pat.suffix.size() > k + l)
        throw Error(ErrorCode::InvalidArgument, "pattern longer than the word");
    std::size_t a = 0, b = 0;
    for (const auto* part : {&pat.prefix, &pat.suffix})
        for (Symbol s : *part)
            (s == Symbol::A ? a : b)++;
    if (a > k || b > l)
        return 0;
    return binomial((k - a) + (l - b), k - a);
}

/// All words with k A's and l B's, in lexicographic order (A < B).
inline std::vector<Word> enumerate_words(Side side, std::size_t k, std::size_t l)
{
    std::vector<Word> out;
    std::vector<Symbol> cur(k + l, Symbol::A);
    std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t a,
                                                                         std::size_t b) {
        if (pos == k + l) {
            out.emplace_back(side, cur);
            return;
        }
        if (a > 0) {
            cur[pos] = Symbol::A;
            rec(pos + 1, a - 1, b);
        }
        if (b > 0) {
            cur[pos] = Symbol::B;
            rec(pos + 1, a, b - 1);
        }
    };
    rec(0, k, l);
    return out;
}

namespace detail {

template <typename T>
struct SortItem {
    Extended<T> value;
    int tag;  // tie order: lower tag first
    std::size_t t;
    Symbol symbol;
};

template <typename T>
Word sorted_word(Side side, std::vector<SortItem<T>> items)
{
    std::sort(items.begin(), items.end(), [](const SortItem<T>& a, const SortItem<T>& b) {
        if (auto c = a.value <=> b.value; c != 0)
            return c < 0;
        return std::tie(a.tag, a.t) < std::tie(b.tag, b.t);
    });
    std::vector<Symbol> symbols;
    symbols.reserve(items.size());
    for (const auto& it : items)
        symbols.push_back(it.symbol);
    return Word(side, symbols);
}

}  // namespace detail

/// Ascending sort of alpha(i,1..k) and beta(i,1..l); on equal values alpha entries come first.
template <typename T>
Word left_word(const CupCapTables<T>& tab, std::size_t i)
{
    std::vector<detail::SortItem<T>> items;
    for (std::size_t t = 1; t <= tab.k(); ++t)
        items.push_back({tab.alpha(i, t), 0, t, Symbol::A});
    for (std::size_t t = 1; t <= tab.l(); ++t)
        items.push_back({tab.beta(i, t), 1, t, Symbol::B});
    return detail::sorted_word(Side::Left, std::move(items));
}

/// Ascending sort of gamma(i,1..k) and delta(i,1..l); on equal values delta entries come first.
template <typename T>
Word right_word(const CupCapTables<T>& tab, std::size_t i)
{
    std::vector<detail::SortItem<T>> items;
    for (std::size_t t = 1; t <= tab.l(); ++t)
        items.push_back({tab.delta(i, t), 0, t, Symbol::B});
    for (std::size_t t = 1; t <= tab.k(); ++t)
        items.push_back({tab.gamma(i, t), 1, t, Symbol::A});
    return detail::sorted_word(Side::Right, std::move(items));
}

template <typename T>
std::vector<Word> words(const CupCapTables<T>& tab, Side side)
{
    std::vector<Word> out;
    out.reserve(tab.size());
    for (std::size_t i = 1; i <= tab.size(); ++i)
        out.push_back(side == Side::Left ? left_word(tab, i) : right_word(tab, i));
    return out;
}

/// Tab-separated table: i, the k cup-side values, the l cap-side values, and the word.
template <typename T>
void write_table_tsv(std::ostream& out, const CupCapTables<T>& tab, Side side)
{
    const bool left = side == Side::Left;
    out << 'i';
    for (std::size_t t = 1; t <= tab.k(); ++t)
        out << '\t' << (left ? "alpha" : "gamma") << t;
    for (std::size_t t = 1; t <= tab.l(); ++t)
        out << '\t' << (left ? "beta" : "delta") << t;
    out << '\t' << (left ? 'L' : 'R') << '\n';
    for (std::size_t i = 1; i <= tab.size(); ++i) {
        out << i;
        for (std::size_t t = 1; t <= tab.k(); ++t)
            out << '\t' << (left ? tab.alpha(i, t) : tab.gamma(i, t));
        for (std::size_t t = 1; t <= tab.l(); ++t)
            out << '\t' << (left ? tab.beta(i, t) : tab.delta(i, t));
        out << '\t' << (left ? left_word(tab, i) : right_word(tab, i)) << '\n';
    }
}

}  // namespace cupcap
