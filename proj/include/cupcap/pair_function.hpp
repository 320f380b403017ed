#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cupcap/error.hpp"
#include "cupcap/geometry.hpp"
#include "cupcap/rational.hpp"

namespace cupcap {

/// Values on the pairs (i, j), 1 <= i < j <= m, stored row-major in a packed triangle.
template <typename T>
class PairFunction {
public:
    using value_type = T;

    PairFunction() = default;
    explicit PairFunction(std::size_t m) : m_(m), values_(m * (m > 0 ? m - 1 : 0) / 2) {}

    template <typename F>
    static PairFunction generate(std::size_t m, F&& fn)
    {
        PairFunction f(m);
        for (std::size_t i = 1; i <= m; ++i)
            for (std::size_t j = i + 1; j <= m; ++j)
                f.set(i, j, fn(i, j));
        return f;
    }

    std::size_t size() const { return m_; }
    std::size_t pair_count() const { return values_.size(); }

    const T& operator()(std::size_t i, std::size_t j) const { return values_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, T v) { values_[index(i, j)] = std::move(v); }

    const std::vector<T>& values() const { return values_; }

    friend bool operator==(const PairFunction&, const PairFunction&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j) const
    {
        if (!(1 <= i && i < j && j <= m_))
            throw Error(ErrorCode::InvalidArgument,
                        "pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1<=i<j<=" + std::to_string(m_));
        // Row i-1 starts after (i-1) rows of decreasing length m-1, m-2, ...
        std::size_t r = i - 1;
        return r * (2 * m_ - r - 1) / 2 + (j - i - 1);
    }

    std::size_t m_ = 0;
    std::vector<T> values_;
};

inline PairFunction<Rational> slope_function(const PointSet& p)
{
    return PairFunction<Rational>::generate(p.size(), [&](std::size_t i, std::size_t j) { return slope(p[i], p[j]); });
}

/// g(a, b) = -f(m+1-b, m+1-a). Reversing the index order this way maps t-cups starting at i to
/// t-cups ending at m+1-i (and likewise for caps), so "starting" questions reduce to "ending" ones.
template <typename T>
PairFunction<T> mirrored(const PairFunction<T>& f)
{
    const std::size_t m = f.size();
    return PairFunction<T>::generate(m, [&](std::size_t a, std::size_t b) { return T(-f(m + 1 - b, m + 1 - a)); });
}

/// g(i, j) = -f(i, j); swaps cups and caps.
template <typename T>
PairFunction<T> negated(const PairFunction<T>& f)
{
    return PairFunction<T>::generate(f.size(), [&](std::size_t i, std::size_t j) { return T(-f(i, j)); });
}

/// Replaces values by their dense rank (ties share a rank). Every cup/cap question depends only on
/// comparisons, so the result is interchangeable with f for those purposes.
template <typename T>
PairFunction<std::int64_t> ranked(const PairFunction<T>& f)
{
    std::vector<T> sorted = f.values();
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return PairFunction<std::int64_t>::generate(f.size(), [&](std::size_t i, std::size_t j) {
        return static_cast<std::int64_t>(std::lower_bound(sorted.begin(), sorted.end(), f(i, j)) - sorted.begin());
    });
}

inline PairFunction<Rational> parse_pair_function(std::istream& in)
{
    std::size_t line_no = 0;
    detail::expect_header(in, "pairfn v1", line_no);
    std::string line;
    std::size_t m = 0;
    bool have_m = false;
    while (!have_m && std::getline(in, line)) {
        ++line_no;
        if (detail::is_blank_or_comment(line))
            continue;
        auto tok = detail::split_ws(line);
        if (tok.size() != 2 || tok[0] != "m")
            throw Error(ErrorCode::MalformedInput, "line " + std::to_string(line_no) + ": expected 'm <count>'");
        BigInt count = parse_bigint(tok[1]);
        if (count < 1 || count > 100000)
            throw Error(ErrorCode::MalformedInput, "line " + std::to_string(line_no) + ": m out of range");
        m = count.convert_to<std::size_t>();
        have_m = true;
    }
    if (!have_m)
        throw Error(ErrorCode::MalformedInput, "missing 'm <count>' line");

    PairFunction<Rational> f(m);
    std::vector<bool> seen(f.pair_count(), false);
    std::size_t filled = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_blank_or_comment(line))
            continue;
        auto tok = detail::split_ws(line);
        auto where = "line " + std::to_string(line_no) + ": ";
        if (tok.size() != 3)
            throw Error(ErrorCode::MalformedInput, where + "expected 'i j value'");
        BigInt bi = parse_bigint(tok[0]);
        BigInt bj = parse_bigint(tok[1]);
        if (!(1 <= bi && bi < bj && bj <= m))
            throw Error(ErrorCode::MalformedInput, where + "pair must satisfy 1 <= i < j <= m");
        auto i = bi.convert_to<std::size_t>();
        auto j = bj.convert_to<std::size_t>();
        std::size_t r = i - 1;
        std::size_t slot = r * (2 * m - r - 1) / 2 + (j - i - 1);
        if (seen[slot])
            throw Error(ErrorCode::MalformedInput, where + "pair (" + tok[0] + "," + tok[1] + ") given twice");
        try {
            f.set(i, j, Rational::parse(tok[2]));
        } catch (const Error& e) {
            throw Error(ErrorCode::MalformedInput, where + e.what());
        }
        seen[slot] = true;
        ++filled;
    }
    if (filled != f.pair_count())
        throw Error(ErrorCode::MalformedInput, "expected " + std::to_string(f.pair_count()) + " pairs, got " +
                                                   std::to_string(filled));
    return f;
}

inline PairFunction<Rational> parse_pair_function(const std::string& text)
{
    std::istringstream in(text);
    return parse_pair_function(in);
}

template <typename T>
void write_pair_function(std::ostream& out, const PairFunction<T>& f)
{
    out << "pairfn v1\nm " << f.size() << '\n';
    for (std::size_t i = 1; i <= f.size(); ++i)
        for (std::size_t j = i + 1; j <= f.size(); ++j)
            out << i << ' ' << j << ' ' << f(i, j) << '\n';
}

}  // namespace cupcap
