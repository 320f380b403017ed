#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cupcap/chains.hpp"
#include "cupcap/error.hpp"
#include "cupcap/geometry.hpp"
#include "cupcap/pair_function.hpp"
#include "cupcap/words.hpp"

namespace cupcap {

struct ConvexSubsetResult {
    std::size_t size = 0;
    std::vector<std::size_t> witness;  // counter-clockwise, starting at the leftmost point
};

/// Every consecutive triple of `hull` (cyclically) turns the same way.
inline bool is_convex_polygon(const PointSet& p, const std::vector<std::size_t>& hull)
{
    const std::size_t s = hull.size();
    if (s < 3)
        return true;
    int sign = 0;
    for (std::size_t t = 0; t < s; ++t) {
        int o = orientation(p[hull[t]], p[hull[(t + 1) % s]], p[hull[(t + 2) % s]]);
        if (o == 0 || (sign != 0 && o != sign))
            return false;
        sign = o;
    }
    return true;
}

namespace detail {

/// For a fixed leftmost point, longest chains (of one kind) from `left` that end with each pair.
/// len is 0 for pairs not reachable from `left`.
struct AnchoredChains {
    std::size_t m;
    std::vector<std::uint32_t> len;
    std::vector<std::uint32_t> pred;

    std::uint32_t& length(std::size_t j, std::size_t i) { return len[j * (m + 1) + i]; }
    std::uint32_t& predecessor(std::size_t j, std::size_t i) { return pred[j * (m + 1) + i]; }
};

inline AnchoredChains anchored_chains(const PairFunction<std::int64_t>& f, std::size_t left, ChainKind kind)
{
    const std::size_t m = f.size();
    AnchoredChains a{m, std::vector<std::uint32_t>((m + 1) * (m + 1), 0), std::vector<std::uint32_t>((m + 1) * (m + 1), 0)};
    auto before = [kind](std::int64_t x, std::int64_t y) { return kind == ChainKind::Cup ? x < y : y < x; };
    for (std::size_t i = left + 1; i <= m; ++i)
        a.length(left, i) = 2;

    std::vector<std::size_t> in, out;
    for (std::size_t j = left + 1; j <= m; ++j) {
        in.clear();
        out.clear();
        for (std::size_t h = left; h < j; ++h)
            if (a.length(h, j) > 0)
                in.push_back(h);
        for (std::size_t i = j + 1; i <= m; ++i)
            out.push_back(i);
        std::sort(in.begin(), in.end(), [&](std::size_t x, std::size_t y) { return before(f(x, j), f(y, j)); });
        std::sort(out.begin(), out.end(), [&](std::size_t x, std::size_t y) { return before(f(j, x), f(j, y)); });
        std::size_t p = 0;
        std::uint32_t best = 0;
        std::size_t best_h = 0;
        for (std::size_t i : out) {
            while (p < in.size() && !before(f(j, i), f(in[p], j))) {
                if (a.length(in[p], j) > best) {
                    best = a.length(in[p], j);
                    best_h = in[p];
                }
                ++p;
            }
            if (best > 0) {
                a.length(j, i) = best + 1;
                a.predecessor(j, i) = static_cast<std::uint32_t>(best_h);
            }
        }
    }
    return a;
}

/// Indices of the best chain from `left` to `right` (inclusive), left to right.
inline std::vector<std::size_t> best_anchored_chain(AnchoredChains& a, std::size_t left, std::size_t right)
{
    std::size_t best_j = left;
    for (std::size_t j = left; j < right; ++j)
        if (a.length(j, right) > a.length(best_j, right))
            best_j = j;
    std::vector<std::size_t> rev{right};
    std::size_t cur = right, prev = best_j;
    while (prev != left) {
        rev.push_back(prev);
        std::size_t next = a.predecessor(prev, cur);
        cur = prev;
        prev = next;
    }
    rev.push_back(left);
    return {rev.rbegin(), rev.rend()};
}

}  // namespace detail

/// Largest subset in convex position. Such a subset splits at its leftmost and rightmost points
/// into a cup (lower chain) and a cap (upper chain), and any cup and cap sharing both endpoints
/// form a convex polygon, so for each leftmost point we run the anchored chain DP of both kinds.
/// O(m^3 log m) on slope ranks.
inline ConvexSubsetResult largest_convex_subset(const PointSet& p)
{
    const std::size_t m = p.size();
    ConvexSubsetResult res;
    if (m <= 2) {
        res.size = m;
        for (std::size_t i = 1; i <= m; ++i)
            res.witness.push_back(i);
        return res;
    }
    auto f = ranked(slope_function(p));
    std::size_t best = 0, best_left = 0, best_right = 0;
    for (std::size_t left = 1; left < m; ++left) {
        auto cup = detail::anchored_chains(f, left, ChainKind::Cup);
        auto cap = detail::anchored_chains(f, left, ChainKind::Cap);
        for (std::size_t right = left + 1; right <= m; ++right) {
            std::size_t cu = 0, ca = 0;
            for (std::size_t j = left; j < right; ++j) {
                cu = std::max<std::size_t>(cu, cup.length(j, right));
                ca = std::max<std::size_t>(ca, cap.length(j, right));
            }
            if (cu + ca - 2 > best) {
                best = cu + ca - 2;
                best_left = left;
                best_right = right;
            }
        }
    }
    auto cup = detail::anchored_chains(f, best_left, ChainKind::Cup);
    auto cap = detail::anchored_chains(f, best_left, ChainKind::Cap);
    auto lower = detail::best_anchored_chain(cup, best_left, best_right);
    auto upper = detail::best_anchored_chain(cap, best_left, best_right);
    res.size = best;
    res.witness = lower;
    for (std::size_t t = upper.size() - 1; t-- > 1;)
        res.witness.push_back(upper[t]);
    return res;
}

/// Exhaustive search over subsets, largest first; each subset is tested by counting the vertices
/// of its hull (monotone chain over a precomputed orientation table). Limited to m <= 14.
inline std::size_t largest_convex_subset_brute(const PointSet& p)
{
    const std::size_t m = p.size();
    if (m > 14)
        throw Error(ErrorCode::InvalidArgument, "brute force limited to 14 points");
    if (m <= 2)
        return m;
    std::vector<int> orient(m * m * m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                if (a != b && b != c && a != c)
                    orient[(a * m + b) * m + c] = orientation(p[a + 1], p[b + 1], p[c + 1]);
    auto turn = [&](std::size_t a, std::size_t b, std::size_t c) { return orient[(a * m + b) * m + c]; };

    auto hull_vertices = [&](const std::vector<std::size_t>& s) {
        // s is sorted by x. Lower hull keeps left turns, upper hull keeps right turns.
        std::vector<std::size_t> lower, upper;
        for (std::size_t v : s) {
            while (lower.size() >= 2 && turn(lower[lower.size() - 2], lower.back(), v) <= 0)
                lower.pop_back();
            lower.push_back(v);
            while (upper.size() >= 2 && turn(upper[upper.size() - 2], upper.back(), v) >= 0)
                upper.pop_back();
            upper.push_back(v);
        }
        return lower.size() + upper.size() - 2;
    };

    std::size_t best = 2;
    std::vector<std::size_t> s;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        auto bits = static_cast<std::size_t>(__builtin_popcount(mask));
        if (bits <= best)
            continue;
        s.clear();
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1)
                s.push_back(i);
        if (hull_vertices(s) == bits)
            best = bits;
    }
    return best;
}

namespace detail {

struct Block {
    std::vector<Point> points;  // integer coordinates, x in [0, width], y in [0, height]
    BigInt width = 0;
    BigInt height = 0;
    BigInt slope_bound = 0;  // every slope inside the block has absolute value <= slope_bound
};

inline Block translated(const Block& b, const BigInt& dx, const BigInt& dy)
{
    Block out = b;
    for (auto& pt : out.points) {
        pt.x += Rational(dx);
        pt.y += Rational(dy);
    }
    return out;
}

/// No (k+2)-cup and no (l+2)-cap. The left part has no (k+1)-cup, the right part no (l+1)-cap,
/// and every slope between the parts exceeds every slope inside them: a cup can then leave the
/// left part only as its final step, and a cap can enter the right part only as its first.
inline Block free_block(std::size_t k, std::size_t l)
{
    if (k == 0 || l == 0)
        return Block{{Point{0, 0}}, 0, 0, 0};
    Block left = free_block(k - 1, l);
    Block right = free_block(k, l - 1);
    const BigInt inner = std::max<BigInt>(left.slope_bound, right.slope_bound);
    const BigInt dx = left.width + 1;
    // Smallest cross slope >= (dy - left.height) / (dx + right.width) = inner + 1.
    const BigInt dy = left.height + (inner + 1) * (dx + right.width);
    Block shifted = translated(right, dx, dy);

    Block out;
    out.points = std::move(left.points);
    out.points.insert(out.points.end(), shifted.points.begin(), shifted.points.end());
    out.width = dx + right.width;
    out.height = dy + right.height;
    // Largest cross slope <= (dy + right.height) / 1.
    out.slope_bound = std::max<BigInt>(inner, dy + right.height);
    return out;
}

}  // namespace detail

using Transcript = std::vector<std::string>;

/// C(k+l, k) points whose slope function has no (k+2)-cup and no (l+2)-cap. The result is
/// re-verified before it is returned.
inline PointSet free_construction(std::size_t k, std::size_t l, Transcript* transcript = nullptr)
{
    if (k > 6 || l > 6)
        throw Error(ErrorCode::InvalidArgument, "free_construction supports 0 <= k, l <= 6");
    PointSet p(detail::free_block(k, l).points);
    const BigInt expected = binomial(k + l, k);
    if (BigInt(p.size()) != expected)
        throw Error(ErrorCode::VerificationFailed, "size " + std::to_string(p.size()) + " != " + expected.str());
    auto f = ranked(slope_function(p));
    auto cup = extreme_chain(f, ChainKind::Cup);
    auto cap = extreme_chain(f, ChainKind::Cap);
    const bool free = cup.length < k + 2 && cap.length < l + 2;
    if (transcript) {
        transcript->push_back("points " + std::to_string(p.size()) + " = C(" + std::to_string(k + l) + "," +
                              std::to_string(k) + ")");
        transcript->push_back("general position: checked");
        transcript->push_back("longest cup " + std::to_string(cup.length) + " < " + std::to_string(k + 2));
        transcript->push_back("longest cap " + std::to_string(cap.length) + " < " + std::to_string(l + 2));
        transcript->push_back(std::string("free(") + std::to_string(k + 2) + "," + std::to_string(l + 2) +
                              "): " + (free ? "PASS" : "FAIL"));
    }
    if (!free)
        throw Error(ErrorCode::VerificationFailed, "construction has a " + (cup.length >= k + 2 ? cup : cap).witness.to_string());
    return p;
}

/// 2^(n-2) points with no n points in convex position, for 4 <= n <= 6. Blocks
/// free_construction(i, n-2-i), i = 0..n-2, are placed left to right along a concave chain of
/// anchors with every anchor-to-anchor slope above all slopes inside the blocks; a cup then uses
/// one block plus at most one later point, and a cap at most one point per block before its last.
inline PointSet es_lower(std::size_t n, Transcript* transcript = nullptr)
{
    if (n < 4 || n > 6)
        throw Error(ErrorCode::InvalidArgument, "es_lower supports 4 <= n <= 6");
    const std::size_t blocks = n - 1;
    std::vector<detail::Block> parts;
    BigInt width = 0, height = 0, inner = 0;
    for (std::size_t i = 0; i < blocks; ++i) {
        parts.push_back(detail::free_block(i, n - 2 - i));
        width = std::max<BigInt>(width, parts.back().width);
        height = std::max<BigInt>(height, parts.back().height);
        inner = std::max<BigInt>(inner, parts.back().slope_bound);
    }
    // Anchor slopes s_j = inner + 1 + (blocks - 1 - j), strictly decreasing. Offsets inside a
    // block move a slope by at most (height + smax * width) / (spacing - width) < 1/4, so every
    // cross slope stays above inner and consecutive cross slopes stay ordered.
    const BigInt smax = inner + 1 + BigInt(blocks - 1);
    const BigInt spacing = width + 4 * (height + smax * width) + 1;
    std::vector<Point> pts;
    BigInt anchor_y = 0;
    for (std::size_t i = 0; i < blocks; ++i) {
        if (i > 0)
            anchor_y += (inner + 1 + BigInt(blocks - i)) * spacing;
        auto placed = detail::translated(parts[i], spacing * i, anchor_y);
        pts.insert(pts.end(), placed.points.begin(), placed.points.end());
    }
    PointSet p(std::move(pts));
    const std::size_t expected = std::size_t{1} << (n - 2);
    if (p.size() != expected)
        throw Error(ErrorCode::VerificationFailed, "size " + std::to_string(p.size()));
    auto convex = largest_convex_subset(p);
    if (transcript) {
        transcript->push_back("points " + std::to_string(p.size()) + " = 2^" + std::to_string(n - 2));
        transcript->push_back("general position: checked");
        transcript->push_back("largest convex subset " + std::to_string(convex.size) + " < " + std::to_string(n) +
                              (convex.size < n ? ": PASS" : ": FAIL"));
    }
    if (convex.size >= n)
        throw Error(ErrorCode::VerificationFailed, "found " + std::to_string(convex.size) + " points in convex position");
    return p;
}

/// Largest m admitting an f on m elements with no k-cup and no l-cap, by trying every
/// assignment of values 1..p to the p = m(m-1)/2 pairs (which realizes every weak ordering).
/// Gives up once p would exceed 6.
inline std::size_t exhaustive_es_prime(std::size_t k, std::size_t l)
{
    if (k < 2 || l < 2)
        throw Error(ErrorCode::InvalidArgument, "need k, l >= 2");
    for (std::size_t m = 1;; ++m) {
        const std::size_t pairs = m * (m - 1) / 2;
        if (pairs > 6)
            throw Error(ErrorCode::SearchSpaceTooLarge, "m = " + std::to_string(m) + " needs " +
                                                            std::to_string(pairs) + " pairs");
        PairFunction<std::int64_t> f(m);
        std::vector<std::int64_t> digits(pairs, 1);
        bool found = false;
        while (true) {
            std::size_t slot = 0;
            for (std::size_t i = 1; i <= m; ++i)
                for (std::size_t j = i + 1; j <= m; ++j)
                    f.set(i, j, digits[slot++]);
            if (is_free(f, k, l).free) {
                found = true;
                break;
            }
            std::size_t d = 0;
            while (d < pairs && digits[d] == static_cast<std::int64_t>(pairs))
                digits[d++] = 1;
            if (d == pairs)
                break;
            ++digits[d];
        }
        if (!found)
            return m - 1;
    }
}

}  // namespace cupcap
