#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cupcap/error.hpp"
#include "cupcap/geometry.hpp"

namespace cupcap {

/// Seeded generator. The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard; bounded draws use our own rejection step instead of std::uniform_int_distribution
/// (whose algorithm is implementation-defined), so results match across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound].
    std::uint64_t uniform(std::uint64_t bound)
    {
        if (bound == UINT64_MAX)
            return next();
        const std::uint64_t range = bound + 1;
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % range;
    }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(uniform(static_cast<std::uint64_t>(hi - lo)));
    }

private:
    std::mt19937_64 engine_;
};

inline constexpr std::size_t kMaxAttemptsPerPoint = 10000;
inline constexpr std::int64_t kMaxSpan = std::int64_t{1} << 30;

/// m points with integer coordinates in [0, span]^2, distinct x and no three collinear.
/// Each point is drawn as (x, y) from Rng(seed), x first; a draw that repeats an x or is collinear
/// with two accepted points is discarded and redrawn, at most kMaxAttemptsPerPoint times per point.
/// The accepted points are returned sorted by x.
inline PointSet random_point_set(std::uint64_t seed, std::size_t m, std::int64_t span)
{
    if (m < 1)
        throw Error(ErrorCode::InvalidArgument, "m must be at least 1");
    if (span < static_cast<std::int64_t>(m) || span > kMaxSpan)
        throw Error(ErrorCode::InvalidArgument, "span must satisfy m <= span <= 2^30");

    Rng rng(seed);
    std::vector<std::int64_t> xs;
    std::vector<std::int64_t> ys;
    std::set<std::int64_t> used_x;
    auto collinear_with_accepted = [&](std::int64_t x, std::int64_t y) {
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = a + 1; b < xs.size(); ++b) {
                // |coords| <= 2^30 keeps both products below 2^62.
                std::int64_t cross = (xs[b] - xs[a]) * (y - ys[a]) - (ys[b] - ys[a]) * (x - xs[a]);
                if (cross == 0)
                    return true;
            }
        return false;
    };

    for (std::size_t n = 0; n < m; ++n) {
        bool placed = false;
        for (std::size_t attempt = 0; attempt < kMaxAttemptsPerPoint && !placed; ++attempt) {
            std::int64_t x = rng.uniform(0, span);
            std::int64_t y = rng.uniform(0, span);
            if (used_x.count(x) || collinear_with_accepted(x, y))
                continue;
            xs.push_back(x);
            ys.push_back(y);
            used_x.insert(x);
            placed = true;
        }
        if (!placed)
            throw Error(ErrorCode::ExhaustedAttempts, "could not place point " + std::to_string(n + 1) + " after " +
                                                          std::to_string(kMaxAttemptsPerPoint) + " draws");
    }

    std::vector<Point> pts;
    pts.reserve(m);
    for (std::size_t a = 0; a < xs.size(); ++a)
        pts.push_back(Point{Rational(xs[a]), Rational(ys[a])});
    return PointSet::from_unsorted(std::move(pts));
}

}  // namespace cupcap
