#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cupcap/error.hpp"
#include "cupcap/rational.hpp"

namespace cupcap {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c)
{
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross.sign();
}

inline Rational slope(const Point& a, const Point& b) { return (b.y - a.y) / (b.x - a.x); }

enum class Collinearity { Reject, Allow };

/// Planar points ordered by strictly increasing x, addressed 1..m.
class PointSet {
public:
    PointSet() = default;

    explicit PointSet(std::vector<Point> points, Collinearity collinear = Collinearity::Reject)
        : points_(std::move(points))
    {
        std::vector<std::size_t> by_x(points_.size());
        for (std::size_t a = 0; a < by_x.size(); ++a)
            by_x[a] = a;
        std::stable_sort(by_x.begin(), by_x.end(),
                         [this](std::size_t a, std::size_t b) { return points_[a].x < points_[b].x; });
        for (std::size_t t = 1; t < by_x.size(); ++t) {
            std::size_t a = std::min(by_x[t - 1], by_x[t]);
            std::size_t b = std::max(by_x[t - 1], by_x[t]);
            if (points_[a].x == points_[b].x)
                throw Error(ErrorCode::DuplicateX, "points " + std::to_string(a + 1) + " and " +
                                                       std::to_string(b + 1) + " share x = " + points_[a].x.to_string());
        }
        for (std::size_t a = 1; a < points_.size(); ++a)
            if (!(points_[a - 1].x < points_[a].x))
                throw Error(ErrorCode::MalformedInput,
                            "points must be listed by increasing x (point " + std::to_string(a + 1) + ")");
        if (collinear == Collinearity::Reject) {
            if (auto t = find_collinear_triple())
                throw Error(ErrorCode::Collinear, "points " + std::to_string((*t)[0]) + " " +
                                                      std::to_string((*t)[1]) + " " + std::to_string((*t)[2]) +
                                                      " are collinear");
        }
    }

    /// Sorts by x before validating.
    static PointSet from_unsorted(std::vector<Point> points, Collinearity collinear = Collinearity::Reject)
    {
        std::stable_sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
        return PointSet(std::move(points), collinear);
    }

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    /// 1-based access.
    const Point& operator[](std::size_t i) const { return points_.at(i - 1); }
    const std::vector<Point>& points() const { return points_; }

    /// First collinear triple (1-based, increasing), found by sorting the slopes out of each point.
    std::optional<std::array<std::size_t, 3>> find_collinear_triple() const
    {
        const std::size_t m = points_.size();
        std::vector<std::pair<Rational, std::size_t>> out;
        for (std::size_t i = 0; i + 2 < m; ++i) {
            out.clear();
            for (std::size_t j = i + 1; j < m; ++j)
                out.emplace_back(slope(points_[i], points_[j]), j);
            std::sort(out.begin(), out.end());
            for (std::size_t t = 1; t < out.size(); ++t)
                if (out[t].first == out[t - 1].first)
                    return std::array<std::size_t, 3>{i + 1, out[t - 1].second + 1, out[t].second + 1};
        }
        return std::nullopt;
    }

    /// Sub-set keeping the listed 1-based indices (must be increasing).
    PointSet subset(const std::vector<std::size_t>& indices) const
    {
        std::vector<Point> kept;
        kept.reserve(indices.size());
        for (std::size_t i : indices)
            kept.push_back((*this)[i]);
        return PointSet(std::move(kept), Collinearity::Allow);
    }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> points_;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line)
{
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok)
        tokens.push_back(tok);
    return tokens;
}

inline bool is_blank_or_comment(const std::string& line)
{
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

inline std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Reads the first meaningful line and checks it equals `header`.
inline void expect_header(std::istream& in, const std::string& header, std::size_t& line_no)
{
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line))
            continue;
        if (trim(line) != header)
            throw Error(ErrorCode::MalformedInput, "expected header '" + header + "', got '" + trim(line) + "'");
        return;
    }
    throw Error(ErrorCode::MalformedInput, "missing header '" + header + "'");
}

}  // namespace detail

inline PointSet parse_point_set(std::istream& in, Collinearity collinear = Collinearity::Reject)
{
    std::size_t line_no = 0;
    detail::expect_header(in, "points v1", line_no);
    std::vector<Point> points;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_blank_or_comment(line))
            continue;
        auto tok = detail::split_ws(line);
        if (tok.size() != 2)
            throw Error(ErrorCode::MalformedInput,
                        "line " + std::to_string(line_no) + ": expected 2 coordinates, got " + std::to_string(tok.size()));
        try {
            points.push_back(Point{Rational::parse(tok[0]), Rational::parse(tok[1])});
        } catch (const Error& e) {
            throw Error(ErrorCode::MalformedInput, "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return PointSet(std::move(points), collinear);
}

inline PointSet parse_point_set(const std::string& text, Collinearity collinear = Collinearity::Reject)
{
    std::istringstream in(text);
    return parse_point_set(in, collinear);
}

inline void write_point_set(std::ostream& out, const PointSet& p)
{
    out << "points v1\n";
    for (const auto& pt : p.points())
        out << pt.x << ' ' << pt.y << '\n';
}

inline std::string to_text(const PointSet& p)
{
    std::ostringstream out;
    write_point_set(out, p);
    return out.str();
}

/// Applies (x, y) -> (x + lambda*y, y) and re-sorts by x. The map is affine, so convex position of
/// every subset is preserved. Collinear triples survive the map and are left for the caller to reject.
/// Takes raw points since its job is repairing inputs with repeated x.
inline PointSet shear(const std::vector<Point>& points, const Rational& lambda)
{
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& pt : points)
        out.push_back(Point{pt.x + lambda * pt.y, pt.y});
    std::sort(out.begin(), out.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i - 1].x == out[i].x)
            throw Error(ErrorCode::ShearFailed, "duplicate x = " + out[i].x.to_string() + " after shear by " +
                                                    lambda.to_string());
    return PointSet(std::move(out), Collinearity::Allow);
}

inline PointSet shear(const PointSet& p, const Rational& lambda) { return shear(p.points(), lambda); }

}  // namespace cupcap
