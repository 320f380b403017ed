#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "cupcap/error.hpp"
#include "cupcap/rational.hpp"
#include "cupcap/words.hpp"

namespace cupcap {

/// Counting argument for (n, n-1)-free sets with k = n-2 cup letters and l = n-3 cap letters.
struct BoundBreakdown {
    std::size_t n = 0;
    BigInt lbaa;    // left words of class (beta * alpha alpha)
    BigInt rtotal;  // all right words
    BigInt rdg;     // right words of class (delta * gamma)
    BigInt raw;     // lbaa + rtotal - rdg
    Rational ratio;  // raw / rtotal
};

inline BoundBreakdown breakdown(std::size_t n)
{
    if (n < 6)
        throw Error(ErrorCode::InvalidArgument, "breakdown needs n >= 6");
    const std::size_t k = n - 2, l = n - 3;
    BoundBreakdown b;
    b.n = n;
    b.lbaa = class_count(k, l, Pattern{{Symbol::B}, {Symbol::A, Symbol::A}});
    b.rtotal = class_count(k, l, Pattern{});
    b.rdg = class_count(k, l, Pattern{{Symbol::B}, {Symbol::A}});
    b.raw = b.lbaa + b.rtotal - b.rdg;
    b.ratio = Rational(b.raw, b.rtotal);
    return b;
}

struct RatioRow {
    std::size_t n;
    BigInt raw;
    BigInt rtotal;
    Rational ratio;
    std::string decimal;
};

inline std::vector<RatioRow> ratio_table(std::size_t from, std::size_t to, std::size_t step)
{
    if (from < 6 || from > to || step == 0)
        throw Error(ErrorCode::InvalidArgument, "ratio table needs 6 <= from <= to and step >= 1");
    std::vector<RatioRow> rows;
    for (std::size_t n = from; n <= to; n += step) {
        auto b = breakdown(n);
        rows.push_back({n, b.raw, b.rtotal, b.ratio, to_decimal(b.ratio, 10)});
        if (to - n < step)
            break;
    }
    return rows;
}

inline void write_ratio_csv(std::ostream& out, const std::vector<RatioRow>& rows)
{
    out << "n,raw,rtotal,ratio_decimal\n";
    for (const auto& r : rows)
        out << r.n << ',' << r.raw << ',' << r.rtotal << ',' << r.decimal << '\n';
}

/// Upper bound on ES(n) assembled from one removal of the mate set: |P - Q'| <= raw and
/// |Q'| <= |P|/(n-2) give |P| <= raw (n-2)/(n-3) =: M for sets with no convex n-gon and no
/// (n-1)-cap; one more point forces either, and one more covers the cap case. This closed form
/// is our own assembly of the counting steps, not a stated result, and the transcript says so.
inline BigInt assembled_upper(std::size_t n, std::vector<std::string>* transcript = nullptr)
{
    if (n < 7)
        throw Error(ErrorCode::InvalidArgument, "assembled_upper needs n >= 7");
    auto b = breakdown(n);
    const BigInt m = floor_div(b.raw * (n - 2), BigInt(n - 3));
    const BigInt out = m + 2;
    if (transcript) {
        auto& t = *transcript;
        const std::string sn = std::to_string(n);
        t.push_back("n = " + sn + ", k = " + std::to_string(n - 2) + ", l = " + std::to_string(n - 3));
        t.push_back("[cstrings] |R| = C(" + std::to_string(2 * n - 5) + "," + std::to_string(n - 2) +
                    ") = " + b.rtotal.str());
        t.push_back("[cstrings] |R(δ*γ)| = " + b.rdg.str());
        t.push_back("[clast] |L(β*αα)| = " + b.lbaa.str());
        t.push_back("[clast] |P - Q'| <= " + b.lbaa.str() + " + " + b.rtotal.str() + " - " + b.rdg.str() + " = " +
                    b.raw.str());
        t.push_back("[qprime] |Q'| <= |P|/" + std::to_string(n - 2) + " => |P| <= floor(" + b.raw.str() + "*" +
                    std::to_string(n - 2) + "/" + std::to_string(n - 3) + ") = " + m.str());
        t.push_back("ES(" + sn + ") <= " + m.str() + " + 2 = " + out.str());
        t.push_back("note: derived closed form (single removal of Q'), not a stated result");
    }
    return out;
}

}  // namespace cupcap
