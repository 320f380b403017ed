#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cupcap/error.hpp"
#include "cupcap/extended.hpp"
#include "cupcap/pair_function.hpp"

namespace cupcap {

enum class ChainKind { Cup, Cap };

inline const char* to_string(ChainKind kind) { return kind == ChainKind::Cup ? "cup" : "cap"; }

inline ChainKind opposite(ChainKind kind) { return kind == ChainKind::Cup ? ChainKind::Cap : ChainKind::Cup; }

/// Increasing index sequence whose consecutive pair values are nondecreasing (cup) or
/// nonincreasing (cap). Equal consecutive values extend both kinds.
struct Chain {
    ChainKind kind = ChainKind::Cup;
    std::vector<std::size_t> indices;

    std::size_t length() const { return indices.size(); }
    std::size_t front() const { return indices.front(); }
    std::size_t back() const { return indices.back(); }

    std::string to_string() const
    {
        std::string s = cupcap::to_string(kind);
        for (std::size_t i : indices)
            s += " " + std::to_string(i);
        return s;
    }

    friend bool operator==(const Chain&, const Chain&) = default;
};

/// True when a may be followed by b in a chain of this kind.
template <typename T>
bool chain_step_ok(ChainKind kind, const T& a, const T& b)
{
    return kind == ChainKind::Cup ? !(b < a) : !(a < b);
}

template <typename T>
bool is_valid_chain(const PairFunction<T>& f, const Chain& c)
{
    for (std::size_t s = 0; s < c.indices.size(); ++s) {
        if (c.indices[s] < 1 || c.indices[s] > f.size())
            return false;
        if (s > 0 && c.indices[s - 1] >= c.indices[s])
            return false;
    }
    for (std::size_t s = 2; s < c.indices.size(); ++s)
        if (!chain_step_ok(c.kind, f(c.indices[s - 2], c.indices[s - 1]), f(c.indices[s - 1], c.indices[s])))
            return false;
    return true;
}

namespace detail {

/// Longest chain of the given kind ending with each pair (j, i), plus the predecessor of j in one
/// such chain (0 when the pair stands alone). Each middle element j is handled with one sorted
/// sweep over its incoming and outgoing pairs, O(m^2 log m) overall.
template <typename T>
struct PairChainLengths {
    PairFunction<std::size_t> length;
    PairFunction<std::size_t> pred;
};

template <typename T>
PairChainLengths<T> pair_chain_lengths(const PairFunction<T>& f, ChainKind kind)
{
    const std::size_t m = f.size();
    PairChainLengths<T> out{PairFunction<std::size_t>(m), PairFunction<std::size_t>(m)};
    auto before = [kind](const T& a, const T& b) { return kind == ChainKind::Cup ? a < b : b < a; };

    std::vector<std::size_t> in;
    std::vector<std::size_t> outgoing;
    for (std::size_t j = 1; j <= m; ++j) {
        in.clear();
        outgoing.clear();
        for (std::size_t h = 1; h < j; ++h)
            in.push_back(h);
        for (std::size_t i = j + 1; i <= m; ++i)
            outgoing.push_back(i);
        std::sort(in.begin(), in.end(), [&](std::size_t a, std::size_t b) { return before(f(a, j), f(b, j)); });
        std::sort(outgoing.begin(), outgoing.end(),
                  [&](std::size_t a, std::size_t b) { return before(f(j, a), f(j, b)); });

        std::size_t p = 0;
        std::size_t best_len = 0;
        std::size_t best_pred = 0;
        for (std::size_t i : outgoing) {
            const T& v = f(j, i);
            while (p < in.size() && !before(v, f(in[p], j))) {
                std::size_t len = out.length(in[p], j);
                if (len > best_len || (len == best_len && in[p] < best_pred)) {
                    best_len = len;
                    best_pred = in[p];
                }
                ++p;
            }
            if (best_len > 0) {
                out.length.set(j, i, best_len + 1);
                out.pred.set(j, i, best_pred);
            } else {
                out.length.set(j, i, 2);
                out.pred.set(j, i, 0);
            }
        }
    }
    return out;
}

template <typename T>
std::vector<std::size_t> longest_ending(const PairFunction<T>& f, ChainKind kind)
{
    const std::size_t m = f.size();
    auto dp = pair_chain_lengths(f, kind);
    std::vector<std::size_t> best(m + 1, 1);
    best[0] = 0;
    for (std::size_t j = 1; j <= m; ++j)
        for (std::size_t i = j + 1; i <= m; ++i)
            best[i] = std::max(best[i], dp.length(j, i));
    return best;
}

}  // namespace detail

struct ExtremeChain {
    std::size_t length = 0;
    Chain witness;
};

/// Longest cup or cap of f together with one chain achieving it.
template <typename T>
ExtremeChain extreme_chain(const PairFunction<T>& f, ChainKind kind)
{
    const std::size_t m = f.size();
    ExtremeChain result;
    result.witness.kind = kind;
    if (m == 0)
        return result;
    if (m == 1) {
        result.length = 1;
        result.witness.indices = {1};
        return result;
    }
    auto dp = detail::pair_chain_lengths(f, kind);
    std::size_t bj = 1, bi = 2;
    for (std::size_t j = 1; j <= m; ++j)
        for (std::size_t i = j + 1; i <= m; ++i)
            if (dp.length(j, i) > dp.length(bj, bi))
                bj = j, bi = i;
    result.length = dp.length(bj, bi);
    std::vector<std::size_t> rev{bi, bj};
    for (std::size_t h = dp.pred(bj, bi), cur = bj; h != 0;) {
        rev.push_back(h);
        std::size_t next = dp.pred(h, cur);
        cur = h;
        h = next;
    }
    result.witness.indices.assign(rev.rbegin(), rev.rend());
    return result;
}

/// Per-index lengths of the longest cups and caps ending and starting at each index (1-based;
/// entry 0 unused). Every index ends and starts a chain of length at least 1.
struct ChainProfile {
    std::vector<std::size_t> cup_ending;
    std::vector<std::size_t> cap_ending;
    std::vector<std::size_t> cup_starting;
    std::vector<std::size_t> cap_starting;
};

template <typename T>
ChainProfile chain_profile(const PairFunction<T>& f)
{
    const std::size_t m = f.size();
    ChainProfile p;
    p.cup_ending = detail::longest_ending(f, ChainKind::Cup);
    p.cap_ending = detail::longest_ending(f, ChainKind::Cap);
    auto g = mirrored(f);
    auto cup_rev = detail::longest_ending(g, ChainKind::Cup);
    auto cap_rev = detail::longest_ending(g, ChainKind::Cap);
    p.cup_starting.assign(m + 1, 0);
    p.cap_starting.assign(m + 1, 0);
    for (std::size_t i = 1; i <= m; ++i) {
        p.cup_starting[i] = cup_rev[m + 1 - i];
        p.cap_starting[i] = cap_rev[m + 1 - i];
    }
    return p;
}

struct FreenessReport {
    bool free = true;
    std::optional<Chain> witness;
};

/// Whether f has no k-cup and no l-cap; otherwise a k-cup or l-cap as witness.
template <typename T>
FreenessReport is_free(const PairFunction<T>& f, std::size_t k, std::size_t l)
{
    if (k < 2 || l < 2)
        throw Error(ErrorCode::InvalidArgument, "freeness needs k, l >= 2");
    FreenessReport report;
    for (auto [kind, bound] : {std::pair{ChainKind::Cup, k}, std::pair{ChainKind::Cap, l}}) {
        auto ext = extreme_chain(f, kind);
        if (ext.length >= bound) {
            report.free = false;
            ext.witness.indices.resize(bound);
            report.witness = std::move(ext.witness);
            return report;
        }
    }
    return report;
}

/// Optimal last/first values of chains ending/starting at each index.
///   alpha(i,t): least f(j,i) over (t+1)-cups ending with (j,i), +inf if none
///   beta(i,t):  greatest f(j,i) over (t+1)-caps ending with (j,i), -inf if none
///   gamma(i,t): greatest f(i,j) over (t+1)-cups starting with (i,j), -inf if none
///   delta(i,t): least f(i,j) over (t+1)-caps starting with (i,j), +inf if none
/// alpha and gamma are kept for t in [1,k], beta and delta for t in [1,l].
template <typename T>
class CupCapTables {
public:
    using Value = Extended<T>;

    CupCapTables(std::size_t m, std::size_t k, std::size_t l)
        : m_(m), k_(k), l_(l), alpha_(m * k), beta_(m * l), gamma_(m * k), delta_(m * l)
    {
    }

    std::size_t size() const { return m_; }
    std::size_t k() const { return k_; }
    std::size_t l() const { return l_; }

    const Value& alpha(std::size_t i, std::size_t t) const { return alpha_[at(i, t, k_)]; }
    const Value& beta(std::size_t i, std::size_t t) const { return beta_[at(i, t, l_)]; }
    const Value& gamma(std::size_t i, std::size_t t) const { return gamma_[at(i, t, k_)]; }
    const Value& delta(std::size_t i, std::size_t t) const { return delta_[at(i, t, l_)]; }

    Value& alpha(std::size_t i, std::size_t t) { return alpha_[at(i, t, k_)]; }
    Value& beta(std::size_t i, std::size_t t) { return beta_[at(i, t, l_)]; }
    Value& gamma(std::size_t i, std::size_t t) { return gamma_[at(i, t, k_)]; }
    Value& delta(std::size_t i, std::size_t t) { return delta_[at(i, t, l_)]; }

    /// Existence bridges: a (t+1)-chain ends/starts at i iff the table entry is not its sentinel.
    bool ends_cup(std::size_t i, std::size_t len) const { return len <= 1 || !alpha(i, len - 1).is_pos_inf(); }
    bool ends_cap(std::size_t i, std::size_t len) const { return len <= 1 || !beta(i, len - 1).is_neg_inf(); }
    bool starts_cup(std::size_t i, std::size_t len) const { return len <= 1 || !gamma(i, len - 1).is_neg_inf(); }
    bool starts_cap(std::size_t i, std::size_t len) const { return len <= 1 || !delta(i, len - 1).is_pos_inf(); }

    friend bool operator==(const CupCapTables&, const CupCapTables&) = default;

private:
    std::size_t at(std::size_t i, std::size_t t, std::size_t width) const
    {
        if (i < 1 || i > m_ || t < 1 || t > width)
            throw Error(ErrorCode::InvalidArgument,
                        "table entry (" + std::to_string(i) + "," + std::to_string(t) + ") out of range");
        return (i - 1) * width + (t - 1);
    }

    std::size_t m_, k_, l_;
    std::vector<Value> alpha_, beta_, gamma_, delta_;
};

/// Left-to-right DP: alpha(i,t) = min f(j,i) over j < i with alpha(j,t-1) <= f(j,i), where
/// alpha(j,0) = -inf; the other three tables follow the same pattern. O(m^2 (k + l)).
template <typename T>
CupCapTables<T> tables(const PairFunction<T>& f, std::size_t k, std::size_t l)
{
    if (k < 1 || l < 1)
        throw Error(ErrorCode::InvalidArgument, "tables need k, l >= 1");
    using V = Extended<T>;
    const std::size_t m = f.size();
    CupCapTables<T> tab(m, k, l);

    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t t = 1; t <= k; ++t) {
            V best = V::pos_inf();
            for (std::size_t j = 1; j < i; ++j) {
                const T& v = f(j, i);
                if (t > 1 && tab.alpha(j, t - 1) > v)
                    continue;
                if (best > v)
                    best = V::finite(v);
            }
            tab.alpha(i, t) = std::move(best);
        }
        for (std::size_t t = 1; t <= l; ++t) {
            V best = V::neg_inf();
            for (std::size_t j = 1; j < i; ++j) {
                const T& v = f(j, i);
                if (t > 1 && tab.beta(j, t - 1) < v)
                    continue;
                if (best < v)
                    best = V::finite(v);
            }
            tab.beta(i, t) = std::move(best);
        }
    }

    for (std::size_t i = m; i >= 1; --i) {
        for (std::size_t t = 1; t <= k; ++t) {
            V best = V::neg_inf();
            for (std::size_t j = i + 1; j <= m; ++j) {
                const T& v = f(i, j);
                if (t > 1 && tab.gamma(j, t - 1) < v)
                    continue;
                if (best < v)
                    best = V::finite(v);
            }
            tab.gamma(i, t) = std::move(best);
        }
        for (std::size_t t = 1; t <= l; ++t) {
            V best = V::pos_inf();
            for (std::size_t j = i + 1; j <= m; ++j) {
                const T& v = f(i, j);
                if (t > 1 && tab.delta(j, t - 1) > v)
                    continue;
                if (best > v)
                    best = V::finite(v);
            }
            tab.delta(i, t) = std::move(best);
        }
    }
    return tab;
}

}  // namespace cupcap
