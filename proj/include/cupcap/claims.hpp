#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cupcap/chains.hpp"
#include "cupcap/error.hpp"
#include "cupcap/extremal.hpp"
#include "cupcap/geometry.hpp"
#include "cupcap/pair_function.hpp"
#include "cupcap/random.hpp"
#include "cupcap/words.hpp"

namespace cupcap {

enum class Verdict { Pass, Fail, Unknown };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

struct CheckResult {
    Verdict verdict = Verdict::Pass;
    std::string witness;

    bool ok() const { return verdict == Verdict::Pass; }
};

inline constexpr std::uint64_t kDefaultSignatureBudget = 1'000'000;

// ---------------------------------------------------------------------------------------------
// Pair-function claims

/// Witnesses for one pair i < j of a (k+2, l+2)-free function:
///   alpha_i(x) > f(i,j) > beta_i(y)   and   alpha_j(x) <= f(i,j) <= beta_j(y)
///   gamma_j(xp) < f(i,j) < delta_j(yp) and   gamma_i(xp) >= f(i,j) >= delta_i(yp)
struct WitnessAB {
    std::size_t x = 0;
    std::size_t y = 0;
    std::size_t xp = 0;
    std::size_t yp = 0;

    friend bool operator==(const WitnessAB&, const WitnessAB&) = default;
};

/// Scans [k] x [l] for the smallest witnesses; nullopt on any side means the scan failed.
template <typename T>
std::optional<WitnessAB> scan_ab_witness(const PairFunction<T>& f, const CupCapTables<T>& tab, std::size_t i,
                                         std::size_t j)
{
    const T& v = f(i, j);
    WitnessAB w;
    for (std::size_t x = 1; x <= tab.k() && !w.x; ++x)
        if (tab.alpha(i, x) > v && tab.alpha(j, x) <= v)
            w.x = x;
    for (std::size_t y = 1; y <= tab.l() && !w.y; ++y)
        if (tab.beta(i, y) < v && tab.beta(j, y) >= v)
            w.y = y;
    for (std::size_t x = 1; x <= tab.k() && !w.xp; ++x)
        if (tab.gamma(j, x) < v && tab.gamma(i, x) >= v)
            w.xp = x;
    for (std::size_t y = 1; y <= tab.l() && !w.yp; ++y)
        if (tab.delta(j, y) > v && tab.delta(i, y) <= v)
            w.yp = y;
    if (!w.x || !w.y || !w.xp || !w.yp)
        return std::nullopt;
    return w;
}

template <typename T>
void require_free(const PairFunction<T>& f, std::size_t k, std::size_t l)
{
    auto report = is_free(f, k, l);
    if (!report.free)
        throw Error(ErrorCode::NotFree, "function has a " + report.witness->to_string());
}

template <typename T>
WitnessAB lemma_ab_witness(const PairFunction<T>& f, std::size_t k, std::size_t l, std::size_t i, std::size_t j)
{
    if (!(1 <= i && i < j && j <= f.size()))
        throw Error(ErrorCode::InvalidArgument, "need 1 <= i < j <= m");
    require_free(f, k + 2, l + 2);
    auto tab = tables(f, k, l);
    auto w = scan_ab_witness(f, tab, i, j);
    if (!w)
        throw Error(ErrorCode::Falsified, "no witness for pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return *w;
}

/// Witness scan over every pair of a (k+2, l+2)-free function.
template <typename T>
CheckResult check_lemma_ab(const PairFunction<T>& f, std::size_t k, std::size_t l)
{
    require_free(f, k + 2, l + 2);
    auto tab = tables(f, k, l);
    for (std::size_t i = 1; i <= f.size(); ++i)
        for (std::size_t j = i + 1; j <= f.size(); ++j)
            if (!scan_ab_witness(f, tab, i, j))
                return {Verdict::Fail, "pair=" + std::to_string(i) + "," + std::to_string(j)};
    return {};
}

struct InjectivityResult {
    bool distinct = true;
    Side side = Side::Left;
    std::optional<std::pair<std::size_t, std::size_t>> collision;
};

inline std::optional<std::pair<std::size_t, std::size_t>> first_collision(const std::vector<Word>& ws)
{
    std::map<Word, std::size_t> seen;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        auto [it, fresh] = seen.emplace(ws[i], i + 1);
        if (!fresh)
            return std::pair{it->second, i + 1};
    }
    return std::nullopt;
}

/// All left words pairwise distinct and all right words pairwise distinct.
template <typename T>
InjectivityResult check_injectivity(const PairFunction<T>& f, std::size_t k, std::size_t l)
{
    require_free(f, k + 2, l + 2);
    auto tab = tables(f, k, l);
    for (Side side : {Side::Left, Side::Right})
        if (auto c = first_collision(words(tab, side)))
            return {false, side, c};
    return {};
}

// ---------------------------------------------------------------------------------------------
// Chain enumeration

/// Counts and lists the chains of one kind and fixed length that end at a given index.
/// Counts saturate at UINT64_MAX.
template <typename T>
class EndingChains {
public:
    EndingChains(const PairFunction<T>& f, ChainKind kind, std::size_t length)
        : f_(f), kind_(kind), length_(length)
    {
        if (length_ < 1)
            throw Error(ErrorCode::InvalidArgument, "chain length must be positive");
        const std::size_t m = f_.size();
        for (std::size_t s = 2; s <= length_; ++s) {
            PairFunction<std::uint64_t> c(m);
            for (std::size_t j = 1; j <= m; ++j)
                for (std::size_t i = j + 1; i <= m; ++i) {
                    std::uint64_t total = 0;
                    if (s == 2) {
                        total = 1;
                    } else {
                        for (std::size_t h = 1; h < j; ++h)
                            if (chain_step_ok(kind_, f_(h, j), f_(j, i)))
                                total = sat_add(total, counts_.back()(h, j));
                    }
                    c.set(j, i, total);
                }
            counts_.push_back(std::move(c));
        }
    }

    std::uint64_t count(std::size_t i) const
    {
        if (length_ == 1)
            return 1;
        std::uint64_t total = 0;
        for (std::size_t j = 1; j < i; ++j)
            total = sat_add(total, counts_.back()(j, i));
        return total;
    }

    /// Visits up to `limit` chains ending at i; returns how many were visited.
    std::uint64_t enumerate(std::size_t i, std::uint64_t limit,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) const
    {
        std::uint64_t visited = 0;
        if (limit == 0)
            return 0;
        if (length_ == 1) {
            visit({i});
            return 1;
        }
        std::vector<std::size_t> rev{i};
        std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t next,
                                                                             std::size_t s) {
            if (visited >= limit)
                return;
            rev.push_back(j);
            if (s == 2) {
                visit(std::vector<std::size_t>(rev.rbegin(), rev.rend()));
                ++visited;
            } else {
                for (std::size_t h = 1; h < j && visited < limit; ++h)
                    if (chain_step_ok(kind_, f_(h, j), f_(j, next)) && counts_[s - 3](h, j) > 0)
                        rec(h, j, s - 1);
            }
            rev.pop_back();
        };
        for (std::size_t j = 1; j < i && visited < limit; ++j)
            if (counts_.back()(j, i) > 0)
                rec(j, i, length_);
        return visited;
    }

private:
    static std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }

    const PairFunction<T>& f_;
    ChainKind kind_;
    std::size_t length_;
    std::vector<PairFunction<std::uint64_t>> counts_;  // counts_[s-2]: s-chains ending with a given pair
};

/// Same as EndingChains but for chains starting at an index, via the mirrored function.
template <typename T>
class StartingChains {
public:
    StartingChains(const PairFunction<T>& f, ChainKind kind, std::size_t length)
        : m_(f.size()), g_(mirrored(f)), ending_(g_, kind, length)
    {
    }

    StartingChains(const StartingChains&) = delete;
    StartingChains& operator=(const StartingChains&) = delete;

    std::uint64_t count(std::size_t i) const { return ending_.count(m_ + 1 - i); }

    std::uint64_t enumerate(std::size_t i, std::uint64_t limit,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) const
    {
        return ending_.enumerate(m_ + 1 - i, limit, [&](const std::vector<std::size_t>& rev) {
            std::vector<std::size_t> chain;
            chain.reserve(rev.size());
            for (auto it = rev.rbegin(); it != rev.rend(); ++it)
                chain.push_back(m_ + 1 - *it);
            visit(chain);
        });
    }

private:
    std::size_t m_;
    PairFunction<T> g_;
    EndingChains<T> ending_;
};

// ---------------------------------------------------------------------------------------------
// Point-set claims. Throughout, n is the convex-polygon size being excluded and the function
// f_P is required to have no n-cup and no (n-1)-cap; words use k = n-2 and l = n-3.

struct GeometricInstance {
    PointSet points;
    std::size_t n;
    PairFunction<Rational> f;
    CupCapTables<Rational> tab;

    GeometricInstance(PointSet p, std::size_t n_)
        : points(std::move(p)), n(n_), f(slope_function(points)), tab(check_and_tabulate(f, n_))
    {
    }

    std::size_t size() const { return points.size(); }

    /// End of an (n-2)-cup, start of an (n-2)-cap, and start of an (n-1)-cup.
    bool in_q(std::size_t i) const
    {
        return tab.ends_cup(i, n - 2) && tab.starts_cap(i, n - 2) && tab.starts_cup(i, n - 1);
    }

    std::vector<std::size_t> q_set() const
    {
        std::vector<std::size_t> q;
        for (std::size_t i = 1; i <= size(); ++i)
            if (in_q(i))
                q.push_back(i);
        return q;
    }

private:
    static CupCapTables<Rational> check_and_tabulate(const PairFunction<Rational>& f, std::size_t n)
    {
        if (n < 4)
            throw Error(ErrorCode::InvalidArgument, "n must be at least 4");
        require_free(f, n, n - 1);
        return tables(f, n - 2, n - 3);
    }
};

/// No point ends an (n-1)-cup and starts an (n-2)-cap, and none ends an (n-2)-cap and starts an
/// (n-1)-cup.
inline CheckResult check_lemma_es(const GeometricInstance& inst)
{
    const std::size_t n = inst.n;
    for (std::size_t i = 1; i <= inst.size(); ++i) {
        if (inst.tab.ends_cup(i, n - 1) && inst.tab.starts_cap(i, n - 2))
            return {Verdict::Fail, "index=" + std::to_string(i) + " ends-long-cup+starts-cap"};
        if (inst.tab.ends_cap(i, n - 2) && inst.tab.starts_cup(i, n - 1))
            return {Verdict::Fail, "index=" + std::to_string(i) + " ends-cap+starts-long-cup"};
    }
    return {};
}

inline CheckResult check_lemma_es(const PointSet& p, std::size_t n) { return check_lemma_es(GeometricInstance(p, n)); }

/// V: (n-2)-cup ending at q; U: (n-2)-cap starting at q; W: (n-1)-cup starting at q.
struct QSignature {
    std::size_t q = 0;
    Chain v, u, w;

    std::size_t u2() const { return u.indices.at(1); }
    std::size_t w_last() const { return w.indices.back(); }

    std::string to_string() const
    {
        auto join = [](const Chain& c) {
            std::string s;
            for (std::size_t i : c.indices)
                s += (s.empty() ? "" : ",") + std::to_string(i);
            return s;
        };
        return "q=" + std::to_string(q) + " V=" + join(v) + " U=" + join(u) + " W=" + join(w);
    }
};

struct QEntry {
    std::size_t q = 0;
    std::uint64_t signature_count = 0;  // saturating
    std::uint64_t enumerated = 0;
    bool truncated = false;
    std::vector<std::size_t> mates;  // distinct u2 values seen
    std::optional<QSignature> example;
    std::optional<QSignature> counterexample;  // a signature with u2 != w_last
};

struct QReport {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::size_t> q;
    std::vector<QEntry> entries;
    std::vector<std::size_t> q_prime;
    Verdict mate_claim = Verdict::Pass;
    Verdict bound = Verdict::Pass;
    bool index_gap_ok = true;  // consecutive members of q_prime at least n-2 apart
    bool truncated = false;
};

/// The signature and mate claims argue by contradiction with a convex n-gon, so they need the
/// stronger hypothesis that P has no n points in convex position.
inline void require_no_convex_ngon(const PointSet& p, std::size_t n)
{
    auto c = largest_convex_subset(p);
    if (c.size >= n) {
        std::string w;
        for (auto i : c.witness)
            w += " " + std::to_string(i);
        throw Error(ErrorCode::NotFree, std::to_string(c.size) + " points in convex position:" + w);
    }
}

inline QReport q_report(const GeometricInstance& inst, std::uint64_t budget = kDefaultSignatureBudget)
{
    require_no_convex_ngon(inst.points, inst.n);
    const std::size_t n = inst.n;
    const std::size_t m = inst.size();
    QReport rep;
    rep.m = m;
    rep.n = n;
    rep.q = inst.q_set();
    if (rep.q.empty())
        return rep;

    EndingChains<Rational> v_chains(inst.f, ChainKind::Cup, n - 2);
    StartingChains<Rational> u_chains(inst.f, ChainKind::Cap, n - 2);
    StartingChains<Rational> w_chains(inst.f, ChainKind::Cup, n - 1);
    std::set<std::size_t> q_prime;

    for (std::size_t q : rep.q) {
        QEntry e;
        e.q = q;
        const std::uint64_t cv = v_chains.count(q), cu = u_chains.count(q), cw = w_chains.count(q);
        if (cv == 0 || cu == 0 || cw == 0)
            throw Error(ErrorCode::Falsified, "index " + std::to_string(q) +
                                                  " is in Q by the tables but lacks a chain by enumeration");
        auto mul = [](std::uint64_t a, std::uint64_t b) { return a > UINT64_MAX / b ? UINT64_MAX : a * b; };
        e.signature_count = mul(mul(cv, cu), cw);
        e.truncated = e.signature_count > budget;

        auto collect = [budget](const auto& source, std::size_t at, ChainKind kind) {
            std::vector<Chain> out;
            source.enumerate(at, budget, [&](const std::vector<std::size_t>& idx) { out.push_back({kind, idx}); });
            return out;
        };
        auto vs = collect(v_chains, q, ChainKind::Cup);
        auto us = collect(u_chains, q, ChainKind::Cap);
        auto ws = collect(w_chains, q, ChainKind::Cup);
        for (const auto* list : {&vs, &us, &ws})
            for (const Chain& c : *list)
                if (!is_valid_chain(inst.f, c))
                    throw Error(ErrorCode::Falsified, "enumerated an invalid " + c.to_string());

        std::set<std::size_t> mates;
        std::uint64_t seen = 0;
        for (const Chain& v : vs) {
            for (const Chain& u : us) {
                for (const Chain& w : ws) {
                    if (seen >= budget)
                        goto done;
                    ++seen;
                    QSignature sig{q, v, u, w};
                    if (!e.example)
                        e.example = sig;
                    if (sig.u2() != sig.w_last() && !e.counterexample)
                        e.counterexample = sig;
                    mates.insert(sig.u2());
                }
            }
        }
    done:
        e.enumerated = seen;
        e.mates.assign(mates.begin(), mates.end());
        q_prime.insert(mates.begin(), mates.end());
        rep.truncated = rep.truncated || e.truncated;
        if (e.counterexample)
            rep.mate_claim = Verdict::Fail;
        rep.entries.push_back(std::move(e));
    }

    rep.q_prime.assign(q_prime.begin(), q_prime.end());
    if (rep.mate_claim != Verdict::Fail && rep.truncated)
        rep.mate_claim = Verdict::Unknown;
    // |Q'| <= m / (n-2), compared without division.
    const bool within = rep.q_prime.size() * (n - 2) <= m;
    rep.bound = !within ? Verdict::Fail : (rep.truncated ? Verdict::Unknown : Verdict::Pass);
    for (std::size_t t = 1; t < rep.q_prime.size(); ++t)
        if (rep.q_prime[t] - rep.q_prime[t - 1] < n - 2)
            rep.index_gap_ok = false;
    return rep;
}

inline QReport q_report(const PointSet& p, std::size_t n, std::uint64_t budget = kDefaultSignatureBudget)
{
    return q_report(GeometricInstance(p, n), budget);
}

struct PeelResult {
    PointSet points;
    std::vector<std::size_t> removed;  // indices into the input set
    std::size_t rounds = 0;
    bool truncated = false;  // some round relied on a truncated signature enumeration
};

/// Removes the mates of Q repeatedly until Q is empty.
inline PeelResult peel(const PointSet& p, std::size_t n, std::uint64_t budget = kDefaultSignatureBudget)
{
    PeelResult res{p, {}, 0, false};
    std::vector<std::size_t> original(p.size());
    for (std::size_t i = 0; i < original.size(); ++i)
        original[i] = i + 1;

    while (true) {
        GeometricInstance inst(res.points, n);
        if (inst.q_set().empty())
            break;
        auto rep = q_report(inst, budget);
        res.truncated = res.truncated || rep.truncated;
        if (rep.q_prime.empty())
            throw Error(ErrorCode::Falsified, "Q is non-empty but has no mates");
        std::vector<std::size_t> keep;
        std::vector<std::size_t> kept_original;
        std::size_t r = 0;
        for (std::size_t i = 1; i <= res.points.size(); ++i) {
            if (r < rep.q_prime.size() && rep.q_prime[r] == i) {
                res.removed.push_back(original[i - 1]);
                ++r;
                continue;
            }
            keep.push_back(i);
            kept_original.push_back(original[i - 1]);
        }
        res.points = res.points.subset(keep);
        original = std::move(kept_original);
        ++res.rounds;
    }
    std::sort(res.removed.begin(), res.removed.end());
    return res;
}

/// The five word/geometry equivalences, with chain existence taken from an independent
/// longest-chain profile rather than from the tables the words are built from:
///   1. ends an (n-1)-cup        <=> L ends with beta
///   2. ends an (n-2)-cap        <=> L starts with alpha
///   3. starts an (n-1)-cup      <=> R starts with delta
///   4. starts an (n-2)-cap      <=> R ends with gamma
///   5. ends no (n-2)-cup        <=> L ends with alpha alpha
/// Under the ascending, delta-first sort of R, a start-cup shows up at the front of R and a
/// start-cap at the back.
inline CheckResult check_word_geometry(const GeometricInstance& inst)
{
    const std::size_t n = inst.n;
    auto prof = chain_profile(inst.f);
    const Pattern ends_b{{}, {Symbol::B}};
    const Pattern starts_a{{Symbol::A}, {}};
    const Pattern starts_b{{Symbol::B}, {}};
    const Pattern ends_a{{}, {Symbol::A}};
    const Pattern ends_aa{{}, {Symbol::A, Symbol::A}};
    for (std::size_t i = 1; i <= inst.size(); ++i) {
        Word lw = left_word(inst.tab, i);
        Word rw = right_word(inst.tab, i);
        const bool pairs[5][2] = {
            {prof.cup_ending[i] >= n - 1, matches(lw, ends_b)},
            {prof.cap_ending[i] >= n - 2, matches(lw, starts_a)},
            {prof.cup_starting[i] >= n - 1, matches(rw, starts_b)},
            {prof.cap_starting[i] >= n - 2, matches(rw, ends_a)},
            {prof.cup_ending[i] < n - 2, matches(lw, ends_aa)},
        };
        for (int b = 0; b < 5; ++b)
            if (pairs[b][0] != pairs[b][1])
                return {Verdict::Fail, "index=" + std::to_string(i) + " bullet=" + std::to_string(b + 1) +
                                           " L=" + lw.to_string() + " R=" + rw.to_string()};
    }
    return {};
}

inline CheckResult check_word_geometry(const PointSet& p, std::size_t n)
{
    return check_word_geometry(GeometricInstance(p, n));
}

/// On a set with empty Q: every R in (delta * gamma) comes with L in (beta * alpha alpha).
inline CheckResult check_clast(const GeometricInstance& inst)
{
    require_no_convex_ngon(inst.points, inst.n);
    auto q = inst.q_set();
    if (!q.empty())
        throw Error(ErrorCode::NotPeeled, std::to_string(q.size()) + " point(s) still in Q, first " +
                                              std::to_string(q.front()));
    const Pattern r_class{{Symbol::B}, {Symbol::A}};
    const Pattern l_class{{Symbol::B}, {Symbol::A, Symbol::A}};
    for (std::size_t i = 1; i <= inst.size(); ++i) {
        Word rw = right_word(inst.tab, i);
        if (!matches(rw, r_class))
            continue;
        Word lw = left_word(inst.tab, i);
        if (!matches(lw, l_class))
            return {Verdict::Fail, "index=" + std::to_string(i) + " L=" + lw.to_string() + " R=" + rw.to_string()};
    }
    return {};
}

inline CheckResult check_clast(const PointSet& p, std::size_t n) { return check_clast(GeometricInstance(p, n)); }

// ---------------------------------------------------------------------------------------------
// Corpus of seeded instances and the claim dispatcher.

inline constexpr std::int64_t kCorpusSpan = 1'000'000;

struct CorpusEntry {
    std::uint64_t seed = 0;
    std::size_t m = 0;
    std::size_t n = 0;

    std::string id() const
    {
        return "s" + std::to_string(seed) + "-m" + std::to_string(m) + "-n" + std::to_string(n);
    }
    PointSet points() const { return random_point_set(seed, m, kCorpusSpan); }
};

inline std::vector<CorpusEntry> parse_corpus(std::istream& in)
{
    std::size_t line_no = 0;
    detail::expect_header(in, "corpus v1", line_no);
    std::vector<CorpusEntry> out;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_blank_or_comment(line))
            continue;
        auto tok = detail::split_ws(line);
        if (tok.size() != 3)
            throw Error(ErrorCode::MalformedInput, "line " + std::to_string(line_no) + ": expected 'seed m n'");
        BigInt seed = parse_bigint(tok[0]), m = parse_bigint(tok[1]), n = parse_bigint(tok[2]);
        if (seed < 0 || seed > BigInt(UINT64_MAX) || m < 1 || m > 10000 || n < 4 || n > 64)
            throw Error(ErrorCode::MalformedInput, "line " + std::to_string(line_no) + ": value out of range");
        out.push_back({seed.convert_to<std::uint64_t>(), m.convert_to<std::size_t>(), n.convert_to<std::size_t>()});
    }
    return out;
}

inline void write_corpus(std::ostream& out, const std::vector<CorpusEntry>& entries)
{
    out << "corpus v1\n";
    for (const auto& e : entries)
        out << e.seed << ' ' << e.m << ' ' << e.n << '\n';
}

/// Seeds from `first_seed` upward whose random set has no (n-1)-cap and no n points in convex
/// position (hence also no n-cup). With `require_q`, only sets whose Q-set is non-empty are kept.
inline std::vector<CorpusEntry> sample_free_instances(std::size_t n, std::size_t m, std::size_t count,
                                                      std::uint64_t first_seed, std::uint64_t max_tries,
                                                      bool require_q = false)
{
    std::vector<CorpusEntry> out;
    for (std::uint64_t s = first_seed; out.size() < count && s < first_seed + max_tries; ++s) {
        auto p = random_point_set(s, m, kCorpusSpan);
        if (extreme_chain(ranked(slope_function(p)), ChainKind::Cap).length >= n - 1 ||
            largest_convex_subset(p).size >= n)
            continue;
        if (require_q && GeometricInstance(p, n).q_set().empty())
            continue;
        out.push_back({s, m, n});
    }
    return out;
}

inline const std::vector<std::string>& claim_ids()
{
    static const std::vector<std::string> ids{"a_b", "neq2", "lemma_es", "gv", "qprime", "cstrings", "clast"};
    return ids;
}

struct ClaimOutcome {
    Verdict verdict = Verdict::Pass;
    std::string witness;
    bool precondition = false;  // Unknown because an input requirement failed
};

/// Runs one claim on a point set; precondition failures become Unknown.
inline ClaimOutcome run_claim(const std::string& claim, const PointSet& p, std::size_t n,
                              std::uint64_t budget = kDefaultSignatureBudget)
{
    try {
        GeometricInstance inst(p, n);
        CheckResult r;
        if (claim == "a_b") {
            r = check_lemma_ab(inst.f, n - 2, n - 3);
        } else if (claim == "neq2") {
            auto inj = check_injectivity(inst.f, n - 2, n - 3);
            if (!inj.distinct)
                r = {Verdict::Fail, std::string(inj.side == Side::Left ? "L" : "R") + "-collision=" +
                                        std::to_string(inj.collision->first) + "," +
                                        std::to_string(inj.collision->second)};
        } else if (claim == "lemma_es") {
            r = check_lemma_es(inst);
        } else if (claim == "gv" || claim == "qprime") {
            auto rep = q_report(inst, budget);
            if (claim == "gv") {
                r.verdict = rep.mate_claim;
                for (const auto& e : rep.entries)
                    if (e.counterexample) {
                        r.witness = e.counterexample->to_string();
                        break;
                    }
                if (r.verdict == Verdict::Unknown)
                    r.witness = "budget";
            } else {
                r.verdict = rep.bound;
                if (r.verdict != Verdict::Pass)
                    r.witness = "|Q'|=" + std::to_string(rep.q_prime.size()) + " m=" + std::to_string(rep.m);
            }
        } else if (claim == "cstrings") {
            r = check_word_geometry(inst);
        } else if (claim == "clast") {
            auto peeled = peel(p, n, budget);
            r = check_clast(GeometricInstance(peeled.points, n));
            if (r.verdict == Verdict::Pass && peeled.truncated)
                r = {Verdict::Unknown, "budget"};
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown claim id '" + claim + "'");
        }
        return {r.verdict, r.witness, false};
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Falsified)
            return {Verdict::Fail, e.what(), false};
        if (e.code() == ErrorCode::InvalidArgument)
            throw;
        return {Verdict::Unknown, std::string("precondition:") + to_string(e.code()), true};
    }
}

inline std::string format_check_line(Verdict v, const std::string& claim, const std::string& instance,
                                     const std::string& witness)
{
    std::string s = std::string(to_string(v)) + " " + claim + " " + instance;
    if (!witness.empty())
        s += " " + witness;
    return s;
}

}  // namespace cupcap
