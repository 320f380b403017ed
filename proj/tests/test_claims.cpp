#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "cupcap/cupcap.hpp"
#include "oracles.hpp"

using namespace cupcap;

namespace {

PairFunction<Rational> sample_table()
{
    std::ifstream in(CUPCAP_SOURCE_DIR "/data/sample.pairfn");
    return parse_pair_function(in);
}

std::vector<CorpusEntry> pinned_corpus()
{
    std::ifstream in(CUPCAP_SOURCE_DIR "/data/corpus.txt");
    return parse_corpus(in);
}

PointSet four_cup() { return parse_point_set("points v1\n0 0\n1 1\n2 3\n3 6\n"); }

/// m points on y = x^2: every subset is a cup, no 3-cap exists.
PointSet parabola(std::size_t m)
{
    std::vector<Point> pts;
    for (std::size_t i = 0; i < m; ++i)
        pts.push_back(Point{static_cast<std::int64_t>(i), static_cast<std::int64_t>(i * i)});
    return PointSet(pts);
}

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(LemmaAB, SampleTableWitnesses)
{
    auto f = sample_table();
    auto w12 = lemma_ab_witness(f, 2, 2, 1, 2);
    EXPECT_EQ(w12.x, 1u);
    EXPECT_EQ(w12.y, 1u);
    auto w23 = lemma_ab_witness(f, 2, 2, 2, 3);
    EXPECT_EQ(w23.x, 2u);
    EXPECT_EQ(w23.y, 1u);
    auto w45 = lemma_ab_witness(f, 2, 2, 4, 5);
    EXPECT_EQ(w45.x, 2u);
    EXPECT_EQ(w45.y, 1u);
    EXPECT_TRUE(check_lemma_ab(f, 2, 2).ok());
}

TEST(LemmaAB, Preconditions)
{
    auto f = sample_table();
    EXPECT_EQ(code_of([&] { lemma_ab_witness(f, 1, 2, 1, 2); }), ErrorCode::NotFree);
    EXPECT_EQ(code_of([&] { lemma_ab_witness(f, 2, 2, 2, 2); }), ErrorCode::InvalidArgument);
}

TEST(LemmaAB, WitnessesSatisfyInequalitiesOnRandomFreeFunctions)
{
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 2 + rng.uniform(10);
        auto f = oracle::random_pair_function(rng, m, trial % 2 ? 3 : 100);
        const std::size_t k = extreme_chain(f, ChainKind::Cup).length - 1;
        const std::size_t l = extreme_chain(f, ChainKind::Cap).length - 1;
        auto tab = tables(f, k, l);
        using E = Extended<std::int64_t>;
        for (std::size_t i = 1; i <= m; ++i)
            for (std::size_t j = i + 1; j <= m; ++j) {
                auto w = lemma_ab_witness(f, k, l, i, j);
                const E v = E::finite(f(i, j));
                ASSERT_TRUE(tab.alpha(i, w.x) > v && v > tab.beta(i, w.y));
                ASSERT_TRUE(tab.alpha(j, w.x) <= v && v <= tab.beta(j, w.y));
                ASSERT_TRUE(tab.gamma(j, w.xp) < v && v < tab.delta(j, w.yp));
                ASSERT_TRUE(tab.gamma(i, w.xp) >= v && v >= tab.delta(i, w.yp));
            }
    }
}

TEST(Injectivity, SampleTableAndTrivialCase)
{
    EXPECT_TRUE(check_injectivity(sample_table(), 2, 2).distinct);
    EXPECT_TRUE(check_injectivity(PairFunction<std::int64_t>(1), 1, 1).distinct);
    EXPECT_EQ(code_of([] { check_injectivity(sample_table(), 1, 1); }), ErrorCode::NotFree);
}

TEST(Injectivity, RandomPointSetsAndCountingBound)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto p = random_point_set(seed, 5 + seed % 30, 1'000'000);
        auto f = ranked(slope_function(p));
        const std::size_t k = extreme_chain(f, ChainKind::Cup).length - 1;
        const std::size_t l = extreme_chain(f, ChainKind::Cap).length - 1;
        auto r = check_injectivity(f, k, l);
        ASSERT_TRUE(r.distinct) << "seed " << seed;
        ASSERT_LE(BigInt(p.size()), binomial(k + l, k));
    }
}

TEST(Injectivity, CollisionIsReportedWhenWordsRepeat)
{
    std::vector<Word> ws{Word(Side::Left, {Symbol::A, Symbol::B}), Word(Side::Left, {Symbol::B, Symbol::A}),
                         Word(Side::Left, {Symbol::A, Symbol::B})};
    auto c = first_collision(ws);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->first, 1u);
    EXPECT_EQ(c->second, 3u);
}

TEST(LemmaES, Examples)
{
    EXPECT_TRUE(check_lemma_es(four_cup(), 5).ok());
    EXPECT_EQ(code_of([] { check_lemma_es(parabola(5), 5); }), ErrorCode::NotFree);
    for (const auto& e : pinned_corpus())
        ASSERT_TRUE(check_lemma_es(e.points(), e.n).ok()) << e.id();
}

TEST(LemmaES, SeededFreeSets)
{
    int tested = 0;
    for (std::uint64_t seed = 0; seed < 3000 && tested < 40; ++seed) {
        auto p = random_point_set(seed, 6 + seed % 15, 1'000'000);
        if (!is_free(slope_function(p), 5, 4).free)
            continue;
        ++tested;
        ASSERT_TRUE(check_lemma_es(p, 5).ok());
    }
    EXPECT_GT(tested, 10);
}

TEST(QReport, PureCupHasEmptyQ)
{
    auto rep = q_report(parabola(4), 5);
    EXPECT_TRUE(rep.q.empty());
    EXPECT_TRUE(rep.q_prime.empty());
    EXPECT_EQ(rep.mate_claim, Verdict::Pass);
    EXPECT_EQ(rep.bound, Verdict::Pass);
    EXPECT_TRUE(q_report(parabola(1), 5).q.empty());
}

TEST(QReport, RejectsConvexNGon)
{
    // Seven points, no 5-cup and no 4-cap, but five of them in convex position.
    auto p = random_point_set(1015, 8, kCorpusSpan);
    ASSERT_TRUE(is_free(slope_function(p), 5, 4).free);
    EXPECT_EQ(code_of([&] { q_report(p, 5); }), ErrorCode::NotFree);
    EXPECT_EQ(run_claim("gv", p, 5).verdict, Verdict::Unknown);
    EXPECT_TRUE(run_claim("gv", p, 5).precondition);
}

// Q, every signature, the mate claim and Q' recomputed by enumerating all index subsets.
TEST(QReport, MatchesBruteForceOnCorpus)
{
    int nonempty = 0;
    for (const auto& e : pinned_corpus()) {
        auto p = e.points();
        const std::size_t n = e.n, m = p.size();
        auto f = slope_function(p);
        auto rep = q_report(p, n);
        std::vector<std::size_t> q;
        std::set<std::size_t> q_prime;
        for (std::size_t i = 1; i <= m; ++i) {
            auto vs = oracle::chains_at(f, ChainKind::Cup, n - 2, i, true);
            auto us = oracle::chains_at(f, ChainKind::Cap, n - 2, i, false);
            auto ws = oracle::chains_at(f, ChainKind::Cup, n - 1, i, false);
            if (vs.empty() || us.empty() || ws.empty())
                continue;
            q.push_back(i);
            for (const auto& u : us)
                for (const auto& w : ws) {
                    ASSERT_EQ(u[1], w.back()) << e.id() << " q=" << i;
                    q_prime.insert(u[1]);
                }
        }
        ASSERT_EQ(rep.q, q) << e.id();
        ASSERT_EQ(rep.q_prime, std::vector<std::size_t>(q_prime.begin(), q_prime.end())) << e.id();
        ASSERT_EQ(rep.mate_claim, Verdict::Pass);
        ASSERT_EQ(rep.bound, Verdict::Pass);
        ASSERT_LE(q_prime.size() * (n - 2), m);
        ASSERT_TRUE(rep.index_gap_ok);
        nonempty += !q.empty();
    }
    EXPECT_GE(nonempty, 20);
}

TEST(QReport, SignaturesValidateAndCountsMatchEnumeration)
{
    for (const auto& e : pinned_corpus()) {
        GeometricInstance inst(e.points(), e.n);
        auto rep = q_report(inst);
        for (const auto& entry : rep.entries) {
            ASSERT_FALSE(entry.truncated);
            ASSERT_EQ(entry.enumerated, entry.signature_count);
            ASSERT_TRUE(entry.example);
            const auto& s = *entry.example;
            ASSERT_TRUE(is_valid_chain(inst.f, s.v) && s.v.back() == entry.q && s.v.length() == e.n - 2);
            ASSERT_TRUE(is_valid_chain(inst.f, s.u) && s.u.front() == entry.q && s.u.length() == e.n - 2);
            ASSERT_TRUE(is_valid_chain(inst.f, s.w) && s.w.front() == entry.q && s.w.length() == e.n - 1);
        }
    }
}

TEST(ChainEnumeration, MatchesBruteForceAndRespectsLimit)
{
    Rng rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t m = 2 + trial % 10, length = 1 + trial % 5;
        auto f = oracle::random_pair_function(rng, m, trial % 3 ? 4 : 1000);
        for (auto kind : {ChainKind::Cup, ChainKind::Cap}) {
            EndingChains<std::int64_t> ending(f, kind, length);
            StartingChains<std::int64_t> starting(f, kind, length);
            for (std::size_t i = 1; i <= m; ++i) {
                for (bool at_end : {true, false}) {
                    auto expected = oracle::chains_at(f, kind, length, i, at_end);
                    if (length == 1)
                        expected = {{i}};
                    std::set<std::vector<std::size_t>> want(expected.begin(), expected.end()), got;
                    auto collect = [&](const std::vector<std::size_t>& c) { got.insert(c); };
                    const std::uint64_t visited =
                        at_end ? ending.enumerate(i, UINT64_MAX, collect) : starting.enumerate(i, UINT64_MAX, collect);
                    ASSERT_EQ(got, want) << trial;
                    ASSERT_EQ(visited, want.size());
                    ASSERT_EQ(at_end ? ending.count(i) : starting.count(i), want.size());

                    std::size_t cut = 0;
                    auto count_only = [&](const std::vector<std::size_t>&) { ++cut; };
                    const std::uint64_t limit = want.size() / 2;
                    const std::uint64_t partial =
                        at_end ? ending.enumerate(i, limit, count_only) : starting.enumerate(i, limit, count_only);
                    ASSERT_EQ(partial, limit);
                    ASSERT_EQ(cut, limit);
                }
            }
        }
    }
}

TEST(QReport, TruncationGivesUnknown)
{
    for (const auto& e : pinned_corpus()) {
        GeometricInstance inst(e.points(), e.n);
        auto full = q_report(inst);
        if (full.entries.empty() || full.entries.front().signature_count < 2)
            continue;
        auto cut = q_report(inst, 1);
        EXPECT_TRUE(cut.truncated);
        EXPECT_EQ(cut.mate_claim, Verdict::Unknown);
        EXPECT_NE(cut.bound, Verdict::Pass);
        EXPECT_EQ(run_claim("gv", inst.points, e.n, 1).witness, "budget");
        return;
    }
    GTEST_SKIP() << "no instance with two signatures";
}

TEST(Peel, ExamplesAndPostcondition)
{
    auto cup = peel(parabola(4), 5);
    EXPECT_EQ(cup.rounds, 0u);
    EXPECT_TRUE(cup.removed.empty());
    EXPECT_EQ(cup.points, parabola(4));
    EXPECT_EQ(peel(parabola(1), 5).points.size(), 1u);

    for (const auto& e : pinned_corpus()) {
        auto p = e.points();
        auto r = peel(p, e.n);
        GeometricInstance after(r.points, e.n);
        ASSERT_TRUE(after.q_set().empty()) << e.id();
        ASSERT_EQ(r.points.size() + r.removed.size(), p.size());
        // Removed mass stays within the geometric series m/(n-2) + m/(n-2)^2 + ... = m/(n-3).
        ASSERT_LE(r.removed.size() * (e.n - 3), p.size()) << e.id();
        for (auto i : r.removed)
            ASSERT_TRUE(i >= 1 && i <= p.size());
    }
}

TEST(WordGeometry, FourCupExample)
{
    GeometricInstance inst(four_cup(), 5);
    using E = Extended<Rational>;
    EXPECT_EQ(inst.tab.alpha(4, 1), E::finite(2));
    EXPECT_EQ(inst.tab.alpha(4, 2), E::finite(Rational(BigInt(5), BigInt(2))));
    EXPECT_EQ(inst.tab.alpha(4, 3), E::finite(3));
    EXPECT_EQ(inst.tab.beta(4, 1), E::finite(3));
    EXPECT_TRUE(inst.tab.beta(4, 2).is_neg_inf());
    EXPECT_EQ(left_word(inst.tab, 4).to_string(), "βαααβ");
    EXPECT_TRUE(check_word_geometry(inst).ok());
}

// Point 1 starts a 4-cup. gamma_1 = (2, 3/2, 1) and delta_1 = (1, +inf): the ascending,
// delta-first order puts delta_1(1) = 1 ahead of gamma_1(3) = 1 and the +inf sentinel last, so R_1
// starts and ends with delta. Starting an (n-1)-cup is therefore read off the front
// of R (class delta*), and the class *gamma stands for starting an (n-2)-cap.
TEST(WordGeometry, StartCupShowsAtFrontOfRightWord)
{
    GeometricInstance inst(four_cup(), 5);
    auto r1 = right_word(inst.tab, 1);
    EXPECT_EQ(r1.to_string(), "δγγγδ");
    EXPECT_TRUE(matches(r1, Pattern{{Symbol::B}, {}}));
    EXPECT_FALSE(matches(r1, Pattern{{}, {Symbol::A}}));
    auto profile = chain_profile(inst.f);
    EXPECT_GE(profile.cup_starting[1], 4u);
    EXPECT_LT(profile.cap_starting[1], 3u);
}

TEST(WordGeometry, CorpusAndRandomFreeSets)
{
    for (const auto& e : pinned_corpus())
        ASSERT_TRUE(check_word_geometry(e.points(), e.n).ok()) << e.id();
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        auto p = random_point_set(seed, 4 + seed % 12, 1'000'000);
        for (std::size_t n : {5, 6})
            if (is_free(slope_function(p), n, n - 1).free) {
                ASSERT_TRUE(check_word_geometry(p, n).ok()) << seed;
            }
    }
    EXPECT_TRUE(check_word_geometry(parabola(1), 5).ok());
}

TEST(CLast, PreconditionsAndCorpus)
{
    EXPECT_TRUE(check_clast(parabola(4), 5).ok());
    int unpeeled = 0;
    for (const auto& e : pinned_corpus()) {
        auto p = e.points();
        if (!GeometricInstance(p, e.n).q_set().empty()) {
            EXPECT_EQ(code_of([&] { check_clast(p, e.n); }), ErrorCode::NotPeeled);
            ++unpeeled;
        }
        ASSERT_TRUE(check_clast(peel(p, e.n).points, e.n).ok()) << e.id();
    }
    EXPECT_GT(unpeeled, 0);
}

TEST(Corpus, RoundTripAndDeterministicIds)
{
    auto entries = pinned_corpus();
    ASSERT_GE(entries.size(), 100u);
    std::ostringstream out;
    write_corpus(out, entries);
    std::istringstream in(out.str());
    auto again = parse_corpus(in);
    ASSERT_EQ(again.size(), entries.size());
    EXPECT_EQ(again.front().id(), entries.front().id());
    std::istringstream bad("corpus v1\n1 2\n");
    EXPECT_EQ(code_of([&] { parse_corpus(bad); }), ErrorCode::MalformedInput);
}

TEST(Corpus, SamplerKeepsOnlyQualifyingSets)
{
    auto found = sample_free_instances(5, 6, 5, 1, 5000);
    ASSERT_EQ(found.size(), 5u);
    for (const auto& e : found) {
        auto p = e.points();
        EXPECT_LT(extreme_chain(slope_function(p), ChainKind::Cap).length, 4u);
        EXPECT_LT(largest_convex_subset(p).size, 5u);
    }
}

TEST(RunClaim, DispatchAndPreconditions)
{
    auto e = pinned_corpus().front();
    for (const auto& c : claim_ids())
        EXPECT_EQ(run_claim(c, e.points(), e.n).verdict, Verdict::Pass) << c;
    auto bad = run_claim("neq2", parabola(6), 5);
    EXPECT_EQ(bad.verdict, Verdict::Unknown);
    EXPECT_TRUE(bad.precondition);
    EXPECT_THROW(run_claim("nope", parabola(3), 5), Error);
    EXPECT_EQ(format_check_line(Verdict::Fail, "gv", "x", "q=1"), "FAIL gv x q=1");
}
