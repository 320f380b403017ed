#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cupcap/bound.hpp"
#include "cupcap/chains.hpp"
#include "cupcap/claims.hpp"
#include "cupcap/error.hpp"
#include "cupcap/extremal.hpp"
#include "cupcap/geometry.hpp"
#include "cupcap/pair_function.hpp"
#include "cupcap/words.hpp"

namespace cupcap::cli {

enum ExitCode : int { kPass = 0, kFailed = 1, kUsage = 2, kPrecondition = 3 };

namespace detail {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

inline PointSet load_points(const std::string& path, bool allow_collinear, std::ostream& err)
{
    auto p = parse_point_set(read_file(path), allow_collinear ? Collinearity::Allow : Collinearity::Reject);
    if (allow_collinear)
        if (auto t = p.find_collinear_triple())
            err << "warning: collinear points " << (*t)[0] << ' ' << (*t)[1] << ' ' << (*t)[2] << '\n';
    return p;
}

inline std::uint64_t budget_from_env()
{
    const char* v = std::getenv("CUPCAP_BUDGET");
    if (!v || !*v)
        return kDefaultSignatureBudget;
    BigInt b;
    try {
        b = parse_bigint(v);
    } catch (const Error&) {
        throw Error(ErrorCode::InvalidArgument, "CUPCAP_BUDGET must be a positive integer");
    }
    if (b < 1 || b > BigInt(UINT64_MAX))
        throw Error(ErrorCode::InvalidArgument, "CUPCAP_BUDGET must be a positive integer");
    return b.convert_to<std::uint64_t>();
}

inline int exit_for(Verdict v)
{
    if (v == Verdict::Fail)
        return kFailed;
    return v == Verdict::Unknown ? kPrecondition : kPass;
}

inline int exit_for(const Error& e)
{
    switch (e.code()) {
    case ErrorCode::MalformedInput:
    case ErrorCode::DuplicateX:
    case ErrorCode::Collinear:
    case ErrorCode::InvalidArgument:
        return kUsage;
    case ErrorCode::Falsified:
    case ErrorCode::VerificationFailed:
        return kFailed;
    default:
        return kPrecondition;
    }
}

}  // namespace detail

/// Parses argv and runs one verb, writing results to `out` and diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cups, caps and convex position: tables, words and claim verifiers", "cupcap"};
    app.require_subcommand(1, 1);

    std::string pairfn_path, points_path, side = "L", corpus_path;
    std::size_t k = 0, l = 0, n = 0;
    bool allow_collinear = false;

    // encode
    auto* encode = app.add_subcommand("encode", "Print the alpha/beta (L) or gamma/delta (R) table as TSV");
    auto* enc_src = encode->add_option_group("source");
    enc_src->add_option("--pairfn", pairfn_path, "pairfn v1 file");
    enc_src->add_option("--points", points_path, "points v1 file");
    enc_src->require_option(1);
    encode->add_option("--k", k, "cup letters")->required()->check(CLI::PositiveNumber);
    encode->add_option("--l", l, "cap letters")->required()->check(CLI::PositiveNumber);
    encode->add_option("--side", side, "L or R")->check(CLI::IsMember({"L", "R"}));
    encode->add_flag("--allow-collinear", allow_collinear);

    // free
    auto* free_cmd = app.add_subcommand("free", "Test for no k-cup and no l-cap");
    free_cmd->add_option("--points", points_path)->required();
    free_cmd->add_option("--k", k)->required()->check(CLI::Range(2, 1 << 20));
    free_cmd->add_option("--l", l)->required()->check(CLI::Range(2, 1 << 20));
    free_cmd->add_flag("--allow-collinear", allow_collinear);

    // words
    std::string prefix, suffix;
    bool count_only = false;
    auto* words_cmd = app.add_subcommand("words", "List or count the words of a class prefix*suffix");
    words_cmd->add_option("--k", k)->required();
    words_cmd->add_option("--l", l)->required();
    words_cmd->add_option("--side", side)->check(CLI::IsMember({"L", "R"}));
    words_cmd->add_option("--prefix", prefix, "symbols, Greek or a/b (L), g/d (R)");
    words_cmd->add_option("--suffix", suffix);
    words_cmd->add_flag("--count", count_only, "print only the class size");

    // verify
    std::string claim;
    std::string checks_arg;
    bool no_peel = false;
    auto* verify = app.add_subcommand("verify", "Check a claim on one input, or 'suite' over a corpus");
    verify->add_option("claim", claim, "claim id, 'injectivity', or 'suite'")->required();
    verify->add_option("--pairfn", pairfn_path);
    verify->add_option("--points", points_path);
    verify->add_option("--k", k);
    verify->add_option("--l", l);
    verify->add_option("--n", n);
    verify->add_option("--corpus", corpus_path);
    verify->add_option("--checks", checks_arg, "comma-separated claim ids (default: all)");
    verify->add_flag("--no-peel", no_peel, "run clast on the input as given");
    verify->add_flag("--allow-collinear", allow_collinear);

    // construct
    bool certificate = false;
    auto* construct = app.add_subcommand("construct", "Emit an extremal point set");
    construct->require_subcommand(1, 1);
    auto* freeset = construct->add_subcommand("freeset", "C(k+l,k) points with no (k+2)-cup, no (l+2)-cap");
    freeset->add_option("--k", k)->required();
    freeset->add_option("--l", l)->required();
    freeset->add_flag("--certificate", certificate);
    auto* eslower = construct->add_subcommand("eslower", "2^(n-2) points with no n in convex position");
    eslower->add_option("--n", n)->required();
    eslower->add_flag("--certificate", certificate);

    // convex
    auto* convex = app.add_subcommand("convex", "Largest subset in convex position");
    convex->add_option("--points", points_path)->required();

    // bound
    std::vector<std::size_t> ratio_args;
    auto* bound = app.add_subcommand("bound", "Counting bound for ES(n)");
    auto* bound_mode = bound->add_option_group("mode");
    bound_mode->add_option("--n", n);
    bound_mode->add_option("--ratio-table", ratio_args, "FROM TO STEP")->expected(3);
    bound_mode->require_option(1);

    // search
    std::size_t m = 0, count = 0;
    std::uint64_t first_seed = 1, max_tries = 1'000'000;
    auto* search = app.add_subcommand("search", "Exhaustive and sampling searches");
    search->require_subcommand(1, 1);
    auto* esprime = search->add_subcommand("esprime", "Largest m with a (k,l)-free pair function");
    esprime->add_option("--k", k)->required();
    esprime->add_option("--l", l)->required();
    auto* corpus = search->add_subcommand("corpus", "Seeds whose random sets have no n-cup and no (n-1)-cap");
    corpus->add_option("--n", n)->required();
    corpus->add_option("--m", m)->required();
    corpus->add_option("--count", count)->required();
    corpus->add_option("--first-seed", first_seed);
    corpus->add_option("--max-tries", max_tries);
    bool require_q = false;
    corpus->add_flag("--require-q", require_q, "keep only sets with a non-empty Q-set");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*encode) {
            auto emit = [&](const auto& f) {
                auto tab = tables(f, k, l);
                write_table_tsv(out, tab, side == "L" ? Side::Left : Side::Right);
            };
            if (!pairfn_path.empty())
                emit(parse_pair_function(detail::read_file(pairfn_path)));
            else
                emit(slope_function(detail::load_points(points_path, allow_collinear, err)));
            return kPass;
        }

        if (*free_cmd) {
            auto p = detail::load_points(points_path, allow_collinear, err);
            auto r = is_free(slope_function(p), k, l);
            if (r.free) {
                out << "free\n";
                return kPass;
            }
            out << "not-free " << r.witness->to_string() << '\n';
            return kFailed;
        }

        if (*words_cmd) {
            const Side s = side == "L" ? Side::Left : Side::Right;
            Pattern pat{parse_symbols(s, prefix), parse_symbols(s, suffix)};
            if (count_only) {
                out << class_count(k, l, pat) << '\n';
                return kPass;
            }
            for (const auto& w : enumerate_words(s, k, l))
                if (matches(w, pat))
                    out << w << '\n';
            return kPass;
        }

        if (*verify) {
            const std::uint64_t budget = detail::budget_from_env();
            if (claim == "suite") {
                if (corpus_path.empty())
                    throw Error(ErrorCode::InvalidArgument, "suite needs --corpus");
                std::vector<std::string> checks;
                if (checks_arg.empty()) {
                    checks = claim_ids();
                } else {
                    std::stringstream ss(checks_arg);
                    for (std::string c; std::getline(ss, c, ',');)
                        checks.push_back(c == "injectivity" ? "neq2" : c);
                }
                for (const auto& c : checks)
                    if (std::find(claim_ids().begin(), claim_ids().end(), c) == claim_ids().end())
                        throw Error(ErrorCode::InvalidArgument, "unknown claim id '" + c + "'");
                std::istringstream text(detail::read_file(corpus_path));
                auto entries = parse_corpus(text);
                std::size_t pass = 0, fail = 0, unknown = 0, precondition = 0;
                for (const auto& e : entries) {
                    PointSet p;
                    bool generated = true;
                    try {
                        p = e.points();
                    } catch (const Error& ex) {
                        generated = false;
                        for (const auto& c : checks) {
                            out << format_check_line(Verdict::Unknown, c, e.id(),
                                                     std::string("precondition:") + to_string(ex.code()))
                                << '\n';
                            ++unknown;
                            ++precondition;
                        }
                    }
                    if (!generated)
                        continue;
                    for (const auto& c : checks) {
                        ClaimOutcome o;
                        if (c == "clast" && no_peel) {
                            try {
                                o.verdict = check_clast(p, e.n).verdict;
                            } catch (const Error& ex) {
                                o = {Verdict::Unknown, std::string("precondition:") + to_string(ex.code()), true};
                            }
                        } else {
                            o = run_claim(c, p, e.n, budget);
                        }
                        out << format_check_line(o.verdict, c, e.id(), o.witness) << '\n';
                        if (o.verdict == Verdict::Pass)
                            ++pass;
                        else if (o.verdict == Verdict::Fail)
                            ++fail;
                        else {
                            ++unknown;
                            precondition += o.precondition ? 1 : 0;
                        }
                    }
                }
                out << "summary instances=" << entries.size() << " PASS=" << pass << " FAIL=" << fail
                    << " UNKNOWN=" << unknown << '\n';
                if (fail > 0)
                    return kFailed;
                return unknown > 0 ? kPrecondition : kPass;
            }

            const std::string id = claim == "injectivity" ? "neq2" : claim;
            if (std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end())
                throw Error(ErrorCode::InvalidArgument, "unknown claim id '" + claim + "'");

            if (!pairfn_path.empty()) {
                if (id != "neq2" && id != "a_b")
                    throw Error(ErrorCode::InvalidArgument, "--pairfn supports only neq2 and a_b");
                if (k < 1 || l < 1)
                    throw Error(ErrorCode::InvalidArgument, "--pairfn needs --k and --l");
                auto f = parse_pair_function(detail::read_file(pairfn_path));
                const std::string inst = detail::stem(pairfn_path);
                CheckResult r;
                try {
                    if (id == "a_b") {
                        r = check_lemma_ab(f, k, l);
                    } else {
                        auto inj = check_injectivity(f, k, l);
                        if (!inj.distinct)
                            r = {Verdict::Fail, std::string(inj.side == Side::Left ? "L" : "R") + "-collision=" +
                                                    std::to_string(inj.collision->first) + "," +
                                                    std::to_string(inj.collision->second)};
                    }
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::NotFree)
                        throw;
                    r = {Verdict::Unknown, std::string("precondition:") + to_string(e.code())};
                }
                out << format_check_line(r.verdict, id, inst, r.witness) << '\n';
                return detail::exit_for(r.verdict);
            }

            if (points_path.empty() || n == 0)
                throw Error(ErrorCode::InvalidArgument, "verify needs --pairfn with --k/--l, or --points with --n");
            auto p = detail::load_points(points_path, allow_collinear, err);
            ClaimOutcome o;
            if (id == "clast" && no_peel) {
                try {
                    o.verdict = check_clast(p, n).verdict;
                } catch (const Error& e) {
                    if (e.code() == ErrorCode::InvalidArgument)
                        throw;
                    o = {Verdict::Unknown, std::string("precondition:") + to_string(e.code()), true};
                }
            } else {
                o = run_claim(id, p, n, budget);
            }
            out << format_check_line(o.verdict, id, detail::stem(points_path), o.witness) << '\n';
            return detail::exit_for(o.verdict);
        }

        if (*construct) {
            Transcript t;
            PointSet p = *freeset ? free_construction(k, l, &t) : es_lower(n, &t);
            write_point_set(out, p);
            if (certificate)
                for (const auto& line : t)
                    out << "# " << line << '\n';
            return kPass;
        }

        if (*convex) {
            auto p = detail::load_points(points_path, false, err);
            auto r = largest_convex_subset(p);
            out << "size " << r.size << "\nwitness";
            for (auto i : r.witness)
                out << ' ' << i;
            out << '\n';
            return kPass;
        }

        if (*bound) {
            if (!ratio_args.empty()) {
                write_ratio_csv(out, ratio_table(ratio_args[0], ratio_args[1], ratio_args[2]));
                return kPass;
            }
            auto b = breakdown(n);
            out << "n " << b.n << "\nlbaa " << b.lbaa << "\nrtotal " << b.rtotal << "\nrdg " << b.rdg << "\nraw "
                << b.raw << "\nratio " << b.ratio << "\nratio_decimal " << to_decimal(b.ratio, 10) << '\n';
            if (n >= 7) {
                std::vector<std::string> t;
                auto upper = assembled_upper(n, &t);
                out << "assembled_upper " << upper << '\n';
                for (const auto& line : t)
                    out << "# " << line << '\n';
            }
            return kPass;
        }

        if (*esprime) {
            out << "ES'(" << k << "," << l << ") = " << exhaustive_es_prime(k, l) << '\n';
            return kPass;
        }

        if (*corpus) {
            write_corpus(out, sample_free_instances(n, m, count, first_seed, max_tries, require_q));
            return kPass;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return detail::exit_for(e);
    }
    return kUsage;
}

}  // namespace cupcap::cli
