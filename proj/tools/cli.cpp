#include "cli.hpp"

#include "palwidth/palwidth.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace palwidth::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string spec_path;
    std::vector<std::string> word_tokens;
    std::string words_file;
    std::vector<std::string> anchors;
    std::optional<std::string> c_set;
    std::string n_range = "1..10";
    std::string witness_case = "I";
    std::size_t max_k = 4;
    std::size_t max_factor_length = 9;
    std::int64_t exponent_bound = 4;
    std::size_t max_len = 12;
    bool json = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

SpecPtr load_spec(const Options& o)
{
    if (o.spec_path.empty())
        throw UsageError("--spec <path> is required");
    return load_group_spec(o.spec_path);
}

std::vector<Word> gather_words(const Options& o, const SpecPtr& spec)
{
    std::vector<Word> words;
    if (!o.words_file.empty()) {
        std::ifstream in(o.words_file);
        if (!in)
            throw UsageError("cannot read words file '" + o.words_file + "'");
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            try {
                words.push_back(parse_word(line, spec));
            } catch (const Error& e) {
                throw Error(e.code(), o.words_file + ":" + std::to_string(lineno) + ": " + e.what(),
                            e.position());
            }
        }
    }
    if (!o.word_tokens.empty()) {
        std::string text;
        for (const auto& t : o.word_tokens)
            text += (text.empty() ? "" : " ") + t;
        words.push_back(parse_word(text, spec));
    }
    if (words.empty())
        throw UsageError("no word given (inline or via --words-file)");
    return words;
}

std::vector<Syllable> parse_anchors(const Options& o, const GroupSpec& spec)
{
    std::vector<Syllable> out;
    for (const auto& a : o.anchors)
        out.push_back(parse_syllable(a, spec));
    return out;
}

Method method_from(const std::vector<Syllable>& anchors)
{
    if (anchors.size() == 1)
        return Delta1Method{anchors[0]};
    if (anchors.size() == 2)
        return Delta2Method{anchors[0], anchors[1]};
    throw UsageError("expected one --anchor (delta1) or two (delta2)");
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text)
{
    auto parse_int = [&](const std::string& s) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            throw UsageError("bad --n range '" + text + "' (expected a..b)");
        return static_cast<std::int64_t>(v);
    };
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        auto v = parse_int(text);
        return {v, v};
    }
    auto lo = parse_int(text.substr(0, dots));
    auto hi = parse_int(text.substr(dots + 2));
    if (lo < 1 || hi < lo)
        throw UsageError("bad --n range '" + text + "'");
    return {lo, hi};
}

SearchBudget budget_from(const Options& o)
{
    SearchBudget b{o.max_factor_length, o.max_k, o.exponent_bound};
    b.validate();
    return b;
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& out)
{
    if (cmd == "verify-z2z2") {
        Z2Z2Report report = verify_z2z2_width(o.max_len);
        out << (o.json ? z2z2_json(report) + "\n" : z2z2_text(report));
        return report.ok() ? kExitOk : kExitViolation;
    }

    if (cmd == "witness") {
        WitnessCase which;
        if (o.witness_case == "I" || o.witness_case == "1")
            which = WitnessCase::I;
        else if (o.witness_case == "II" || o.witness_case == "2")
            which = WitnessCase::II;
        else
            throw UsageError("--case must be I or II");
        WitnessFamily family = o.spec_path.empty()
                                   ? (which == WitnessCase::I ? WitnessFamily::canonical_case_one()
                                                              : WitnessFamily::canonical_case_two())
                                   : WitnessFamily::from_spec(load_spec(o), which);
        auto [lo, hi] = parse_range(o.n_range);
        out << witness_csv(witness_table(family, lo, hi));
        return kExitOk;
    }

    SpecPtr spec = load_spec(o);

    if (cmd == "classify") {
        CaseVerdict verdict = classify_product(*spec);
        out << (o.json ? verdict_json(*spec, verdict) : format_verdict(*spec, verdict)) << "\n";
        return kExitOk;
    }

    auto words = gather_words(o, spec);
    auto anchors = parse_anchors(o, *spec);

    if (cmd == "normalize" || cmd == "invert" || cmd == "reverse") {
        for (const Word& g : words) {
            Word r = cmd == "normalize" ? g : cmd == "invert" ? invert(g) : reverse(g);
            if (o.json) {
                Json j;
                j["word"] = format_word(g);
                j["result"] = format_word(r);
                out << j.dump() << "\n";
            } else {
                out << format_word(r) << "\n";
            }
        }
        return kExitOk;
    }

    if (cmd == "is-palindrome" || cmd == "is-cpalindrome") {
        std::optional<CSet> c;
        if (cmd == "is-cpalindrome") {
            if (!o.c_set)
                throw UsageError("--c-set is required");
            std::vector<Syllable> members;
            std::stringstream ss(*o.c_set);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty())
                    members.push_back(parse_syllable(item, *spec));
            c = CSet(*spec, std::move(members));
        }
        for (const Word& g : words) {
            bool answer = c ? is_c_palindrome(g, *c) : is_palindrome(g);
            if (o.json) {
                Json j;
                j["word"] = format_word(g);
                j[c ? "c_palindrome" : "palindrome"] = answer;
                if (c) {
                    Json alpha = Json::array();
                    for (const XLetter& x : alpha_project(g, *c))
                        alpha.push_back(x ? format_syllable(*spec, *x) : std::string("ω"));
                    j["alpha"] = alpha;
                }
                out << j.dump() << "\n";
            } else {
                out << (answer ? "true" : "false") << "\n";
            }
        }
        return kExitOk;
    }

    if (cmd == "segments") {
        for (const Word& g : words) {
            if (anchors.size() == 1) {
                SegmentStatsI s = stats_case1(g, anchors[0]);
                out << (o.json ? stats_json(s) + "\n" : stats_text(s));
            } else if (anchors.size() == 2) {
                SegmentStatsII s = stats_case2(g, anchors[0], anchors[1]);
                out << (o.json ? stats_json(s) + "\n" : stats_text(s));
            } else {
                throw UsageError("segments takes one or two --anchor options");
            }
        }
        return kExitOk;
    }

    if (cmd == "delta1" || cmd == "delta2") {
        std::size_t want = cmd == "delta1" ? 1 : 2;
        if (anchors.size() != want)
            throw UsageError(cmd + " takes exactly " + std::to_string(want) + " --anchor option(s)");
        Method method = method_from(anchors);
        for (const Word& g : words) {
            std::int64_t value = evaluate(g, method);
            if (o.json) {
                Json j;
                j["word"] = format_word(g);
                j[cmd] = value;
                out << j.dump() << "\n";
            } else {
                out << value << "\n";
            }
        }
        return kExitOk;
    }

    if (cmd == "bound") {
        Method method = method_from(anchors);
        for (const Word& g : words) {
            LowerBoundCertificate cert = lower_bound(g, method);
            out << (o.json ? certificate_json(cert) + "\n" : certificate_text(cert));
        }
        return kExitOk;
    }

    if (cmd == "oracle") {
        PalindromeOracle oracle(spec, budget_from(o));
        for (const Word& g : words) {
            OracleResult r = oracle.solve(g);
            out << (o.json ? oracle_json(g, r) + "\n" : oracle_text(g, r));
        }
        return kExitOk;
    }

    if (cmd == "crosscheck") {
        CrosscheckReport report = crosscheck_bounds(words, method_from(anchors), budget_from(o));
        for (const auto& row : report.rows)
            out << crosscheck_row_json(row) << "\n";
        if (!o.json)
            out << report.rows.size() << " word(s), " << report.violations << " violation(s)\n";
        return report.violations == 0 ? kExitOk : kExitViolation;
    }

    throw UsageError("unknown subcommand " + cmd);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Palindromic length and segment invariants in free products of groups", "palwidth"};
    app.require_subcommand(1);

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--spec", o.spec_path, "Group-spec JSON file");
        sub->add_flag("--json", o.json, "Machine-readable output");
    };
    auto add_words = [&](CLI::App* sub) {
        sub->add_option("word", o.word_tokens, "Word (syllables 'F:x' separated by spaces; '1' = identity)");
        sub->add_option("--words-file", o.words_file, "File with one word per line");
    };
    auto add_anchors = [&](CLI::App* sub) {
        sub->add_option("--anchor", o.anchors, "Anchor syllable (repeatable)")->allow_extra_args(false);
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--max-k", o.max_k, "Largest number of palindromes tried");
        sub->add_option("--max-factor-length", o.max_factor_length, "Longest palindrome factor");
        sub->add_option("--exponent-bound", o.exponent_bound, "Exponent cap for infinite cyclic factors");
    };

    struct Entry {
        const char* name;
        const char* help;
        bool words, anchors, budget;
    };
    const Entry entries[] = {
        {"normalize", "Print the reduced form", true, false, false},
        {"invert", "Print the inverse", true, false, false},
        {"reverse", "Print the reverse word", true, false, false},
        {"is-palindrome", "Test for palindromes", true, false, false},
        {"is-cpalindrome", "Test for C-palindromes (--c-set)", true, false, false},
        {"segments", "Anchor-segment statistics (one or two anchors)", true, true, false},
        {"delta1", "Evaluate delta1 at one anchor", true, true, false},
        {"delta2", "Evaluate delta2 at two anchors", true, true, false},
        {"bound", "Certified lower bound on palindromic length", true, true, false},
        {"oracle", "Exact palindromic length within a search budget", true, false, true},
        {"crosscheck", "Compare certified bounds against the oracle", true, true, true},
        {"classify", "Classify the product and its palindromic width", false, false, false},
    };
    for (const Entry& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        add_spec(sub);
        if (e.words)
            add_words(sub);
        if (e.anchors)
            add_anchors(sub);
        if (e.budget)
            add_budget(sub);
        if (std::string(e.name) == "is-cpalindrome")
            sub->add_option("--c-set", o.c_set, "Comma-separated syllables forming C");
    }
    CLI::App* witness = app.add_subcommand("witness", "CSV table of the unbounded witness family");
    add_spec(witness);
    witness->add_option("--case", o.witness_case, "I or II");
    witness->add_option("--n", o.n_range, "Range a..b of witness indices");
    CLI::App* verify = app.add_subcommand("verify-z2z2", "Check palindromic width two of Z2 * Z2");
    verify->add_option("--max-len", o.max_len, "Longest word checked");
    verify->add_flag("--json", o.json, "Machine-readable output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return dispatch(cmd, o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}

} // namespace palwidth::cli
