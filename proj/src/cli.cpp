#include "gpw/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpw/closure.hpp"
#include "gpw/complexity.hpp"
#include "gpw/experiments.hpp"
#include "gpw/normalize.hpp"

namespace gpw {

namespace {

using nlohmann::json;

Rational parse_threshold(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational::of(std::stoll(text), 1);
    return Rational::of(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

std::string class_name(BispecialClass cls) {
    switch (cls) {
        case BispecialClass::weak: return "weak";
        case BispecialClass::strong: return "strong";
        case BispecialClass::neutral_bispecial: return "neutral";
        case BispecialClass::not_bispecial: return "none";
    }
    return "?";
}

std::string letters_of_mask(std::uint8_t mask) {
    std::string out;
    if (mask & 1) out.push_back('0');
    if (mask & 2) out.push_back('1');
    return out;
}

std::string pairs_of_mask(std::uint8_t mask) {
    std::string out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            if (mask & (1u << (2 * a + b))) {
                if (!out.empty()) out.push_back(';');
                out.push_back(static_cast<char>('0' + a));
                out.push_back(static_cast<char>('0' + b));
            }
        }
    }
    return out;
}

struct CommonArgs {
    std::string delta;
    std::string theta;
    std::string format = "text";
    std::string out_path;
};

std::ostream& select_stream(const CommonArgs& args, std::ofstream& file, std::ostream& fallback) {
    if (args.out_path.empty()) return fallback;
    file.open(args.out_path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + args.out_path);
    return file;
}

int cmd_generate(const CommonArgs& common, long long steps, long long length, std::ostream& out) {
    const DirectiveBiSequence bi = DirectiveBiSequence::parse(common.delta, common.theta);
    Word word;
    std::size_t steps_done = 0;
    if (length >= 0) {
        word = word_prefix(bi, static_cast<std::size_t>(length));
    } else {
        const PrefixChain chain = generate_chain(bi, static_cast<std::size_t>(steps));
        word = chain.word();
        steps_done = chain.steps();
    }
    if (common.format == "json") {
        json doc{{"delta", bi.delta_text()},
                 {"theta", bi.theta_text()},
                 {"length", word.size()},
                 {"word", word.str()}};
        if (length < 0) doc["steps"] = steps_done;
        out << doc.dump() << "\n";
    } else {
        out << word.str() << "\n";
    }
    return 0;
}

int cmd_normalize(const CommonArgs& common, long long pairs, long long budget, std::ostream& out,
                  std::ostream& err) {
    const DirectiveBiSequence bi = DirectiveBiSequence::parse(common.delta, common.theta);
    const std::size_t min_len =
        std::max<std::size_t>(pairs > 0 ? static_cast<std::size_t>(pairs) : 0, 32);
    NormalizationResult result = normalize_stream(bi, min_len);
    if (!result.periodic_form_found && budget > 0) {
        result = normalize_stream(bi, static_cast<std::size_t>(budget));
    }
    if (!result.periodic_form_found) {
        err << "normalize: no eventually periodic form within budget; raise --budget\n";
        return 2;
    }
    if (common.format == "json") {
        json rules = json::array();
        for (const PrefixRuleApplication& rule : result.applied_prefix_rules) {
            rules.push_back({{"rule", rule.rule}, {"i", rule.i}});
        }
        json doc{{"delta", result.normalized.delta_text()},
                 {"theta", result.normalized.theta_text()},
                 {"applied_prefix_rules", rules},
                 {"sweep_edit_count", result.sweep_edit_count},
                 {"periodic_form_found", result.periodic_form_found}};
        if (pairs > 0) {
            json arr = json::array();
            for (std::size_t i = 0; i < static_cast<std::size_t>(pairs); ++i) {
                const Step& s = result.emitted[i];
                arr.push_back({{"delta", std::string(1, static_cast<char>('0' + s.letter))},
                               {"theta", std::string(1, antimorphism_char(s.theta))}});
            }
            doc["pairs"] = arr;
        }
        out << doc.dump() << "\n";
    } else {
        out << "delta: " << result.normalized.delta_text() << "\n";
        out << "theta: " << result.normalized.theta_text() << "\n";
        if (pairs > 0) {
            for (std::size_t i = 0; i < static_cast<std::size_t>(pairs); ++i) {
                const Step& s = result.emitted[i];
                out << static_cast<char>('0' + s.letter) << " " << antimorphism_char(s.theta)
                    << "\n";
            }
        }
    }
    return 0;
}

int cmd_complexity(const CommonArgs& common, long long n_max, long long letter_budget,
                   std::ostream& out) {
    const DirectiveBiSequence bi = DirectiveBiSequence::parse(common.delta, common.theta);
    const std::size_t want = static_cast<std::size_t>(n_max);

    ComplexityProfile profile;
    std::int64_t exact_upto = 0;
    std::size_t prefix_len = 0;
    std::size_t stable_upto = 0;
    std::string method;

    if (bi.same_sequence(counterexample_bisequence())) {
        std::size_t k = counterexample_window_for_length(static_cast<std::int64_t>(want) + 2);
        while (k > 5 &&
               counterexample_exact_window(k).prefix_len_used > letter_budget) {
            --k;
        }
        const ExactnessWindow window = counterexample_exact_window(k);
        const PrefixChain chain = counterexample_chain(k + 2);
        prefix_len = chain.word().size();
        profile = substring_complexity(chain.word().view(),
                                       std::min(want + 2, chain.word().size()));
        profile.exact_upto = window.max_exact_n;
        exact_upto = window.max_exact_n;
        stable_upto = static_cast<std::size_t>(std::min<std::int64_t>(
            window.max_exact_n, static_cast<std::int64_t>(want)));
        method = "lemma_window";
    } else {
        const StableProfile sp =
            stable_complexity(bi, want + 2, static_cast<std::size_t>(letter_budget));
        profile = sp.profile;
        prefix_len = sp.prefix_len;
        stable_upto = sp.stable_upto;
        method = "stabilization";
    }

    auto row_exact = [&](std::size_t n) {
        return static_cast<std::int64_t>(n) <= exact_upto ? 1 : 0;
    };
    auto has = [&](std::size_t n) { return n < profile.values.size(); };

    if (common.format == "json") {
        json rows = json::array();
        for (std::size_t n = 0; n <= want && has(n); ++n) {
            json row{{"n", n}, {"C", profile.value(n)}, {"exact", row_exact(n) == 1}};
            if (has(n + 1)) row["dC"] = profile.first_diff(n);
            if (has(n + 2)) row["d2C"] = profile.second_diff(n);
            rows.push_back(row);
        }
        json doc{{"delta", bi.delta_text()},   {"theta", bi.theta_text()},
                 {"method", method},           {"prefix_len", prefix_len},
                 {"exact_upto", exact_upto},   {"stable_upto", stable_upto},
                 {"rows", rows}};
        out << doc.dump() << "\n";
        return 0;
    }

    out << "n,C,dC,d2C,exact\n";
    for (std::size_t n = 0; n <= want && has(n); ++n) {
        out << n << "," << profile.value(n) << ",";
        if (has(n + 1)) out << profile.first_diff(n);
        out << ",";
        if (has(n + 2)) out << profile.second_diff(n);
        out << "," << row_exact(n) << "\n";
    }
    return 0;
}

int cmd_bispecials(const CommonArgs& common, long long n, long long letter_budget,
                   std::ostream& out) {
    const DirectiveBiSequence bi = DirectiveBiSequence::parse(common.delta, common.theta);
    const std::size_t len = static_cast<std::size_t>(n);

    Word window_word;
    std::string method;
    if (bi.same_sequence(counterexample_bisequence())) {
        const std::size_t k = counterexample_window_for_length(static_cast<std::int64_t>(len) + 2);
        const PrefixChain chain = counterexample_chain(k + 2);
        if (chain.word().size() > static_cast<std::size_t>(letter_budget)) {
            throw CLI::ValidationError("--n", "window exceeds --letter-budget");
        }
        window_word = chain.word();
        method = "lemma_window";
    } else {
        ChainBuilder builder(bi);
        builder.advance_until_length(std::min<std::size_t>(
            static_cast<std::size_t>(letter_budget), std::max<std::size_t>(4096, 64 * len)));
        window_word = Word(builder.view());
        method = "heuristic_prefix";
    }

    const std::vector<BispecialReport> reports = classify_bispecials(window_word.view(), len);
    if (common.format == "json") {
        json rows = json::array();
        for (const BispecialReport& rep : reports) {
            rows.push_back({{"factor", rep.factor.str()},
                            {"left", letters_of_mask(rep.left_mask)},
                            {"right", letters_of_mask(rep.right_mask)},
                            {"bilateral", pairs_of_mask(rep.bilateral_mask)},
                            {"b", rep.b_index},
                            {"class", class_name(rep.cls)}});
        }
        json doc{{"delta", bi.delta_text()},
                 {"theta", bi.theta_text()},
                 {"n", len},
                 {"method", method},
                 {"window_len", window_word.size()},
                 {"bispecials", rows}};
        out << doc.dump() << "\n";
    } else {
        out << "factor,left,right,bilateral,b,class\n";
        for (const BispecialReport& rep : reports) {
            out << rep.factor.str() << "," << letters_of_mask(rep.left_mask) << ","
                << letters_of_mask(rep.right_mask) << "," << pairs_of_mask(rep.bilateral_mask)
                << "," << rep.b_index << "," << class_name(rep.cls) << "\n";
        }
    }
    return 0;
}

int cmd_verify_paper(const std::string& format, std::ostream& out) {
    const std::vector<Check> checks = verify_paper_suite();
    const bool ok = all_pass(checks);
    if (format == "json") {
        json rows = json::array();
        for (const Check& c : checks) {
            rows.push_back({{"check", c.name},
                            {"expected", c.expected},
                            {"actual", c.actual},
                            {"status", c.pass ? "PASS" : "FAIL"}});
        }
        out << json{{"checks", rows}, {"all_pass", ok}}.dump() << "\n";
    } else {
        std::size_t name_w = 4, exp_w = 8;
        for (const Check& c : checks) {
            name_w = std::max(name_w, c.name.size());
            exp_w = std::max(exp_w, c.expected.size());
        }
        out << std::left << std::setw(static_cast<int>(name_w) + 2) << "check"
            << std::setw(static_cast<int>(exp_w) + 2) << "expected"
            << std::setw(static_cast<int>(exp_w) + 2) << "actual"
            << "status\n";
        for (const Check& c : checks) {
            out << std::left << std::setw(static_cast<int>(name_w) + 2) << c.name
                << std::setw(static_cast<int>(exp_w) + 2) << c.expected
                << std::setw(static_cast<int>(exp_w) + 2) << c.actual
                << (c.pass ? "PASS" : "FAIL") << "\n";
        }
        out << (ok ? "all checks passed" : "FAILURES PRESENT") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_scan(const ScanOptions& options, const std::string& format, std::ostream& out,
             std::ostream& err) {
    err << "scan: " << "period_max=" << options.period_max
        << " preperiod_max=" << options.preperiod_max << " n_max=" << options.n_max
        << " threshold=" << options.threshold.str() << " jobs=" << options.jobs << "\n";
    const std::vector<ScanRecord> records = scan_conjecture(options);
    err << "scan: " << records.size() << " bi-sequences\n";

    if (format == "json") {
        json rows = json::array();
        for (const ScanRecord& rec : records) {
            rows.push_back({{"delta", rec.delta},
                            {"theta", rec.theta},
                            {"n_checked", rec.n_checked},
                            {"max_ratio", {{"num", rec.max_ratio.num}, {"den", rec.max_ratio.den}}},
                            {"max_dC", rec.max_first_diff},
                            {"violations", rec.violations},
                            {"periodic", rec.periodic}});
        }
        out << json{{"records", rows}}.dump() << "\n";
        return 0;
    }

    out << "delta,theta,n_checked,max_ratio_num,max_ratio_den,max_dC,violations\n";
    for (const ScanRecord& rec : records) {
        out << rec.delta << "," << rec.theta << "," << rec.n_checked << "," << rec.max_ratio.num
            << "," << rec.max_ratio.den << "," << rec.max_first_diff << ",";
        for (std::size_t i = 0; i < rec.violations.size(); ++i) {
            if (i) out << ";";
            out << rec.violations[i];
        }
        out << "\n";
    }
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"binary words by generalized pseudopalindromic closure: generation, "
                 "normalization, factor complexity, bispecial structure"};
    app.require_subcommand(1);

    CommonArgs common;
    long long steps = -1, length = -1, pairs = 0, budget = 4096;
    long long n_max = 100, n = 1;
    long long letter_budget = 10'000'000;
    std::string threshold_text = "6";
    ScanOptions scan_options;
    std::vector<std::string> includes;
    std::string verify_format = "text";

    auto add_bisequence = [&](CLI::App* cmd) {
        cmd->add_option("--delta", common.delta, "letter component, e.g. \"1010(1)^w\"")
            ->required();
        cmd->add_option("--theta", common.theta, "antimorphism component, e.g. \"(EERR)^w\"")
            ->required();
    };
    auto add_output = [&](CLI::App* cmd, std::vector<std::string> formats) {
        cmd->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember(formats));
        cmd->add_option("--out", common.out_path, "write output to a file");
    };

    CLI::App* generate = app.add_subcommand("generate", "generate prefixes by iterated closure");
    add_bisequence(generate);
    generate->add_option("--steps", steps, "number of closure steps");
    generate->add_option("--length", length, "length of the word prefix instead of steps");
    add_output(generate, {"text", "json"});

    CLI::App* normalize_cmd =
        app.add_subcommand("normalize", "normalized form of a directive bi-sequence");
    add_bisequence(normalize_cmd);
    normalize_cmd->add_option("--pairs", pairs, "also emit the first N normalized pairs");
    normalize_cmd->add_option("--budget", budget, "cycle-detection budget in emitted pairs");
    add_output(normalize_cmd, {"text", "json"});

    CLI::App* complexity_cmd =
        app.add_subcommand("complexity", "factor complexity table C, dC, d2C");
    add_bisequence(complexity_cmd);
    complexity_cmd->add_option("--nmax", n_max, "largest factor length")->required();
    complexity_cmd->add_option("--letter-budget", letter_budget, "prefix length cap");
    add_output(complexity_cmd, {"text", "csv", "json"});

    CLI::App* bispecials_cmd =
        app.add_subcommand("bispecials", "bispecial factors of one length with extensions");
    add_bisequence(bispecials_cmd);
    bispecials_cmd->add_option("--n", n, "factor length")->required();
    bispecials_cmd->add_option("--letter-budget", letter_budget, "prefix length cap");
    add_output(bispecials_cmd, {"text", "csv", "json"});

    CLI::App* verify = app.add_subcommand("verify-paper", "run the reproduction checks");
    verify->add_option("--format", verify_format, "output format")
        ->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));
    verify->add_option("--out", common.out_path, "write output to a file");

    CLI::App* scan = app.add_subcommand("scan", "complexity scan over small bi-sequences");
    scan->add_option("--period-max", scan_options.period_max, "max period length");
    scan->add_option("--preperiod-max", scan_options.preperiod_max, "max preperiod length");
    scan->add_option("--nmax", scan_options.n_max, "largest factor length");
    scan->add_option("--threshold", threshold_text, "violation threshold, integer or a/b");
    scan->add_option("--jobs", scan_options.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    scan->add_option("--letter-budget", scan_options.letter_budget, "prefix length cap per word");
    scan->add_option("--include", includes,
                     "extra bi-sequence \"DELTA;THETA\" to scan (repeatable)");
    add_output(scan, {"csv", "json"});
    common.format = "text";

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::ofstream file;
        std::ostream& sink = select_stream(common, file, out);

        if (generate->parsed()) {
            if ((steps < 0) == (length < 0)) {
                err << "error: generate needs exactly one of --steps or --length\n";
                return 2;
            }
            return cmd_generate(common, steps, length, sink);
        }
        if (normalize_cmd->parsed()) return cmd_normalize(common, pairs, budget, sink, err);
        if (complexity_cmd->parsed()) {
            if (common.format == "text") common.format = "csv";
            return cmd_complexity(common, n_max, letter_budget, sink);
        }
        if (bispecials_cmd->parsed()) {
            if (common.format == "text") common.format = "csv";
            return cmd_bispecials(common, n, letter_budget, sink);
        }
        if (verify->parsed()) return cmd_verify_paper(verify_format, sink);
        if (scan->parsed()) {
            scan_options.threshold = parse_threshold(threshold_text);
            for (const std::string& inc : includes) {
                const auto semi = inc.find(';');
                if (semi == std::string::npos) {
                    err << "error: --include expects \"DELTA;THETA\"\n";
                    return 2;
                }
                scan_options.extra.push_back(
                    DirectiveBiSequence::parse(inc.substr(0, semi), inc.substr(semi + 1)));
            }
            const std::string format = common.format == "text" ? "csv" : common.format;
            return cmd_scan(scan_options, format, sink, err);
        }
    } catch (const InvalidBiSequence& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace gpw
