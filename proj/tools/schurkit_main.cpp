// schurkit: command-line front end for the skew Schur toolkit.

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "schur/harness.hpp"
#include "schur/json_io.hpp"
#include "schur/literals.hpp"
#include "schur/positivity.hpp"
#include "schur/tableaux.hpp"

namespace {

using namespace schur;
using nlohmann::json;

void print_json(const json& value) { std::cout << value.dump(2) << '\n'; }

std::string flag_text(const std::optional<bool>& value) {
    if (!value.has_value()) return "skipped";
    return *value ? "true" : "false";
}

void print_witnesses(const ScreenVerdict& verdict) {
    for (const ScreenWitness& w : verdict.witnesses) std::cout << "  " << w << '\n';
}

int run_expand(const std::string& shape_text, bool as_json) {
    const SkewShape shape = parse_skew_shape(shape_text);
    const SchurExpansion expansion = lr_expand(shape);
    if (as_json)
        print_json(json{{"shape", to_json(shape)}, {"terms", to_json(expansion)}});
    else
        std::cout << expansion << '\n';
    return 0;
}

int run_support(const std::string& shape_text, bool as_json) {
    const SkewShape shape = parse_skew_shape(shape_text);
    const std::set<Partition> supp = support(shape);
    if (as_json) {
        json parts = json::array();
        for (auto it = supp.rbegin(); it != supp.rend(); ++it) parts.push_back(to_json(*it));
        print_json(json{{"shape", to_json(shape)}, {"support", parts}});
    } else {
        for (auto it = supp.rbegin(); it != supp.rend(); ++it)
            std::cout << format_partition(*it) << '\n';
    }
    return 0;
}

int run_overlaps(const std::string& shape_text, bool as_json, int max_k) {
    const SkewShape shape = parse_skew_shape(shape_text);
    OverlapProfile profile = overlap_profile(shape);
    if (max_k > 0) {
        if (profile.rows.size() > static_cast<std::size_t>(max_k))
            profile.rows.resize(static_cast<std::size_t>(max_k));
        if (profile.cols.size() > static_cast<std::size_t>(max_k))
            profile.cols.resize(static_cast<std::size_t>(max_k));
        if (profile.rects.size() > static_cast<std::size_t>(max_k))
            profile.rects.resize(static_cast<std::size_t>(max_k));
        for (auto& row : profile.rects)
            if (row.size() > static_cast<std::size_t>(max_k))
                row.resize(static_cast<std::size_t>(max_k));
    }
    if (as_json) {
        print_json(json{{"shape", to_json(shape)}, {"profile", to_json(profile)}});
        return 0;
    }
    auto print_family = [](const char* label, const std::vector<Partition>& family) {
        std::size_t last = family.size();
        while (last > 0 && family[last - 1].empty()) --last; // trim empty tail
        std::cout << label;
        for (std::size_t i = 0; i < last; ++i)
            std::cout << (i ? " / " : "") << format_partition(family[i]);
        if (last == 0) std::cout << "0";
        std::cout << '\n';
    };
    std::cout << "shape: " << format_skew_shape(shape) << '\n';
    print_family("rows:  ", profile.rows);
    print_family("cols:  ", profile.cols);
    std::cout << "rects (k by l):\n";
    for (const auto& row : profile.rects) {
        std::cout << " ";
        for (long long count : row) std::cout << ' ' << count;
        std::cout << '\n';
    }
    return 0;
}

void print_filling(const LRFilling& filling) {
    std::cout << "content: " << format_partition(filling.content()) << '\n'
              << "word: " << format_word(filling.reverse_reading_word()) << '\n'
              << filling << '\n';
}

json filling_record(const LRFilling& filling) {
    return json{{"entries", to_json(filling)},
                {"word", format_word(filling.reverse_reading_word())},
                {"content", to_json(filling.content())}};
}

int run_fillings(const std::string& shape_text, bool as_json, const std::string& kind,
                 int hybrid_k) {
    const SkewShape shape = parse_skew_shape(shape_text);
    if (kind == "all") {
        const std::vector<LRFilling> fillings = enumerate_lr_fillings(shape);
        if (as_json) {
            json list = json::array();
            for (const LRFilling& f : fillings) list.push_back(filling_record(f));
            print_json(json{{"shape", to_json(shape)}, {"fillings", list}});
        } else {
            for (const LRFilling& f : fillings)
                std::cout << format_word(f.reverse_reading_word())
                          << "  content=" << format_partition(f.content()) << '\n';
        }
        return 0;
    }
    LRFilling filling = kind == "least"    ? least_dominant_filling(shape)
                        : kind == "most"   ? most_dominant_filling(shape)
                                           : hybrid_filling(shape, hybrid_k);
    if (as_json)
        print_json(json{{"shape", to_json(shape)}, {"filling", filling_record(filling)}});
    else
        print_filling(filling);
    return 0;
}

int run_compare(const std::string& a_text, const std::string& b_text, bool as_json,
                long long exact_limit) {
    const SkewShape a = parse_skew_shape(a_text);
    const SkewShape b = parse_skew_shape(b_text);
    ReportOptions opts;
    if (exact_limit > 0) opts.max_exact_size = exact_limit;
    const NecessaryConditionReport forward = necessary_condition_report(a, b, opts);
    const NecessaryConditionReport reverse = necessary_condition_report(b, a, opts);

    std::string relation = "skipped";
    if (forward.support_contained.has_value() && reverse.support_contained.has_value()) {
        const bool fwd = *forward.support_contained, rev = *reverse.support_contained;
        relation = fwd && rev    ? "equal"
                   : fwd         ? "A contains B"
                   : rev         ? "B contains A"
                                 : "incomparable";
    }

    if (as_json) {
        print_json(json{{"forward", to_json(forward)},
                        {"reverse", to_json(reverse)},
                        {"supports", relation}});
        return 0;
    }
    std::cout << "A: " << format_skew_shape(a) << '\n'
              << "B: " << format_skew_shape(b) << '\n';
    std::cout << "screen A>=B: " << (forward.screen.passed ? "pass" : "fail") << '\n';
    print_witnesses(forward.screen);
    std::cout << "screen B>=A: " << (reverse.screen.passed ? "pass" : "fail") << '\n';
    print_witnesses(reverse.screen);
    std::cout << "support A>=B: " << flag_text(forward.support_contained) << '\n'
              << "support B>=A: " << flag_text(reverse.support_contained) << '\n'
              << "supports: " << relation << '\n'
              << "schur-positive A-B: " << flag_text(forward.schur_positive) << '\n'
              << "schur-positive B-A: " << flag_text(reverse.schur_positive) << '\n'
              << "implications: "
              << (forward.implication_consistent && reverse.implication_consistent
                      ? "consistent"
                      : "VIOLATED")
              << '\n';
    return 0;
}

int run_product(const std::string& alpha_text, const std::string& beta_text,
                const std::string& gamma_text, const std::string& delta_text, bool as_json) {
    const Partition alpha = parse_partition(alpha_text), beta = parse_partition(beta_text);
    const Partition gamma = parse_partition(gamma_text), delta = parse_partition(delta_text);
    const ScreenVerdict verdict = product_tails_check(alpha, beta, gamma, delta);
    if (as_json) {
        print_json(to_json(verdict));
        return 0;
    }
    std::cout << "tails screen for s[" << format_partition(alpha) << "]*s["
              << format_partition(beta) << "] - s[" << format_partition(gamma) << "]*s["
              << format_partition(delta) << "]: " << (verdict.passed ? "pass" : "fail")
              << '\n';
    print_witnesses(verdict);
    return 0;
}

int run_verify(int size, int workers, int max_size, bool as_json) {
    VerifyOptions opts;
    opts.workers = workers;
    if (max_size > 0) opts.max_size = max_size;
    const VerificationReport report = verify_all(size, opts);
    if (as_json)
        print_json(to_json(report));
    else
        std::cout << format_report(report);
    return report.violations.empty() ? 0 : 1;
}

int run_search(int size, const std::string& kind_text, int workers, bool as_json) {
    const WitnessKind kind = kind_text == "screen-pass-support-fail"
                                 ? WitnessKind::screen_pass_support_fail
                                 : WitnessKind::equal_support_unequal_function;
    const auto pairs = find_witnesses(size, kind, workers);
    if (as_json) {
        json list = json::array();
        for (const auto& [a, b] : pairs)
            list.push_back(json::array({to_json(a), to_json(b)}));
        print_json(json{{"size", size}, {"kind", kind_text}, {"pairs", list}});
    } else {
        for (const auto& [a, b] : pairs)
            std::cout << format_skew_shape(a) << "  " << format_skew_shape(b) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew Schur functions: expansions, supports, overlap screens"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string shape_text, other_text, kind, alpha, beta, gamma, delta;
    bool as_json = false;
    int max_k = 0, hybrid_k = 1, size = 0, workers = 1, max_size = 0;
    long long exact_limit = 0;

    auto* expand = app.add_subcommand("expand", "Schur expansion of a skew shape");
    expand->add_option("shape", shape_text, "skew shape, e.g. 443/2 or 5,5,3/3,1")->required();
    expand->add_flag("--json", as_json, "emit JSON");
    expand->callback([&] { exit_code = run_expand(shape_text, as_json); });

    auto* supp = app.add_subcommand("support", "partitions in the expansion");
    supp->add_option("shape", shape_text)->required();
    supp->add_flag("--json", as_json);
    supp->callback([&] { exit_code = run_support(shape_text, as_json); });

    auto* overlaps = app.add_subcommand("overlaps", "row/column overlaps and rectangle counts");
    overlaps->add_option("shape", shape_text)->required();
    overlaps->add_flag("--json", as_json);
    overlaps->add_option("--max-k", max_k, "report windows only up to this size");
    overlaps->callback([&] { exit_code = run_overlaps(shape_text, as_json, max_k); });

    auto* fillings = app.add_subcommand("fillings", "lattice semistandard fillings");
    fillings->add_option("shape", shape_text)->required();
    fillings->add_flag("--json", as_json);
    fillings->add_option("--kind", kind, "all | least | most | hybrid")
        ->default_val("all")
        ->check(CLI::IsMember({"all", "least", "most", "hybrid"}));
    fillings->add_option("--k", hybrid_k, "parameter for --kind hybrid");
    fillings->callback([&] { exit_code = run_fillings(shape_text, as_json, kind, hybrid_k); });

    auto* compare = app.add_subcommand("compare", "necessary-condition report, both directions");
    compare->add_option("A", shape_text)->required();
    compare->add_option("B", other_text)->required();
    compare->add_flag("--json", as_json);
    compare->add_option("--exact-limit", exact_limit,
                        "run exact checks up to this many boxes (default 14)");
    compare->callback(
        [&] { exit_code = run_compare(shape_text, other_text, as_json, exact_limit); });

    auto* product = app.add_subcommand(
        "product", "tails screen for a difference of products of Schur functions");
    product->add_option("alpha", alpha)->required();
    product->add_option("beta", beta)->required();
    product->add_option("gamma", gamma)->required();
    product->add_option("delta", delta)->required();
    product->add_flag("--json", as_json);
    product->callback([&] { exit_code = run_product(alpha, beta, gamma, delta, as_json); });

    auto* verify = app.add_subcommand("verify", "exhaustive claim verification at one size");
    verify->add_option("--size", size, "number of boxes")->required();
    verify->add_option("--workers", workers, "parallel workers");
    verify->add_option("--max-size", max_size, "raise the refusal bound (default 7)");
    verify->add_flag("--json", as_json);
    verify->callback([&] { exit_code = run_verify(size, workers, max_size, as_json); });

    auto* search = app.add_subcommand("search", "find witness pairs at one size");
    search->add_option("--size", size)->required();
    search
        ->add_option("--kind", kind,
                     "screen-pass-support-fail | equal-support-unequal-function")
        ->required()
        ->check(CLI::IsMember({"screen-pass-support-fail", "equal-support-unequal-function"}));
    search->add_option("--workers", workers);
    search->add_flag("--json", as_json);
    search->callback([&] { exit_code = run_search(size, kind, workers, as_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
