// Command-line front end: analyze single 3-braid words, compare pairs,
// and apply flype moves. Exit codes are a total function of the library
// error taxonomy (see README).

#include <iostream>

#include <CLI11.hpp>

#include "agol3/report.hpp"

namespace {

using namespace agol3;

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::parse_error:
        case Errc::invalid_exponent:
            return 2;
        case Errc::not_pseudo_anosov:
            return 3;
        case Errc::validity_failure:
        case Errc::no_invariant_track:
        case Errc::tie_weights:
        case Errc::non_positive_weight:
            return 4;
        case Errc::not_flype_form:
            return 5;
        case Errc::no_cycle_within_budget:
            return 6;
        default:
            return 1;
    }
}

int cmd_analyze(const std::string& word, const ReportOptions& opt, bool json) {
    Analysis a = analyze(word);
    a.cycle(opt.max_steps);
    std::cout << (json ? analyze_json(a, opt) : analyze_text(a, opt));
    return 0;
}

int cmd_compare(const std::string& wa, const std::string& wb, const ReportOptions& opt,
                bool json) {
    Analysis a = analyze(wa);
    Analysis b = analyze(wb);
    a.cycle(opt.max_steps);
    b.cycle(opt.max_steps);
    CompareReport rep = classify(a, b);
    std::cout << (json ? compare_json(a, b, rep, opt) : compare_text(a, b, rep));
    switch (rep.verdict) {
        case Verdict::equivalent: return 0;
        case Verdict::mirror_equivalent: return 10;
        case Verdict::neither: return 11;
        case Verdict::inconclusive: return 12;
    }
    return 1;
}

int cmd_flype(const std::string& word, bool json) {
    BraidWord w = braid_parse(word);
    FlypeForm f = extract_flype_form(w);
    std::cout << (json ? flype_json(w, f) : flype_text(w, f));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conjugacy invariants of pseudo-Anosov 3-braids: exact dilatations, "
                 "train-track splitting sequences, Agol cycles, and Farey LR codes"};
    app.require_subcommand(1);

    ReportOptions opt;
    bool json = false;
    std::string word, word_b;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--steps", opt.steps, "type/LR word length to print")
            ->capture_default_str();
        sub->add_option("--max-steps", opt.max_steps, "cycle detection budget")
            ->capture_default_str();
        sub->add_flag("--json", json, "machine-readable output");
    };

    CLI::App* an = app.add_subcommand("analyze", "full invariant report for one word");
    an->add_option("word", word, "braid word, e.g. \"s1^4 s2 s1^3 s2^4\"")->required();
    add_common(an);

    CLI::App* cmp = app.add_subcommand("compare", "classify the Agol cycles of two words");
    cmp->add_option("wordA", word, "first braid word")->required();
    cmp->add_option("wordB", word_b, "second braid word")->required();
    add_common(cmp);

    CLI::App* fl = app.add_subcommand("flype", "apply the flype move and run the Ko-Lee test");
    fl->add_option("word", word, "braid word in flype form")->required();
    fl->add_flag("--json", json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    try {
        if (an->parsed()) return cmd_analyze(word, opt, json);
        if (cmp->parsed()) return cmd_compare(word, word_b, opt, json);
        if (fl->parsed()) return cmd_flype(word, json);
    } catch (const agol3::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
