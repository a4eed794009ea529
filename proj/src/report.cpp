#include "agol3/report.hpp"

#include <sstream>

#include <json.hpp>

namespace agol3 {

namespace {

using Json = nlohmann::ordered_json;

Json quad_json(const QuadNum& v) {
    return Json{{"p", v.p().str()},
                {"q", v.q().str()},
                {"r", v.r().str()},
                {"D", v.D().str()},
                {"display", v.str()},
                {"approx", v.approx()}};
}

Json word_json(const BraidWord& w) {
    Json arr = Json::array();
    for (const auto& s : w.syllables())
        arr.push_back(Json{{"gen", s.gen}, {"exp", std::to_string(s.exp)}});
    return arr;
}

Json types_json(const std::vector<TrackType>& ts) {
    Json arr = Json::array();
    for (auto t : ts) arr.push_back(to_string(t));
    return arr;
}

Json letters_json(const std::vector<Lr>& ls) {
    Json arr = Json::array();
    for (auto l : ls) arr.push_back(std::string(1, to_char(l)));
    return arr;
}

std::string track_name(const PAResult& pa) {
    bool alpha_first = pa.alpha_slot == AlphaSlot::first;
    std::string args = alpha_first ? "(alpha, 1)" : "(1, alpha)";
    return std::string(to_string(pa.start_kind)) + args;
}

Json cycle_json(const CycleReport& c) {
    return Json{{"preperiod", std::to_string(c.preperiod)},
                {"period", std::to_string(c.period)},
                {"periodicTypeWord", types_json(c.periodic_type_word)},
                {"periodicLrWord", letters_json(c.periodic_lr_word)},
                {"scaleFactor", quad_json(c.scale_factor)},
                {"lambdaPower", std::to_string(c.lambda_power)}};
}

Json analyze_payload(Analysis& a, const ReportOptions& opt) {
    const PAResult& pa = a.pa();
    Json p;
    p["word"] = a.word().str();
    p["syllables"] = word_json(a.word());
    p["matrix"] = Json{{"m11", pa.matrix.m11.str()},
                       {"m12", pa.matrix.m12.str()},
                       {"m21", pa.matrix.m21.str()},
                       {"m22", pa.matrix.m22.str()}};
    p["trace"] = pa.trace.str();
    try {
        FlypeForm f = extract_flype_form(a.word());
        Int g = f.eps == -1 ? gamma_trace(f.x, f.y, f.z) : gamma_trace(-f.x, -f.y, -f.z);
        p["gamma"] = g.str();
    } catch (const Error&) {
        p["gamma"] = nullptr;
    }
    p["lambda"] = quad_json(pa.lambda);
    p["alpha"] = quad_json(pa.alpha);
    p["n"] = pa.n.str();
    p["primed"] = pa.primed;
    p["startKind"] = to_string(pa.start_kind);
    p["alphaSlot"] = pa.alpha_slot == AlphaSlot::first ? "first" : "second";
    p["mirroredAnalysis"] = pa.mirrored_analysis;
    p["invariantTrack"] = track_name(pa);
    p["typeWord"] = types_json(a.type_word(opt.steps));
    p["lrWord"] = letters_json(a.lr_sequence(opt.steps));
    p["cycle"] = cycle_json(a.cycle(opt.max_steps));
    p["verified"] = true; // analyze() only returns certified results
    return p;
}

Json envelope(const std::string& command, Json input, Json payload) {
    return Json{{"schemaVersion", "1"},
                {"command", command},
                {"input", std::move(input)},
                {"payload", std::move(payload)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join_types(const std::vector<TrackType>& ts) {
    std::string out;
    for (auto t : ts) {
        if (!out.empty()) out += ", ";
        out += to_string(t);
    }
    return out;
}

std::string join_letters(const std::vector<Lr>& ls) {
    std::string out;
    for (auto l : ls) {
        if (!out.empty()) out += ", ";
        out += to_char(l);
    }
    return out;
}

} // namespace

std::string analyze_json(Analysis& a, const ReportOptions& opt) {
    return dump(envelope("analyze", Json{{"word", a.word().str()}}, analyze_payload(a, opt)));
}

std::string compare_json(Analysis& a, Analysis& b, const CompareReport& rep,
                         const ReportOptions& opt) {
    Json p;
    p["verdict"] = to_string(rep.verdict);
    p["cond3"] = rep.cond3 ? Json{{"l", std::to_string(rep.cond3->l)},
                                  {"m", std::to_string(rep.cond3->m)}}
                           : Json(nullptr);
    p["cond4"] = rep.cond4 ? Json{{"l", std::to_string(rep.cond4->l)},
                                  {"m", std::to_string(rep.cond4->m)}}
                           : Json(nullptr);
    p["cond5"] = rep.cond5 ? Json{{"l", std::to_string(rep.cond5->l)},
                                  {"m", std::to_string(rep.cond5->m)},
                                  {"ratio", quad_json(rep.cond5->ratio)}}
                           : Json(nullptr);
    p["crossRelation"] = rep.cross_relation
                             ? Json{{"A", rep.cross_relation->A.str()},
                                    {"B", rep.cross_relation->B.str()},
                                    {"C", rep.cross_relation->C.str()},
                                    {"D", rep.cross_relation->D.str()}}
                             : Json(nullptr);
    p["traceEqual"] = rep.trace_equal;
    p["gammaValues"] = Json::array({rep.gamma_values[0].str(), rep.gamma_values[1].str()});
    p["traces"] = Json::array({a.pa().trace.str(), b.pa().trace.str()});
    if (!rep.obstruction.empty()) p["obstruction"] = rep.obstruction;
    p["left"] = analyze_payload(a, opt);
    p["right"] = analyze_payload(b, opt);
    return dump(envelope(
        "compare", Json{{"wordA", a.word().str()}, {"wordB", b.word().str()}}, std::move(p)));
}

std::string flype_json(const BraidWord& input, const FlypeForm& form) {
    FlypeForm out = flype(form);
    bool nondeg = kolee_nondegenerate(form);
    Json p{{"form", Json{{"x", std::to_string(form.x)},
                         {"eps", std::to_string(form.eps)},
                         {"y", std::to_string(form.y)},
                         {"z", std::to_string(form.z)}}},
           {"flyped", flype_form_word(out).str()},
           {"nondegenerate", nondeg}};
    return dump(envelope("flype", Json{{"word", input.str()}}, std::move(p)));
}

std::string analyze_text(Analysis& a, const ReportOptions& opt) {
    const PAResult& pa = a.pa();
    std::ostringstream os;
    os << "word: " << a.word().str() << "\n";
    os << "transition matrix: " << pa.matrix.str() << "  (start kind " << to_string(pa.start_kind)
       << (pa.mirrored_analysis ? ", from mirrored word" : "") << ")\n";
    os << "trace: " << pa.trace.str() << "\n";
    try {
        FlypeForm f = extract_flype_form(a.word());
        Int g = f.eps == -1 ? gamma_trace(f.x, f.y, f.z) : gamma_trace(-f.x, -f.y, -f.z);
        os << "gamma: " << g.str() << "\n";
    } catch (const Error&) {
    }
    os << "lambda: " << pa.lambda.str() << "  ~ " << pa.lambda.approx() << "\n";
    os << "alpha: " << pa.alpha.str() << "  ~ " << pa.alpha.approx() << "\n";
    os << "n = floor(1/alpha): " << pa.n.str() << "\n";
    os << "invariant track: " << track_name(pa) << (pa.primed ? "  [mirror family]" : "") << "\n";
    os << "type word (" << opt.steps << "): " << join_types(a.type_word(opt.steps)) << "\n";
    os << "LR word (" << opt.steps << "): " << join_letters(a.lr_sequence(opt.steps)) << "\n";
    const CycleReport& c = a.cycle(opt.max_steps);
    os << "cycle: preperiod " << c.preperiod << ", period " << c.period << ", scale factor "
       << c.scale_factor.str() << " = lambda^-" << c.lambda_power << "\n";
    os << "  periodic types: " << join_types(c.periodic_type_word) << "\n";
    os << "  periodic LR:    " << join_letters(c.periodic_lr_word) << "\n";
    os << "verified: exact invariance certificate passed\n";
    return os.str();
}

std::string compare_text(Analysis& a, Analysis& b, const CompareReport& rep) {
    std::ostringstream os;
    os << "A: " << a.word().str() << "\n";
    os << "B: " << b.word().str() << "\n";
    os << "verdict: " << to_string(rep.verdict) << "\n";
    if (!rep.obstruction.empty()) os << "obstruction: " << rep.obstruction << "\n";
    auto shift = [&](const char* name, const std::optional<ShiftWitness>& w) {
        os << name << ": ";
        if (w)
            os << "l = " << w->l << ", m = " << w->m << "\n";
        else
            os << "none\n";
    };
    shift("cond3 (type sequences)", rep.cond3);
    shift("cond4 (LR sequences)", rep.cond4);
    os << "cond5 (4-ratios): ";
    if (rep.cond5)
        os << "l = " << rep.cond5->l << ", m = " << rep.cond5->m << ", ratio = "
           << rep.cond5->ratio.str() << "\n";
    else
        os << "none\n";
    if (rep.cross_relation)
        os << "cross relation A + B a + C a' + D a a' = 0: A = " << rep.cross_relation->A.str()
           << ", B = " << rep.cross_relation->B.str() << ", C = " << rep.cross_relation->C.str()
           << ", D = " << rep.cross_relation->D.str() << "\n";
    os << "traces: " << a.pa().trace.str() << " vs " << b.pa().trace.str()
       << (rep.trace_equal ? "  (equal)" : "  (distinct)") << "\n";
    os << "gamma: " << rep.gamma_values[0].str() << " vs " << rep.gamma_values[1].str() << "\n";
    return os.str();
}

std::string flype_text(const BraidWord& input, const FlypeForm& form) {
    FlypeForm out = flype(form);
    std::ostringstream os;
    os << "input:  " << input.str() << "\n";
    os << "flyped: " << flype_form_word(out).str() << "\n";
    os << "Ko-Lee: " << (kolee_nondegenerate(form) ? "non-degenerate" : "degenerate") << "\n";
    return os.str();
}

} // namespace agol3
