// Python bindings for the 3-braid Agol-cycle toolkit. Exact values cross
// the boundary as python ints (QuadNum -> (p, q, r, D)); nothing is
// converted through floating point.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "agol3/report.hpp"

namespace py = pybind11;
using namespace agol3;

namespace {

py::int_ to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::tuple quad_tuple(const QuadNum& v) {
    return py::make_tuple(to_py(v.p()), to_py(v.q()), to_py(v.r()), to_py(v.D()));
}

py::dict quad_dict(const QuadNum& v) {
    py::dict d;
    d["p"] = to_py(v.p());
    d["q"] = to_py(v.q());
    d["r"] = to_py(v.r());
    d["D"] = to_py(v.D());
    d["display"] = v.str();
    d["approx"] = v.approx();
    return d;
}

std::vector<std::string> type_strings(const std::vector<TrackType>& ts) {
    std::vector<std::string> out;
    for (auto t : ts) out.emplace_back(to_string(t));
    return out;
}

std::string lr_string(const std::vector<Lr>& ls) {
    std::string out;
    for (auto l : ls) out += to_char(l);
    return out;
}

py::dict cycle_dict(const CycleReport& c) {
    py::dict d;
    d["preperiod"] = c.preperiod;
    d["period"] = c.period;
    d["periodic_type_word"] = type_strings(c.periodic_type_word);
    d["periodic_lr_word"] = lr_string(c.periodic_lr_word);
    d["scale_factor"] = quad_dict(c.scale_factor);
    d["lambda_power"] = c.lambda_power;
    return d;
}

} // namespace

PYBIND11_MODULE(agol3, m) {
    m.doc() = "Exact conjugacy invariants of pseudo-Anosov 3-braids: dilatations, "
              "triple-weight train-track splitting sequences, Agol cycles, and "
              "Farey LR codes.";

    py::register_exception<Error>(m, "Agol3Error");

    py::class_<Analysis>(m, "Analysis")
        .def_property_readonly("word", [](const Analysis& a) { return a.word().str(); })
        .def_property_readonly("trace", [](const Analysis& a) { return to_py(a.pa().trace); })
        .def_property_readonly("lam", [](const Analysis& a) { return quad_tuple(a.pa().lambda); })
        .def_property_readonly("alpha", [](const Analysis& a) { return quad_tuple(a.pa().alpha); })
        .def_property_readonly("n", [](const Analysis& a) { return to_py(a.pa().n); })
        .def_property_readonly("primed", [](const Analysis& a) { return a.pa().primed; })
        .def_property_readonly("start_kind",
                               [](const Analysis& a) { return std::string(to_string(a.pa().start_kind)); })
        .def("type_word", [](Analysis& a, long long steps) { return type_strings(a.type_word(steps)); },
             py::arg("steps") = 24)
        .def("lr_word", [](Analysis& a, long long steps) { return lr_string(a.lr_sequence(steps)); },
             py::arg("steps") = 24)
        .def("cycle", [](Analysis& a, long long max_steps) { return cycle_dict(a.cycle(max_steps)); },
             py::arg("max_steps") = 10000)
        .def("json", [](Analysis& a, long long steps) {
                 ReportOptions opt;
                 opt.steps = steps;
                 return analyze_json(a, opt);
             },
             py::arg("steps") = 24)
        .def("__repr__", [](const Analysis& a) {
            return "<Analysis " + a.word().str() + ", trace " + a.pa().trace.str() + ">";
        });

    m.def("analyze", [](const std::string& word) { return analyze(word); },
          "Analyze one braid word (grammar: 's1^4 s2 s1^3 s2^4').");

    m.def("compare", [](const std::string& wa, const std::string& wb) {
        Analysis a = analyze(wa), b = analyze(wb);
        CompareReport rep = classify(a, b);
        py::dict d;
        d["verdict"] = std::string(to_string(rep.verdict));
        d["trace_equal"] = rep.trace_equal;
        d["gamma_values"] = py::make_tuple(to_py(rep.gamma_values[0]), to_py(rep.gamma_values[1]));
        d["cond3"] = rep.cond3 ? py::object(py::make_tuple(rep.cond3->l, rep.cond3->m))
                               : py::object(py::none());
        d["cond4"] = rep.cond4 ? py::object(py::make_tuple(rep.cond4->l, rep.cond4->m))
                               : py::object(py::none());
        d["cond5"] = rep.cond5 ? py::object(py::make_tuple(rep.cond5->l, rep.cond5->m,
                                                           quad_tuple(rep.cond5->ratio)))
                               : py::object(py::none());
        if (rep.cross_relation)
            d["cross_relation"] = py::make_tuple(to_py(rep.cross_relation->A),
                                                 to_py(rep.cross_relation->B),
                                                 to_py(rep.cross_relation->C),
                                                 to_py(rep.cross_relation->D));
        else
            d["cross_relation"] = py::none();
        if (!rep.obstruction.empty()) d["obstruction"] = rep.obstruction;
        return d;
    });

    m.def("flype", [](const std::string& word) {
        BraidWord w = braid_parse(word);
        FlypeForm f = extract_flype_form(w);
        FlypeForm out = flype(f);
        py::dict d;
        d["flyped"] = flype_form_word(out).str();
        d["nondegenerate"] = kolee_nondegenerate(f);
        d["form"] = py::make_tuple(f.x, f.eps, f.y, f.z);
        return d;
    });

    m.def("kolee_nondegenerate", [](long long x, long long eps, long long y, long long z) {
        return kolee_nondegenerate(FlypeForm{x, eps, y, z});
    });

    m.def("gamma_trace", [](long long x, long long y, long long z) {
        return to_py(gamma_trace(x, y, z));
    });

    m.def("case_matrix", [](long long x, long long y, long long z, bool flyped) {
        Mat2 mm = case_matrix(x, y, z, flyped);
        return py::make_tuple(py::make_tuple(to_py(mm.m11), to_py(mm.m12)),
                              py::make_tuple(to_py(mm.m21), to_py(mm.m22)));
    }, py::arg("x"), py::arg("y"), py::arg("z"), py::arg("flyped") = false);

    m.def("lr_oracle", [](py::tuple alpha, long long n, long long steps) {
        QuadNum a = QuadNum::make(Int(py::str(alpha[0]).cast<std::string>()),
                                  Int(py::str(alpha[1]).cast<std::string>()),
                                  Int(py::str(alpha[2]).cast<std::string>()),
                                  Int(py::str(alpha[3]).cast<std::string>()));
        return lr_string(lr_oracle(a, Int(n), steps));
    }, "Stern-Brocot LR word of 1/alpha - n for alpha given as (p, q, r, D).");

    m.def("farey_sequence", [](int k) {
        std::vector<std::pair<py::int_, py::int_>> out;
        for (const auto& f : farey_sequence(k)) out.emplace_back(to_py(f.num), to_py(f.den));
        return out;
    });

    m.def("nested_intervals", [](const std::string& word, long long steps) {
        Analysis a = analyze(word);
        std::vector<py::tuple> out;
        for (const auto& [lo, hi] : a.nested(steps))
            out.push_back(py::make_tuple(py::make_tuple(to_py(lo.num), to_py(lo.den)),
                                         py::make_tuple(to_py(hi.num), to_py(hi.den))));
        return out;
    }, py::arg("word"), py::arg("steps") = 8);

    m.def("mirror", [](const std::string& word) { return mirror(braid_parse(word)).str(); });
    m.def("reverse", [](const std::string& word) { return reverse(braid_parse(word)).str(); });
    m.def("inverse", [](const std::string& word) { return inverse(braid_parse(word)).str(); });
}
