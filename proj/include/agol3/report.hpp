#pragma once

#include <string>

#include "agol3/analysis.hpp"
#include "agol3/conjugacy.hpp"

namespace agol3 {

/// Rendering options shared by the CLI and the bindings.
struct ReportOptions {
    long long steps = 24;       // printed type/LR word length
    long long max_steps = 10000; // cycle-detection budget
};

/// Machine-readable envelope {schemaVersion, command, input, payload}.
/// Arbitrary-precision integers are serialized as decimal strings so the
/// emitted document round-trips byte-identically through any JSON parser.
std::string analyze_json(Analysis& a, const ReportOptions& opt);
std::string compare_json(Analysis& a, Analysis& b, const CompareReport& rep,
                         const ReportOptions& opt);
std::string flype_json(const BraidWord& input, const FlypeForm& form);

std::string analyze_text(Analysis& a, const ReportOptions& opt);
std::string compare_text(Analysis& a, Analysis& b, const CompareReport& rep);
std::string flype_text(const BraidWord& input, const FlypeForm& form);

} // namespace agol3
