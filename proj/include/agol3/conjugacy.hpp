#pragma once

#include <array>
#include <optional>

#include "agol3/analysis.hpp"

namespace agol3 {

enum class Verdict { equivalent, mirror_equivalent, neither, inconclusive };

const char* to_string(Verdict v);

struct ShiftWitness {
    long long l, m;
};

struct RatioWitness {
    long long l, m;
    QuadNum ratio;
};

/// Integer coefficients of the bilinear identity A + B a + C a' + D a a' = 0
/// expanded from the cross product of the matched 4-tuples.
struct CrossRelation {
    Int A, B, C, D;
};

struct CompareReport {
    std::optional<ShiftWitness> cond3; // same periodic type sequence (with sign)
    std::optional<ShiftWitness> cond4; // same periodic LR sequence (with sign)
    std::optional<RatioWitness> cond5; // equal 4-ratios
    std::optional<CrossRelation> cross_relation;
    Verdict verdict = Verdict::inconclusive;
    bool trace_equal = false;
    std::array<Int, 2> gamma_values{}; // per-word gamma (trace when not flype-form)
    std::string obstruction;           // set for Neither / Inconclusive verdicts
};

/// Topological condition: least (l, m) with sgn(T_l) = sgn(T'_m) and equal
/// infinite type sequences from l and m on.
std::optional<ShiftWitness> check_cond3(Analysis& a, Analysis& b);

/// Number-theoretic condition: least (l, m) with sgn(T_l) = sgn(T'_m) and
/// equal infinite LR sequences from l+1 and m+1 on.
std::optional<ShiftWitness> check_cond4(Analysis& a, Analysis& b);

/// Numerical condition: least (l, m) with equal 4-ratios. Distinct
/// quadratic fields certify absence.
std::optional<RatioWitness> check_cond5(Analysis& a, Analysis& b);

/// Agol-cycle classification: a shared 4-ratio forces the types at the
/// next step to agree either exactly (equivalent cycles) or up to priming
/// (mirror equivalent); no shared ratio within the search window is a
/// certified obstruction.
CompareReport classify(Analysis& a, Analysis& b);

} // namespace agol3
