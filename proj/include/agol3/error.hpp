#pragma once

#include <stdexcept>
#include <string>

namespace agol3 {

enum class Errc {
    division_by_zero,
    invalid_radicand,
    incompatible_fields,
    parse_error,
    invalid_exponent,
    not_flype_form,
    tie_weights,
    non_positive_weight,
    no_invariant_track,
    not_pseudo_anosov,
    non_positive_eigenvector,
    validity_failure,
    tie_comparison,
    alpha_out_of_range,
    rational_alpha,
    no_cycle_within_budget,
    scale_mismatch,
    mediant_hit,
    decomposition_failure,
    budget_exceeded,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace agol3
