#pragma once

#include <memory>
#include <optional>

#include "agol3/braid.hpp"
#include "agol3/farey.hpp"
#include "agol3/splitting.hpp"
#include "agol3/transition.hpp"

namespace agol3 {

/// Everything the toolkit knows about one pseudo-Anosov word: the verified
/// invariant-track data and the (lazily grown) maximal-splitting run.
class Analysis {
public:
    Analysis(BraidWord word, PAResult pa);

    const BraidWord& word() const { return word_; }
    const PAResult& pa() const { return pa_; }
    SplittingRun& run() { return run_; }

    std::vector<TrackType> type_word(long long steps) { return run_.type_word(steps); }
    std::vector<Lr> lr_sequence(long long steps) { return run_.lr_word(steps); }

    std::vector<std::pair<FareyFraction, FareyFraction>> nested(long long steps) const {
        return nested_intervals(pa_.alpha, pa_.n, steps);
    }

    const CycleReport& cycle(long long max_steps = 10000);
    bool has_cycle() const { return cycle_.has_value(); }

private:
    BraidWord word_;
    PAResult pa_;
    SplittingRun run_;
    std::optional<CycleReport> cycle_;
};

/// Full pipeline: transition candidate (with mirror fallback), exact
/// eigen-extraction, and the invariant-track certificate. Throws the stage
/// errors (not_pseudo_anosov, no_invariant_track, validity_failure, ...).
Analysis analyze(const BraidWord& w);

inline Analysis analyze(const std::string& text) { return analyze(braid_parse(text)); }

} // namespace agol3
